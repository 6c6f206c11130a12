//! Word-packed row reduction over GF(2): rank, determinant and solving for
//! coefficient combinations. Pivot choice is leftmost-column-first, so
//! results are deterministic.

/// A dense GF(2) matrix with rows packed into `u64` words.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

const W: usize = 64;

fn pack(bits: &[u8]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(W)];
    for (i, &b) in bits.iter().enumerate() {
        if b != 0 {
            words[i / W] |= 1u64 << (i % W);
        }
    }
    words
}

impl BitMatrix {
    pub fn from_rows<'a, I>(ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols);
                pack(r)
            })
            .collect();
        BitMatrix { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    fn bit(row: &[u64], c: usize) -> bool {
        row[c / W] >> (c % W) & 1 == 1
    }

    fn xor_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
    }

    /// Rank over GF(2). Consumes a working copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(p) = (rank..rows.len()).find(|&r| Self::bit(&rows[r], col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && Self::bit(row, col) {
                    Self::xor_into(row, &pivot);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Determinant of a square matrix over GF(2): 1 iff full rank.
    pub fn det(&self) -> u8 {
        assert_eq!(self.nrows(), self.ncols, "determinant needs a square matrix");
        (self.rank() == self.ncols) as u8
    }
}

/// Finds the GF(2) coefficient vector `x` with `sum x_k * rows[k] == target`,
/// or `None` when the target is outside the row span. The combination is
/// unique whenever the rows are independent.
pub fn solve_combination(ncols: usize, rows: &[&[u8]], target: &[u8]) -> Option<Vec<u8>> {
    assert_eq!(target.len(), ncols);
    let m = rows.len();
    // augment each row with the unit coefficient vector that produced it
    let mut work: Vec<(Vec<u64>, Vec<u64>)> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            assert_eq!(r.len(), ncols);
            let mut coeff = vec![0u64; m.div_ceil(W)];
            coeff[k / W] |= 1u64 << (k % W);
            (pack(r), coeff)
        })
        .collect();

    let mut t = pack(target);
    let mut t_coeff = vec![0u64; m.div_ceil(W).max(1)];
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..work.len()).find(|&r| BitMatrix::bit(&work[r].0, col)) else {
            continue;
        };
        work.swap(pivot_row, p);
        let (prow, pcoeff) = work[pivot_row].clone();
        for (r, (row, coeff)) in work.iter_mut().enumerate() {
            if r != pivot_row && BitMatrix::bit(row, col) {
                BitMatrix::xor_into(row, &prow);
                BitMatrix::xor_into(coeff, &pcoeff);
            }
        }
        if !t.is_empty() && BitMatrix::bit(&t, col) {
            BitMatrix::xor_into(&mut t, &prow);
            BitMatrix::xor_into(&mut t_coeff, &pcoeff);
        }
        pivot_row += 1;
        if pivot_row == work.len() {
            break;
        }
    }
    if ncols > 0 && t.iter().any(|&w| w != 0) {
        return None;
    }
    Some((0..m).map(|k| (t_coeff[k / W] >> (k % W) & 1) as u8).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let m = BitMatrix::from_rows(3, [[1, 0, 0].as_slice(), &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(m.rank(), 2);
        let id = BitMatrix::from_rows(3, [[1, 0, 0].as_slice(), &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.det(), 1);
    }

    #[test]
    fn solve_basic() {
        let rows: Vec<&[u8]> = vec![&[1, 0, 1], &[0, 1, 1]];
        assert_eq!(solve_combination(3, &rows, &[1, 1, 0]), Some(vec![1, 1]));
        assert_eq!(solve_combination(3, &rows, &[1, 1, 1]), None);
        assert_eq!(solve_combination(3, &rows, &[0, 0, 0]), Some(vec![0, 0]));
    }

    #[test]
    fn solve_empty_target_space() {
        let rows: Vec<&[u8]> = vec![];
        assert_eq!(solve_combination(0, &rows, &[]), Some(vec![]));
    }
}
