//! Independent brute-force verification harness. Everything here works on
//! raw bitmask rows derived by the local rule; symmetry is decided straight
//! from the index maps of the reflection and the rotation, never through the
//! closed-form bases, dimension formulas or canonical index sets that the
//! harness exists to validate.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{psi, theta, SteinhausGraph};
use crate::seq::BinSeq;
use crate::subspace::{self, SymClass};
use crate::triangle::Triangle;

pub const SEQ_CAP: usize = 22;
pub const GRAPH_CAP: usize = 12;
pub const GENSET_CAP: usize = 4;

/// Outcome of a verification run: one line per check, overall pass flag.
#[derive(Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub pass: bool,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new(), pass: true }
    }

    fn check(&mut self, label: &str, expected: u64, got: u64) {
        let ok = expected == got;
        self.pass &= ok;
        self.lines.push(format!(
            "{} {label} expected={expected} got={got}",
            if ok { "PASS" } else { "FAIL" }
        ));
    }
}

/// Rows of the triangle over first row `code` (bit j = term j+1), as
/// bitmasks: rows[i] bit t is the entry at row i+1, offset t.
fn raw_rows(code: u32, n: usize) -> Vec<u32> {
    let mut rows = Vec::with_capacity(n);
    let mut row = code;
    for i in 0..n {
        rows.push(row);
        let len = n - i;
        row = (row ^ (row >> 1)) & ((1u32 << (len - 1)) - 1);
    }
    rows
}

fn bit(rows: &[u32], i: usize, j: usize) -> u32 {
    // entry a_{i,j} sits at offset j - i of row i
    rows[i - 1] >> (j - i) & 1
}

/// Horizontal symmetry straight from the index map of the reflection:
/// a_{i,j} = a_{i,n-j+i} for all positions.
fn raw_hsym(rows: &[u32], n: usize) -> bool {
    for i in 1..=n {
        for j in i..=n {
            if bit(rows, i, j) != bit(rows, i, n - j + i) {
                return false;
            }
        }
    }
    true
}

/// Rotational symmetry straight from the index map of the rotation:
/// a_{i,j} = a_{j-i+1,n-i+1} for all positions.
fn raw_rsym(rows: &[u32], n: usize) -> bool {
    for i in 1..=n {
        for j in i..=n {
            if bit(rows, i, j) != bit(rows, j - i + 1, n - i + 1) {
                return false;
            }
        }
    }
    true
}

/// Raw membership test for a symmetry class from first-row bits `code`.
fn raw_member(cls: SymClass, code: u32, n: usize) -> bool {
    let rows = raw_rows(code, n);
    match cls {
        SymClass::Full => true,
        SymClass::H => raw_hsym(&rows, n),
        SymClass::R => raw_rsym(&rows, n),
        SymClass::D => raw_hsym(&rows, n) && raw_rsym(&rows, n),
        SymClass::D0 => {
            code.count_ones().is_multiple_of(2) && raw_hsym(&rows, n) && raw_rsym(&rows, n)
        }
    }
}

fn code_to_seq(code: u32, n: usize) -> BinSeq {
    BinSeq::from_bits((0..n).map(|j| (code >> j & 1) as u8).collect())
        .expect("bits are 0/1")
}

fn seq_to_code(s: &BinSeq) -> u32 {
    s.bits()
        .iter()
        .enumerate()
        .fold(0u32, |acc, (j, &b)| acc | (b as u32) << j)
}

/// All first rows of class members of size n, by scanning all 2^n sequences.
pub fn brute_members(cls: SymClass, n: usize) -> Result<Vec<BinSeq>> {
    if n > SEQ_CAP {
        return Err(Error::CapExceeded { n, cap: SEQ_CAP });
    }
    let mut out = Vec::new();
    for code in 0u32..(1u32 << n) {
        if raw_member(cls, code, n) {
            out.push(code_to_seq(code, n));
        }
    }
    Ok(out)
}

/// Checks |brute_members(cls, n)| = 2^dim(cls, n) for every class and every
/// n up to `n_max`.
pub fn verify_dims(n_max: usize) -> Result<Report> {
    if n_max > SEQ_CAP {
        return Err(Error::CapExceeded { n: n_max, cap: SEQ_CAP });
    }
    let mut rep = Report::new();
    for cls in subspace::ALL_CLASSES {
        for n in 0..=n_max {
            let got = brute_members(cls, n)?.len() as u64;
            let expected = 1u64 << subspace::dim(cls, n);
            rep.check(&format!("cls={cls} n={n}"), expected, got);
        }
    }
    Ok(rep)
}

/// Checks that the closed-form basis of (cls, n) is independent, that every
/// element is a member by the raw symmetry test, and that its span equals
/// the brute-force member set.
pub fn verify_basis(cls: SymClass, n: usize) -> Result<Report> {
    if n > SEQ_CAP {
        return Err(Error::CapExceeded { n, cap: SEQ_CAP });
    }
    let mut rep = Report::new();
    let b = subspace::basis(cls, n, None)?;
    let rows: Vec<&[u8]> = b.elements.iter().map(|e| e.first_row().bits()).collect();
    let rank = BitMatrix::from_rows(n, rows.iter().copied()).rank() as u64;
    rep.check(&format!("cls={cls} n={n} rank"), b.dim() as u64, rank);

    let member_count = b
        .elements
        .iter()
        .filter(|e| raw_member(cls, seq_to_code(e.first_row()), n))
        .count() as u64;
    rep.check(&format!("cls={cls} n={n} members"), b.dim() as u64, member_count);

    let m = b.dim();
    let mut span: Vec<u32> = (0u32..(1 << m))
        .map(|mask| {
            (0..m)
                .filter(|k| mask >> k & 1 == 1)
                .fold(0u32, |acc, k| acc ^ seq_to_code(b.elements[k].first_row()))
        })
        .collect();
    span.sort_unstable();
    span.dedup();
    let mut brute: Vec<u32> = brute_members(cls, n)?.iter().map(seq_to_code).collect();
    brute.sort_unstable();
    let eq = span == brute;
    rep.check(&format!("cls={cls} n={n} span"), 1, eq as u64);
    Ok(rep)
}

/// Degree parities of G(S) computed directly from the bitmask rows of the
/// adjacency triangle: vertex v's degree is the number of ones in row v plus
/// the number of ones in column v above the diagonal.
fn raw_degree_parities(code: u32, order: usize) -> Vec<u8> {
    let rows = raw_rows(code, order - 1);
    let mut deg = vec![0u32; order];
    for (i, row) in rows.iter().enumerate() {
        for t in 0..(order - 1 - i) {
            if row >> t & 1 == 1 {
                deg[i] += 1;
                deg[i + 1 + t] += 1;
            }
        }
    }
    deg.iter().map(|d| (d & 1) as u8).collect()
}

/// Exhaustive check of the graph-triangle correspondence for every order up
/// to `n_max`: evenness of G(S) is equivalent to dihedral symmetry of
/// theta(G(S)), even graphs land in the even-weight dihedral class, the even
/// count is 2^{floor((n-1)/3)}, and both roundtrips are identities.
pub fn verify_graph_iso(n_max: usize) -> Result<Report> {
    if n_max > GRAPH_CAP {
        return Err(Error::CapExceeded { n: n_max, cap: GRAPH_CAP });
    }
    let mut rep = Report::new();
    for order in 1..=n_max {
        let total = 1u32 << (order - 1);
        let mut even_count = 0u64;
        let mut equiv_ok = 0u64;
        let mut d0_ok = 0u64;
        let mut roundtrip_ok = 0u64;
        for code in 0..total {
            let even = raw_degree_parities(code, order).iter().all(|&p| p == 0);
            let g = SteinhausGraph::from_seq(code_to_seq(code, order - 1));
            let th = theta(&g);
            let th_code = seq_to_code(th.first_row());
            let dih = raw_member(SymClass::D, th_code, 2 * order - 1);
            if even == dih {
                equiv_ok += 1;
            }
            if even {
                even_count += 1;
                if raw_member(SymClass::D0, th_code, 2 * order - 1) {
                    d0_ok += 1;
                }
                if psi(&th).expect("odd size") == g {
                    roundtrip_ok += 1;
                }
            }
        }
        let expected_even = 1u64 << ((order - 1) / 3);
        rep.check(&format!("iso n={order} equivalence"), total as u64, equiv_ok);
        rep.check(&format!("iso n={order} even-count"), expected_even, even_count);
        rep.check(&format!("iso n={order} theta-in-D0"), even_count, d0_ok);
        rep.check(&format!("iso n={order} psi-theta-id"), even_count, roundtrip_ok);

        // the opposite roundtrip, over the brute-force dihedral even-weight
        // class of size 2n-1 (kept to scannable sizes)
        if 2 * order - 1 <= 19 {
            let members = brute_members(SymClass::D0, 2 * order - 1)?;
            let count = members.len() as u64;
            let mut back_ok = 0u64;
            for s in &members {
                let t = Triangle::from_first_row(s.clone());
                if theta(&psi(&t).expect("odd size")) == t {
                    back_ok += 1;
                }
            }
            rep.check(&format!("iso n={order} theta-psi-id"), count, back_ok);
            rep.check(&format!("iso n={order} |D0|"), expected_even, count);
        }
    }
    Ok(rep)
}

/// All positions of the size-n index triangle, in row-major order.
fn all_positions(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect()
}

/// Brute-force test that projection onto `positions` is injective on the
/// full space of size-n triangles.
fn projection_injective(positions: &[(usize, usize)], n: usize) -> bool {
    let mut seen = vec![false; 1 << positions.len()];
    for code in 0u32..(1 << n) {
        let rows = raw_rows(code, n);
        let key = positions
            .iter()
            .enumerate()
            .fold(0usize, |acc, (t, &(i, j))| acc | (bit(&rows, i, j) as usize) << t);
        if seen[key] {
            return false;
        }
        seen[key] = true;
    }
    true
}

/// Counts the size-n subsets of the index triangle that generate the full
/// space, checking for every subset that the determinant criterion and
/// brute-force projection injectivity agree.
pub fn count_generating_sets(n: usize) -> Result<u64> {
    if n > GENSET_CAP {
        return Err(Error::CapExceeded { n, cap: GENSET_CAP });
    }
    let positions = all_positions(n);
    let total = positions.len();
    let mut count = 0u64;
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let chosen: Vec<(usize, usize)> = subset.iter().map(|&t| positions[t]).collect();
        let g = subspace::IndexSet::new(n, chosen.clone())?;
        let by_det = subspace::is_generating_index_set_full(&g)?;
        let by_force = projection_injective(&chosen, n);
        assert_eq!(
            by_det, by_force,
            "determinant criterion and projection injectivity disagree on {chosen:?}"
        );
        if by_det {
            count += 1;
        }
        // next lexicographic n-combination of 0..total
        let mut t = n;
        loop {
            if t == 0 {
                return Ok(count);
            }
            t -= 1;
            if subset[t] < total - (n - t) {
                subset[t] += 1;
                for u in t + 1..n {
                    subset[u] = subset[u - 1] + 1;
                }
                break;
            }
        }
    }
}
