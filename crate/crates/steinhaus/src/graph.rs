//! Steinhaus graphs: simple graphs of order n whose adjacency matrix has a
//! Steinhaus triangle of size n-1 as its strict upper part. The maps theta
//! and psi identify even graphs with the dihedrally symmetric triangles of
//! size 2n-1 with even first row, and iota exchanges even and odd graphs of
//! even order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{binom_mod2, BinSeq};
use crate::triangle::Triangle;

/// A Steinhaus graph of order `n`, determined by a sequence of length n-1:
/// vertex 1 is adjacent to vertex j+1 iff seq[j] = 1, and the rest of the
/// adjacency matrix follows by the local rule.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SteinhausGraph {
    seq: BinSeq,
}

impl SteinhausGraph {
    pub fn from_seq(seq: BinSeq) -> Self {
        SteinhausGraph { seq }
    }

    /// Order of the graph (number of vertices), |seq| + 1.
    pub fn order(&self) -> usize {
        self.seq.len() + 1
    }

    pub fn seq(&self) -> &BinSeq {
        &self.seq
    }

    /// The triangle sitting above the diagonal of the adjacency matrix.
    pub fn triangle(&self) -> Triangle {
        Triangle::from_first_row(self.seq.clone())
    }

    /// Full n-by-n adjacency matrix: symmetric, zero diagonal, row 1 above
    /// the diagonal equal to the defining sequence.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.order();
        let rows = self.triangle().rows();
        let mut m = vec![vec![0u8; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (off, &b) in row.bits().iter().enumerate() {
                let j = i + 1 + off; // 0-based column in the matrix
                m[i][j] = b;
                m[j][i] = b;
            }
        }
        m
    }

    /// Vertex degrees, over the integers.
    pub fn degree_vector(&self) -> Vec<usize> {
        self.adjacency_matrix()
            .iter()
            .map(|row| row.iter().map(|&b| b as usize).sum())
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.degree_vector().iter().all(|d| d % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.degree_vector().iter().all(|d| d % 2 == 1)
    }

    pub fn is_parity_regular(&self) -> bool {
        let degs = self.degree_vector();
        let p = degs[0] % 2;
        degs.iter().all(|d| d % 2 == p)
    }

    /// True iff every diagonal of the upper-triangular Steinhaus triangle is
    /// a symmetric sequence. Even graphs always have this property.
    pub fn is_doubly_symmetric(&self) -> bool {
        let t = self.triangle();
        let n = t.size();
        // diagonal d holds the entries a_{i, i+d} for i = 1..n-d
        (0..n).all(|d| {
            let bits: Vec<u8> = (1..=n - d)
                .map(|i| t.entry(i, i + d).expect("in range"))
                .collect();
            BinSeq::from_bits_unchecked(bits).is_symmetric()
        })
    }

    /// Sorted edge list with 1-based vertex labels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.adjacency_matrix();
        let mut out = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &b) in row.iter().enumerate().skip(i + 1) {
                if b == 1 {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            order: self.order(),
            seq: self.seq.to_string(),
            edges: self.edges(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct GraphJson {
    pub order: usize,
    pub seq: String,
    pub edges: Vec<(usize, usize)>,
}

/// theta: G(S) -> the size 2n-1 triangle of the antiderivative, vanishing at
/// its last term, of the interlacing of S with its reversal. The image is
/// always horizontally symmetric with even first row, and the graph is even
/// iff the image is dihedrally symmetric.
pub fn theta(g: &SteinhausGraph) -> Triangle {
    let n = g.order();
    let ir = g.seq().interlace_reverse();
    let row = ir.antiderive(n, 0).expect("index n valid for length 2n-2");
    Triangle::from_first_row(row)
}

/// psi: extracts the graph G((a_{2,2j})_j) from an odd-size triangle. On the
/// dihedrally symmetric triangles with even first row this inverts theta.
pub fn psi(t: &Triangle) -> Result<SteinhausGraph> {
    let size = t.size();
    if size.is_multiple_of(2) {
        return Err(Error::EvenSize(size));
    }
    let n = size.div_ceil(2);
    let row2 = t.first_row().derive();
    let bits: Vec<u8> = (1..n).map(|j| row2.get(2 * j - 1)).collect();
    Ok(SteinhausGraph::from_seq(BinSeq::from_bits_unchecked(bits)))
}

/// iota: flips the last bit of the defining sequence of an even-order graph,
/// exchanging even and odd graphs. An involution.
pub fn iota(g: &SteinhausGraph) -> Result<SteinhausGraph> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let mut bits = g.seq().bits().to_vec();
    let last = bits.len() - 1;
    bits[last] ^= 1;
    Ok(SteinhausGraph::from_seq(BinSeq::from_bits_unchecked(bits)))
}

/// Dimension of the space of even Steinhaus graphs of order n.
pub fn dim_esg(n: usize) -> usize {
    (n - 1) / 3
}

/// Dimension of the space of parity-regular Steinhaus graphs of order n.
pub fn dim_prsg(n: usize) -> usize {
    (n - 1) / 3 + usize::from(n.is_multiple_of(2))
}

/// Closed-form defining sequence of the k-th even-graph basis element:
/// S_k[j] = C(k-n+2j-1, 2k) + C(k+n-2j, 2k-2j+3) + C(k-n+2, 2k-2n+2j+2)
/// mod 2 for j = 1..n-1.
fn esg_seq_closed_form(n: usize, k: usize) -> BinSeq {
    let (n, k) = (n as i64, k as i64);
    let bits = (1..n)
        .map(|j| {
            binom_mod2(k - n + 2 * j - 1, 2 * k)
                ^ binom_mod2(k + n - 2 * j, 2 * k - 2 * j + 3)
                ^ binom_mod2(k - n + 2, 2 * k - 2 * n + 2 * j + 2)
        })
        .collect();
    BinSeq::from_bits_unchecked(bits)
}

/// Basis of the even Steinhaus graphs of order n: the graphs
/// psi(rho(nabla B(2n-1; 2k+1, k-n+1))) for k = 0..floor((n-1)/3)-1.
///
/// Each element is computed both through that pipeline and through the
/// closed-form sequence formula; a disagreement is a library bug and panics.
pub fn basis_esg(n: usize) -> Vec<SteinhausGraph> {
    let m = dim_esg(n);
    (0..m)
        .map(|k| {
            let b = crate::seq::bseq(2 * n - 1, 2 * k as i64 + 1, k as i64 - n as i64 + 1);
            let g = psi(&Triangle::from_first_row(b).rho()).expect("odd size");
            assert_eq!(
                *g.seq(),
                esg_seq_closed_form(n, k),
                "closed form disagrees with the pipeline at n={n}, k={k}"
            );
            g
        })
        .collect()
}

/// Basis of the parity-regular Steinhaus graphs of order n: for even n the
/// single-edge graph G((0)^{n-2}.(1)) followed by the even basis, for odd n
/// just the even basis.
pub fn basis_prsg(n: usize) -> Vec<SteinhausGraph> {
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        let mut bits = vec![0u8; n - 1];
        bits[n - 2] = 1;
        out.push(SteinhausGraph::from_seq(BinSeq::from_bits_unchecked(bits)));
    }
    out.extend(basis_esg(n));
    out
}
