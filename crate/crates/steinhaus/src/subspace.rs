//! Symmetry classes of Steinhaus triangles: membership predicates, generating
//! index sets, dimension formulas, closed-form bases and coordinates.
//!
//! The five classes are the full space ST(n), the horizontally symmetric
//! triangles HST(n), the rotationally symmetric RST(n), the dihedrally
//! symmetric DST(n), and DST0(n), the dihedrally symmetric triangles whose
//! first row has even weight.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{solve_combination, BitMatrix};
use crate::seq::{binom_mod2, bseq, eseq, BinSeq};
use crate::triangle::{u_triangle, Triangle};

/// A symmetry class of Steinhaus triangles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SymClass {
    #[serde(rename = "FULL")]
    Full,
    H,
    R,
    D,
    D0,
}

pub const ALL_CLASSES: [SymClass; 5] =
    [SymClass::Full, SymClass::H, SymClass::R, SymClass::D, SymClass::D0];

impl fmt::Display for SymClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymClass::Full => "FULL",
            SymClass::H => "H",
            SymClass::R => "R",
            SymClass::D => "D",
            SymClass::D0 => "D0",
        };
        f.write_str(s)
    }
}

impl FromStr for SymClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "FULL" | "ST" => Ok(SymClass::Full),
            "H" | "HST" => Ok(SymClass::H),
            "R" | "RST" => Ok(SymClass::R),
            "D" | "DST" => Ok(SymClass::D),
            "D0" | "DST0" => Ok(SymClass::D0),
            _ => Err(Error::UnsupportedClass),
        }
    }
}

/// A set of positions inside the index triangle of size `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSet {
    pub n: usize,
    pub positions: Vec<(usize, usize)>,
}

impl IndexSet {
    /// Validates that every position satisfies 1 <= i <= j <= n and that
    /// there are no duplicates.
    pub fn new(n: usize, mut positions: Vec<(usize, usize)>) -> Result<Self> {
        positions.sort_unstable();
        for w in positions.windows(2) {
            if w[0] == w[1] {
                return Err(Error::BadCardinality {
                    expected: positions.len(),
                    got: positions.len() - 1,
                });
            }
        }
        for &(i, j) in &positions {
            if i < 1 || j < i || j > n {
                return Err(Error::PositionOutOfRange { i, j, n });
            }
        }
        Ok(IndexSet { n, positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Membership test for a symmetry class, by the defining fixed-point
/// equations: H means reflect(t) = t, R means rotate(t) = t, D means both,
/// and D0 additionally requires the first row to have even weight.
pub fn is_member(cls: SymClass, t: &Triangle) -> bool {
    match cls {
        SymClass::Full => true,
        SymClass::H => t.reflect() == *t,
        SymClass::R => t.rotate() == *t,
        SymClass::D => t.reflect() == *t && t.rotate() == *t,
        SymClass::D0 => {
            t.reflect() == *t && t.rotate() == *t && t.first_row().sigma2() == 0
        }
    }
}

/// Horizontal symmetry via the middle entries: t is horizontally symmetric
/// iff a_{n-2i,n-i} = 0 for all i in 0..floor(n/2).
pub fn check_hsym_via_middles(t: &Triangle) -> bool {
    let n = t.size();
    (0..n / 2).all(|i| t.entry(n - 2 * i, n - i).expect("in range") == 0)
}

/// Dihedral symmetry via the middle entries of the three medians: t is
/// dihedrally symmetric iff at least two of the three sets
/// {a_{n-2i,n-i}}, {a_{i,2i-1}}, {a_{i,n-i+1}} consist of zeroes only.
pub fn check_dihsym_via_middles(t: &Triangle) -> bool {
    let n = t.size();
    let a = (0..n / 2).all(|i| t.entry(n - 2 * i, n - i).expect("in range") == 0);
    let b = (1..=n / 2).all(|i| t.entry(i, 2 * i - 1).expect("in range") == 0);
    let c = (1..=n / 2).all(|i| t.entry(i, n - i + 1).expect("in range") == 0);
    (a as u8) + (b as u8) + (c as u8) >= 2
}

/// Dimension of the class as a GF(2) vector space of first rows.
pub fn dim(cls: SymClass, n: usize) -> usize {
    match cls {
        SymClass::Full => n,
        SymClass::H => n.div_ceil(2),
        SymClass::R => n / 3 + usize::from(n % 3 == 1),
        SymClass::D => (n + 3) / 6 + usize::from(n % 6 == 1),
        SymClass::D0 => n / 6 + usize::from(n % 6 == 4),
    }
}

/// The canonical generating index set: the projection of the subspace onto
/// these positions is a bijection. The column j* = n - floor(n/3) carries
/// the R/D/D0 sets.
pub fn canonical_index_set(cls: SymClass, n: usize) -> IndexSet {
    let m = dim(cls, n);
    let jstar = n - n / 3;
    let positions = match cls {
        SymClass::Full => (1..=n).map(|j| (1, j)).collect(),
        SymClass::H => (1..=m).map(|j| (1, j)).collect(),
        SymClass::R => (1..=m).map(|i| (i, jstar)).collect(),
        SymClass::D => {
            if n.is_multiple_of(2) {
                (0..m).map(|i| (2 * i + 1, jstar)).collect()
            } else {
                let mut v = vec![(1, jstar)];
                v.extend((1..m).map(|i| (2 * i, jstar)));
                v
            }
        }
        SymClass::D0 => {
            if n.is_multiple_of(2) {
                (0..m).map(|i| (2 * i + 1, jstar)).collect()
            } else {
                (1..=m).map(|i| (2 * i, jstar)).collect()
            }
        }
    };
    IndexSet { n, positions }
}

/// Determinant criterion for generating index sets of the full space: a set
/// of n positions {(i_k, j_k)} generates ST(n) iff the matrix with entries
/// C(i_k - 1, j_k - l) mod 2 is invertible over GF(2).
pub fn is_generating_index_set_full(g: &IndexSet) -> Result<bool> {
    let n = g.n;
    if g.positions.len() != n {
        return Err(Error::BadCardinality { expected: n, got: g.positions.len() });
    }
    let rows: Vec<Vec<u8>> = g
        .positions
        .iter()
        .map(|&(i, j)| {
            (1..=n)
                .map(|l| binom_mod2(i as i64 - 1, j as i64 - l as i64))
                .collect()
        })
        .collect();
    let m = BitMatrix::from_rows(n, rows.iter().map(|r| r.as_slice()));
    Ok(m.det() == 1)
}

/// An ordered basis of one symmetry class, together with the canonical index
/// set its coordinates refer to.
#[derive(Clone, Debug)]
pub struct Basis {
    pub cls: SymClass,
    pub n: usize,
    pub elements: Vec<Triangle>,
    pub index_set: IndexSet,
}

impl Basis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn to_json(&self) -> BasisJson {
        BasisJson {
            class: self.cls.to_string(),
            n: self.n,
            elements: self.elements.iter().map(|t| t.first_row().to_string()).collect(),
            index_set: self.index_set.positions.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct BasisJson {
    pub class: String,
    pub n: usize,
    pub elements: Vec<String>,
    pub index_set: Vec<(usize, usize)>,
}

/// Closed-form basis of a symmetry class.
///
/// `l_params` overrides the free window offsets l_k of the rotationally
/// symmetric basis; the default is all zeroes, matching the worked tables.
/// The other classes ignore it.
pub fn basis(cls: SymClass, n: usize, l_params: Option<&[i64]>) -> Result<Basis> {
    let m = dim(cls, n);
    let elements: Vec<Triangle> = match cls {
        SymClass::Full => (1..=n)
            .map(|k| Triangle::from_first_row(eseq(n, k).expect("k in range")))
            .collect(),
        SymClass::H => {
            // nabla B(n; n-2k, -k) for k = 1..floor(n/2), then the all-ones
            // triangle when n is odd
            let mut v: Vec<Triangle> = (1..=n / 2)
                .map(|k| {
                    Triangle::from_first_row(bseq(n, (n - 2 * k) as i64, -(k as i64)))
                })
                .collect();
            if n % 2 == 1 {
                v.push(Triangle::from_first_row(BinSeq::ones(n)));
            }
            v
        }
        SymClass::R => {
            let ls: Vec<i64> = match l_params {
                Some(ls) => {
                    if ls.len() != m {
                        return Err(Error::BadCardinality { expected: m, got: ls.len() });
                    }
                    ls.to_vec()
                }
                None => vec![0; m],
            };
            (0..m)
                .map(|k| Triangle::from_first_row(bseq(n, k as i64, ls[k])).rho())
                .collect()
        }
        SymClass::D => {
            if n.is_multiple_of(2) {
                (0..m)
                    .map(|k| {
                        let kk = 2 * k as i64;
                        Triangle::from_first_row(bseq(n, kk, k as i64 - n as i64 / 2))
                            .rho()
                    })
                    .collect()
            } else {
                let mut v = vec![u_triangle(n)];
                v.extend((0..m.saturating_sub(1)).map(|k| {
                    let kk = 2 * k as i64 + 1;
                    Triangle::from_first_row(bseq(n, kk, (kk - n as i64) / 2)).rho()
                }));
                v
            }
        }
        SymClass::D0 => (0..m)
            .map(|k| {
                let kk = if n.is_multiple_of(2) { 2 * k as i64 } else { 2 * k as i64 + 1 };
                let l = if n.is_multiple_of(2) {
                    k as i64 - n as i64 / 2
                } else {
                    (kk - n as i64) / 2
                };
                Triangle::from_first_row(bseq(n, kk, l)).rho()
            })
            .collect(),
    };
    debug_assert_eq!(elements.len(), m);
    Ok(Basis { cls, n, elements, index_set: canonical_index_set(cls, n) })
}

/// Expresses `t` in a basis, returning its coefficient vector, or `None`
/// when `t` lies outside the span.
pub fn coordinates(b: &Basis, t: &Triangle) -> Result<Option<BinSeq>> {
    if t.size() != b.n {
        return Err(Error::SizeMismatch(t.size(), b.n));
    }
    let rows: Vec<&[u8]> = b.elements.iter().map(|e| e.first_row().bits()).collect();
    Ok(solve_combination(b.n, &rows, t.first_row().bits())
        .map(BinSeq::from_bits_unchecked))
}

/// Guard on enumeration size.
pub const ENUM_DIM_CAP: usize = 24;

/// All 2^dim members of the class, ordered lexicographically by coordinate
/// vector (first basis element is the most significant coordinate).
pub fn enumerate_subspace(cls: SymClass, n: usize) -> Result<Vec<Triangle>> {
    let b = basis(cls, n, None)?;
    let m = b.dim();
    if m > ENUM_DIM_CAP {
        return Err(Error::DimensionGuard { dim: m as u32, cap: ENUM_DIM_CAP as u32 });
    }
    let mut out = Vec::with_capacity(1usize << m);
    for code in 0u64..(1u64 << m) {
        let mut row = BinSeq::zeros(n);
        for (k, e) in b.elements.iter().enumerate() {
            if code >> (m - 1 - k) & 1 == 1 {
                row = row.xor(e.first_row()).expect("equal lengths");
            }
        }
        out.push(Triangle::from_first_row(row));
    }
    Ok(out)
}

/// Coordinate vector of the member at enumeration position `code`.
pub fn enum_coords(m: usize, code: u64) -> BinSeq {
    BinSeq::from_bits_unchecked((0..m).map(|k| (code >> (m - 1 - k) & 1) as u8).collect())
}
