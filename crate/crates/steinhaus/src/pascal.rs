//! Generalized Pascal triangles over GF(2): upward-pointing triangles filled
//! by the XOR local rule, determined by their left and right sides. The map
//! gamma cuts a size-n Pascal triangle out of the middle of a size 2n-1
//! Steinhaus triangle and is a linear isomorphism intertwining the two
//! dihedral actions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{binom_mod2, BinSeq};
use crate::subspace::{basis, SymClass};
use crate::triangle::Triangle;

/// A generalized Pascal triangle of size n >= 1 with entries
/// (a_{i,j})_{1<=j<=i<=n}; row i holds i entries, the apex is row 1, and the
/// interior follows from the sides by a_{i,j} = a_{i-1,j-1} XOR a_{i-1,j}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PascalTriangle {
    left: BinSeq,
    right: BinSeq,
}

impl PascalTriangle {
    /// Builds the triangle from its sides; they must have equal positive
    /// length and share their first term (the apex).
    pub fn from_sides(left: BinSeq, right: BinSeq) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::LengthMismatch(left.len(), right.len()));
        }
        if left.is_empty() {
            return Err(Error::SizeTooSmall { required: 1, got: 0 });
        }
        if left.get(1) != right.get(1) {
            return Err(Error::ApexMismatch);
        }
        Ok(PascalTriangle { left, right })
    }

    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self) -> &BinSeq {
        &self.left
    }

    pub fn right(&self) -> &BinSeq {
        &self.right
    }

    /// Materializes the rows; row i (1-based) has i entries.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        let n = self.size();
        let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
        for i in 1..=n {
            let mut row = vec![0u8; i];
            row[0] = self.left.get(i);
            row[i - 1] = self.right.get(i);
            for j in 2..i {
                row[j - 1] = rows[i - 2][j - 2] ^ rows[i - 2][j - 1];
            }
            rows.push(row);
        }
        rows
    }

    /// The entry a_{i,j}, 1 <= j <= i <= size.
    pub fn entry(&self, i: usize, j: usize) -> Result<u8> {
        let n = self.size();
        if i < 1 || j < 1 || j > i || i > n {
            return Err(Error::PositionOutOfRange { i, j, n });
        }
        Ok(self.rows()[i - 1][j - 1])
    }

    /// Text rendering: n lines, the apex on line 1, row i indented so the
    /// triangle widens downward.
    pub fn render(&self) -> String {
        let rows = self.rows();
        let n = self.size();
        let mut out = String::new();
        for (i, row) in rows.iter().enumerate() {
            out.push_str(&" ".repeat(n - 1 - i));
            let cells: Vec<String> = row.iter().map(|b| b.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> PascalJson {
        PascalJson {
            n: self.size(),
            left: self.left.to_string(),
            right: self.right.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PascalJson {
    pub n: usize,
    pub left: String,
    pub right: String,
}

/// gamma: extracts the size-n Pascal triangle (a_{i,n-1+j})_{1<=j<=i<=n}
/// from a Steinhaus triangle of odd size 2n-1.
pub fn gamma(t: &Triangle) -> Result<PascalTriangle> {
    let size = t.size();
    if size.is_multiple_of(2) || size == 0 {
        return Err(Error::EvenSize(size));
    }
    let n = size.div_ceil(2);
    let rows = t.rows();
    // Steinhaus entry a_{i,j} lives at rows[i-1][j-i]
    let left: Vec<u8> = (1..=n).map(|i| rows[i - 1].bits()[n - i]).collect();
    let right: Vec<u8> = (1..=n).map(|i| rows[i - 1].bits()[n - 1]).collect();
    PascalTriangle::from_sides(
        BinSeq::from_bits_unchecked(left),
        BinSeq::from_bits_unchecked(right),
    )
}

/// Inverse of gamma: rebuilds the first row of the unique size 2n-1
/// Steinhaus triangle whose gamma image is `p`, by the inverse binomial
/// transform of each side.
pub fn gamma_inv(p: &PascalTriangle) -> Triangle {
    let n = p.size();
    let mut first = vec![0u8; 2 * n - 1];
    for j in 1..=n {
        let mut acc = 0u8;
        for k in 0..=(n - j) {
            acc ^= binom_mod2((n - j) as i64, k as i64) & p.left.get(k + 1);
        }
        first[j - 1] = acc;
        let mut acc = 0u8;
        for k in 0..=(n - j) {
            acc ^= binom_mod2((n - j) as i64, k as i64) & p.right.get(k + 1);
        }
        first[2 * n - j - 1] = acc;
    }
    Triangle::from_first_row(BinSeq::from_bits_unchecked(first))
}

/// The 120-degree rotation r' of Pascal triangles:
/// out(i,j) = a_{n+j-i, n+1-i}.
pub fn rotate_p(p: &PascalTriangle) -> PascalTriangle {
    let n = p.size();
    let rows = p.rows();
    let left: Vec<u8> = (1..=n).map(|i| rows[n - i][n - i]).collect();
    let right: Vec<u8> = (1..=n).map(|i| rows[n - 1][n - i]).collect();
    PascalTriangle {
        left: BinSeq::from_bits_unchecked(left),
        right: BinSeq::from_bits_unchecked(right),
    }
}

/// The horizontal reflection h' of Pascal triangles:
/// out(i,j) = a_{i, i+1-j}; every row is reversed in place.
pub fn reflect_p(p: &PascalTriangle) -> PascalTriangle {
    PascalTriangle { left: p.right.clone(), right: p.left.clone() }
}

/// Dimension of the symmetric Pascal subspaces: horizontally symmetric
/// (HPT), rotationally symmetric (RPT) and dihedrally symmetric (DPT)
/// triangles of size n. Only the H/R/D classes are defined.
pub fn dim_pt(cls: SymClass, n: usize) -> Result<usize> {
    match cls {
        SymClass::H => Ok(n),
        SymClass::R => Ok(2 * ((n - 1) / 3) + 1),
        SymClass::D => Ok(n.div_ceil(3)),
        _ => Err(Error::UnsupportedClass),
    }
}

/// Basis of HPT/RPT/DPT(n), obtained by pushing the corresponding basis of
/// the size 2n-1 Steinhaus classes through gamma. `l_params` passes the free
/// window offsets to the rotationally symmetric basis.
pub fn basis_pt(
    cls: SymClass,
    n: usize,
    l_params: Option<&[i64]>,
) -> Result<Vec<PascalTriangle>> {
    let st_cls = match cls {
        SymClass::H | SymClass::R | SymClass::D => cls,
        _ => return Err(Error::UnsupportedClass),
    };
    let b = basis(st_cls, 2 * n - 1, l_params)?;
    let out: Vec<PascalTriangle> = b
        .elements
        .iter()
        .map(|t| gamma(t).expect("odd size by construction"))
        .collect();
    debug_assert_eq!(out.len(), dim_pt(cls, n)?);
    Ok(out)
}
