//! Binary Steinhaus triangles: downward triangles of bits where every entry
//! is the XOR of the two entries above it. A triangle is canonically held as
//! its first row; row i is the (i-1)-fold derived sequence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{binom_mod2, BinSeq};

/// A Steinhaus triangle of size `n`, represented by its first row.
///
/// `entry(i, j)` is defined for 1 <= i <= j <= n. The size-0 triangle is the
/// empty triangle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Triangle {
    first_row: BinSeq,
}

impl Triangle {
    pub fn from_first_row(s: BinSeq) -> Self {
        Triangle { first_row: s }
    }

    pub fn empty() -> Self {
        Triangle { first_row: BinSeq::empty() }
    }

    pub fn zero(n: usize) -> Self {
        Triangle { first_row: BinSeq::zeros(n) }
    }

    pub fn size(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &BinSeq {
        &self.first_row
    }

    /// Materializes all rows; row i (1-based) has length n-i+1.
    pub fn rows(&self) -> Vec<BinSeq> {
        let n = self.size();
        let mut rows = Vec::with_capacity(n);
        let mut row = self.first_row.clone();
        for _ in 0..n {
            let next = row.derive();
            rows.push(row);
            row = next;
        }
        rows
    }

    /// The entry a_{i,j}, computed from the first row without materializing
    /// the rows: a_{i,j} = sum_k C(i-1, j-k) a_{1,k} mod 2.
    pub fn entry(&self, i: usize, j: usize) -> Result<u8> {
        let n = self.size();
        if i < 1 || j < i || j > n {
            return Err(Error::PositionOutOfRange { i, j, n });
        }
        let mut acc = 0u8;
        // only k in j-i+1 ..= j contributes
        for k in (j + 1 - i)..=j {
            acc ^= binom_mod2(i as i64 - 1, (j - k) as i64) & self.first_row.get(k);
        }
        Ok(acc)
    }

    /// The right side (a_{j,n})_{1<=j<=n}: last entry of every row.
    pub fn right_side(&self) -> BinSeq {
        let n = self.size();
        let mut bits = Vec::with_capacity(n);
        let mut row = self.first_row.clone();
        for _ in 0..n {
            bits.push(row.get(row.len()));
            row = row.derive();
        }
        BinSeq::from_bits(bits).expect("side of a valid triangle")
    }

    /// The left side (a_{j,j})_{1<=j<=n}: first entry of every row.
    pub fn left_side(&self) -> BinSeq {
        let n = self.size();
        let mut bits = Vec::with_capacity(n);
        let mut row = self.first_row.clone();
        for _ in 0..n {
            bits.push(row.get(1));
            row = row.derive();
        }
        BinSeq::from_bits(bits).expect("side of a valid triangle")
    }

    /// The 120-degree rotation r: the first row of the image is the right
    /// side of the original.
    pub fn rotate(&self) -> Self {
        Triangle::from_first_row(self.right_side())
    }

    /// The horizontal reflection h: every row is reversed in place.
    pub fn reflect(&self) -> Self {
        Triangle::from_first_row(self.first_row.reversed())
    }

    /// Elementwise sum modulo 2 of two triangles of equal size.
    pub fn add(&self, other: &Triangle) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(Triangle::from_first_row(
            self.first_row.xor(&other.first_row).expect("sizes checked"),
        ))
    }

    /// The symmetrizer rho = r^2 + r + id, mapping any triangle onto a
    /// rotationally symmetric one.
    pub fn rho(&self) -> Self {
        let r = self.rotate();
        let r2 = r.rotate();
        self.add(&r).expect("equal sizes").add(&r2).expect("equal sizes")
    }

    /// Removes the first row and both slanted sides, leaving the size n-3
    /// core. The first row of the image is the interior of row 2.
    pub fn h_op(&self) -> Result<Self> {
        let n = self.size();
        if n < 3 {
            return Err(Error::SizeTooSmall { required: 3, got: n });
        }
        let row2 = self.first_row.derive();
        let bits = row2.bits()[1..row2.len() - 1].to_vec();
        Ok(Triangle::from_first_row(BinSeq::from_bits_unchecked(bits)))
    }

    /// `k`-fold application of [`Triangle::h_op`]; requires 3k <= n.
    pub fn h_op_k(&self, k: usize) -> Result<Self> {
        let n = self.size();
        if 3 * k > n {
            return Err(Error::SizeTooSmall { required: 3 * k, got: n });
        }
        let mut t = self.clone();
        for _ in 0..k {
            t = t.h_op()?;
        }
        Ok(t)
    }

    /// Number of one-entries among the binomial(n+1, 2) entries.
    pub fn count_ones(&self) -> usize {
        let mut total = 0;
        let mut row = self.first_row.clone();
        for _ in 0..self.size() {
            total += row.weight();
            row = row.derive();
        }
        total
    }

    /// True iff the triangle contains as many zeros as ones.
    pub fn is_balanced(&self) -> bool {
        let n = self.size();
        let cells = n * (n + 1) / 2;
        2 * self.count_ones() == cells
    }

    /// Text rendering with bits separated by single spaces; row i is shifted
    /// half a cell right of row i-1 so the triangle reads downward.
    pub fn render(&self) -> String {
        let rows = self.rows();
        let mut out = String::new();
        for (i, row) in rows.iter().enumerate() {
            out.push_str(&" ".repeat(i));
            let cells: Vec<String> = row.bits().iter().map(|b| b.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, include_rows: bool) -> TriangleJson {
        TriangleJson {
            n: self.size(),
            first_row: self.first_row.to_string(),
            rows: include_rows
                .then(|| self.rows().iter().map(|r| r.to_string()).collect()),
        }
    }
}

/// The symmetrized all-ones triangle U_n = rho(nabla (1)_n); its first row is
/// 011...110 for n >= 3.
pub fn u_triangle(n: usize) -> Triangle {
    Triangle::from_first_row(BinSeq::ones(n)).rho()
}

#[derive(Serialize, Deserialize, Debug)]
pub struct TriangleJson {
    pub n: usize,
    pub first_row: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<String>>,
}
