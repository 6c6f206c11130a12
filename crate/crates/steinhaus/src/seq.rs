//! Binary sequences over GF(2) with the derivation/antiderivation calculus
//! and generalized binomial coefficients modulo 2.
//!
//! The external indexing convention is 1-based throughout: `s.get(1)` is the
//! leftmost term, matching how sequences are written as bitstrings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum supported sequence length in bits.
pub const MAX_LEN: usize = 1 << 16;

/// A finite sequence of bits, the generator of every triangle and graph here.
///
/// Addition is elementwise XOR and is defined only between sequences of equal
/// length. The empty sequence is a valid value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinSeq {
    bits: Vec<u8>,
}

impl BinSeq {
    /// Builds a sequence from 0/1 values, rejecting other bytes and
    /// over-long inputs.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.len() > MAX_LEN {
            return Err(Error::TooLong(bits.len()));
        }
        for &b in &bits {
            if b > 1 {
                return Err(Error::BadBitstring((b'0' + b.min(9)) as char));
            }
        }
        Ok(BinSeq { bits })
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinSeq { bits }
    }

    pub fn empty() -> Self {
        BinSeq { bits: Vec::new() }
    }

    pub fn zeros(n: usize) -> Self {
        BinSeq { bits: vec![0; n] }
    }

    pub fn ones(n: usize) -> Self {
        BinSeq { bits: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The `j`th term, 1-based. Panics when `j` is out of range.
    pub fn get(&self, j: usize) -> u8 {
        assert!(j >= 1 && j <= self.bits.len(), "index {j} out of range");
        self.bits[j - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    /// Sum modulo 2, i.e. the parity of the number of ones.
    pub fn sigma2(&self) -> u8 {
        (self.bits.iter().map(|&b| b as usize).sum::<usize>() & 1) as u8
    }

    pub fn reversed(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        BinSeq { bits }
    }

    /// True iff the sequence equals its reversal.
    pub fn is_symmetric(&self) -> bool {
        let n = self.bits.len();
        (0..n / 2).all(|j| self.bits[j] == self.bits[n - 1 - j])
    }

    /// True iff every mirror pair differs, applying the displayed condition
    /// a_{n-j+1} = a_j + 1 literally for all j (the middle term of an
    /// odd-length sequence can never satisfy it).
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.bits.len();
        (0..n).all(|j| self.bits[j] != self.bits[n - 1 - j])
    }

    /// The derived sequence: adjacent XORs, one term shorter.
    pub fn derive(&self) -> Self {
        let bits = self
            .bits
            .windows(2)
            .map(|w| w[0] ^ w[1])
            .collect::<Vec<_>>();
        BinSeq { bits }
    }

    /// `k`-fold derivation; `derive_k(0)` is the identity.
    pub fn derive_k(&self, k: usize) -> Self {
        let mut s = self.clone();
        for _ in 0..k.min(self.bits.len()) {
            s = s.derive();
        }
        s
    }

    /// The antiderived sequence whose `i`th term is `x`: one term longer,
    /// deriving back to `self`.
    pub fn antiderive(&self, i: usize, x: u8) -> Result<Self> {
        let n = self.bits.len();
        if i < 1 || i > n + 1 {
            return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
        }
        let mut bits = vec![0u8; n + 1];
        bits[i - 1] = x & 1;
        // integrate outward from position i
        for j in (1..i).rev() {
            bits[j - 1] = bits[j] ^ self.bits[j - 1];
        }
        for j in i..=n {
            bits[j] = bits[j - 1] ^ self.bits[j - 1];
        }
        Ok(BinSeq { bits })
    }

    pub fn concat(&self, other: &BinSeq) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinSeq { bits }
    }

    /// Interlaces the sequence with its own reversal: b_{2j-1} = a_j,
    /// b_{2j} = a_{n-j+1}. The result is symmetric with even weight.
    pub fn interlace_reverse(&self) -> Self {
        let n = self.bits.len();
        let mut bits = Vec::with_capacity(2 * n);
        for j in 0..n {
            bits.push(self.bits[j]);
            bits.push(self.bits[n - 1 - j]);
        }
        BinSeq { bits }
    }

    /// Elementwise XOR of two equal-length sequences.
    pub fn xor(&self, other: &BinSeq) -> Result<Self> {
        if self.bits.len() != other.bits.len() {
            return Err(Error::LengthMismatch(self.bits.len(), other.bits.len()));
        }
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BinSeq { bits })
    }
}

impl fmt::Display for BinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinSeq({})", self)
    }
}

impl FromStr for BinSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::TooLong(s.len()));
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(Error::BadBitstring(other)),
            }
        }
        Ok(BinSeq { bits })
    }
}

/// Binomial coefficient modulo 2, extended to all integer pairs.
///
/// For a,b >= 0 this is the Lucas/Kummer subset test; negative upper
/// arguments reduce through C(a,b) = (-1)^b C(b-a-1,b), whose sign vanishes
/// modulo 2. C(a,b) = 0 for b < 0.
pub fn binom_mod2(a: i64, b: i64) -> u8 {
    if b < 0 {
        return 0;
    }
    if a < 0 {
        // b - a - 1 >= b >= 0
        return binom_mod2(b - a - 1, b);
    }
    if b > a {
        return 0;
    }
    ((b & (a - b)) == 0) as u8
}

/// The length-`n` window of column `k` of the infinite Pascal matrix mod 2
/// starting at row `l`: element j is C(l+j-1, k) mod 2.
pub fn bseq(n: usize, k: i64, l: i64) -> BinSeq {
    let bits = (1..=n as i64)
        .map(|j| binom_mod2(l + j - 1, k))
        .collect();
    BinSeq::from_bits_unchecked(bits)
}

/// The unit sequence of length `n` with a single one at position `k`.
pub fn eseq(n: usize, k: usize) -> Result<BinSeq> {
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let mut bits = vec![0u8; n];
    bits[k - 1] = 1;
    Ok(BinSeq::from_bits_unchecked(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn s(x: &str) -> BinSeq {
        BinSeq::from_str(x).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(s("0010100").to_string(), "0010100");
        assert_eq!(s("").len(), 0);
        assert!(matches!(BinSeq::from_str("01x"), Err(Error::BadBitstring('x'))));
        assert!(matches!(BinSeq::from_bits(vec![0, 2]), Err(Error::BadBitstring(_))));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(s("0100").derive(), s("110"));
        assert_eq!(s("0010100").derive(), s("011110"));
        assert_eq!(BinSeq::empty().derive(), BinSeq::empty());
        assert_eq!(s("1").derive(), BinSeq::empty());
        assert_eq!(s("1111").derive_k(3), s("0"));
        assert_eq!(s("0010100").derive_k(0), s("0010100"));
        assert_eq!(bseq(10, 3, 0).derive_k(3), s("1111111"));
    }

    #[test]
    fn antiderive_examples() {
        assert_eq!(s("0100").antiderive(1, 0).unwrap(), s("00111"));
        assert_eq!(s("0100").antiderive(1, 1).unwrap(), s("11000"));
        assert_eq!(BinSeq::empty().antiderive(1, 1).unwrap(), s("1"));
        assert!(s("0100").antiderive(6, 0).is_err());
        assert!(s("0100").antiderive(0, 0).is_err());
    }

    #[test]
    fn antiderive_is_a_section() {
        for n in 0..=8usize {
            for code in 0u32..(1 << n) {
                let bits: Vec<u8> = (0..n).map(|j| (code >> j & 1) as u8).collect();
                let sq = BinSeq::from_bits(bits).unwrap();
                for i in 1..=n + 1 {
                    for x in 0..2u8 {
                        let a = sq.antiderive(i, x).unwrap();
                        assert_eq!(a.derive(), sq);
                        assert_eq!(a.get(i), x);
                    }
                }
                // the two antiderivatives sum to the all-ones sequence
                let a0 = sq.antiderive(1, 0).unwrap();
                let a1 = sq.antiderive(1, 1).unwrap();
                assert_eq!(a0.xor(&a1).unwrap(), BinSeq::ones(n + 1));
            }
        }
    }

    #[test]
    fn symmetry_predicates() {
        assert!(s("010010010").is_symmetric());
        assert!(!s("0100").is_symmetric());
        assert!(BinSeq::empty().is_symmetric());
        assert!(s("10").is_antisymmetric());
        assert!(!s("101").is_antisymmetric());
        assert!(s("1100").is_antisymmetric());
    }

    #[test]
    fn sigma_and_weight() {
        assert_eq!(s("0010100").sigma2(), 0);
        assert_eq!(s("1").sigma2(), 1);
        assert_eq!(BinSeq::empty().sigma2(), 0);
        assert_eq!(s("0010100").weight(), 2);
    }

    #[test]
    fn concat_and_interlace() {
        assert_eq!(s("0").concat(&s("11")), s("011"));
        assert_eq!(BinSeq::empty().concat(&s("1")), s("1"));
        assert_eq!(
            s("0").concat(&s("0100").antiderive(1, 0).unwrap()).concat(&s("0")),
            s("0001110")
        );
        assert_eq!(s("101000").interlace_reverse(), s("100010010001"));
        assert_eq!(s("1").interlace_reverse(), s("11"));
        assert_eq!(s("10").interlace_reverse(), s("1001"));
        for code in 0u32..64 {
            let bits: Vec<u8> = (0..6).map(|j| (code >> j & 1) as u8).collect();
            let ir = BinSeq::from_bits(bits).unwrap().interlace_reverse();
            assert!(ir.is_symmetric());
            assert_eq!(ir.sigma2(), 0);
        }
    }

    #[test]
    fn binom_examples() {
        for k in 0..20 {
            assert_eq!(binom_mod2(-1, k), 1);
        }
        assert_eq!(binom_mod2(5, 0), 1);
        assert_eq!(binom_mod2(5, 2), 0);
        assert_eq!(binom_mod2(3, -1), 0);
        // Pascal identity over a signed window
        for a in -64i64..=64 {
            for b in -64i64..=64 {
                assert_eq!(
                    binom_mod2(a, b),
                    binom_mod2(a - 1, b - 1) ^ binom_mod2(a - 1, b)
                );
            }
        }
    }

    #[test]
    fn binom_against_factorials() {
        // big-integer-free factorial oracle: track the power of two instead
        fn pow2_in_factorial(n: u64) -> u64 {
            let mut total = 0;
            let mut p = 2;
            while p <= n {
                total += n / p;
                p *= 2;
            }
            total
        }
        for a in 0u64..=30 {
            for b in 0..=a {
                let odd = pow2_in_factorial(a) == pow2_in_factorial(b) + pow2_in_factorial(a - b);
                assert_eq!(binom_mod2(a as i64, b as i64), odd as u8, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn bseq_examples() {
        assert_eq!(bseq(7, 5, 2), s("0001010"));
        assert_eq!(bseq(6, 0, -3), BinSeq::ones(6));
        assert_eq!(bseq(13, 1, 0), s("0101010101010"));
    }

    #[test]
    fn eseq_examples() {
        assert_eq!(eseq(4, 2).unwrap(), s("0100"));
        assert_eq!(eseq(1, 1).unwrap(), s("1"));
        assert_eq!(eseq(5, 5).unwrap(), s("00001"));
        assert!(eseq(4, 0).is_err());
        assert!(eseq(4, 5).is_err());
    }

    #[test]
    fn derivative_characterizations() {
        // a sequence is symmetric iff its derivative is symmetric with even
        // sum; antisymmetric iff the derivative is symmetric with odd sum
        for n in 1..=12usize {
            for code in 0u32..(1 << n) {
                let bits: Vec<u8> = (0..n).map(|j| (code >> j & 1) as u8).collect();
                let sq = BinSeq::from_bits(bits).unwrap();
                let d = sq.derive();
                assert_eq!(sq.is_symmetric(), d.is_symmetric() && d.sigma2() == 0);
                assert_eq!(sq.is_antisymmetric(), d.is_symmetric() && d.sigma2() == 1);
            }
        }
    }

    #[test]
    fn too_long_rejected() {
        assert!(matches!(
            BinSeq::from_bits(vec![0; MAX_LEN + 1]),
            Err(Error::TooLong(_))
        ));
    }
}
