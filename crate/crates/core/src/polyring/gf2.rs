use super::FieldPoly;
use crate::error::{param, Result};

/// Polynomial over `F_2` with coefficients packed 64 per word, least
/// significant bit first. Trailing zero words are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.trim();
        p
    }

    /// Sum of `X^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip(e);
        }
        p.trim();
        p
    }

    /// Coefficients taken modulo 2.
    pub fn from_bits(bits: &[u32]) -> Self {
        Self::from_exponents(bits.iter().enumerate().filter(|(_, &b)| b & 1 == 1).map(|(i, _)| i))
    }

    /// `X^t + 1`.
    pub fn x_pow_plus_one(t: usize) -> Self {
        Self::from_exponents([0, t])
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        if self.limbs.len() <= i / 64 {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1u64 << (i % 64);
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.limbs.len().max(other.limbs.len());
        let limbs = (0..n)
            .map(|i| self.limbs.get(i).unwrap_or(&0) ^ other.limbs.get(i).unwrap_or(&0))
            .collect();
        Self::from_limbs(limbs)
    }

    // self ^= other * X^shift
    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        let (words, bits) = (shift / 64, shift % 64);
        let needed = other.limbs.len() + words + 1;
        if self.limbs.len() < needed {
            self.limbs.resize(needed, 0);
        }
        for (i, &w) in other.limbs.iter().enumerate() {
            self.limbs[i + words] ^= w << bits;
            if bits != 0 {
                self.limbs[i + words + 1] ^= w >> (64 - bits);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        let Some(d) = self.degree() else { return out };
        for i in 0..=d {
            if self.bit(i) {
                out.xor_shifted(other, i);
            }
        }
        out.trim();
        out
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        let Some(dd) = d.degree() else {
            return param("division by the zero polynomial");
        };
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            r.xor_shifted(d, dr - dd);
            r.trim();
        }
        Ok(r)
    }

    /// Gcd by the Euclidean algorithm (over `F_2` every nonzero gcd is monic).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return param("gcd(0, 0) is undefined");
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn divides(&self, f: &Self) -> Result<bool> {
        Ok(f.rem(self)?.is_zero())
    }

    pub fn to_field_poly(&self) -> FieldPoly {
        let n = self.degree().map_or(0, |d| d + 1);
        FieldPoly::from_coeffs(2, (0..n).map(|i| self.bit(i) as u32).collect())
    }

    pub fn from_field_poly(f: &FieldPoly) -> Self {
        Self::from_bits(f.coeffs())
    }
}

#[inline]
fn deg_u128(a: u128) -> u32 {
    127 - a.leading_zeros()
}

/// `a mod d` for polynomials packed into a single `u128`; `d != 0`.
#[inline]
pub(crate) fn rem_u128(mut a: u128, d: u128) -> u128 {
    let dd = deg_u128(d);
    while a != 0 {
        let da = deg_u128(a);
        if da < dd {
            break;
        }
        a ^= d << (da - dd);
    }
    a
}

/// Degree of `gcd(a, b)` for single-word polynomials, not both zero.
#[inline]
pub(crate) fn gcd_degree_u128(mut a: u128, mut b: u128) -> usize {
    while b != 0 {
        let r = rem_u128(a, b);
        a = b;
        b = r;
    }
    deg_u128(a) as usize
}
