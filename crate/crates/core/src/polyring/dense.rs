use std::fmt;

use super::binom_mod;
use crate::error::{param, Result};
use crate::quotients::pow_mod;

/// Dense polynomial over `F_q`, `q` prime. Coefficient `i` multiplies `X^i`;
/// the vector never ends in a zero, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldPoly {
    modulus: u32,
    coeffs: Vec<u32>,
}

impl FieldPoly {
    pub fn zero(q: u32) -> Self {
        Self { modulus: q, coeffs: Vec::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::monomial(q, 0, 1)
    }

    pub fn monomial(q: u32, degree: usize, coeff: u32) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff % q;
        Self::canonical(q, coeffs)
    }

    /// Coefficients are reduced modulo `q`.
    pub fn from_coeffs(q: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= q;
        }
        Self::canonical(q, coeffs)
    }

    /// `X^t - 1`.
    pub fn x_pow_minus_one(q: u32, t: usize) -> Self {
        let mut coeffs = vec![0; t + 1];
        coeffs[0] = q - 1;
        coeffs[t] = 1;
        Self::canonical(q, coeffs)
    }

    fn canonical(modulus: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn q(&self) -> u64 {
        self.modulus as u64
    }

    fn inv(&self, a: u32) -> u32 {
        pow_mod(a as u64, self.q() - 2, self.q()) as u32
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "polynomials over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ((self.coeff(i) as u64 + other.coeff(i) as u64) % self.q()) as u32)
            .collect();
        Self::canonical(self.modulus, coeffs)
    }

    pub fn neg(&self) -> Self {
        let q = self.modulus;
        let coeffs = self.coeffs.iter().map(|&c| (q - c) % q).collect();
        Self::canonical(q, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| (a as u64 * c as u64 % self.q()) as u32)
            .collect();
        Self::canonical(self.modulus, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let q = self.q();
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % q;
            }
        }
        Self::canonical(self.modulus, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.same_field(d);
        let Some(dd) = d.degree() else {
            return param("division by the zero polynomial");
        };
        let q = self.q();
        let lead_inv = self.inv(d.coeffs[dd]) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return Ok((Self::zero(self.modulus), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv % q;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c as u32;
            for (j, &b) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + q - c * b as u64 % q) % q;
            }
        }
        rem.truncate(dd);
        Ok((
            Self::canonical(self.modulus, quot),
            Self::canonical(self.modulus, rem.into_iter().map(|c| c as u32).collect()),
        ))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => self.scale(self.inv(lead)),
        }
    }

    /// Monic gcd by the Euclidean algorithm. Errors when both are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_field(other);
        if self.is_zero() && other.is_zero() {
            return param("gcd(0, 0) is undefined");
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Whether `self` divides `f`. `self` must be nonzero.
    pub fn divides(&self, f: &Self) -> Result<bool> {
        if self.is_zero() {
            return param("divisibility by the zero polynomial");
        }
        Ok(f.rem(self)?.is_zero())
    }

    pub fn eval(&self, x: u32) -> u32 {
        let q = self.q();
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % q) as u32
    }

    /// `j`-th Hasse derivative: `sum_n C(n, j) a_n X^{n-j}`. `j = 0` is the
    /// identity.
    pub fn hasse_derivative(&self, j: usize) -> Self {
        if j >= self.coeffs.len() {
            return Self::zero(self.modulus);
        }
        let coeffs = (j..self.coeffs.len())
            .map(|n| {
                let c = binom_mod(n as u64, j as u64, self.modulus) as u64;
                (c * self.coeffs[n] as u64 % self.q()) as u32
            })
            .collect();
        Self::canonical(self.modulus, coeffs)
    }

    /// Value of the `j`-th Hasse derivative at `X = 1`, without building it.
    pub fn hasse_at_one(&self, j: usize) -> u32 {
        let q = self.q();
        (j..self.coeffs.len())
            .filter(|&n| self.coeffs[n] != 0)
            .fold(0u64, |acc, n| {
                (acc + binom_mod(n as u64, j as u64, self.modulus) as u64 * self.coeffs[n] as u64) % q
            }) as u32
    }

    /// Multiplicity of `1` as a root: the least `j` whose Hasse derivative
    /// does not vanish at `1`.
    pub fn multiplicity_at_one(&self) -> Result<usize> {
        if self.is_zero() {
            return param("the zero polynomial has every multiplicity");
        }
        Ok((0..self.coeffs.len())
            .find(|&j| self.hasse_at_one(j) != 0)
            .expect("a nonzero polynomial of degree d has a nonvanishing derivative of order <= d"))
    }

    /// Same quantity as [`Self::multiplicity_at_one`], by repeated synthetic
    /// division by `X - 1`.
    pub fn multiplicity_at_one_by_division(&self) -> Result<usize> {
        if self.is_zero() {
            return param("the zero polynomial has every multiplicity");
        }
        let q = self.q();
        let mut cur: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        let mut m = 0;
        loop {
            // Horner: quotient coefficients and remainder f(1).
            let n = cur.len();
            let mut quot = vec![0u64; n - 1];
            let mut acc = 0u64;
            for i in (0..n).rev() {
                acc = (acc + cur[i]) % q;
                if i > 0 {
                    quot[i - 1] = acc;
                }
            }
            if acc != 0 {
                return Ok(m);
            }
            m += 1;
            cur = quot;
        }
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "X".to_string(),
                (1, c) => format!("{c}X"),
                (i, 1) => format!("X^{i}"),
                (i, c) => format!("{c}X^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
