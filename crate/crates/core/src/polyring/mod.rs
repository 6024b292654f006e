//! Univariate polynomials over prime fields.
//!
//! [`FieldPoly`] is the dense, field-agnostic representation used across the
//! crate. [`Gf2Poly`] packs binary coefficients into 64-bit words and backs
//! the `F_2` gcd and divisibility work.

mod cyclotomic;
mod dense;
mod gf2;

pub use cyclotomic::{cyclotomic_factorization_f2, CyclotomicFactorizationF2};
pub use dense::FieldPoly;
pub use gf2::Gf2Poly;
pub(crate) use gf2::{gcd_degree_u128, rem_u128};

use crate::error::Result;
use crate::seqgen::PeriodicSequence;

/// `S(X) = s_0 + s_1 X + ... + s_{T-1} X^{T-1}` over the sequence's field.
pub fn generating_poly(seq: &PeriodicSequence) -> FieldPoly {
    FieldPoly::from_coeffs(seq.modulus(), seq.symbols().to_vec())
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &FieldPoly, b: &FieldPoly) -> Result<FieldPoly> {
    a.gcd(b)
}

pub fn hasse_derivative(f: &FieldPoly, j: usize) -> FieldPoly {
    f.hasse_derivative(j)
}

pub fn multiplicity_at_one(f: &FieldPoly) -> Result<usize> {
    f.multiplicity_at_one()
}

pub fn divides(d: &FieldPoly, f: &FieldPoly) -> Result<bool> {
    d.divides(f)
}

/// `C(n, k) mod q` for prime `q`, digit by digit (Lucas).
pub fn binom_mod(mut n: u64, mut k: u64, q: u32) -> u32 {
    let q64 = q as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % q64, k % q64);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, kd, q64) % q64;
        n /= q64;
        k /= q64;
    }
    acc as u32
}

// a < q, so every factor below is a unit mod q.
fn small_binom(a: u64, b: u64, q: u64) -> u64 {
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..b {
        num = num * ((a - i) % q) % q;
        den = den * ((i + 1) % q) % q;
    }
    num * crate::quotients::pow_mod(den, q - 2, q) % q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn lucas_matches_pascal() {
        let rows = pascal(100);
        for q in [2u32, 3, 5, 7, 13] {
            for n in 0..=100usize {
                for k in 0..=n {
                    assert_eq!(
                        binom_mod(n as u64, k as u64, q) as u128,
                        rows[n][k] % q as u128,
                        "C({n},{k}) mod {q}"
                    );
                }
                assert_eq!(binom_mod(n as u64, n as u64 + 1, q), 0);
            }
        }
    }
}
