//! Linear complexity of one period of a sequence, by independent engines:
//!
//! * [`lc_gcd`]: `T - deg gcd(X^T - 1, S(X))`, valid over any prime field.
//! * [`lc_berlekamp_massey`]: shortest LFSR over two periods.
//! * [`lc_f2_structured`]: three divisibility tests against the cyclotomic
//!   factors of `X^{p^2} + 1`, valid when 2 is a primitive root mod `p^2`.
//! * [`lc_fp_multiplicity`]: `T - mult_1(S)`, valid when `T` is a power of
//!   the characteristic, since then `X^T - 1 = (X - 1)^T`.
//! * [`lc_bivariate`]: `1 + deg rho` for the digit-wise interpolating
//!   polynomial of a `p^2`-periodic sequence over `F_p`.

mod bivariate;
mod bm;

pub use bivariate::{lc_bivariate, seq_to_bivariate, BivariatePoly};
pub use bm::{berlekamp_massey, lc_berlekamp_massey};

use crate::error::{Error, Result};
use crate::polyring::{generating_poly, CyclotomicFactorizationF2, FieldPoly, Gf2Poly};
use crate::seqgen::PeriodicSequence;

pub fn lc_gcd(seq: &PeriodicSequence) -> usize {
    if seq.is_zero() {
        return 0;
    }
    let t = seq.period();
    let deg = if seq.modulus() == 2 {
        let s = Gf2Poly::from_bits(seq.symbols());
        Gf2Poly::x_pow_plus_one(t).gcd(&s).expect("S is nonzero").degree()
    } else {
        let s = generating_poly(seq);
        FieldPoly::x_pow_minus_one(seq.modulus(), t).gcd(&s).expect("S is nonzero").degree()
    };
    t - deg.expect("gcd of nonzero polynomials is nonzero")
}

pub fn lc_f2_structured(seq: &PeriodicSequence, fact: &CyclotomicFactorizationF2) -> Result<usize> {
    if seq.modulus() != 2 {
        return Err(Error::Unsupported("structured engine works over F_2 only".into()));
    }
    let p = fact.p as usize;
    if seq.period() != p * p {
        return Err(Error::Unsupported(format!(
            "period {} is not p^2 = {}",
            seq.period(),
            p * p
        )));
    }
    if !fact.fully_split() {
        return Err(Error::Unsupported(format!(
            "2 is not a primitive root modulo {}; use lc_gcd",
            p * p
        )));
    }
    let s = Gf2Poly::from_bits(seq.symbols());
    let mut lc = p * p;
    if fact.x_plus_one.divides(&s)? {
        lc -= 1;
    }
    if fact.q_p.divides(&s)? {
        lc -= p - 1;
    }
    if fact.phi.divides(&s)? {
        lc -= p * p - p;
    }
    Ok(lc)
}

/// Smallest `e` with `q^e = t`, if `t` is a power of `q`.
pub(crate) fn log_exact(t: usize, q: usize) -> Option<u32> {
    let mut e = 0;
    let mut acc = 1usize;
    while acc < t {
        acc = acc.checked_mul(q)?;
        e += 1;
    }
    (acc == t).then_some(e)
}

pub fn lc_fp_multiplicity(seq: &PeriodicSequence) -> Result<usize> {
    let t = seq.period();
    if log_exact(t, seq.modulus() as usize).is_none() {
        return Err(Error::Unsupported(format!(
            "period {t} is not a power of the characteristic {}",
            seq.modulus()
        )));
    }
    if seq.is_zero() {
        return Ok(0);
    }
    Ok(t - generating_poly(seq).multiplicity_at_one()?)
}
