use super::{TheoremSpec, TheoremVariant};
use crate::error::{Error, Result};
use crate::polyring::{generating_poly, FieldPoly};
use crate::seqgen::{Label, PeriodicSequence};

/// An explicit error polynomial showing the upper bound of `thm4` or `thm5`.
///
/// With `S` the generating polynomial of `h` over `F_p`:
/// * `w = 1`: `S` has 1 as a root of multiplicity exactly `p - 1`, and
///   `e = -alpha (X - 1)^{p-1}` with `alpha = S^{[p-1]}(1)` cancels it, leaving
///   multiplicity at least `p` with `p` changed terms.
/// * `w >= 2`: `e = c - c (X - 1)^{p-1}` with `c = -S(1)` changes the `p - 1`
///   terms `X, ..., X^{p-1}`.
pub fn fp_error_witness(spec: &TheoremSpec) -> Result<FieldPoly> {
    let p = spec.params().p() as u32;
    let seq = spec.sequences()?.remove(0);
    let s = generating_poly(&seq);
    let x_minus_one = FieldPoly::from_coeffs(p, vec![p - 1, 1]);
    let mut power = FieldPoly::one(p);
    for _ in 0..p - 1 {
        power = power.mul(&x_minus_one);
    }
    match spec.variant() {
        TheoremVariant::Thm4 => {
            let alpha = s.hasse_at_one(p as usize - 1);
            Ok(power.scale(alpha).neg())
        }
        TheoremVariant::Thm5 => {
            let c = (p - s.eval(1)) % p;
            Ok(FieldPoly::from_coeffs(p, vec![c]).sub(&power.scale(c)))
        }
        other => Err(Error::Unsupported(format!("no error witness for {other}"))),
    }
}

/// `seq + e` coefficientwise over one period.
pub fn apply_error(seq: &PeriodicSequence, e: &FieldPoly) -> Result<PeriodicSequence> {
    let q = seq.modulus();
    if e.modulus() != q {
        return Err(Error::Parameter(format!("error over F_{} for a sequence over F_{q}", e.modulus())));
    }
    if e.degree().is_some_and(|d| d >= seq.period()) {
        return Err(Error::Parameter("error polynomial longer than the period".into()));
    }
    let symbols = seq
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &s)| (s + e.coeff(i)) % q)
        .collect();
    PeriodicSequence::new(q, symbols, Label::Custom(format!("{}+error", seq.label())))
}
