use std::fmt;
use std::str::FromStr;

use super::{Method, SpectrumPoint};
use crate::error::{Error, Result};
use crate::quotients::{ClassSet, PrimeParams};
use crate::seqgen::{gen_complement, gen_indicator, gen_legendre, gen_threshold, PeriodicSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    F2,
    Fp,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::F2 => "f2",
            Field::Fp => "fp",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremVariant {
    /// `F_2`, `w >= 2`, 2 primitive modulo `p^2`: exact spectrum of `h`.
    Thm1,
    /// `F_2`, `w = 1`, 2 primitive modulo `p^2`: exact spectrum of `h`.
    Thm2,
    /// `F_2`, order of 2 modulo `p^2` equal to `lambda p`: `LC_k >= lambda p`.
    Thm3Bound,
    /// `F_2`, `w >= 2`, 2 primitive: exact spectrum of the complement `h'`.
    Complement,
    /// `F_2`, `w >= 2`, 2 primitive: spectra of `e` and `f`.
    Corollary,
    /// `F_p`, `w = 1`: `LC_k = p^2 - p + 1` for `k < p`, at most `p^2 - p` after.
    Thm4,
    /// `F_p`, `w >= 2`: `p^2`, then `p^2 - p + 1` for `k < p - 1`, then at most `p^2 - p`.
    Thm5,
    /// `F_p`: upper bound on the spectrum of `f` for `k >= 2p - 1` (`k >= p` when `w = 1`).
    FpUpperLegendre,
    /// `F_p`: `LC_k >= p + 1` below the weight.
    FpLower,
}

impl TheoremVariant {
    pub const ALL: [TheoremVariant; 9] = [
        TheoremVariant::Thm1,
        TheoremVariant::Thm2,
        TheoremVariant::Thm3Bound,
        TheoremVariant::Complement,
        TheoremVariant::Corollary,
        TheoremVariant::Thm4,
        TheoremVariant::Thm5,
        TheoremVariant::FpUpperLegendre,
        TheoremVariant::FpLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremVariant::Thm1 => "thm1",
            TheoremVariant::Thm2 => "thm2",
            TheoremVariant::Thm3Bound => "thm3_bound",
            TheoremVariant::Complement => "complement",
            TheoremVariant::Corollary => "corollary",
            TheoremVariant::Thm4 => "thm4",
            TheoremVariant::Thm5 => "thm5",
            TheoremVariant::FpUpperLegendre => "fp_upper_legendre",
            TheoremVariant::FpLower => "fp_lower",
        }
    }

    pub fn field(self) -> Field {
        match self {
            TheoremVariant::Thm1
            | TheoremVariant::Thm2
            | TheoremVariant::Thm3Bound
            | TheoremVariant::Complement
            | TheoremVariant::Corollary => Field::F2,
            _ => Field::Fp,
        }
    }
}

impl fmt::Display for TheoremVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown theorem '{s}'")))
    }
}

/// A theorem instance whose hypotheses have been checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSpec {
    params: PrimeParams,
    index_set: ClassSet,
    field: Field,
    variant: TheoremVariant,
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

impl TheoremSpec {
    /// For `corollary` the index set must be the threshold set, and for
    /// `fp_upper_legendre` the non-residues; these name the sequences the
    /// statements are about.
    pub fn new(params: PrimeParams, index_set: ClassSet, variant: TheoremVariant) -> Result<Self> {
        let p = params.p();
        let w = params.w();
        let half = (p - 1) / 2;
        if index_set.p() != p {
            return Err(Error::Parameter(format!("index set built for p = {}, not {p}", index_set.p())));
        }
        let size_ok = || -> Result<()> {
            if index_set.len() as u64 > half {
                return fail(format!("|I| = {} exceeds (p-1)/2 = {half}", index_set.len()));
            }
            Ok(())
        };
        let primitive = || -> Result<()> {
            if !params.two_primitive() {
                return fail(format!(
                    "2 is not a primitive root modulo {} (order {})",
                    p * p,
                    params.two_order()
                ));
            }
            Ok(())
        };
        let w_at_least_two = || -> Result<()> {
            if w < 2 {
                return fail("needs w >= 2");
            }
            Ok(())
        };
        let w_one = || -> Result<()> {
            if w != 1 {
                return fail(format!("needs w = 1, got w = {w}"));
            }
            Ok(())
        };
        match variant {
            TheoremVariant::Thm1 | TheoremVariant::Complement => {
                primitive()?;
                w_at_least_two()?;
                size_ok()?;
            }
            TheoremVariant::Thm2 => {
                primitive()?;
                w_one()?;
                size_ok()?;
            }
            TheoremVariant::Thm3Bound => {
                match params.lambda() {
                    Some(l) if l > 1 => {}
                    _ => {
                        return fail(format!(
                            "order of 2 modulo {} is {}, not a multiple lambda p with lambda > 1",
                            p * p,
                            params.two_order()
                        ))
                    }
                }
                size_ok()?;
            }
            TheoremVariant::Corollary => {
                primitive()?;
                w_at_least_two()?;
                if index_set != ClassSet::threshold(p) {
                    return fail(format!("corollary is stated for I = {}", ClassSet::threshold(p)));
                }
            }
            TheoremVariant::Thm4 => {
                w_one()?;
                size_ok()?;
            }
            TheoremVariant::Thm5 => {
                w_at_least_two()?;
                size_ok()?;
            }
            TheoremVariant::FpUpperLegendre => {
                if index_set != ClassSet::nonresidues(p) {
                    return fail(format!("stated for the non-residues {}", ClassSet::nonresidues(p)));
                }
            }
            TheoremVariant::FpLower => size_ok()?,
        }
        Ok(Self { params, index_set, field: variant.field(), variant })
    }

    pub fn params(&self) -> &PrimeParams {
        &self.params
    }

    pub fn index_set(&self) -> &ClassSet {
        &self.index_set
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn variant(&self) -> TheoremVariant {
        self.variant
    }

    /// The sequences the statement is about, over its field.
    pub fn sequences(&self) -> Result<Vec<PeriodicSequence>> {
        let binary = match self.variant {
            TheoremVariant::Complement => vec![gen_complement(&self.params, &self.index_set)?],
            TheoremVariant::Corollary => vec![gen_threshold(&self.params), gen_legendre(&self.params)],
            TheoremVariant::FpUpperLegendre => vec![gen_legendre(&self.params)],
            _ => vec![gen_indicator(&self.params, &self.index_set)?],
        };
        match self.field {
            Field::F2 => Ok(binary),
            Field::Fp => binary.iter().map(|s| s.over(self.params.p() as u32)).collect(),
        }
    }
}

fn point(k: usize, lc: u64, method: Method) -> SpectrumPoint {
    SpectrumPoint { k, lc: lc as usize, method }
}

/// The value (or bound) the theorem states for `LC_k`.
pub fn klc_theorem(spec: &TheoremSpec, k: usize) -> Result<SpectrumPoint> {
    let p = spec.params.p();
    let w = spec.params.w();
    let sq = p * p;
    let n = spec.index_set.len() as u64;
    let odd = n % 2 == 1;
    let kk = k as u64;
    let exact = |lc: u64| Ok(point(k, lc, Method::ClosedForm));
    match spec.variant {
        TheoremVariant::Thm1 => {
            let zero_at = (p - 1) * n;
            if kk >= zero_at {
                exact(0)
            } else if !odd {
                exact(sq - p)
            } else if kk == 0 {
                exact(sq - 1)
            } else if kk < p - 1 {
                exact(sq - p + 1)
            } else {
                exact(sq - p)
            }
        }
        TheoremVariant::Thm2 => {
            if kk >= p * n {
                exact(0)
            } else if odd && kk < p {
                exact(sq - p + 1)
            } else {
                exact(sq - p)
            }
        }
        TheoremVariant::Thm3Bound => {
            let weight = if w == 1 { p * n } else { (p - 1) * n };
            if kk >= weight {
                exact(0)
            } else {
                let lambda = spec.params.lambda().expect("checked in TheoremSpec::new");
                Ok(point(k, lambda * p, Method::LowerBound))
            }
        }
        TheoremVariant::Complement => {
            let step = (p - 1) * n;
            if kk > step {
                exact(0)
            } else if kk == step {
                exact(p)
            } else if odd {
                exact(if kk < p - 1 { sq - p + 1 } else { sq - p })
            } else {
                exact(if kk == 0 { sq } else { sq - p })
            }
        }
        TheoremVariant::Corollary => {
            let zero_at = (p - 1) * (p - 1) / 2;
            if kk >= zero_at {
                exact(0)
            } else if p % 4 != 3 {
                exact(sq - p)
            } else if kk == 0 {
                exact(sq - 1)
            } else if kk < p - 1 {
                exact(sq - p + 1)
            } else {
                exact(sq - p)
            }
        }
        TheoremVariant::Thm4 => {
            if kk < p {
                exact(sq - p + 1)
            } else {
                Ok(point(k, sq - p, Method::UpperBound))
            }
        }
        TheoremVariant::Thm5 => {
            if kk == 0 {
                exact(sq)
            } else if kk < p - 1 {
                exact(sq - p + 1)
            } else {
                Ok(point(k, sq - p, Method::UpperBound))
            }
        }
        TheoremVariant::FpUpperLegendre => {
            let half = (p - 1) * p / 2;
            let (from, bound) = if w == 1 {
                (p, half + 1)
            } else if w % 2 == 1 {
                (2 * p - 1, half + p)
            } else {
                (2 * p - 1, half + (p - 1) / 2 + 1)
            };
            if kk < from {
                return Err(Error::NoClaim { k, reason: format!("the bound is stated for k >= {from}") });
            }
            Ok(point(k, bound, Method::UpperBound))
        }
        TheoremVariant::FpLower => {
            let weight = if w == 1 { p * n } else { (p - 1) * n };
            if kk >= weight {
                exact(0)
            } else {
                Ok(point(k, p + 1, Method::LowerBound))
            }
        }
    }
}
