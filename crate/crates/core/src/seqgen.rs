//! Constructors for the `p^2`-periodic sequences built from quotient classes.
//!
//! Every sequence is stored as one period of small residues. Binary
//! sequences can be reinterpreted over `F_p` with [`PeriodicSequence::over`].

use std::fmt;

use crate::error::{param, Result};
use crate::quotients::{is_prime, legendre, ClassPartition, ClassSet, PrimeParams};

/// Which construction produced a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Label {
    Threshold,
    Legendre,
    Indicator(ClassSet),
    Complement(ClassSet),
    Custom(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Threshold => write!(f, "threshold"),
            Label::Legendre => write!(f, "legendre"),
            Label::Indicator(set) => write!(f, "indicator{set}"),
            Label::Complement(set) => write!(f, "complement{set}"),
            Label::Custom(name) => write!(f, "custom:{name}"),
        }
    }
}

/// One period of a sequence over the prime field `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSequence {
    modulus: u32,
    symbols: Vec<u32>,
    label: Label,
}

impl PeriodicSequence {
    pub fn new(modulus: u32, symbols: Vec<u32>, label: Label) -> Result<Self> {
        if !is_prime(modulus as u64) {
            return param(format!("alphabet modulus {modulus} is not prime"));
        }
        if symbols.is_empty() {
            return param("a period must contain at least one symbol");
        }
        if let Some(bad) = symbols.iter().find(|&&s| s >= modulus) {
            return param(format!("symbol {bad} is not a residue modulo {modulus}"));
        }
        Ok(Self { modulus, symbols, label })
    }

    pub fn period(&self) -> usize {
        self.symbols.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    /// Number of nonzero symbols in one period.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    /// Reinterpret the same symbols over `F_q`.
    pub fn over(&self, q: u32) -> Result<Self> {
        Self::new(q, self.symbols.clone(), self.label.clone())
    }

    /// Copy with `value` written at each of `positions`.
    pub fn with_substitutions(&self, positions: &[usize], value: u32) -> Result<Self> {
        if value >= self.modulus {
            return param(format!("value {value} is not a residue modulo {}", self.modulus));
        }
        let mut symbols = self.symbols.clone();
        for &pos in positions {
            if pos >= symbols.len() {
                return param(format!("position {pos} beyond the period {}", symbols.len()));
            }
            symbols[pos] = value;
        }
        Ok(Self {
            modulus: self.modulus,
            symbols,
            label: Label::Custom(format!("{}+substituted", self.label)),
        })
    }

    /// Smallest `d` dividing the period with `s_{u+d} = s_u` for all `u`.
    pub fn least_period(&self) -> usize {
        let n = self.period();
        (1..=n)
            .filter(|d| n % d == 0)
            .find(|&d| (d..n).all(|u| self.symbols[u] == self.symbols[u - d]))
            .unwrap_or(n)
    }
}

fn binary(params: &PrimeParams, label: Label, one: impl Fn(u64) -> bool) -> PeriodicSequence {
    let symbols = (0..params.period() as u64).map(|u| one(u) as u32).collect();
    PeriodicSequence { modulus: 2, symbols, label }
}

/// `e_u = 1` iff `q_{p,w}(u) >= (p+1)/2`, evaluated at every `u`, including
/// the multiples of `p`.
pub fn gen_threshold(params: &PrimeParams) -> PeriodicSequence {
    let half = (params.p() + 1) / 2;
    binary(params, Label::Threshold, |u| params.quotient(u) >= half)
}

/// `f_u = 1` iff `q_{p,w}(u)` is a quadratic non-residue modulo `p`.
pub fn gen_legendre(params: &PrimeParams) -> PeriodicSequence {
    let p = params.p();
    binary(params, Label::Legendre, |u| legendre(params.quotient(u) as i64, p) == -1)
}

/// Indicator of `union_{l in I} D_l`, plus `{lp : l in I}` when `w = 1`.
pub fn gen_indicator(params: &PrimeParams, set: &ClassSet) -> Result<PeriodicSequence> {
    check_set(params, set)?;
    let p = params.p();
    let with_multiples = params.w() == 1;
    Ok(binary(params, Label::Indicator(set.clone()), |u| {
        if u % p == 0 {
            with_multiples && set.contains(u / p)
        } else {
            set.contains(params.quotient(u))
        }
    }))
}

/// Indicator of `union_{l in J} D_l` together with all multiples of `p`.
/// Requires `w >= 2` and `1 <= |J| <= (p-1)/2`.
pub fn gen_complement(params: &PrimeParams, set: &ClassSet) -> Result<PeriodicSequence> {
    check_set(params, set)?;
    if params.w() < 2 {
        return param("the complement construction needs w >= 2");
    }
    let p = params.p();
    if set.len() as u64 > (p - 1) / 2 {
        return param(format!("|J| = {} exceeds (p-1)/2 = {}", set.len(), (p - 1) / 2));
    }
    Ok(binary(params, Label::Complement(set.clone()), |u| {
        u % p == 0 || set.contains(params.quotient(u))
    }))
}

fn check_set(params: &PrimeParams, set: &ClassSet) -> Result<()> {
    if set.p() != params.p() {
        return param(format!("index set built for p = {}, not {}", set.p(), params.p()));
    }
    Ok(())
}

/// Positions at which the Legendre sequence is modified before its bivariate
/// degree is read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// Every `u` with `q_{p,w}(u) = 0`: `D_0` and `P` for `w >= 2`, `D_0` and
    /// `{0}` for `w = 1`.
    QuotientZero,
    /// `D_0` together with `{0}` only, whatever `w` is.
    ZeroClassAndOrigin,
    /// The single position `0`.
    OriginOnly,
}

pub fn substitution_positions(params: &PrimeParams, which: Substitution) -> Vec<usize> {
    let part = ClassPartition::new(params);
    let mut out: Vec<usize> = match which {
        Substitution::QuotientZero => (0..params.period() as u64)
            .filter(|&u| params.quotient(u) == 0)
            .map(|u| u as usize)
            .collect(),
        Substitution::ZeroClassAndOrigin => std::iter::once(0)
            .chain(part.class(0).iter().map(|&u| u as usize))
            .collect(),
        Substitution::OriginOnly => vec![0],
    };
    out.sort_unstable();
    out
}

/// The Legendre sequence viewed over `F_p` with `2^{-1} = (p+1)/2` written
/// at the chosen positions.
pub fn gen_modified_legendre(params: &PrimeParams, which: Substitution) -> Result<PeriodicSequence> {
    let p = params.p() as u32;
    let half = (p + 1) / 2;
    let positions = substitution_positions(params, which);
    let base = gen_legendre(params).over(p)?;
    let mut seq = base.with_substitutions(&positions, half)?;
    seq.label = Label::Custom(format!("modified-legendre:{which:?}"));
    Ok(seq)
}
