//! Exhaustive k-error linear complexity.
//!
//! Error patterns are enumerated level by level (exact weight `i`), positions
//! in lexicographic order and nonzero values in increasing residue order.
//! Each level is split by its first position into disjoint ranges that are
//! searched independently and merged by minimum, so the result does not
//! depend on the number of worker threads.

use rayon::prelude::*;
use serde::Serialize;

use super::{Method, SpectrumPoint};
use crate::error::{Error, Result};
use crate::lincomp::{lc_gcd, log_exact};
use crate::polyring::{binom_mod, cyclotomic_factorization_f2, gcd_degree_u128, rem_u128, Gf2Poly};
use crate::quotients::is_prime;
use crate::seqgen::{Label, PeriodicSequence};

/// Default cap on LC evaluations for one search.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of error patterns the search may evaluate.
    pub budget: u128,
    /// Use the three-divisor LC evaluation over `F_2` when 2 is a primitive
    /// root modulo `p^2`.
    pub fast_path: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, fast_path: true }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u128) -> Self {
        Self { budget, ..Self::default() }
    }
}

/// `sum_{i <= k} C(t, i) (q - 1)^i`, saturating.
pub fn pattern_count(t: usize, q: u32, k: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128; // C(t, i)
    let mut scale = 1u128; // (q-1)^i
    for i in 0..=k.min(t) {
        if i > 0 {
            binom = binom.saturating_mul((t - i + 1) as u128) / i as u128;
            scale = scale.saturating_mul(q as u128 - 1);
        }
        total = total.saturating_add(binom.saturating_mul(scale));
    }
    total
}

fn level_count(t: usize, q: u32, i: usize) -> u128 {
    pattern_count(t, q, i) - if i == 0 { 0 } else { pattern_count(t, q, i - 1) }
}

#[derive(Debug, Clone, Copy)]
struct Structured {
    p: usize,
    q_p: u128,
    phi: u128,
}

enum Kernel {
    /// `F_2`, period below 128: the sequence fits in one word.
    F2Word { base: u128, modulus: u128, t: usize, structured: Option<Structured> },
    /// `F_2`, longer periods.
    F2Wide { base: Gf2Poly, modulus: Gf2Poly, t: usize },
    /// `F_q` with period a power of `q`: LC = T - multiplicity of 1, from
    /// tabulated binomials.
    Multiplicity { derivs: Vec<u32>, binom: Vec<u32>, q: u32, t: usize },
    /// Anything else: rebuild the sequence and run the gcd engine.
    Generic { seq: PeriodicSequence },
}

fn square_prime(t: usize) -> Option<usize> {
    let p = (t as f64).sqrt().round() as usize;
    (p * p == t && p % 2 == 1 && is_prime(p as u64)).then_some(p)
}

impl Kernel {
    fn new(seq: &PeriodicSequence, cfg: &SearchConfig) -> Self {
        let t = seq.period();
        let q = seq.modulus();
        if q == 2 && t < 128 {
            let base = seq
                .symbols()
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &b)| acc | ((b as u128 & 1) << i));
            let structured = square_prime(t)
                .filter(|_| cfg.fast_path)
                .and_then(|p| cyclotomic_factorization_f2(p as u64).ok())
                .filter(|f| f.fully_split())
                .map(|f| Structured {
                    p: f.p as usize,
                    q_p: word(&f.q_p),
                    phi: word(&f.phi),
                });
            let modulus = 1u128 | (1u128 << t);
            return Kernel::F2Word { base, modulus, t, structured };
        }
        if q == 2 {
            return Kernel::F2Wide {
                base: Gf2Poly::from_bits(seq.symbols()),
                modulus: Gf2Poly::x_pow_plus_one(t),
                t,
            };
        }
        if log_exact(t, q as usize).is_some() && t <= 2048 {
            let mut binom = vec![0u32; t * t];
            for n in 0..t {
                for j in 0..=n {
                    binom[n * t + j] = binom_mod(n as u64, j as u64, q);
                }
            }
            let derivs = (0..t)
                .map(|j| {
                    (0..t).fold(0u64, |acc, n| {
                        (acc + binom[n * t + j] as u64 * seq.symbols()[n] as u64) % q as u64
                    }) as u32
                })
                .collect();
            return Kernel::Multiplicity { derivs, binom, q, t };
        }
        Kernel::Generic { seq: seq.clone() }
    }

    fn f2_word_lc(s: u128, modulus: u128, t: usize, structured: Option<Structured>) -> usize {
        if s == 0 {
            return 0;
        }
        match structured {
            Some(st) => {
                let mut lc = t;
                if s.count_ones() % 2 == 0 {
                    lc -= 1;
                }
                if rem_u128(s, st.q_p) == 0 {
                    lc -= st.p - 1;
                }
                if rem_u128(s, st.phi) == 0 {
                    lc -= st.p * st.p - st.p;
                }
                lc
            }
            None => t - gcd_degree_u128(modulus, s),
        }
    }

    /// LC of the base sequence plus the error `values` at `positions`.
    fn lc(&self, positions: &[usize], values: &[u32]) -> usize {
        match self {
            Kernel::F2Word { base, modulus, t, structured } => {
                let s = positions.iter().fold(*base, |acc, &i| acc ^ (1u128 << i));
                Self::f2_word_lc(s, *modulus, *t, *structured)
            }
            Kernel::F2Wide { base, modulus, t } => {
                let s = base.add(&Gf2Poly::from_exponents(positions.iter().copied()));
                match s.degree() {
                    None => 0,
                    Some(_) => t - modulus.gcd(&s).expect("nonzero").degree().expect("nonzero"),
                }
            }
            Kernel::Multiplicity { derivs, binom, q, t } => {
                let q64 = *q as u64;
                for j in 0..*t {
                    let mut v = derivs[j] as u64;
                    for (&n, &x) in positions.iter().zip(values) {
                        v += binom[n * t + j] as u64 * x as u64;
                    }
                    if v % q64 != 0 {
                        return t - j;
                    }
                }
                // Every derivative vanishes: the modified period is zero.
                0
            }
            Kernel::Generic { seq } => {
                let q = seq.modulus();
                let mut symbols = seq.symbols().to_vec();
                for (&n, &x) in positions.iter().zip(values) {
                    symbols[n] = (symbols[n] + x) % q;
                }
                let modified = PeriodicSequence::new(q, symbols, Label::Custom("error".into()))
                    .expect("residues stay in range");
                lc_gcd(&modified)
            }
        }
    }

    fn period(&self) -> usize {
        match self {
            Kernel::F2Word { t, .. } | Kernel::F2Wide { t, .. } | Kernel::Multiplicity { t, .. } => *t,
            Kernel::Generic { seq } => seq.period(),
        }
    }

    /// Minimum LC over all error patterns of exact weight `level`.
    fn level_min(&self, q: u32, level: usize) -> usize {
        let t = self.period();
        if level == 0 {
            return self.lc(&[], &[]);
        }
        if level > t {
            return usize::MAX;
        }
        if let Kernel::F2Word { base, modulus, structured, .. } = self {
            let (base, modulus, structured) = (*base, *modulus, *structured);
            return (0..=t - level)
                .into_par_iter()
                .map(|first| {
                    let mut best = usize::MAX;
                    f2_dfs(base ^ (1u128 << first), first + 1, level - 1, t, &mut |s| {
                        best = best.min(Self::f2_word_lc(s, modulus, t, structured));
                    });
                    best
                })
                .min()
                .unwrap_or(usize::MAX);
        }
        if let Kernel::Multiplicity { derivs, q, .. } = self {
            let base = derivs[0];
            let q = *q;
            return (0..=t - level)
                .into_par_iter()
                .map(|first| {
                    let mut positions = vec![0usize; level];
                    let mut values = vec![1u32; level];
                    positions[0] = first;
                    let mut best = usize::MAX;
                    if level == 1 {
                        self.mult_last(base, &mut positions, &mut values, &mut best);
                    } else {
                        for v in 1..q {
                            values[0] = v;
                            self.mult_dfs(t, 1, (base + v) % q, &mut positions, &mut values, &mut best);
                        }
                    }
                    best
                })
                .min()
                .unwrap_or(usize::MAX);
        }
        (0..=t - level)
            .into_par_iter()
            .map(|first| {
                let mut positions = vec![0usize; level];
                let mut values = vec![1u32; level];
                positions[0] = first;
                let mut best = usize::MAX;
                for v in 1..q {
                    values[0] = v;
                    dfs(self, q, t, 1, &mut positions, &mut values, &mut best);
                }
                best
            })
            .min()
            .unwrap_or(usize::MAX)
    }
}

impl Kernel {
    /// Over `F_q` only errors with `S(1) = 0` can drop below `T`, so once
    /// every other position is fixed the last value is forced; any other
    /// value leaves LC equal to `T`.
    fn mult_last(&self, s0: u32, positions: &mut [usize], values: &mut [u32], best: &mut usize) {
        let Kernel::Multiplicity { q, t, .. } = self else { unreachable!() };
        let last = positions.len() - 1;
        let x = (q - s0) % q;
        if x == 0 || *q > 2 {
            *best = (*best).min(*t);
        }
        if x != 0 {
            values[last] = x;
            *best = (*best).min(self.lc(positions, values));
        }
    }

    fn mult_dfs(
        &self,
        t: usize,
        depth: usize,
        s0: u32,
        positions: &mut [usize],
        values: &mut [u32],
        best: &mut usize,
    ) {
        let Kernel::Multiplicity { q, .. } = self else { unreachable!() };
        let level = positions.len();
        for n in positions[depth - 1] + 1..=t - (level - depth) {
            positions[depth] = n;
            if depth + 1 == level {
                self.mult_last(s0, positions, values, best);
            } else {
                for v in 1..*q {
                    values[depth] = v;
                    self.mult_dfs(t, depth + 1, (s0 + v) % q, positions, values, best);
                }
            }
        }
    }
}

fn word(p: &Gf2Poly) -> u128 {
    p.limbs().iter().take(2).enumerate().fold(0u128, |acc, (i, &w)| acc | ((w as u128) << (64 * i)))
}

fn f2_dfs(s: u128, start: usize, remaining: usize, t: usize, visit: &mut impl FnMut(u128)) {
    if remaining == 0 {
        visit(s);
        return;
    }
    for n in start..=t - remaining {
        f2_dfs(s ^ (1u128 << n), n + 1, remaining - 1, t, visit);
    }
}

fn dfs(
    kernel: &Kernel,
    q: u32,
    t: usize,
    depth: usize,
    positions: &mut [usize],
    values: &mut [u32],
    best: &mut usize,
) {
    let level = positions.len();
    if depth == level {
        *best = (*best).min(kernel.lc(positions, values));
        return;
    }
    for n in positions[depth - 1] + 1..=t - (level - depth) {
        positions[depth] = n;
        for v in 1..q {
            values[depth] = v;
            dfs(kernel, q, t, depth + 1, positions, values, best);
        }
    }
}

/// `LC_k` by exhaustive search. For `k` at or above the weight the answer is
/// 0 without searching: the zero sequence is the only one with LC 0, and it
/// lies exactly `weight` changes away.
pub fn klc_exhaustive(seq: &PeriodicSequence, k: usize, budget: u128) -> Result<usize> {
    klc_exhaustive_with(seq, k, &SearchConfig::with_budget(budget))
}

pub fn klc_exhaustive_with(seq: &PeriodicSequence, k: usize, cfg: &SearchConfig) -> Result<usize> {
    if k >= seq.weight() {
        return Ok(0);
    }
    let (t, q) = (seq.period(), seq.modulus());
    let required = pattern_count(t, q, k);
    if required > cfg.budget {
        return Err(Error::Budget { required, budget: cfg.budget });
    }
    let kernel = Kernel::new(seq, cfg);
    Ok((0..=k).map(|i| kernel.level_min(q, i)).min().expect("level 0 is always searched"))
}

/// Where a spectrum computation stopped for lack of budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Truncation {
    /// First `k` that was not computed.
    pub k: usize,
    pub required: u128,
    pub budget: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub points: Vec<SpectrumPoint>,
    pub truncated: Option<Truncation>,
}

impl Spectrum {
    pub fn values(&self) -> Vec<usize> {
        self.points.iter().map(|pt| pt.lc).collect()
    }
}

/// Exhaustive `LC_k` for `k = 0..=k_max`, one pass over the pattern levels.
/// Stops with a truncation marker at the first `k` the budget cannot cover.
pub fn spectrum(seq: &PeriodicSequence, k_max: usize, cfg: &SearchConfig) -> Spectrum {
    let (t, q) = (seq.period(), seq.modulus());
    let weight = seq.weight();
    let kernel = Kernel::new(seq, cfg);
    let mut points = Vec::with_capacity(k_max + 1);
    let mut running = usize::MAX;
    for k in 0..=k_max {
        if k >= weight && k > 0 {
            running = 0;
        } else {
            let required = pattern_count(t, q, k);
            if required > cfg.budget {
                return Spectrum {
                    points,
                    truncated: Some(Truncation { k, required, budget: cfg.budget }),
                };
            }
            debug_assert!(level_count(t, q, k) <= required);
            running = running.min(kernel.level_min(q, k));
        }
        points.push(SpectrumPoint { k, lc: running, method: Method::Exhaustive });
    }
    Spectrum { points, truncated: None }
}
