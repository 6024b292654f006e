#![allow(dead_code)]

use pqseq::lincomp::{lc_berlekamp_massey, lc_bivariate, lc_f2_structured, lc_fp_multiplicity, lc_gcd};
use pqseq::polyring::{cyclotomic_factorization_f2, generating_poly, FieldPoly, Gf2Poly};
use pqseq::quotients::{
    fermat_quotient, is_primitive_root, poly_quotient, ClassPartition, ClassSet, PrimeParams,
};
use pqseq::seqgen::{Label, PeriodicSequence};

pub const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// Every nonempty subset of `{0, ..., p-1}` with at most `max` elements.
pub fn all_sets(p: u64, max: usize) -> Vec<ClassSet> {
    (1u32..1 << p)
        .filter(|m| m.count_ones() as usize <= max)
        .map(|m| ClassSet::new(p, (0..p).filter(|&l| m >> l & 1 == 1)).unwrap())
        .collect()
}

fn naive_pow(u: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1 % m, |acc, _| acc * u % m)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Each `D_l` meets every nonzero residue class mod `p` exactly once, so
/// `D_l(X) = X + ... + X^{p-1}` modulo `X^p - 1` over `F_2`.
pub fn lemma_residue_coverage(p: u64, w: u64) -> Result<usize, String> {
    let params = PrimeParams::new(p, w).unwrap();
    let part = ClassPartition::new(&params);
    let modulus = Gf2Poly::x_pow_plus_one(p as usize);
    let expect = Gf2Poly::from_exponents(1..p as usize);
    let mut n = 0;
    for l in 0..p {
        let class = part.class(l);
        let mut residues: Vec<u64> = class.iter().map(|u| u % p).collect();
        residues.sort_unstable();
        check(residues == (1..p).collect::<Vec<_>>(), || format!("p={p} w={w} l={l}: residues {residues:?}"))?;
        let d = Gf2Poly::from_exponents(class.iter().map(|&u| u as usize));
        check(d.rem(&modulus).unwrap() == expect, || format!("p={p} w={w} l={l}: D_l mod X^p+1"))?;
        n += 2;
    }
    Ok(n)
}

/// When 2 is a primitive root mod `p`, a binary `G` with `1 <= deg G < p`
/// satisfies `G(theta) = 1` only for `X + ... + X^{p-1}` and `G(theta) = 0`
/// only for `1 + X + ... + X^{p-1}`. Checked as divisibility by `Q_p`.
pub fn lemma_minimal_polynomial(p: u64) -> Result<usize, String> {
    if !is_primitive_root(2, p).unwrap() || p > 13 {
        return Ok(0);
    }
    let q_p = Gf2Poly::from_exponents(0..p as usize);
    let ones = Gf2Poly::from_exponents(1..p as usize);
    let mut n = 0;
    for bits in 2u64..1 << p {
        let g = Gf2Poly::from_limbs(vec![bits]);
        let is_one = q_p.divides(&g.add(&Gf2Poly::one())).unwrap();
        let is_zero = q_p.divides(&g).unwrap();
        check(is_one == (g == ones), || format!("p={p} G={bits:b}: G(theta) = 1"))?;
        check(is_zero == (g == q_p), || format!("p={p} G={bits:b}: G(theta) = 0"))?;
        n += 1;
    }
    Ok(n)
}

/// Over `F_p`: `D_l(X) = (X-1)^{p-1} - 1 (mod X^p - 1)`, `D_l(1) = p - 1`,
/// the Hasse derivatives of orders `1..p-2` vanish at 1 and order `p-1` is 1.
pub fn lemma_hasse_values(p: u64, w: u64) -> Result<usize, String> {
    let params = PrimeParams::new(p, w).unwrap();
    let part = ClassPartition::new(&params);
    let q = p as u32;
    let modulus = FieldPoly::x_pow_minus_one(q, p as usize);
    let x_minus_one = FieldPoly::from_coeffs(q, vec![q - 1, 1]);
    let power = (1..p).fold(FieldPoly::one(q), |acc, _| acc.mul(&x_minus_one));
    let expect = power.sub(&FieldPoly::one(q));
    let mut n = 0;
    for l in 0..p {
        let mut coeffs = vec![0u32; (p * p) as usize];
        for &u in part.class(l) {
            coeffs[u as usize] = 1;
        }
        let d = FieldPoly::from_coeffs(q, coeffs);
        check(d.rem(&modulus).unwrap() == expect, || format!("p={p} w={w} l={l}: D_l mod X^p-1"))?;
        check(d.eval(1) == q - 1, || format!("p={p} w={w} l={l}: D_l(1)"))?;
        for j in 1..p as usize - 1 {
            check(d.hasse_at_one(j) == 0, || format!("p={p} w={w} l={l}: order {j} at 1"))?;
        }
        check(d.hasse_at_one(p as usize - 1) == 1, || format!("p={p} w={w} l={l}: order p-1 at 1"))?;
        n += p as usize + 1;
    }
    Ok(n)
}

/// `q(u + lp) = q(u) + w l u^{w-1} (mod p)` for units `u`, and `q(lp)` is
/// `l` for `w = 1`, else 0.
pub fn shift_structure(p: u64, w: u64) -> Result<usize, String> {
    let mut n = 0;
    for u in 0..p * p {
        for l in 0..p {
            let shifted = poly_quotient(p, w, u + l * p).unwrap();
            let expect = if u % p == 0 {
                if w == 1 {
                    (u / p + l) % p
                } else {
                    0
                }
            } else {
                (poly_quotient(p, w, u).unwrap() + w * l % p * naive_pow(u, w - 1, p)) % p
            };
            check(shifted == expect, || format!("p={p} w={w} u={u} l={l}"))?;
            n += 1;
        }
    }
    Ok(n)
}

/// `q_{p,w}(u) = -u^w w q_p(u) (mod p)` for units `u`, and `q_{p,p-1} = q_p`.
pub fn fermat_relation(p: u64, w: u64) -> Result<usize, String> {
    let mut n = 0;
    for u in 0..p * p {
        let qw = poly_quotient(p, w, u).unwrap();
        if u % p != 0 {
            let qp = fermat_quotient(p, u).unwrap();
            let rhs = (p - naive_pow(u, w, p) * w % p * qp % p) % p;
            check(qw == rhs, || format!("p={p} w={w} u={u}: {qw} vs {rhs}"))?;
            n += 1;
        }
        if w == p - 1 {
            check(qw == fermat_quotient(p, u).unwrap(), || format!("p={p} u={u}: q_(p,p-1) != q_p"))?;
            n += 1;
        }
    }
    Ok(n)
}

pub fn quotient_sequence(p: u64, w: u64) -> PeriodicSequence {
    let symbols = (0..p * p).map(|u| poly_quotient(p, w, u).unwrap() as u32).collect();
    PeriodicSequence::new(p as u32, symbols, Label::Custom(format!("q_{p},{w}"))).unwrap()
}

/// The quotient sequence itself has linear complexity `p + w` over `F_p`.
pub fn quotient_lc(p: u64, w: u64) -> Result<usize, String> {
    let seq = quotient_sequence(p, w);
    let by_mult = lc_fp_multiplicity(&seq).map_err(|e| e.to_string())?;
    let by_gcd = lc_gcd(&seq);
    check(by_mult == (p + w) as usize, || format!("p={p} w={w}: LC {by_mult}, expected {}", p + w))?;
    check(by_gcd == by_mult, || format!("p={p} w={w}: gcd {by_gcd} vs multiplicity {by_mult}"))?;
    Ok(2)
}

/// Every applicable engine on one sequence; returns the common value.
pub fn engines_agree(seq: &PeriodicSequence) -> Result<usize, String> {
    let gcd = lc_gcd(seq);
    let bm = lc_berlekamp_massey(seq);
    check(gcd == bm, || format!("{}: gcd {gcd} vs bm {bm}", seq.label()))?;
    let t = seq.period();
    let p = (t as f64).sqrt().round() as u64;
    if seq.modulus() == 2 && (p * p) as usize == t {
        if let Ok(fact) = cyclotomic_factorization_f2(p) {
            if fact.fully_split() {
                let s = lc_f2_structured(seq, &fact).map_err(|e| e.to_string())?;
                check(s == gcd, || format!("{}: structured {s} vs gcd {gcd}", seq.label()))?;
            }
        }
    }
    if seq.modulus() as u64 == p && (p * p) as usize == t {
        let m = lc_fp_multiplicity(seq).map_err(|e| e.to_string())?;
        check(m == gcd, || format!("{}: multiplicity {m} vs gcd {gcd}", seq.label()))?;
        let by_division = if seq.is_zero() {
            0
        } else {
            t - generating_poly(seq).multiplicity_at_one_by_division().unwrap()
        };
        check(by_division == gcd, || format!("{}: division {by_division} vs gcd {gcd}", seq.label()))?;
        if seq.least_period() == t {
            let b = lc_bivariate(seq).map_err(|e| e.to_string())?;
            check(b == gcd, || format!("{}: bivariate {b} vs gcd {gcd}", seq.label()))?;
        }
    }
    Ok(gcd)
}

/// Hamming distance from one period to the nearest sequence whose period
/// divides `p`. Over `F_p` a `p^2`-periodic sequence has LC at most `p`
/// exactly when its period divides `p`, so `LC_k >= p + 1` for every `k`
/// below this distance.
pub fn distance_to_period_p(seq: &PeriodicSequence, p: usize) -> usize {
    (0..p)
        .map(|r| {
            let mut counts = std::collections::HashMap::new();
            for j in 0..seq.period() / p {
                *counts.entry(seq.symbols()[r + j * p]).or_insert(0usize) += 1;
            }
            seq.period() / p - counts.values().max().copied().unwrap_or(0)
        })
        .sum()
}
