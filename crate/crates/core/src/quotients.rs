//! Modular number theory around Fermat and polynomial quotients.
//!
//! Everything here works with residues modulo `p` or `p^2` in `u64`,
//! using `u128` intermediates for products, so no big integers are needed.
//! The quotient `(u^w - u^{wp}) / p mod p` is evaluated by lifting both
//! powers to `[0, p^2)` and dividing their difference by `p`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{param, Result};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic trial division. Intended for desk-scale moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (r, _)| acc / r * (r - 1))
}

/// Multiplicative order of `a` modulo `m`.
pub fn order_mod(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return param("modulus must be positive");
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd(a % m, m) != 1 {
        return param(format!("{a} is not a unit modulo {m}"));
    }
    let mut t = euler_phi(m);
    for (r, _) in factorize(t) {
        while t % r == 0 && pow_mod(a, t / r, m) == 1 {
            t /= r;
        }
    }
    Ok(t)
}

pub fn is_primitive_root(a: u64, m: u64) -> Result<bool> {
    Ok(order_mod(a, m)? == euler_phi(m))
}

/// Legendre symbol `(a/p)` via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 0 || !is_prime(p) {
        return param(format!("p = {p} is not an odd prime"));
    }
    Ok(())
}

/// Fermat quotient `q_p(u)`, with `q_p(lp) = 0`.
pub fn fermat_quotient(p: u64, u: u64) -> Result<u64> {
    check_odd_prime(p)?;
    if u % p == 0 {
        return Ok(0);
    }
    let p2 = p * p;
    let lifted = pow_mod(u, p - 1, p2);
    // u^{p-1} = 1 + p * q_p(u) (mod p^2)
    Ok(((lifted + p2 - 1) % p2) / p)
}

/// Polynomial quotient `q_{p,w}(u)` for `1 <= w <= p - 1`.
pub fn poly_quotient(p: u64, w: u64, u: u64) -> Result<u64> {
    check_odd_prime(p)?;
    if w == 0 || w >= p {
        return param(format!("w = {w} outside [1, {}]; reduce the exponent first", p - 1));
    }
    Ok(quotient_unchecked(p, w, u))
}

#[inline]
pub(crate) fn quotient_unchecked(p: u64, w: u64, u: u64) -> u64 {
    let p2 = p * p;
    let low = pow_mod(u, w, p2);
    let high = pow_mod(u, w * p, p2);
    ((low + p2 - high) % p2) / p
}

/// Result of rewriting `q_{p,W}` in terms of an exponent in `[1, p - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducedExponent {
    /// `p | W`: the quotient vanishes for every `u`.
    IdenticallyZero,
    /// `q_{p,W}(u) = scale * q_{p,w1}(u) (mod p)` for every unit `u`.
    Scaled { w1: u64, scale: u64 },
}

pub fn reduce_exponent(p: u64, big_w: u64) -> Result<ReducedExponent> {
    check_odd_prime(p)?;
    if big_w == 0 {
        return param("exponent must be positive");
    }
    if big_w % p == 0 {
        return Ok(ReducedExponent::IdenticallyZero);
    }
    let w1 = (big_w - 1) % (p - 1) + 1;
    let w2 = (big_w - w1) / (p - 1);
    let inv = inv_mod(w1 % p, p).expect("1 <= w1 < p is a unit");
    let diff = (w1 % p + p - w2 % p) % p;
    Ok(ReducedExponent::Scaled { w1, scale: mul_mod(inv, diff, p) })
}

/// An odd prime `p` together with an exponent `1 <= w <= p - 1`, plus the
/// facts about `2 mod p^2` that decide which closed forms apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeParams {
    p: u64,
    w: u64,
    two_order: u64,
}

impl PrimeParams {
    pub fn new(p: u64, w: u64) -> Result<Self> {
        check_odd_prime(p)?;
        if w == 0 || w >= p {
            return param(format!("w = {w} outside [1, {}]", p - 1));
        }
        let two_order = order_mod(2, p * p)?;
        Ok(Self { p, w, two_order })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    /// `p^2`, the period of every generated sequence.
    pub fn period(&self) -> usize {
        (self.p * self.p) as usize
    }

    /// Multiplicative order of 2 modulo `p^2`.
    pub fn two_order(&self) -> u64 {
        self.two_order
    }

    pub fn two_primitive(&self) -> bool {
        self.two_order == self.p * (self.p - 1)
    }

    /// `lambda` with `two_order = lambda * p`, when `p` divides the order.
    pub fn lambda(&self) -> Option<u64> {
        (self.two_order % self.p == 0).then(|| self.two_order / self.p)
    }

    /// `2^{p-1} = 1 (mod p^2)`.
    pub fn wieferich(&self) -> bool {
        pow_mod(2, self.p - 1, self.p * self.p) == 1
    }

    pub fn quotient(&self, u: u64) -> u64 {
        quotient_unchecked(self.p, self.w, u)
    }
}

/// A nonempty set of class indices `l` in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSet {
    p: u64,
    members: BTreeSet<u64>,
}

impl ClassSet {
    pub fn new(p: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let members: BTreeSet<u64> = members.into_iter().collect();
        if members.is_empty() {
            return param("index set must be nonempty");
        }
        if let Some(&bad) = members.iter().find(|&&l| l >= p) {
            return param(format!("class index {bad} is not below p = {p}"));
        }
        Ok(Self { p, members })
    }

    /// `{(p+1)/2, ..., p-1}`, the classes where the threshold sequence is one.
    pub fn threshold(p: u64) -> Self {
        Self { p, members: ((p + 1) / 2..p).collect() }
    }

    /// Quadratic non-residues modulo `p`.
    pub fn nonresidues(p: u64) -> Self {
        Self {
            p,
            members: (1..p).filter(|&l| legendre(l as i64, p) == -1).collect(),
        }
    }

    /// The indices of `[0, p)` not in this set, if any remain.
    pub fn complement(&self) -> Option<Self> {
        let members: BTreeSet<u64> = (0..self.p).filter(|l| !self.members.contains(l)).collect();
        (!members.is_empty()).then_some(Self { p: self.p, members })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, l: u64) -> bool {
        self.members.contains(&l)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The classes `D_0, ..., D_{p-1}` of units modulo `p^2` sorted by quotient
/// value, and the multiples of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    p: u64,
    w: u64,
    classes: Vec<Vec<u64>>,
    multiples: Vec<u64>,
}

impl ClassPartition {
    pub fn new(params: &PrimeParams) -> Self {
        let p = params.p();
        let mut classes = vec![Vec::with_capacity(p as usize - 1); p as usize];
        let mut multiples = Vec::with_capacity(p as usize);
        for u in 0..p * p {
            if u % p == 0 {
                multiples.push(u);
            } else {
                classes[params.quotient(u) as usize].push(u);
            }
        }
        Self { p, w: params.w(), classes, multiples }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    /// `D_l`, in increasing order.
    pub fn class(&self, l: u64) -> &[u64] {
        &self.classes[l as usize]
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    /// `P = {0, p, 2p, ..., (p-1)p}`.
    pub fn multiples(&self) -> &[u64] {
        &self.multiples
    }
}

/// Convenience wrapper matching the other constructors in this module.
pub fn class_partition(params: &PrimeParams) -> ClassPartition {
    ClassPartition::new(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(5, 2).unwrap(), 3);
        assert_eq!(fermat_quotient(5, 10).unwrap(), 0);
        assert_eq!(fermat_quotient(7, 1).unwrap(), 0);
        assert!(fermat_quotient(9, 2).is_err());
        assert!(fermat_quotient(2, 1).is_err());
    }

    #[test]
    fn fermat_quotient_matches_integer_division() {
        // (u^{p-1} - 1) / p computed exactly in u128 for small u
        for p in [3u64, 5, 7, 11] {
            for u in 1..40u64 {
                if u % p == 0 {
                    continue;
                }
                let big = (u as u128).pow(p as u32 - 1) - 1;
                assert_eq!(big % p as u128, 0);
                let expect = ((big / p as u128) % p as u128) as u64;
                assert_eq!(fermat_quotient(p, u).unwrap(), expect, "p={p} u={u}");
            }
        }
    }

    #[test]
    fn poly_quotient_examples() {
        assert_eq!(poly_quotient(3, 2, 2).unwrap(), 1);
        assert_eq!(poly_quotient(3, 1, 6).unwrap(), 2);
        assert_eq!(poly_quotient(3, 2, 3).unwrap(), 0);
        assert!(poly_quotient(5, 5, 1).is_err());
        assert!(poly_quotient(5, 0, 1).is_err());
    }

    #[test]
    fn poly_quotient_matches_signed_integer_division() {
        for p in [3u64, 5, 7] {
            for w in 1..p {
                for u in 0..30u64 {
                    let expect = match (u as i128).checked_pow((w * p) as u32) {
                        Some(hi) => {
                            let diff = (u as i128).pow(w as u32) - hi;
                            assert_eq!(diff % p as i128, 0);
                            (diff / p as i128).rem_euclid(p as i128) as u64
                        }
                        None => {
                            // repeated multiplication modulo p^2
                            let m = p * p;
                            let pw = |e: u64| (0..e).fold(1u64, |acc, _| acc * u % m);
                            let diff = (pw(w) + m - pw(w * p)) % m;
                            assert_eq!(diff % p, 0);
                            diff / p
                        }
                    };
                    assert_eq!(poly_quotient(p, w, u).unwrap(), expect, "p={p} w={w} u={u}");
                }
            }
        }
    }

    #[test]
    fn values_at_multiples_of_p() {
        for p in [3u64, 5, 7, 11] {
            for l in 0..p {
                assert_eq!(poly_quotient(p, 1, l * p).unwrap(), l);
                for w in 2..p {
                    assert_eq!(poly_quotient(p, w, l * p).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn reduce_exponent_examples() {
        assert_eq!(
            reduce_exponent(5, 4).unwrap(),
            ReducedExponent::Scaled { w1: 4, scale: 1 }
        );
        assert_eq!(reduce_exponent(5, 10).unwrap(), ReducedExponent::IdenticallyZero);
        assert_eq!(
            reduce_exponent(5, 6).unwrap(),
            ReducedExponent::Scaled { w1: 2, scale: 3 }
        );
        assert!(reduce_exponent(5, 0).is_err());
    }

    /// Evaluate `(u^W - u^{Wp}) / p mod p` for arbitrary W straight from the
    /// definition and compare against the reduced form.
    #[test]
    fn reduce_exponent_agrees_with_direct_evaluation() {
        for p in [3u64, 5, 7] {
            let p2 = p * p;
            for big_w in 1..=4 * p {
                let reduced = reduce_exponent(p, big_w).unwrap();
                for u in (1..p2).filter(|u| u % p != 0) {
                    let direct = ((pow_mod(u, big_w, p2) + p2 - pow_mod(u, big_w * p, p2)) % p2) / p;
                    let via = match reduced {
                        ReducedExponent::IdenticallyZero => 0,
                        ReducedExponent::Scaled { w1, scale } => {
                            mul_mod(scale, poly_quotient(p, w1, u).unwrap(), p)
                        }
                    };
                    assert_eq!(direct, via, "p={p} W={big_w} u={u}");
                }
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(4, 5), 1);
        assert_eq!(legendre(0, 5), 0);
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_mod(2, 9).unwrap(), 6);
        assert!(is_primitive_root(2, 9).unwrap());
        assert_eq!(order_mod(2, 49).unwrap(), 21);
        assert!(!is_primitive_root(2, 49).unwrap());
        assert_eq!(order_mod(1, 15).unwrap(), 1);
        assert!(order_mod(3, 9).is_err());
    }

    #[test]
    fn order_matches_naive_loop() {
        for m in 2..200u64 {
            for a in 1..m {
                if gcd(a, m) != 1 {
                    continue;
                }
                let mut t = 1;
                let mut x = a % m;
                while x != 1 {
                    x = mul_mod(x, a, m);
                    t += 1;
                }
                assert_eq!(order_mod(a, m).unwrap(), t, "a={a} m={m}");
            }
        }
    }

    #[test]
    fn prime_params_flags() {
        let p3 = PrimeParams::new(3, 2).unwrap();
        assert!(p3.two_primitive());
        assert_eq!(p3.lambda(), Some(2));
        assert!(!p3.wieferich());

        let p7 = PrimeParams::new(7, 1).unwrap();
        assert_eq!(p7.two_order(), 21);
        assert!(!p7.two_primitive());
        assert_eq!(p7.lambda(), Some(3));

        let p1093 = PrimeParams::new(1093, 1).unwrap();
        assert!(p1093.wieferich());
        assert!(p1093.two_order() <= 1092);

        assert!(PrimeParams::new(9, 1).is_err());
        assert!(PrimeParams::new(5, 5).is_err());
        assert!(PrimeParams::new(5, 0).is_err());
    }

    #[test]
    fn wieferich_iff_small_order() {
        for p in (3..400u64).filter(|&p| is_prime(p)) {
            let params = PrimeParams::new(p, 1).unwrap();
            assert_eq!(params.wieferich(), params.two_order() <= p - 1, "p={p}");
            assert_eq!(!params.wieferich(), params.two_order() > p, "p={p}");
            assert_eq!(
                params.two_primitive(),
                params.two_order() == p * (p - 1),
                "p={p}"
            );
        }
    }

    #[test]
    fn partition_examples() {
        let c = ClassPartition::new(&PrimeParams::new(3, 2).unwrap());
        assert_eq!(c.class(0), &[1, 8]);
        assert_eq!(c.class(1), &[2, 7]);
        assert_eq!(c.class(2), &[4, 5]);
        assert_eq!(c.multiples(), &[0, 3, 6]);

        let c = ClassPartition::new(&PrimeParams::new(3, 1).unwrap());
        assert_eq!(c.class(0), &[1, 8]);
        assert_eq!(c.class(1), &[2, 4]);
        assert_eq!(c.class(2), &[5, 7]);
    }

    #[test]
    fn class_set_constructors() {
        assert_eq!(ClassSet::threshold(7).iter().collect::<Vec<_>>(), vec![4, 5, 6]);
        assert_eq!(ClassSet::nonresidues(7).iter().collect::<Vec<_>>(), vec![3, 5, 6]);
        assert_eq!(ClassSet::nonresidues(3).iter().collect::<Vec<_>>(), vec![2]);
        assert!(ClassSet::new(5, []).is_err());
        assert!(ClassSet::new(5, [5]).is_err());
        let s = ClassSet::new(5, [3, 1, 1]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(s.complement().unwrap().iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }
}
