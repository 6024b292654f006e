use crate::error::{Error, Result};
use crate::polyring::binom_mod;
use crate::quotients::pow_mod;
use crate::seqgen::PeriodicSequence;

/// Reduced polynomial in `F_p[X_0, X_1] / (X_0^p - X_0, X_1^p - X_1)`.
///
/// Entry `(i, j)` is the coefficient of `X_0^i X_1^j`. The monomial's degree
/// is `i + j p`, the integer whose base-`p` digits are `(i, j)`; with that
/// weighting the linear complexity of the represented `p^2`-periodic
/// sequence is `1 + deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl BivariatePoly {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeff(&self, i: usize, j: usize) -> u32 {
        self.coeffs[i * self.p as usize + j]
    }

    fn nonzero_terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = self.p as usize;
        (0..p * p).filter(|&k| self.coeffs[k] != 0).map(move |k| (k / p, k % p))
    }

    /// Largest `i + j p` over nonzero terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let p = self.p as usize;
        self.nonzero_terms().map(|(i, j)| i + j * p).max()
    }

    /// Largest `i + j` over nonzero terms.
    pub fn total_degree(&self) -> Option<usize> {
        self.nonzero_terms().map(|(i, j)| i + j).max()
    }

    pub fn degree_in_x1(&self) -> Option<usize> {
        self.nonzero_terms().map(|(_, j)| j).max()
    }

    pub fn eval(&self, x0: u32, x1: u32) -> u32 {
        let p = self.p as u64;
        let pows = |x: u32| -> Vec<u64> {
            let mut v = vec![1u64; self.p as usize];
            for k in 1..v.len() {
                v[k] = v[k - 1] * x as u64 % p;
            }
            v
        };
        let (a, b) = (pows(x0), pows(x1));
        self.nonzero_terms()
            .fold(0u64, |acc, (i, j)| (acc + self.coeff(i, j) as u64 * a[i] % p * b[j]) % p)
            as u32
    }
}

/// Coefficients of the unique polynomial of degree `< p` taking `values[c]`
/// at `c = 0..p-1`, via `sum_c v_c (1 - (X - c)^{p-1})`.
fn interpolate(values: &[u32], p: u32) -> Vec<u32> {
    let q = p as u64;
    let n = p as usize;
    let mut out = vec![0u64; n];
    for (c, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let v = v as u64;
        out[0] = (out[0] + v) % q;
        let neg_c = (q - c as u64 % q) % q;
        for (m, slot) in out.iter_mut().enumerate() {
            // coefficient of X^m in (X - c)^{p-1}
            let term = binom_mod((n - 1) as u64, m as u64, p) as u64
                * pow_mod(neg_c, (n - 1 - m) as u64, q)
                % q;
            *slot = (*slot + q - v * term % q) % q;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Interpolate `rho` with `rho(i0, i1) = s_{i0 + i1 p}`: first along `X_0`
/// for each fixed `i1`, then along `X_1` for each `X_0` power.
pub fn seq_to_bivariate(seq: &PeriodicSequence) -> Result<BivariatePoly> {
    let p = seq.modulus();
    let n = p as usize;
    if seq.period() != n * n {
        return Err(Error::Unsupported(format!(
            "period {} is not p^2 = {} for p = {p}",
            seq.period(),
            n * n
        )));
    }
    let s = seq.symbols();
    let columns: Vec<Vec<u32>> = (0..n).map(|i1| interpolate(&s[i1 * n..(i1 + 1) * n], p)).collect();
    let mut coeffs = vec![0u32; n * n];
    for i in 0..n {
        let along_x1: Vec<u32> = columns.iter().map(|col| col[i]).collect();
        for (j, c) in interpolate(&along_x1, p).into_iter().enumerate() {
            coeffs[i * n + j] = c;
        }
    }
    Ok(BivariatePoly { p, coeffs })
}

/// `1 + deg rho`. Only for sequences over `F_p` whose least period is `p^2`.
pub fn lc_bivariate(seq: &PeriodicSequence) -> Result<usize> {
    let rho = seq_to_bivariate(seq)?;
    let least = seq.least_period();
    if least != seq.period() {
        return Err(Error::Unsupported(format!(
            "least period {least} is a proper divisor of {}",
            seq.period()
        )));
    }
    Ok(1 + rho.degree().expect("a sequence of least period p^2 is nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::Label;

    fn seq(p: u32, s: Vec<u32>) -> PeriodicSequence {
        PeriodicSequence::new(p, s, Label::Custom("t".into())).unwrap()
    }

    #[test]
    fn interpolation_round_trip() {
        let vals = [3u32, 0, 4, 4, 1];
        let c = interpolate(&vals, 5);
        for (x, &v) in vals.iter().enumerate() {
            let y = c.iter().rev().fold(0u64, |acc, &a| (acc * x as u64 + a as u64) % 5);
            assert_eq!(y as u32, v);
        }
    }

    #[test]
    fn constant_sequence_is_constant_polynomial() {
        let rho = seq_to_bivariate(&seq(5, vec![3; 25])).unwrap();
        assert_eq!(rho.coeff(0, 0), 3);
        assert_eq!(rho.degree(), Some(0));
        assert!(lc_bivariate(&seq(5, vec![3; 25])).is_err());
    }

    #[test]
    fn evaluation_reproduces_period() {
        let s: Vec<u32> = (0..49u32).map(|u| (u * u + 3 * u + 1) % 7).collect();
        let rho = seq_to_bivariate(&seq(7, s.clone())).unwrap();
        for i1 in 0..7 {
            for i0 in 0..7 {
                assert_eq!(rho.eval(i0, i1), s[(i0 + 7 * i1) as usize]);
            }
        }
    }

    #[test]
    fn monomial_sequences() {
        // s_u = C(u, m) mod p has LC m + 1 and rho = C(i0, a) C(i1, b)
        let p = 5u32;
        for m in 0..25usize {
            let s: Vec<u32> = (0..25).map(|u| binom_mod(u, m as u64, p)).collect();
            let sq = seq(p, s);
            let rho = seq_to_bivariate(&sq).unwrap();
            assert_eq!(rho.degree(), Some(m));
            if sq.least_period() == 25 {
                assert_eq!(lc_bivariate(&sq).unwrap(), m + 1);
            }
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        assert!(seq_to_bivariate(&seq(5, vec![1; 10])).is_err());
        assert!(seq_to_bivariate(&seq(2, vec![1; 25])).is_err());
    }
}
