use super::Gf2Poly;
use crate::error::{param, Result};
use crate::quotients::{is_prime, order_mod};

/// `X^{p^2} + 1 = (X + 1) Q_p(X) Phi(X)` over `F_2`, where
/// `Q_p = 1 + X + ... + X^{p-1}` and `Phi(X) = Q_p(X^p)`.
///
/// `Q_p` is irreducible exactly when 2 is a primitive root modulo `p`, and
/// `Phi` exactly when 2 is a primitive root modulo `p^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicFactorizationF2 {
    pub p: u64,
    pub x_plus_one: Gf2Poly,
    pub q_p: Gf2Poly,
    pub phi: Gf2Poly,
    pub q_p_irreducible: bool,
    pub phi_irreducible: bool,
}

impl CyclotomicFactorizationF2 {
    /// Both factors irreducible, i.e. 2 is a primitive root modulo `p^2`.
    pub fn fully_split(&self) -> bool {
        self.q_p_irreducible && self.phi_irreducible
    }

    pub fn product(&self) -> Gf2Poly {
        self.x_plus_one.mul(&self.q_p).mul(&self.phi)
    }
}

pub fn cyclotomic_factorization_f2(p: u64) -> Result<CyclotomicFactorizationF2> {
    if p % 2 == 0 || !is_prime(p) {
        return param(format!("p = {p} is not an odd prime"));
    }
    let pu = p as usize;
    Ok(CyclotomicFactorizationF2 {
        p,
        x_plus_one: Gf2Poly::from_exponents([0, 1]),
        q_p: Gf2Poly::from_exponents(0..pu),
        phi: Gf2Poly::from_exponents((0..pu).map(|l| l * pu)),
        q_p_irreducible: order_mod(2, p)? == p - 1,
        phi_irreducible: order_mod(2, p * p)? == p * (p - 1),
    })
}
