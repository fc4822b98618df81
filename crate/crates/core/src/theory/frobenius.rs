//! The deformed rank-two Frobenius extension and its generating function.
//!
//! Over R_u = Z[u_1, u_2, ρ_0, ρ_1] with trace ε(1) = ρ_0, ε(X) = ρ_1, the
//! closed genus-g surface evaluates to
//! (u_2−u_1)^{g−1}(a^{g−1} + (−1)^{g−1} b^{g−1}) / ρ^{g−1} for g ≥ 1, where
//! a = ρ_1 − ρ_0 u_1, b = ρ_1 − ρ_0 u_2 and ρ = −ab. Values are kept as
//! (numerator, exponent of ρ) pairs so that no rational functions appear.

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Ring, TruncSeries};

/// Coefficients ε((mΔ1)^g) as (numerator, power of ρ in the denominator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Series {
    pub rho: MultiPoly,
    pub coeffs: Vec<(MultiPoly, u32)>,
}

pub fn frobenius_rank2_series(
    u1: &MultiPoly,
    u2: &MultiPoly,
    rho0: &MultiPoly,
    rho1: &MultiPoly,
    upto: usize,
) -> Rank2Series {
    let a = rho1 - &(rho0 * u1);
    let b = rho1 - &(rho0 * u2);
    let rho = -(&a * &b);
    let diff = u2 - u1;
    let mut coeffs = vec![(rho0.clone(), 0)];
    for g in 1..=upto as u32 {
        let e = g - 1;
        let bb = b.pow(e);
        let inner = if e % 2 == 0 { &a.pow(e) + &bb } else { &a.pow(e) - &bb };
        coeffs.push((&diff.pow(e) * &inner, e));
    }
    Rank2Series { rho, coeffs }
}

/// Numerator and denominator of
/// Z(T) = (ρ_0ρ + (2ρ − ρ_0²D)T) / (ρ − ρ_0 D T + D T²), D = (u_1 − u_2)².
pub fn frobenius_closed_form(
    u1: &MultiPoly,
    u2: &MultiPoly,
    rho0: &MultiPoly,
    rho1: &MultiPoly,
) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let a = rho1 - &(rho0 * u1);
    let b = rho1 - &(rho0 * u2);
    let rho = -(&a * &b);
    let d = (u1 - u2).pow(2);
    let p = vec![rho0 * &rho, &rho.scale_int(2) - &(&rho0.pow(2) * &d)];
    let q = vec![rho.clone(), -(rho0 * &d), d];
    (p, q)
}

impl Rank2Series {
    pub fn ring(&self) -> &Ring {
        self.rho.ring()
    }

    /// Checks Σ_j Q_j c_{t−j} = P_t for every t in range, after clearing the
    /// powers of ρ, so the comparison is a polynomial identity.
    pub fn matches(&self, p: &[MultiPoly], q: &[MultiPoly]) -> bool {
        let zero = self.ring().zero();
        for t in 0..self.coeffs.len() {
            let e_max = self.coeffs[..=t].iter().map(|c| c.1).max().unwrap_or(0);
            let mut lhs = self.ring().zero();
            for (j, qj) in q.iter().enumerate() {
                if j > t {
                    break;
                }
                let (num, e) = &self.coeffs[t - j];
                lhs += &(&(qj * num) * &self.rho.pow(e_max - e));
            }
            let rhs = &p.get(t).unwrap_or(&zero).clone() * &self.rho.pow(e_max);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Ordinary series, available once ρ is a nonzero constant.
    pub fn to_series(&self, var: &str) -> Result<TruncSeries> {
        let rho = self
            .rho
            .constant_value()
            .ok_or_else(|| Error::Precondition("ρ is not a constant".into()))?;
        if rho == crate::exact::int(0) {
            return Err(Error::DivisionByZero);
        }
        let inv = rho.recip();
        let coeffs: Vec<MultiPoly> = self
            .coeffs
            .iter()
            .map(|(n, e)| n.scale(&num_traits::pow::pow(inv.clone(), *e as usize)))
            .collect();
        Ok(TruncSeries::new(self.ring(), var, coeffs.len() - 1, &coeffs))
    }
}
