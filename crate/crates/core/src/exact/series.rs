//! Power series truncated at a fixed order.

use super::poly::{MultiPoly, Ring};
use crate::error::{Error, Result};

/// `Σ_{i ≤ order} c_i T^i` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    var: String,
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(ring: &Ring, var: &str, order: usize, coeffs: &[MultiPoly]) -> TruncSeries {
        let mut c: Vec<MultiPoly> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, ring.zero());
        TruncSeries {
            var: var.to_string(),
            order,
            coeffs: c,
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &MultiPoly {
        &self.coeffs[i]
    }

    pub fn ring(&self) -> &Ring {
        self.coeffs[0].ring()
    }

    fn check(&self, other: &TruncSeries) -> Result<usize> {
        if self.var != other.var {
            return Err(Error::Shape(format!("series in {} and {}", self.var, other.var)));
        }
        self.coeffs[0].same_ring(&other.coeffs[0])?;
        Ok(self.order.min(other.order))
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        let n = self.check(other)?;
        let c: Vec<MultiPoly> = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(TruncSeries {
            var: self.var.clone(),
            order: n,
            coeffs: c,
        })
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        let n = self.check(other)?;
        let ring = self.ring().clone();
        let c: Vec<MultiPoly> = (0..=n)
            .map(|i| {
                let mut acc = ring.zero();
                for j in 0..=i {
                    let (a, b) = (&self.coeffs[j], &other.coeffs[i - j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(TruncSeries {
            var: self.var.clone(),
            order: n,
            coeffs: c,
        })
    }

    /// `self / other`; requires `other` to have a nonzero constant leading
    /// coefficient or, more generally, one that divides every step exactly.
    pub fn div(&self, other: &TruncSeries) -> Result<TruncSeries> {
        let n = self.check(other)?;
        let lead = &other.coeffs[0];
        if lead.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut q: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut num = self.coeffs[i].clone();
            for j in 1..=i {
                if !other.coeffs[j].is_zero() && !q[i - j].is_zero() {
                    num -= &(&other.coeffs[j] * &q[i - j]);
                }
            }
            q.push(num.exact_div(lead)?);
        }
        Ok(TruncSeries {
            var: self.var.clone(),
            order: n,
            coeffs: q,
        })
    }

    /// Expansion of `p(T)/q(T)` to the given order.
    pub fn rational(ring: &Ring, var: &str, order: usize, p: &[MultiPoly], q: &[MultiPoly]) -> Result<TruncSeries> {
        let ps = TruncSeries::new(ring, var, order, p);
        let qs = TruncSeries::new(ring, var, order, q);
        ps.div(&qs)
    }
}

impl std::fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{i}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}
