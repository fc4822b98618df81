//! The Day foam: a closed-form sum over m-subsets of the roots of G that
//! evaluates the Toeplitz determinant of G/(F·D).

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Data of f(z) = G(z)/(F(z)·D(z)) with G = ∏(z − r_i), D = ∏(z − δ_s) and
/// F = ∏(1 − z/ρ_t), together with the Toeplitz size parameter n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DayFoamInstance {
    m: usize,
    n: usize,
    r: Vec<Rational>,
    delta: Vec<Rational>,
    rho: Vec<Rational>,
}

fn distinct(v: &[Rational]) -> Option<&Rational> {
    let mut seen = HashSet::new();
    v.iter().find(|x| !seen.insert(*x))
}

impl DayFoamInstance {
    /// Requires k + m roots r (k = |δ|), m ≥ h = |ρ|, simple δ and ρ roots,
    /// distinct r_i outside δ ∪ ρ, and max|δ| < min|ρ|.
    pub fn new(m: usize, n: usize, r: Vec<Rational>, delta: Vec<Rational>, rho: Vec<Rational>) -> Result<Self> {
        let (k, h) = (delta.len(), rho.len());
        if r.len() != k + m {
            return Err(Error::Precondition(format!(
                "need k + m = {} roots of G, got {}",
                k + m,
                r.len()
            )));
        }
        if m < h {
            return Err(Error::Precondition(format!("m = {m} must be at least h = {h}")));
        }
        if let Some(x) = distinct(&delta).or_else(|| distinct(&rho)) {
            return Err(Error::RepeatedRoot(x.to_string()));
        }
        if let Some(x) = distinct(&r) {
            return Err(Error::DegenerateInstance(format!("repeated root {x} of G")));
        }
        if let Some(x) = r.iter().find(|x| delta.contains(x) || rho.contains(x)) {
            return Err(Error::DegenerateInstance(format!("root {x} of G is also a pole")));
        }
        let outer = rho.iter().map(Rational::abs).min();
        let inner = delta.iter().map(Rational::abs).max();
        if let (Some(lo), Some(hi)) = (&outer, &inner) {
            if hi >= lo {
                return Err(Error::Precondition(format!(
                    "annulus condition max|δ| = {hi} < min|ρ| = {lo} fails"
                )));
            }
        }
        if outer.is_some_and(|o| o.is_zero()) {
            return Err(Error::Precondition("ρ roots must be nonzero".into()));
        }
        Ok(DayFoamInstance { m, n, r, delta, rho })
    }

    pub fn k(&self) -> usize {
        self.delta.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn h(&self) -> usize {
        self.rho.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> &[Rational] {
        &self.r
    }

    pub fn delta(&self) -> &[Rational] {
        &self.delta
    }

    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    /// The same instance with another Toeplitz size.
    pub fn with_n(&self, n: usize) -> DayFoamInstance {
        DayFoamInstance { n, ..self.clone() }
    }
}

fn subsets(p: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..p {
            if p - i < m - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, p, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p, m, &mut Vec::new(), &mut out);
    out
}

fn checked_inv(x: Rational, what: &str) -> Result<Rational> {
    if x.is_zero() {
        Err(Error::DegenerateInstance(format!("vanishing difference {what}")))
    } else {
        Ok(x.recip())
    }
}

/// (−1)^{m(n+1)} Σ_{|I|=m} T(I)·∏_{i∈I} r_i^{n+1}, where
/// T(I) = ∏_{i∈I, j∉I}(r_i − r_j)^{−1} · ∏_{i∈I, s}(r_i − δ_s)
///      · ∏_{j∉I, t}(ρ_t − r_j) · ∏_{t, s}(ρ_t − δ_s)^{−1}.
pub fn day_foam_eval(inst: &DayFoamInstance) -> Result<Rational> {
    let p = inst.r.len();
    let mut rho_delta = Rational::one();
    for t in &inst.rho {
        for s in &inst.delta {
            rho_delta *= checked_inv(t - s, "ρ − δ")?;
        }
    }
    let mut total = Rational::zero();
    for subset in subsets(p, inst.m) {
        let inside = |i: usize| subset.contains(&i);
        let mut term = rho_delta.clone();
        for &i in &subset {
            let ri = &inst.r[i];
            for j in (0..p).filter(|&j| !inside(j)) {
                term *= checked_inv(ri - &inst.r[j], "r_i − r_j")?;
            }
            for s in &inst.delta {
                term *= ri - s;
            }
            term *= num_traits::pow(ri.clone(), inst.n + 1);
        }
        for j in (0..p).filter(|&j| !inside(j)) {
            for t in &inst.rho {
                term *= t - &inst.r[j];
            }
        }
        total += term;
    }
    Ok(if (inst.m * (inst.n + 1)) % 2 == 1 {
        -total
    } else {
        total
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn triangular_family() {
        for n in 0..=8 {
            let inst = DayFoamInstance::new(1, n, vec![rat(3, 2)], vec![], vec![]).unwrap();
            assert_eq!(day_foam_eval(&inst).unwrap(), num_traits::pow(rat(-3, 2), n + 1));
        }
    }

    #[test]
    fn small_instance_values() {
        let inst = DayFoamInstance::new(1, 0, vec![int(1), int(2)], vec![rat(1, 2)], vec![int(3)]).unwrap();
        assert_eq!(day_foam_eval(&inst).unwrap(), rat(-11, 5));
        assert_eq!(day_foam_eval(&inst.with_n(1)).unwrap(), rat(23, 5));
    }

    #[test]
    fn rejects_bad_instances() {
        let e = |r: Vec<Rational>, d: Vec<Rational>, p: Vec<Rational>| DayFoamInstance::new(1, 1, r, d, p);
        assert!(matches!(
            e(vec![int(1), int(2), int(5)], vec![rat(1, 2), rat(1, 2)], vec![]),
            Err(Error::RepeatedRoot(_))
        ));
        assert!(matches!(
            e(vec![int(1), int(1)], vec![rat(1, 3)], vec![]),
            Err(Error::DegenerateInstance(_))
        ));
        assert!(matches!(
            e(vec![int(1), rat(1, 3)], vec![rat(1, 3)], vec![]),
            Err(Error::DegenerateInstance(_))
        ));
        assert!(matches!(
            e(vec![int(1), int(2)], vec![int(4)], vec![int(3)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            DayFoamInstance::new(0, 1, vec![int(1)], vec![rat(1, 2)], vec![int(3)]),
            Err(Error::Precondition(_))
        ));
    }
}
