//! Laurent expansions of rational functions in an annulus, Toeplitz
//! determinants, and a check of Day's formula against brute force.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{det_rational, rat, Rational};
use crate::foam::{day_foam_eval, DayFoamInstance};

/// f(z) = G(z)/(F(z)·D(z)) with G = ∏(z − r_i), D = ∏(z − δ_s) and
/// F = ∏(1 − z/ρ_t), expanded in the annulus max|δ| < |z| < min|ρ|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFnSpec {
    pub g_roots: Vec<Rational>,
    pub delta: Vec<Rational>,
    pub rho: Vec<Rational>,
}

/// Exact coefficients a_ν for ν in [lo, hi].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentWindow {
    lo: i64,
    hi: i64,
    coeffs: Vec<Rational>,
}

impl LaurentWindow {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// a_ν; `None` outside the window.
    pub fn coeff(&self, nu: i64) -> Option<&Rational> {
        (self.lo..=self.hi)
            .contains(&nu)
            .then(|| &self.coeffs[(nu - self.lo) as usize])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// Dense univariate polynomial, lowest degree first.
type UPoly = Vec<Rational>;

fn from_roots(roots: &[Rational]) -> UPoly {
    let mut p = vec![Rational::one()];
    for r in roots {
        let mut q = vec![Rational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i + 1] += c;
            q[i] -= c * r;
        }
        p = q;
    }
    p
}

fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn eval(p: &UPoly, z: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
}

fn derivative(p: &UPoly) -> UPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(i.into()))
        .collect()
}

/// Quotient and remainder of a by b (b has nonzero leading coefficient).
fn div_rem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (vec![Rational::zero()], a.clone());
    }
    let mut r = a.clone();
    let mut q = vec![Rational::zero(); a.len() - db];
    let lead = b[db].clone();
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (q, r)
}

fn repeated(v: &[Rational]) -> Option<&Rational> {
    let mut seen = HashSet::new();
    v.iter().find(|x| !seen.insert(*x))
}

impl RationalFnSpec {
    pub fn new(g_roots: Vec<Rational>, delta: Vec<Rational>, rho: Vec<Rational>) -> Result<RationalFnSpec> {
        if let Some(x) = repeated(&delta).or_else(|| repeated(&rho)) {
            return Err(Error::RepeatedRoot(x.to_string()));
        }
        if rho.iter().any(Zero::is_zero) {
            return Err(Error::Precondition("ρ roots must be nonzero".into()));
        }
        let inner = delta.iter().map(Rational::abs).max();
        let outer = rho.iter().map(Rational::abs).min();
        if let (Some(i), Some(o)) = (&inner, &outer) {
            if i >= o {
                return Err(Error::Precondition(format!(
                    "annulus condition max|δ| = {i} < min|ρ| = {o} fails"
                )));
            }
        }
        Ok(RationalFnSpec { g_roots, delta, rho })
    }

    pub fn from_instance(inst: &DayFoamInstance) -> Result<RationalFnSpec> {
        RationalFnSpec::new(inst.r().to_vec(), inst.delta().to_vec(), inst.rho().to_vec())
    }

    /// G, F·D as dense polynomials.
    fn numerator_denominator(&self) -> (UPoly, UPoly) {
        let g = from_roots(&self.g_roots);
        let mut f = vec![Rational::one()];
        for r in &self.rho {
            f = mul(&f, &vec![Rational::one(), -r.recip()]);
        }
        (g, mul(&f, &from_roots(&self.delta)))
    }
}

/// Laurent coefficients a_ν for ν in [lo, hi], by polynomial division and
/// partial fractions: each a_ν is a finite sum of residue terms.
pub fn laurent_window(spec: &RationalFnSpec, lo: i64, hi: i64) -> Result<LaurentWindow> {
    if lo > hi {
        return Err(Error::Precondition(format!("empty window [{lo}, {hi}]")));
    }
    let (g, den) = spec.numerator_denominator();
    let (quot, rem) = div_rem(&g, &den);
    let dden = derivative(&den);
    let residue = |z: &Rational| eval(&rem, z) / eval(&dden, z);
    let inner: Vec<(Rational, Rational)> = spec.delta.iter().map(|d| (d.clone(), residue(d))).collect();
    let outer: Vec<(Rational, Rational)> = spec.rho.iter().map(|r| (r.recip(), residue(r))).collect();
    let coeffs = (lo..=hi)
        .map(|nu| {
            let mut a = Rational::zero();
            if nu >= 0 {
                if let Some(c) = quot.get(nu as usize) {
                    a += c;
                }
                for (inv_rho, b) in &outer {
                    a -= b * num_traits::pow(inv_rho.clone(), nu as usize + 1);
                }
            } else {
                for (d, res) in &inner {
                    a += res * num_traits::pow(d.clone(), (-nu - 1) as usize);
                }
            }
            a
        })
        .collect();
    Ok(LaurentWindow { lo, hi, coeffs })
}

/// Laurent coefficients covering [−n, n].
pub fn laurent_coeffs(spec: &RationalFnSpec, n: usize) -> Result<LaurentWindow> {
    laurent_window(spec, -(n as i64), n as i64)
}

/// det T_n = det(a_{i−j})_{0≤i,j≤n}.
pub fn toeplitz_det(w: &LaurentWindow, n: usize) -> Result<Rational> {
    let n = n as i64;
    if w.lo > -n || w.hi < n {
        return Err(Error::InsufficientWindow { lo: w.lo, hi: w.hi, n });
    }
    let m: Vec<Vec<Rational>> = (0..=n)
        .map(|i| (0..=n).map(|j| w.coeff(i - j).cloned().unwrap_or_default()).collect())
        .collect();
    det_rational(&m)
}

/// Both sides of Day's formula for one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DayVerification {
    pub formula_value: Rational,
    pub brute_force_value: Rational,
    pub equal: bool,
}

pub fn day_verify(inst: &DayFoamInstance) -> Result<DayVerification> {
    let formula_value = day_foam_eval(inst)?;
    let spec = RationalFnSpec::from_instance(inst)?;
    let brute_force_value = toeplitz_det(&laurent_coeffs(&spec, inst.n())?, inst.n())?;
    Ok(DayVerification {
        equal: formula_value == brute_force_value,
        formula_value,
        brute_force_value,
    })
}

fn pool(values: &[(i64, i64)]) -> Vec<Rational> {
    values.iter().flat_map(|&(a, b)| [rat(a, b), rat(-a, b)]).collect()
}

/// A random valid instance with k, h, m ≤ `max_degree` (m ≥ h) and n ≤
/// `max_n`. Pole and root values come from fixed disjoint pools, so the
/// annulus condition and root distinctness hold by construction.
pub fn random_instance<R: Rng>(rng: &mut R, max_degree: usize, max_n: usize) -> Result<DayFoamInstance> {
    let deltas = pool(&[(1, 2), (1, 3), (2, 5)]);
    let rhos = pool(&[(3, 1), (4, 1), (5, 2), (7, 2)]);
    let roots = pool(&[(1, 1), (2, 1), (3, 4), (5, 3), (6, 5), (7, 4), (9, 2)]);
    let max_degree = max_degree.min(3);
    let k = rng.gen_range(0..=max_degree);
    let h = rng.gen_range(0..=max_degree);
    let m = rng.gen_range(h.max(1)..=max_degree.max(1));
    let n = rng.gen_range(0..=max_n);
    let delta: Vec<Rational> = deltas.choose_multiple(rng, k).cloned().collect();
    let rho: Vec<Rational> = rhos.choose_multiple(rng, h).cloned().collect();
    let r: Vec<Rational> = roots.choose_multiple(rng, k + m).cloned().collect();
    DayFoamInstance::new(m, n, r, delta, rho)
}
