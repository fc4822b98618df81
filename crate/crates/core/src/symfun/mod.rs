//! Symmetric and supersymmetric functions.
//!
//! Conventions: h_0 = e_0 = 1, h_k = e_k = 0 for k < 0, and e_k = 0 once k
//! exceeds the number of variables. Variables are passed as polynomials, so
//! the same routines produce symbolic expansions (pass ring generators) or
//! exact numeric values (pass constants).

mod partition;
pub(crate) mod perm;

pub use partition::{HookDecomposition, Partition};

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, PolyMatrix, Ring};

/// Largest |S_M × S_N| accepted by the permutation sums (10!).
pub const MAX_PERMUTATIONS: u64 = 3_628_800;

/// e_0 .. e_upto of `vars`.
pub fn elementary_all(ring: &Ring, vars: &[MultiPoly], upto: usize) -> Vec<MultiPoly> {
    let mut e = vec![ring.zero(); upto + 1];
    e[0] = ring.one();
    for (count, x) in vars.iter().enumerate() {
        for j in (1..=upto.min(count + 1)).rev() {
            let t = x * &e[j - 1];
            e[j] += &t;
        }
    }
    e
}

/// h_0 .. h_upto of `vars`.
pub fn complete_all(ring: &Ring, vars: &[MultiPoly], upto: usize) -> Vec<MultiPoly> {
    let mut h = vec![ring.zero(); upto + 1];
    h[0] = ring.one();
    for x in vars {
        for j in 1..=upto {
            let t = x * &h[j - 1];
            h[j] += &t;
        }
    }
    h
}

/// The elementary symmetric function e_k.
pub fn elementary(ring: &Ring, vars: &[MultiPoly], k: i64) -> MultiPoly {
    if k < 0 {
        return ring.zero();
    }
    elementary_all(ring, vars, k as usize).pop().unwrap()
}

/// The complete symmetric function h_k.
pub fn complete(ring: &Ring, vars: &[MultiPoly], k: i64) -> MultiPoly {
    if k < 0 {
        return ring.zero();
    }
    complete_all(ring, vars, k as usize).pop().unwrap()
}

/// det(f(λ_i − i + j)) over the ℓ(λ)×ℓ(λ) grid.
pub fn jacobi_trudi<F>(ring: &Ring, lambda: &Partition, f: F) -> MultiPoly
where
    F: Fn(i64) -> MultiPoly,
{
    let l = lambda.len();
    let m = PolyMatrix::from_fn(ring, l, l, |i, j| f(lambda.part(i) as i64 - i as i64 + j as i64));
    m.det_fraction_free().expect("square by construction")
}

fn lookup(table: &[MultiPoly], ring: &Ring, k: i64) -> MultiPoly {
    if k < 0 {
        ring.zero()
    } else {
        table.get(k as usize).cloned().unwrap_or_else(|| ring.zero())
    }
}

/// Schur polynomial via the Jacobi-Trudi determinant, in complete functions
/// or, when the conjugate grid is smaller, in elementary functions.
pub fn schur_jt(ring: &Ring, lambda: &Partition, vars: &[MultiPoly]) -> MultiPoly {
    let upto = lambda.part(0) + lambda.len();
    if lambda.part(0) < lambda.len() {
        let e = elementary_all(ring, vars, upto);
        return jacobi_trudi(ring, &lambda.conjugate(), |k| lookup(&e, ring, k));
    }
    let h = complete_all(ring, vars, upto);
    jacobi_trudi(ring, lambda, |k| lookup(&h, ring, k))
}

/// ∏_{i<j} (v_i − v_j).
pub fn vandermonde(ring: &Ring, vars: &[MultiPoly]) -> MultiPoly {
    let mut acc = ring.one();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            acc = &acc * &(&vars[i] - &vars[j]);
        }
    }
    acc
}

/// δ_n = (n−1, n−2, …, 0).
pub(crate) fn staircase(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// ∏_i v_{σ(i)}^{exps_i}.
fn permuted_monomial(ring: &Ring, vars: &[MultiPoly], sigma: &[usize], exps: &[usize]) -> MultiPoly {
    let mut acc = ring.one();
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            acc = &acc * &vars[sigma[i]].pow(e as u32);
        }
    }
    acc
}

/// Σ_σ sgn(σ) v_σ^{exps}, i.e. the alternant det(v_i^{exps_j}).
pub fn alternant(ring: &Ring, vars: &[MultiPoly], exps: &[usize]) -> MultiPoly {
    let mut acc = ring.zero();
    for (sigma, sign) in perm::signed_permutations(vars.len()) {
        let t = permuted_monomial(ring, vars, &sigma, exps);
        if sign > 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

/// Schur polynomial as the alternant a_{λ+δ} divided exactly by the Vandermonde.
pub fn schur_bialternant(ring: &Ring, lambda: &Partition, vars: &[MultiPoly]) -> Result<MultiPoly> {
    let n = vars.len();
    if n < lambda.len() {
        return Err(Error::Precondition(format!(
            "{} variables cannot carry a partition of length {}",
            n,
            lambda.len()
        )));
    }
    guard_permutations(n, 0)?;
    let exps: Vec<usize> = staircase(n)
        .iter()
        .enumerate()
        .map(|(i, d)| lambda.part(i) + d)
        .collect();
    let a = alternant(ring, vars, &exps);
    a.exact_div(&vandermonde(ring, vars))
        .map_err(|e| Error::Internal(format!("bialternant division: {e}")))
}

pub(crate) fn guard_permutations(m: usize, n: usize) -> Result<()> {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    if m > 10 || n > 10 || fact(m).saturating_mul(fact(n)) > MAX_PERMUTATIONS {
        return Err(Error::SizeLimit(format!("|S_{m} x S_{n}| exceeds {MAX_PERMUTATIONS}")));
    }
    Ok(())
}

/// h_0(x/y) .. h_upto(x/y) with h_n(x/y) = Σ_i h_{n−i}(x) e_i(y).
pub fn super_complete_all(ring: &Ring, xs: &[MultiPoly], ys: &[MultiPoly], upto: usize) -> Vec<MultiPoly> {
    let h = complete_all(ring, xs, upto);
    let e = elementary_all(ring, ys, upto);
    (0..=upto)
        .map(|n| {
            let mut acc = ring.zero();
            for i in 0..=n {
                if !e[i].is_zero() && !h[n - i].is_zero() {
                    acc += &(&h[n - i] * &e[i]);
                }
            }
            acc
        })
        .collect()
}

/// The supersymmetric complete function h_n(x/y); zero for n < 0.
pub fn super_complete(ring: &Ring, xs: &[MultiPoly], ys: &[MultiPoly], n: i64) -> MultiPoly {
    if n < 0 {
        return ring.zero();
    }
    super_complete_all(ring, xs, ys, n as usize).pop().unwrap()
}

/// s_λ(x/y) = det(h_{λ_i−i+j}(x/y)) = det(e_{λ′_i−i+j}(x/y)), using
/// whichever grid is smaller.
pub fn super_schur_jt(ring: &Ring, lambda: &Partition, xs: &[MultiPoly], ys: &[MultiPoly]) -> MultiPoly {
    let upto = lambda.part(0) + lambda.len();
    if lambda.part(0) < lambda.len() {
        let e = super_elementary_all(ring, xs, ys, upto);
        return jacobi_trudi(ring, &lambda.conjugate(), |k| lookup(&e, ring, k));
    }
    let h = super_complete_all(ring, xs, ys, upto);
    jacobi_trudi(ring, lambda, |k| lookup(&h, ring, k))
}

/// e_0(x/y) .. e_upto(x/y) with e_n(x/y) = Σ_i e_{n−i}(x) h_i(y), the
/// coefficients of ∏(1 + x_i t)/∏(1 − y_j t).
pub fn super_elementary_all(ring: &Ring, xs: &[MultiPoly], ys: &[MultiPoly], upto: usize) -> Vec<MultiPoly> {
    super_complete_all(ring, ys, xs, upto)
}

/// s_λ(x/y) by the Sergeev-Pragacz formula: the signed S_M×S_N orbit sum of
/// x^{τ+δ_M} y^{η′+δ_N} ∏_{(i,j)∈κ}(x_i+y_j), divided exactly by the double
/// Vandermonde.
pub fn sergeev_pragacz(ring: &Ring, lambda: &Partition, xs: &[MultiPoly], ys: &[MultiPoly]) -> Result<MultiPoly> {
    let (m, n) = (xs.len(), ys.len());
    let hook = lambda.hook_decompose(m, n)?;
    guard_permutations(m, n)?;
    let x_exps: Vec<usize> = staircase(m)
        .iter()
        .enumerate()
        .map(|(i, d)| hook.tau.part(i) + d)
        .collect();
    let y_exps: Vec<usize> = staircase(n)
        .iter()
        .enumerate()
        .map(|(j, d)| hook.eta_conjugate.part(j) + d)
        .collect();
    let sum = signed_orbit_sum(ring, xs, ys, &x_exps, &y_exps, &hook.kappa.cells());
    let d0 = &vandermonde(ring, xs) * &vandermonde(ring, ys);
    sum.exact_div(&d0)
        .map_err(|e| Error::Internal(format!("Sergeev-Pragacz division: {e}")))
}

/// Σ_{(σ′,σ″)} sgn(σ′)sgn(σ″) ∏_i x_{σ′(i)}^{a_i} ∏_j y_{σ″(j)}^{b_j} ∏_{(i,j)∈cells}(x_{σ′(i)}+y_{σ″(j)}).
pub(crate) fn signed_orbit_sum(
    ring: &Ring,
    xs: &[MultiPoly],
    ys: &[MultiPoly],
    x_exps: &[usize],
    y_exps: &[usize],
    cells: &[(usize, usize)],
) -> MultiPoly {
    let xperms = perm::signed_permutations(xs.len());
    let yperms = perm::signed_permutations(ys.len());
    let xmon: Vec<MultiPoly> = xperms
        .iter()
        .map(|(s, _)| permuted_monomial(ring, xs, s, x_exps))
        .collect();
    let ymon: Vec<MultiPoly> = yperms
        .iter()
        .map(|(s, _)| permuted_monomial(ring, ys, s, y_exps))
        .collect();
    let mut acc = ring.zero();
    for (a, (sx, gx)) in xperms.iter().enumerate() {
        for (b, (sy, gy)) in yperms.iter().enumerate() {
            let mut t = &xmon[a] * &ymon[b];
            for &(i, j) in cells {
                t = &t * &(&xs[sx[i]] + &ys[sy[j]]);
            }
            if gx * gy > 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
    }
    acc
}

/// s_τ(x)·s_{η′}(y)·∏_{i≤M, j≤N}(x_i+y_j), valid when λ ⊇ M×N.
pub fn super_schur_product_form(
    ring: &Ring,
    lambda: &Partition,
    xs: &[MultiPoly],
    ys: &[MultiPoly],
) -> Result<MultiPoly> {
    let (m, n) = (xs.len(), ys.len());
    if !lambda.contains_rectangle(m, n) {
        return Err(Error::Precondition(format!(
            "{lambda} does not contain the {m}x{n} rectangle"
        )));
    }
    let hook = lambda.hook_decompose(m, n)?;
    let mut acc = &schur_jt(ring, &hook.tau, xs) * &schur_jt(ring, &hook.eta_conjugate, ys);
    for x in xs {
        for y in ys {
            acc = &acc * &(x + y);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(m: usize, n: usize) -> (Ring, Vec<MultiPoly>, Vec<MultiPoly>) {
        let mut names = Ring::indexed("x", m);
        names.extend(Ring::indexed("y", n));
        let ring = Ring::new(names);
        let g = ring.gens();
        (ring.clone(), g[..m].to_vec(), g[m..].to_vec())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_examples() {
        let (r, x, _) = setup(3, 0);
        assert_eq!(elementary(&r, &x, 2), r.parse("x1*x2+x1*x3+x2*x3").unwrap());
        assert!(elementary(&r, &x, 0).is_one());
        assert!(elementary(&r, &x[..2], 4).is_zero());
        assert!(elementary(&r, &x, -1).is_zero());
    }

    #[test]
    fn complete_examples() {
        let (r, x, _) = setup(2, 0);
        assert_eq!(complete(&r, &x, 2), r.parse("x1^2+x1*x2+x2^2").unwrap());
        assert_eq!(complete(&r, &x[..1], 1), r.parse("x1").unwrap());
        assert_eq!(complete(&r, &x[..1], 3), r.parse("x1^3").unwrap());
    }

    #[test]
    fn schur_examples() {
        let (r, x, _) = setup(3, 0);
        assert_eq!(schur_jt(&r, &p("1"), &x[..2]), r.parse("x1+x2").unwrap());
        assert_eq!(schur_jt(&r, &p("2,2,2"), &x), r.parse("x1^2*x2^2*x3^2").unwrap());
        assert_eq!(schur_jt(&r, &p("2,1"), &x[..2]), r.parse("x1^2*x2+x1*x2^2").unwrap());
        assert_eq!(
            schur_bialternant(&r, &p("2,1"), &x[..2]).unwrap(),
            r.parse("x1^2*x2+x1*x2^2").unwrap()
        );
        assert!(schur_bialternant(&r, &Partition::empty(), &x).unwrap().is_one());
        assert!(schur_bialternant(&r, &p("1,1,1,1"), &x).is_err());
    }

    #[test]
    fn super_complete_examples() {
        let (r, x, y) = setup(1, 1);
        assert_eq!(super_complete(&r, &x, &y, 1), r.parse("x1+y1").unwrap());
        assert_eq!(super_complete(&r, &x, &y, 2), r.parse("x1^2+x1*y1").unwrap());
        assert!(super_complete(&r, &x, &y, -1).is_zero());
        assert!(super_complete(&r, &x, &y, 0).is_one());
    }

    #[test]
    fn super_schur_examples() {
        let (r, x, y) = setup(1, 1);
        let xy = r.parse("x1^2*y1+x1*y1^2").unwrap();
        assert_eq!(super_schur_jt(&r, &p("2,1"), &x, &y), xy);
        assert!(super_schur_jt(&r, &p("2,2"), &x, &y).is_zero());
        assert!(super_schur_jt(&r, &Partition::empty(), &x, &y).is_one());
        assert_eq!(super_schur_jt(&r, &p("2,1"), &x, &y).to_string(), "x1^2*y1+x1*y1^2");
    }

    #[test]
    fn sergeev_pragacz_examples() {
        let (r, x, y) = setup(1, 1);
        let xy = r.parse("x1*y1*(x1+y1)").unwrap();
        assert_eq!(sergeev_pragacz(&r, &p("2,1"), &x, &y).unwrap(), xy);
        assert!(sergeev_pragacz(&r, &Partition::empty(), &x, &y).unwrap().is_one());
        assert!(matches!(
            sergeev_pragacz(&r, &p("2,2"), &x, &y),
            Err(Error::HookViolation { .. })
        ));
    }

    #[test]
    fn product_form_examples() {
        let (r, x, y) = setup(1, 1);
        assert_eq!(
            super_schur_product_form(&r, &p("2,1"), &x, &y).unwrap(),
            r.parse("x1*y1*(x1+y1)").unwrap()
        );
        assert_eq!(
            super_schur_product_form(&r, &p("1,1"), &x, &y).unwrap(),
            r.parse("y1*(x1+y1)").unwrap()
        );
        let (r, x, y) = setup(2, 3);
        let rect = super_schur_product_form(&r, &Partition::rectangle(2, 3), &x, &y).unwrap();
        assert_eq!(
            rect,
            r.parse("(x1+y1)*(x1+y2)*(x1+y3)*(x2+y1)*(x2+y2)*(x2+y3)").unwrap()
        );
        assert!(matches!(
            super_schur_product_form(&r, &p("2,1"), &x, &y),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn permutation_guard() {
        assert!(guard_permutations(4, 6).is_ok());
        assert!(guard_permutations(7, 7).is_err());
        assert!(guard_permutations(11, 0).is_err());
    }
}
