//! Foam evaluations as signed coloring sums: GL(M) theta-foams, overlapping
//! GL(M|N) theta-foams, overlapping thick spheres, and the Day foam.
//!
//! Foams are described combinatorially by their thickness, the dot counts on
//! thin facets and, for overlapping foams, the pattern of facet pairs that
//! meet along a circle. Orientations are fixed so that theta-type evaluations
//! return the Schur and supersymmetric Schur functions with positive sign:
//! thin facets are ordered so that the denominator is ∏_{i<j}(x_i − x_j).

mod day_foam;

pub use day_foam::{day_foam_eval, DayFoamInstance};

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational, Ring};
use crate::symfun::{
    alternant, elementary_all, guard_permutations, signed_orbit_sum, staircase, vandermonde, Partition,
};

/// Largest thickness accepted by [`theta_eval`].
pub const MAX_THETA_THICKNESS: usize = 6;

/// Ring with variables x1..xM.
pub fn x_ring(m: usize) -> Ring {
    Ring::new(Ring::indexed("x", m))
}

/// Ring with variables x1..xM, y1..yN.
pub fn xy_ring(m: usize, n: usize) -> Ring {
    let mut names = Ring::indexed("x", m);
    names.extend(Ring::indexed("y", n));
    Ring::new(names)
}

/// A GL(M) theta-foam with dots μ_i + M − i on thin facet i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaFoam {
    m: usize,
    mu: Partition,
}

impl ThetaFoam {
    pub fn new(m: usize, mu: Partition) -> Result<ThetaFoam> {
        if mu.len() > m {
            return Err(Error::Precondition(format!("partition {mu} has more than {m} rows")));
        }
        Ok(ThetaFoam { m, mu })
    }

    pub fn thickness(&self) -> usize {
        self.m
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Dot counts on the thin facets; pairwise distinct.
    pub fn dots(&self) -> Vec<usize> {
        staircase(self.m)
            .iter()
            .enumerate()
            .map(|(i, d)| self.mu.part(i) + d)
            .collect()
    }
}

/// Sum over colorings of the thin facets by x1..xM, divided exactly by the
/// Vandermonde; equals the Schur polynomial s_μ(x1..xM).
pub fn theta_eval(f: &ThetaFoam) -> Result<MultiPoly> {
    if f.m > MAX_THETA_THICKNESS {
        return Err(Error::SizeLimit(format!(
            "theta-foam thickness {} exceeds {MAX_THETA_THICKNESS}",
            f.m
        )));
    }
    let ring = x_ring(f.m);
    let xs = ring.gens();
    alternant(&ring, &xs, &f.dots())
        .exact_div(&vandermonde(&ring, &xs))
        .map_err(|e| Error::Internal(format!("theta-foam division: {e}")))
}

/// An overlapping GL(M|N) theta-foam for a hook partition λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapThetaFoam {
    m: usize,
    n: usize,
    lambda: Partition,
    kappa_pattern: Vec<(usize, usize)>,
    x_dots: Vec<usize>,
    y_dots: Vec<usize>,
}

impl OverlapThetaFoam {
    /// Facet f′_i meets f″_j along a circle iff (i, j) is a cell of κ; facet
    /// f′_i carries τ_i + M − i dots and f″_j carries η′_j + N − j dots.
    pub fn new(m: usize, n: usize, lambda: Partition) -> Result<OverlapThetaFoam> {
        let hook = lambda.hook_decompose(m, n)?;
        let x_dots = staircase(m)
            .iter()
            .enumerate()
            .map(|(i, d)| hook.tau.part(i) + d)
            .collect();
        let y_dots = staircase(n)
            .iter()
            .enumerate()
            .map(|(j, d)| hook.eta_conjugate.part(j) + d)
            .collect();
        Ok(OverlapThetaFoam {
            m,
            n,
            kappa_pattern: hook.kappa.cells(),
            lambda,
            x_dots,
            y_dots,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Zero-based (i, j) pairs of facets meeting along a circle.
    pub fn kappa_pattern(&self) -> &[(usize, usize)] {
        &self.kappa_pattern
    }

    pub fn x_dots(&self) -> &[usize] {
        &self.x_dots
    }

    pub fn y_dots(&self) -> &[usize] {
        &self.y_dots
    }

    /// Evaluation with x and y colors taken from the given values, which may
    /// be ring generators or constants.
    pub fn evaluate_with(&self, ring: &Ring, xs: &[MultiPoly], ys: &[MultiPoly]) -> Result<MultiPoly> {
        if xs.len() != self.m || ys.len() != self.n {
            return Err(Error::Shape(format!(
                "need {} x-values and {} y-values, got {} and {}",
                self.m,
                self.n,
                xs.len(),
                ys.len()
            )));
        }
        guard_permutations(self.m, self.n)?;
        let d0 = &vandermonde(ring, xs) * &vandermonde(ring, ys);
        if d0.is_zero() {
            return Err(Error::Precondition("colors must be pairwise distinct".into()));
        }
        let divide = |num: MultiPoly, den: &MultiPoly| {
            num.exact_div(den)
                .map_err(|e| Error::Internal(format!("overlap-foam division: {e}")))
        };
        if self.kappa_pattern.len() == self.m * self.n {
            // Every facet pair meets, so the circle factor is the same for all
            // colorings and the sum splits into one alternant per facet type.
            let mut circles = ring.one();
            for x in xs {
                for y in ys {
                    circles = &circles * &(x + y);
                }
            }
            let sx = divide(alternant(ring, xs, &self.x_dots), &vandermonde(ring, xs))?;
            let sy = divide(alternant(ring, ys, &self.y_dots), &vandermonde(ring, ys))?;
            return Ok(&circles * &(&sx * &sy));
        }
        let sum = signed_orbit_sum(ring, xs, ys, &self.x_dots, &self.y_dots, &self.kappa_pattern);
        divide(sum, &d0)
    }

    /// Exact value at a rational point (x1..xM, y1..yN).
    pub fn evaluate_at(&self, xs: &[Rational], ys: &[Rational]) -> Result<Rational> {
        let ring = Ring::rationals();
        let cx: Vec<MultiPoly> = xs.iter().map(|v| ring.constant(v.clone())).collect();
        let cy: Vec<MultiPoly> = ys.iter().map(|v| ring.constant(v.clone())).collect();
        let v = self.evaluate_with(&ring, &cx, &cy)?;
        v.constant_value()
            .ok_or_else(|| Error::Internal("numeric evaluation is not constant".into()))
    }
}

/// Symbolic evaluation in ℚ[x1..xM, y1..yN]; equals the supersymmetric
/// Schur function s_λ(x/y).
pub fn overlap_theta_eval(f: &OverlapThetaFoam) -> Result<MultiPoly> {
    let ring = xy_ring(f.m, f.n);
    let gens = ring.gens();
    f.evaluate_with(&ring, &gens[..f.m], &gens[f.m..])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMode {
    Plus,
    Minus,
}

/// Two overlapping thick spheres of thicknesses M and N meeting in every
/// pair of thin facets: the M×N rectangle overlap foam, giving ∏(x_i + y_j).
/// With reversed y-orientation the evaluation is ∏(x_i − y_j).
pub fn sphere_overlap_eval(m: usize, n: usize, mode: SignMode) -> Result<MultiPoly> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("sphere thicknesses must be positive".into()));
    }
    let plus = overlap_theta_eval(&OverlapThetaFoam::new(m, n, Partition::rectangle(m, n))?)?;
    Ok(match mode {
        SignMode::Plus => plus,
        SignMode::Minus => {
            let ring = plus.ring().clone();
            (m..m + n).fold(plus, |p, j| p.substitute(j, &-ring.gen(j)))
        }
    })
}

/// Coefficients, leading first, of the monic polynomial with elementary
/// symmetric functions `e` of its roots: x^M − e1·x^{M−1} + e2·x^{M−2} − ….
pub fn monic_from_elementary(e: &[MultiPoly]) -> Vec<MultiPoly> {
    e.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect()
}

/// Res(f, g) as the determinant of the Sylvester matrix; for monic f and g
/// this is ∏(root_f − root_g). Coefficient lists are leading first.
pub fn sylvester_resultant(ring: &Ring, f: &[MultiPoly], g: &[MultiPoly]) -> Result<MultiPoly> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::Precondition("empty coefficient list".into()));
    }
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    if size == 0 {
        return Ok(ring.one());
    }
    let mut rows = vec![vec![ring.zero(); size]; size];
    for i in 0..dg {
        for (j, c) in f.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..df {
        for (j, c) in g.iter().enumerate() {
            rows[dg + i][i + j] = c.clone();
        }
    }
    crate::exact::PolyMatrix::from_rows(ring, rows)?.det_fraction_free()
}

/// Res(f_M, f̄_N) as a polynomial in the elementary symmetric functions
/// e1..eM of the roots of f_M and f1..fN of the roots of f̄_N.
pub fn resultant_in_elementary(m: usize, n: usize) -> Result<MultiPoly> {
    let mut names = Ring::indexed("e", m);
    names.extend(Ring::indexed("f", n));
    let ring = Ring::new(names);
    let gens = ring.gens();
    let mut f = vec![ring.one()];
    f.extend(gens[..m].iter().cloned());
    let mut g = vec![ring.one()];
    g.extend(gens[m..].iter().cloned());
    sylvester_resultant(&ring, &monic_from_elementary(&f), &monic_from_elementary(&g))
}

/// Res(f_M, f̄_N) for f_M = ∏(z − x_i) and f̄_N = ∏(z − y_j): the Sylvester
/// determinant in elementary symmetric coordinates, rewritten in x and y.
pub fn resultant_of_roots(m: usize, n: usize) -> Result<MultiPoly> {
    let res = resultant_in_elementary(m, n)?;
    let xy = xy_ring(m, n);
    let mut names: Vec<String> = res.ring().vars().to_vec();
    names.extend(xy.vars().iter().cloned());
    let big = Ring::new(names);
    let gens = big.gens();
    let (xs, ys) = (&gens[m + n..2 * m + n], &gens[2 * m + n..]);
    let ex = elementary_all(&big, xs, m);
    let ey = elementary_all(&big, ys, n);
    let mut p = res.embed(&big)?;
    for i in 0..m {
        p = p.substitute(i, &ex[i + 1]);
    }
    for j in 0..n {
        p = p.substitute(m + j, &ey[j + 1]);
    }
    p.embed(&xy)
}
