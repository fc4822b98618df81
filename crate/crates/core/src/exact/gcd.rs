//! Multivariate gcd: modular probes detect variables absent from the gcd,
//! and a recursive subresultant remainder sequence handles the rest.

use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp;
use super::poly::{Monomial, MultiPoly};
use super::Rational;

/// Scales `p` to a primitive polynomial with integer coefficients and a
/// positive leading coefficient.
fn normalize(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut s = p.integer_normalizer();
    if p.leading_sign() < 0 {
        s = -s;
    }
    p.scale(&s)
}

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.constant_value().is_some() || b.constant_value().is_some() {
        return a.ring().one();
    }
    let mut vars = a.support();
    for v in b.support() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort_unstable();
    let mut probe = Probe::new(a.ring().nvars());
    let mut main = None;
    for &v in &vars {
        if probe.gcd_free_of(a, b, v) {
            // The gcd divides every coefficient in v of both inputs.
            let coeffs: Vec<MultiPoly> = a.coeffs_in(v).into_iter().chain(b.coeffs_in(v)).collect();
            return gcd_many(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero inputs");
        }
        main.get_or_insert(v);
    }
    let v = main.expect("nonconstant inputs have support");
    let (ca, pa) = split_content(a, v);
    let (cb, pb) = split_content(b, v);
    let c = gcd(&ca, &cb);
    let g = subresultant_gcd(pa, pb, v);
    normalize(&(&c * &g))
}

/// Bounds deg_v gcd(a, b) from above by specializing every other variable
/// at random points modulo a prime.
struct Probe {
    rng: ChaCha8Rng,
    nvars: usize,
}

const PROBE_SEED: u64 = 0x6763_645f_7072_6f62;

impl Probe {
    fn new(nvars: usize) -> Probe {
        Probe {
            rng: ChaCha8Rng::seed_from_u64(PROBE_SEED),
            nvars,
        }
    }

    /// True when the univariate gcd of a specialization with nonvanishing
    /// leading coefficients is constant, which proves deg_v gcd = 0.
    fn gcd_free_of(&mut self, a: &MultiPoly, b: &MultiPoly, v: usize) -> bool {
        if a.degree_in(v) == Some(0) || b.degree_in(v) == Some(0) {
            return true;
        }
        let point = modp::random_point(&mut self.rng, self.nvars);
        let spec = |p: &MultiPoly| -> Option<Vec<u64>> {
            let c: Option<Vec<u64>> = p.coeffs_in(v).iter().map(|c| c.eval_mod(&point)).collect();
            c.filter(|c| c.last().is_some_and(|&l| l != 0))
        };
        match (spec(a), spec(b)) {
            (Some(x), Some(y)) => univariate_gcd_degree_mod(x, y) == 0,
            _ => false,
        }
    }
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of gcd(x, y) over Z/p, coefficients lowest degree first.
fn univariate_gcd_degree_mod(mut x: Vec<u64>, mut y: Vec<u64>) -> usize {
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        if x.len() >= y.len() {
            let inv = modp::inv(*y.last().expect("nonempty"));
            while x.len() >= y.len() {
                let f = modp::mul(*x.last().expect("nonempty"), inv);
                let shift = x.len() - y.len();
                for (i, &c) in y.iter().enumerate() {
                    x[shift + i] = modp::sub(x[shift + i], modp::mul(f, c));
                }
                trim(&mut x);
                if x.is_empty() {
                    break;
                }
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len().saturating_sub(1)
}

/// gcd of a list (zero for an empty list).
pub fn gcd_many<'a, I>(items: I) -> Option<MultiPoly>
where
    I: IntoIterator<Item = &'a MultiPoly>,
{
    let mut acc: Option<MultiPoly> = None;
    for p in items {
        acc = Some(match acc {
            None => normalize(p),
            Some(g) => {
                if g.is_one() {
                    return Some(g);
                }
                gcd(&g, p)
            }
        });
    }
    acc
}

/// Divides a vector of polynomials by the gcd of its entries and scales it to
/// primitive integer coefficients.
pub fn content_free(v: &[MultiPoly]) -> Vec<MultiPoly> {
    let nonzero: Vec<&MultiPoly> = v.iter().filter(|p| !p.is_zero()).collect();
    let Some(g) = gcd_many(nonzero.iter().copied()) else {
        return v.to_vec();
    };
    let divided: Vec<MultiPoly> = v
        .iter()
        .map(|p| p.exact_div(&g).expect("gcd divides every entry"))
        .collect();
    let mut scale = Rational::one();
    {
        use num_integer::Integer;
        let mut lcm = num_bigint::BigInt::one();
        let mut num_gcd = num_bigint::BigInt::from(0);
        for p in &divided {
            for (_, c) in p.terms() {
                lcm = lcm.lcm(c.denom());
                num_gcd = num_gcd.gcd(c.numer());
            }
        }
        if num_gcd.is_positive() {
            scale = Rational::new(lcm, num_gcd);
        }
    }
    divided.iter().map(|p| p.scale(&scale)).collect()
}

/// Content with respect to `v` (a polynomial free of `v`) and primitive part.
fn split_content(p: &MultiPoly, v: usize) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coeffs_in(v);
    let c = gcd_many(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero polynomial");
    let pp = p.exact_div(&c).expect("content divides");
    (c, pp)
}

/// gcd of two polynomials primitive in `v`, by the subresultant remainder
/// sequence; only the final remainder has its content removed.
fn subresultant_gcd(a: MultiPoly, b: MultiPoly, v: usize) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    let ring = a.ring().clone();
    let mut g = ring.one();
    let mut h = ring.one();
    loop {
        if b.is_zero() {
            return normalize(&split_content(&a, v).1);
        }
        if b.degree_in(v) == Some(0) {
            return ring.one();
        }
        let d = a.degree_in(v).unwrap_or(0) - b.degree_in(v).unwrap_or(0);
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return normalize(&split_content(&b, v).1);
        }
        let divisor = &g * &h.pow(d);
        a = b;
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        g = leading_coeff(&a, v);
        h = if d == 0 {
            h
        } else {
            g.pow(d)
                .exact_div(&h.pow(d - 1))
                .expect("subresultant division is exact")
        };
    }
}

fn leading_coeff(p: &MultiPoly, v: usize) -> MultiPoly {
    p.coeffs_in(v).pop().expect("nonzero polynomial")
}

/// Pseudo-remainder lc(b)^{deg a − deg b + 1}·a mod b with respect to `v`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let ring = a.ring();
    let da = a.degree_in(v).unwrap_or(0);
    let db = b.degree_in(v).unwrap_or(0);
    if da < db {
        return a.clone();
    }
    let lb = leading_coeff(b, v);
    let mut r = a.clone();
    let mut steps = da - db + 1;
    while !r.is_zero() {
        let dr = r.degree_in(v).unwrap_or(0);
        if dr < db {
            break;
        }
        let lr = leading_coeff(&r, v);
        let shift = Monomial::var(ring.nvars(), v, dr - db);
        r = &(&r * &lb) - &(&b.mul_monomial(&shift, &Rational::one()) * &lr);
        steps -= 1;
    }
    &r * &lb.pow(steps)
}
