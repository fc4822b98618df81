//! Sparse multivariate polynomials over the rationals.
//!
//! Every polynomial carries the [`Ring`] it lives in: an ordered list of
//! variable names. Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose
//! ordering is graded lexicographic with the first ring variable largest.
//! Zero coefficients are never stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::Rational;
use crate::error::{Error, Result};

/// An ordered list of named indeterminates.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Ring
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(
            {
                let mut seen = std::collections::HashSet::new();
                vars.iter().all(|v| seen.insert(v.clone()))
            },
            "duplicate variable names"
        );
        Ring { vars: vars.into() }
    }

    /// The ring with no variables, i.e. the rationals.
    pub fn rationals() -> Ring {
        Ring::new(Vec::<String>::new())
    }

    /// Variables named `{prefix}1 .. {prefix}n`.
    pub fn indexed(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        self.index_of(name)
            .map(|i| self.gen(i))
            .ok_or_else(|| Error::parse(name, "unknown variable"))
    }

    /// The `i`-th variable as a polynomial.
    pub fn gen(&self, i: usize) -> MultiPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(self.nvars(), i, 1), Rational::one());
        MultiPoly {
            ring: self.clone(),
            terms,
        }
    }

    /// All variables, in ring order.
    pub fn gens(&self) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.gen(i)).collect()
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Rational::one())
    }

    pub fn constant(&self, c: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(self.nvars()), c);
        }
        MultiPoly {
            ring: self.clone(),
            terms,
        }
    }

    pub fn int(&self, c: i64) -> MultiPoly {
        self.constant(Rational::from_integer(BigInt::from(c)))
    }

    /// This ring's variables followed by any names from `extra` not already present.
    pub fn extended<I, S>(&self, extra: I) -> Ring
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vars: Vec<String> = self.vars.to_vec();
        for name in extra {
            let name = name.into();
            if !vars.contains(&name) {
                vars.push(name);
            }
        }
        Ring::new(vars)
    }

    /// Parses the canonical text form (and a slightly more liberal superset).
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        super::parse::parse_poly(self, text)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.vars.join(","))
    }
}

/// An exponent vector. Ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            degree: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial {
            degree: e,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, divisor: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self.exps.iter().zip(divisor.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial {
            degree: self.degree - divisor.degree,
            exps,
        }
    }
}

/// A sparse polynomial with rational coefficients in a named [`Ring`].
#[derive(Clone)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree)
    }

    /// True when every monomial has the same total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps[var]).max()
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exps[i] > 0))
            .collect()
    }

    fn from_terms(ring: &Ring, terms: BTreeMap<Monomial, Rational>) -> MultiPoly {
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_pairs<I>(ring: &Ring, pairs: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in pairs {
            assert_eq!(m.exps.len(), ring.nvars(), "monomial length must match ring");
            accumulate(&mut terms, m, c);
        }
        MultiPoly::from_terms(ring, terms)
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    /// Checked variant of the ring compatibility test used by the operators.
    pub fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.vars().join(","),
                other.ring.vars().join(","),
            ))
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn scale_int(&self, c: i64) -> MultiPoly {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Returns `q` with `q * divisor == self`, or `NonExactDivision`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if let Some(c) = divisor.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lm.divides(m) {
                return Err(Error::NonExactDivision);
            }
            let qm = m.div(lm);
            let qc = c / lc;
            for (dm, dc) in divisor.terms.iter() {
                accumulate(&mut rem, dm.mul(&qm), -(dc * &qc));
            }
            quot.insert(qm, qc);
        }
        Ok(MultiPoly::from_terms(&self.ring, quot))
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        self.check_ring(value);
        let max = self.degree_in(var).unwrap_or(0);
        let powers: Vec<MultiPoly> = {
            let mut v = vec![self.ring.one()];
            for _ in 0..max {
                let next = v.last().unwrap() * value;
                v.push(next);
            }
            v
        };
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let e = m.exps[var] as usize;
            let mut rest = m.exps.to_vec();
            rest[var] = 0;
            let rest = Monomial::from_exps(rest);
            for (pm, pc) in powers[e].terms.iter() {
                accumulate(&mut acc, pm.mul(&rest), pc * c);
            }
        }
        MultiPoly::from_terms(&self.ring, acc)
    }

    /// Substitutes rational values for some variables; the ring is unchanged.
    pub fn specialize(&self, values: &[(usize, Rational)]) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let mut exps = m.exps.to_vec();
            let mut coeff = c.clone();
            for (v, val) in values {
                let e = exps[*v];
                if e > 0 {
                    coeff *= rational_pow(val, e);
                    exps[*v] = 0;
                }
            }
            accumulate(&mut acc, Monomial::from_exps(exps), coeff);
        }
        MultiPoly::from_terms(&self.ring, acc)
    }

    /// Full evaluation at a rational point (one value per ring variable).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (v, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t *= rational_pow(&point[v], e);
                }
            }
            total += t;
        }
        total
    }

    /// Evaluation modulo the fixed prime of [`modp`]; `None` if a coefficient
    /// denominator vanishes there.
    pub fn eval_mod(&self, point: &[u64]) -> Option<u64> {
        let mut total = 0u64;
        for (m, c) in self.terms.iter() {
            let mut t = modp::from_rational(c)?;
            for (v, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = modp::mul(t, modp::pow(point[v], e as u64));
                }
            }
            total = modp::add(total, t);
        }
        Some(total)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<MultiPoly> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.exps[i] > 0) {
                        return Err(Error::RingMismatch(self.ring.vars().join(","), target.vars().join(",")));
                    }
                    map.push(None);
                }
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps.iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] += e;
                }
            }
            (Monomial::from_exps(exps), c.clone())
        });
        Ok(MultiPoly::from_pairs(target, terms))
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        let n = self.ring.nvars();
        assert_eq!(perm.len(), n);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[perm[i]] = e;
            }
            (Monomial::from_exps(exps), c.clone())
        });
        MultiPoly::from_pairs(&self.ring, terms)
    }

    /// Coefficients with respect to `var`: entry `d` is the coefficient of `var^d`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in self.terms.iter() {
            let e = m.exps[var] as usize;
            let mut exps = m.exps.to_vec();
            exps[var] = 0;
            out[e].insert(Monomial::from_exps(exps), c.clone());
        }
        if self.is_zero() {
            return vec![];
        }
        out.into_iter().map(|t| MultiPoly::from_terms(&self.ring, t)).collect()
    }

    /// Rebuilds a polynomial from coefficients in `var`.
    pub fn from_coeffs_in(ring: &Ring, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = ring.zero();
        for (d, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &c.mul_monomial(&Monomial::var(ring.nvars(), var, d as u32), &Rational::one());
            }
        }
        acc
    }

    /// Least common multiple of coefficient denominators divided by gcd of
    /// numerators: multiplying by the result gives a primitive integer polynomial.
    pub fn integer_normalizer(&self) -> Rational {
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        if gcd.is_zero() {
            return Rational::one();
        }
        Rational::new(lcm, gcd)
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading_term() {
            None => 0,
            Some((_, c)) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }

    /// Largest absolute exponent used, handy for size heuristics.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits() + c.denom().bits())
            .max()
            .unwrap_or(0)
    }

    pub fn to_i64(&self) -> Option<i64> {
        let c = self.constant_value()?;
        if c.is_integer() {
            c.numer().to_i64()
        } else {
            None
        }
    }
}

pub(crate) fn rational_pow(base: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(base.clone(), e as usize)
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.check_ring(rhs);
        for (m, c) in rhs.terms.iter() {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        self.check_ring(rhs);
        for (m, c) in rhs.terms.iter() {
            accumulate(&mut self.terms, m.clone(), -c.clone());
        }
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.ring.zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPoly::from_terms(&self.ring, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(mut iter: I) -> MultiPoly {
        let mut acc = iter.next().expect("sum of an empty iterator has no ring");
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Canonical rendering: descending monomial order, explicit `*`, `^` for
/// powers, unit coefficients omitted, e.g. `x1^2*y1+x1*y1^2` or `-1*b^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 && !c.is_negative() {
                write!(f, "+")?;
            }
            let mono: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.ring.vars()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{c}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
