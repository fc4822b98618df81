//! Generating-function theories Z(T) = Σ α_g T^g and the circle state space.
//!
//! A [`TheorySpec`] fixes the closed-surface evaluations α_g as polynomials
//! over a parameter ring. The submodules cover Hankel windows, the
//! semi-universal theories α_{M,N}, reconstruction of rational generating
//! functions from prefixes, and the deformed rank-two Frobenius example.

mod frobenius;
mod hankel;
mod recurrence;
mod spec_text;

pub use frobenius::{frobenius_closed_form, frobenius_rank2_series, Rank2Series};
pub use hankel::{
    circle_state_space, dual_basis, gram_det_schur_check, hankel_recurrence_holds, hankel_window,
    semi_universal_alphas, semi_universal_ring, super_hankel_case_formula, super_hankel_det, CircleStateSpace,
};
pub use recurrence::{detect_rational, RecurrenceFit};

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational, Ring, TruncSeries};
use crate::symfun::{complete_all, elementary_all};

/// What an explicit coefficient list means past its last entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    ZeroExtended,
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryKind {
    /// α_0, α_1, … given directly.
    Sequence { alphas: Vec<MultiPoly>, tail: Tail },
    /// Z(T) = Σ c_i T^i.
    Polynomial { coeffs: Vec<MultiPoly> },
    /// Z(T) = ∏(1 + β_i T) / ∏(1 − γ_j T).
    RationalByRoots {
        beta: Vec<MultiPoly>,
        gamma: Vec<MultiPoly>,
    },
    /// Z(T) = P(T)/Q(T) with Q(0) = 1.
    RationalByCoeffs { p: Vec<MultiPoly>, q: Vec<MultiPoly> },
}

/// A generating function together with its parameter ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheorySpec {
    ring: Ring,
    kind: TheoryKind,
}

fn last_nonzero(v: &[MultiPoly]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

impl TheorySpec {
    pub fn new(ring: &Ring, kind: TheoryKind) -> Result<TheorySpec> {
        let all: Vec<&MultiPoly> = match &kind {
            TheoryKind::Sequence { alphas, .. } => alphas.iter().collect(),
            TheoryKind::Polynomial { coeffs } => coeffs.iter().collect(),
            TheoryKind::RationalByRoots { beta, gamma } => beta.iter().chain(gamma).collect(),
            TheoryKind::RationalByCoeffs { p, q } => {
                if q.first().is_none_or(|q0| !q0.is_one()) {
                    return Err(Error::Precondition("Q(0) must equal 1".into()));
                }
                p.iter().chain(q).collect()
            }
        };
        for c in all {
            c.same_ring(&ring.zero())?;
        }
        Ok(TheorySpec {
            ring: ring.clone(),
            kind,
        })
    }

    /// Z(T) = β.
    pub fn constant(ring: &Ring, beta: MultiPoly) -> Result<TheorySpec> {
        TheorySpec::new(ring, TheoryKind::Polynomial { coeffs: vec![beta] })
    }

    pub fn polynomial(ring: &Ring, coeffs: Vec<MultiPoly>) -> Result<TheorySpec> {
        TheorySpec::new(ring, TheoryKind::Polynomial { coeffs })
    }

    pub fn rational_by_roots(ring: &Ring, beta: Vec<MultiPoly>, gamma: Vec<MultiPoly>) -> Result<TheorySpec> {
        TheorySpec::new(ring, TheoryKind::RationalByRoots { beta, gamma })
    }

    pub fn rational_by_coeffs(ring: &Ring, p: Vec<MultiPoly>, q: Vec<MultiPoly>) -> Result<TheorySpec> {
        TheorySpec::new(ring, TheoryKind::RationalByCoeffs { p, q })
    }

    pub fn sequence(ring: &Ring, alphas: Vec<MultiPoly>, tail: Tail) -> Result<TheorySpec> {
        TheorySpec::new(ring, TheoryKind::Sequence { alphas, tail })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> &TheoryKind {
        &self.kind
    }

    /// Numerator and denominator of Z(T) when it is rational (Q(0) = 1 for
    /// the root and coefficient forms).
    pub fn numerator_denominator(&self) -> Option<(Vec<MultiPoly>, Vec<MultiPoly>)> {
        let r = &self.ring;
        match &self.kind {
            TheoryKind::Sequence {
                alphas,
                tail: Tail::ZeroExtended,
            } => Some((alphas.clone(), vec![r.one()])),
            TheoryKind::Sequence {
                tail: Tail::Undefined, ..
            } => None,
            TheoryKind::Polynomial { coeffs } => Some((coeffs.clone(), vec![r.one()])),
            TheoryKind::RationalByRoots { beta, gamma } => {
                let p = elementary_all(r, beta, beta.len());
                let q = elementary_all(r, gamma, gamma.len())
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| if i % 2 == 1 { -e } else { e })
                    .collect();
                Some((p, q))
            }
            TheoryKind::RationalByCoeffs { p, q } => Some((p.clone(), q.clone())),
        }
    }

    /// α_0 ..= α_upto.
    pub fn alpha_coeffs(&self, upto: usize) -> Result<Vec<MultiPoly>> {
        let r = &self.ring;
        match &self.kind {
            TheoryKind::Sequence { alphas, tail } => {
                if upto >= alphas.len() && *tail == Tail::Undefined {
                    return Err(Error::UndefinedBeyondPrefix(alphas.len()));
                }
                Ok((0..=upto)
                    .map(|g| alphas.get(g).cloned().unwrap_or_else(|| r.zero()))
                    .collect())
            }
            TheoryKind::Polynomial { coeffs } => Ok((0..=upto)
                .map(|g| coeffs.get(g).cloned().unwrap_or_else(|| r.zero()))
                .collect()),
            TheoryKind::RationalByRoots { beta, gamma } => {
                let e = elementary_all(r, beta, upto);
                let h = complete_all(r, gamma, upto);
                Ok((0..=upto)
                    .map(|k| {
                        let mut acc = r.zero();
                        for i in 0..=k.min(beta.len()) {
                            acc += &(&e[i] * &h[k - i]);
                        }
                        acc
                    })
                    .collect())
            }
            TheoryKind::RationalByCoeffs { p, q } => {
                let s = TruncSeries::rational(r, "T", upto, p, q)?;
                Ok(s.coeffs().to_vec())
            }
        }
    }

    /// Largest genus label needed per component of a spanning set: K − 1 where
    /// K = max(deg P + 1, deg Q). `None` when the tail is unknown.
    pub fn default_genus_cap(&self) -> Option<usize> {
        let (p, q) = self.numerator_denominator()?;
        let dp = last_nonzero(&p).unwrap_or(0);
        let dq = last_nonzero(&q).unwrap_or(0);
        Some((dp + 1).max(dq) - 1)
    }

    /// Substitutes rational values for named parameters. The ring is kept.
    pub fn specialize(&self, values: &[(String, Rational)]) -> Result<TheorySpec> {
        let mut idx = Vec::new();
        for (name, v) in values {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| Error::parse(name.clone(), "unknown parameter"))?;
            idx.push((i, v.clone()));
        }
        let f = |v: &Vec<MultiPoly>| -> Vec<MultiPoly> { v.iter().map(|c| c.specialize(&idx)).collect() };
        let kind = match &self.kind {
            TheoryKind::Sequence { alphas, tail } => TheoryKind::Sequence {
                alphas: f(alphas),
                tail: *tail,
            },
            TheoryKind::Polynomial { coeffs } => TheoryKind::Polynomial { coeffs: f(coeffs) },
            TheoryKind::RationalByRoots { beta, gamma } => TheoryKind::RationalByRoots {
                beta: f(beta),
                gamma: f(gamma),
            },
            TheoryKind::RationalByCoeffs { p, q } => TheoryKind::RationalByCoeffs { p: f(p), q: f(q) },
        };
        TheorySpec::new(&self.ring, kind)
    }

    /// Parses the text forms `const beta`, `poly 3,0,1`, `seq 1,2,3`,
    /// `rational beta=b1,b2 gamma=g1,g2` and `ratio p=beta q=1,-gamma`.
    pub fn parse(text: &str) -> Result<TheorySpec> {
        spec_text::parse_theory(text)
    }
}

impl fmt::Display for TheorySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[MultiPoly]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match &self.kind {
            TheoryKind::Sequence { alphas, tail } => {
                write!(f, "seq {}", join(alphas))?;
                if *tail == Tail::ZeroExtended {
                    write!(f, ",0,...")?;
                }
                Ok(())
            }
            TheoryKind::Polynomial { coeffs } if coeffs.len() == 1 => write!(f, "const {}", coeffs[0]),
            TheoryKind::Polynomial { coeffs } => write!(f, "poly {}", join(coeffs)),
            TheoryKind::RationalByRoots { beta, gamma } => {
                write!(f, "rational beta={} gamma={}", join(beta), join(gamma))
            }
            TheoryKind::RationalByCoeffs { p, q } => write!(f, "ratio p={} q={}", join(p), join(q)),
        }
    }
}
