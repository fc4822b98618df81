//! Recognizing rational generating functions from coefficient prefixes.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A linear recurrence fitted to a prefix, with the matching P/Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceFit {
    /// N = deg Q.
    pub order: usize,
    /// α_{m+N} = Σ_{i<N} taps[i]·α_{m+i} for m ≥ valid_from.
    pub taps: Vec<Rational>,
    pub valid_from: usize,
    /// Linear complexity of the prefix: max(deg P + 1, deg Q).
    pub linear_complexity: usize,
    /// Coefficients of P, lowest degree first, without trailing zeros.
    pub p: Vec<Rational>,
    /// Coefficients of Q with Q(0) = 1.
    pub q: Vec<Rational>,
}

impl RecurrenceFit {
    /// Coefficients of P/Q up to T^upto.
    pub fn expand(&self, upto: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut v = self.p.get(n).cloned().unwrap_or_else(Rational::zero);
            for (j, qj) in self.q.iter().enumerate().skip(1) {
                if j <= n {
                    v -= qj * &out[n - j];
                }
            }
            out.push(v);
        }
        out
    }
}

/// Minimal connection polynomial (C with C(0) = 1) and linear complexity L.
fn berlekamp_massey(s: &[Rational]) -> (Vec<Rational>, usize) {
    let mut c = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = Rational::one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &bd;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    (c, l)
}

/// Fits the shortest linear recurrence to `prefix` and returns P/Q when the
/// prefix carries enough evidence: the linear complexity L must satisfy
/// L ≤ ⌊len/2⌋ − 1, which leaves at least 2N + 2 samples past the start of
/// the recurrence. Returns `None` otherwise.
pub fn detect_rational(prefix: &[Rational]) -> Result<Option<RecurrenceFit>> {
    let len = prefix.len();
    if len < 4 {
        return Err(Error::PrefixTooShort(len));
    }
    let (c, l) = berlekamp_massey(prefix);
    if l + 1 > len / 2 {
        return Ok(None);
    }
    let order = c.len() - 1;
    let mut p: Vec<Rational> = (0..l)
        .map(|n| {
            let mut v = Rational::zero();
            for (j, cj) in c.iter().enumerate() {
                if j <= n {
                    v += cj * &prefix[n - j];
                }
            }
            v
        })
        .collect();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let taps = (0..order).map(|i| -c[order - i].clone()).collect();
    let fit = RecurrenceFit {
        order,
        taps,
        valid_from: l - order,
        linear_complexity: l,
        p,
        q: c,
    };
    if fit.expand(len - 1) != prefix {
        return Err(Error::Internal(
            "reconstructed P/Q does not reproduce the prefix".into(),
        ));
    }
    Ok(Some(fit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn geometric_sequence() {
        let fit = detect_rational(&ints(&[2, 6, 18, 54, 162, 486])).unwrap().unwrap();
        assert_eq!(fit.q, ints(&[1, -3]));
        assert_eq!(fit.p, ints(&[2]));
        assert_eq!(fit.order, 1);
        assert_eq!(fit.taps, ints(&[3]));
        assert_eq!(fit.valid_from, 0);
    }

    #[test]
    fn delta_sequence() {
        let fit = detect_rational(&ints(&[1, 0, 0, 0, 0, 0, 0, 0])).unwrap().unwrap();
        assert_eq!(fit.q, ints(&[1]));
        assert_eq!(fit.p, ints(&[1]));
        assert_eq!(fit.order, 0);
        assert_eq!(fit.valid_from, 1);
    }

    #[test]
    fn catalan_prefix_is_rejected() {
        let cat = ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
        assert_eq!(detect_rational(&cat).unwrap(), None);
    }

    #[test]
    fn short_prefix_is_an_error() {
        assert_eq!(detect_rational(&ints(&[1, 2, 3])), Err(Error::PrefixTooShort(3)));
    }

    #[test]
    fn fibonacci_with_a_preamble() {
        let s = ints(&[7, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let fit = detect_rational(&s).unwrap().unwrap();
        assert_eq!(fit.order, 2);
        assert_eq!(fit.taps, ints(&[1, 1]));
        assert_eq!(fit.valid_from, 1);
        assert_eq!(fit.expand(12)[12], int(144));
    }

    #[test]
    fn zero_sequence() {
        let fit = detect_rational(&ints(&[0, 0, 0, 0])).unwrap().unwrap();
        assert!(fit.p.is_empty());
        assert_eq!(fit.q, ints(&[1]));
    }
}
