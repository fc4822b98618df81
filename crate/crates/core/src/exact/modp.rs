//! Arithmetic modulo the Mersenne prime 2^61 - 1.
//!
//! Used for fast rank estimates: the rank of a specialization is a lower
//! bound for the generic rank, and equals it for all but a thin set of points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use super::Rational;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn neg(a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        P - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let w = (a as u128) * (b as u128);
    let lo = (w as u64) & P;
    let hi = (w >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse; `a` must be nonzero.
pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

pub fn from_int(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced value fits")
}

pub fn from_i64(n: i64) -> u64 {
    n.rem_euclid(P as i64) as u64
}

/// Image of a rational, or `None` when p divides the denominator.
pub fn from_rational(r: &Rational) -> Option<u64> {
    let d = from_int(r.denom());
    if d == 0 {
        return None;
    }
    Some(mul(from_int(r.numer()), inv(d)))
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(1..P)).collect()
}

/// Rank of a dense matrix mod p, with pivot columns chosen greedily in
/// ascending column order. The matrix is consumed as scratch space.
pub fn rank_with_pivots(mut m: Vec<Vec<u64>>) -> (usize, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pinv = inv(m[r][c]);
        for j in c..cols {
            m[r][j] = mul(m[r][j], pinv);
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f != 0 {
                for j in c..cols {
                    row[j] = sub(row[j], mul(f, pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}
