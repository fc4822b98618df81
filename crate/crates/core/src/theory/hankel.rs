//! Hankel windows, Schur-determinant identities, the semi-universal theories
//! α_{M,N} and dual bases for polynomial generating functions.

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, PolyMatrix, Ring};
use crate::symfun::{complete_all, elementary_all, jacobi_trudi, Partition};

/// The N×N matrix (α_{2k+i+j}): the Gram matrix of x^k, …, x^{k+N−1}.
pub fn hankel_window(ring: &Ring, alphas: &[MultiPoly], start: usize, size: usize) -> Result<PolyMatrix> {
    if size == 0 {
        return Ok(PolyMatrix::zeros(ring, 0, 0));
    }
    let needed = 2 * (start + size - 1);
    if needed >= alphas.len() {
        return Err(Error::InsufficientPrefix {
            needed,
            available: alphas.len(),
        });
    }
    Ok(PolyMatrix::from_fn(ring, size, size, |i, j| {
        alphas[2 * start + i + j].clone()
    }))
}

/// Checks det H_{[k,k+N−1]} = (−1)^{N(N−1)/2} s_λ(h) with λ = ((N+2k−1)^N),
/// treating h_1, h_2, … as free commuting variables and h_0 = 1.
pub fn gram_det_schur_check(k: usize, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let top = 2 * (k + n - 1);
    let ring = Ring::new(Ring::indexed("h", top));
    let h = |i: i64| -> MultiPoly {
        match i {
            i if i < 0 => ring.zero(),
            0 => ring.one(),
            i if i as usize <= top => ring.gen(i as usize - 1),
            _ => ring.zero(),
        }
    };
    let alphas: Vec<MultiPoly> = (0..=top as i64).map(h).collect();
    let det = match hankel_window(&ring, &alphas, k, n).and_then(|m| m.det_fraction_free()) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let lambda = Partition::rectangle(n, n + 2 * k - 1);
    let schur = jacobi_trudi(&ring, &lambda, h);
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -schur } else { schur };
    det == signed
}

/// Ring `x, gamma1..gammaM, beta1..betaN` used for the semi-universal theories.
pub fn semi_universal_ring(m: usize, n: usize) -> Ring {
    let mut names = vec!["x".to_string()];
    names.extend(Ring::indexed("gamma", m));
    names.extend(Ring::indexed("beta", n));
    Ring::new(names)
}

fn split_gens(ring: &Ring, m: usize, n: usize) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let g = ring.gens();
    (g[1..=m].to_vec(), g[m + 1..m + 1 + n].to_vec())
}

/// α_k = Σ_i e_i(β) h_{k−i}(γ) for k ≤ upto, i.e. h_k(γ/β).
pub fn semi_universal_alphas(ring: &Ring, m: usize, n: usize, upto: usize) -> Vec<MultiPoly> {
    let (gamma, beta) = split_gens(ring, m, n);
    let e = elementary_all(ring, &beta, upto);
    let h = complete_all(ring, &gamma, upto);
    (0..=upto)
        .map(|k| {
            let mut acc = ring.zero();
            for i in 0..=k.min(n) {
                acc += &(&e[i] * &h[k - i]);
            }
            acc
        })
        .collect()
}

/// Σ_{i=0}^{M} (−1)^i ē_i α_{n−i} = 0 for every n in `from..=to`.
pub fn hankel_recurrence_holds(m: usize, n: usize, from: usize, to: usize) -> bool {
    let ring = semi_universal_ring(m, n);
    let (gamma, _) = split_gens(&ring, m, n);
    let alphas = semi_universal_alphas(&ring, m, n, to);
    let ebar = elementary_all(&ring, &gamma, m);
    (from..=to).all(|k| {
        if k < m {
            return false;
        }
        let mut acc = ring.zero();
        for (i, e) in ebar.iter().enumerate() {
            let t = e * &alphas[k - i];
            if i % 2 == 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        acc.is_zero()
    })
}

/// The circle state space of α_{M,N}: free on 1, x, …, x^{K−1} with
/// K = max(N+1, M), subject to the relation r_{M,N}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleStateSpace {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// r_{M,N} = (x^M − ē_1 x^{M−1} + … + (−1)^M ē_M)·x^{K−M}, in [`semi_universal_ring`].
    pub relation: MultiPoly,
    pub basis_degrees: Vec<usize>,
    /// Whether the Hankel column recurrence was confirmed for n ∈ [K, K+4].
    pub recurrence_verified: bool,
}

pub fn circle_state_space(m: usize, n: usize) -> Result<CircleStateSpace> {
    if m == 0 && n == 0 {
        return Err(Error::Precondition("M and N cannot both be zero".into()));
    }
    let k = (n + 1).max(m);
    let ring = semi_universal_ring(m, n);
    let (gamma, _) = split_gens(&ring, m, n);
    let x = ring.gen(0);
    let ebar = elementary_all(&ring, &gamma, m);
    let mut factor = ring.zero();
    for (i, e) in ebar.iter().enumerate() {
        let t = e * &x.pow((m - i) as u32);
        if i % 2 == 0 {
            factor += &t;
        } else {
            factor -= &t;
        }
    }
    let relation = &factor * &x.pow((k - m) as u32);
    let recurrence_verified = hankel_recurrence_holds(m, n, k, k + 4);
    Ok(CircleStateSpace {
        m,
        n,
        k,
        relation,
        basis_degrees: (0..k).collect(),
        recurrence_verified,
    })
}

/// (−1)^{K(K−1)/2} det (h_{i+j}(γ/β))_{i,j<K}, which equals s_{((K−1)^K)}(γ/β).
pub fn super_hankel_det(k: usize, m: usize, n: usize) -> Result<MultiPoly> {
    if k != (n + 1).max(m) {
        return Err(Error::Precondition(format!(
            "K must equal max(N+1, M) = {}",
            (n + 1).max(m)
        )));
    }
    let ring = semi_universal_ring(m, n);
    let alphas = semi_universal_alphas(&ring, m, n, 2 * k);
    let det = hankel_window(&ring, &alphas, 0, k)?.det_fraction_free()?;
    Ok(if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
        -det
    } else {
        det
    })
}

/// (γ_1⋯γ_M)^{M−N−1}·∏(β_i+γ_j) when N < M, else (β_1⋯β_N)^{N+1−M}·∏(β_i+γ_j).
pub fn super_hankel_case_formula(m: usize, n: usize) -> MultiPoly {
    let ring = semi_universal_ring(m, n);
    let (gamma, beta) = split_gens(&ring, m, n);
    let mut acc = ring.one();
    for b in &beta {
        for g in &gamma {
            acc = &acc * &(b + g);
        }
    }
    let (vars, e) = if n < m { (&gamma, m - n - 1) } else { (&beta, n + 1 - m) };
    for v in vars {
        acc = &acc * &v.pow(e as u32);
    }
    acc
}

/// Dual basis to 1, x, …, x^N for the trace α_i = ε(x^i) of the monic
/// generating function Z(T) = T^N + Σ_{i<N} α_i T^i. Entry `i` holds the
/// coefficient vector (in 1, x, …, x^N) of the dual of x^i.
pub fn dual_basis(ring: &Ring, lower: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    let n = lower.len();
    let alpha = |i: usize| -> MultiPoly {
        match i.cmp(&n) {
            std::cmp::Ordering::Less => lower[i].clone(),
            std::cmp::Ordering::Equal => ring.one(),
            std::cmp::Ordering::Greater => ring.zero(),
        }
    };
    let u = |i: usize, j: usize| -> MultiPoly {
        if i == j {
            ring.one()
        } else if i < j {
            alpha(n + i - j)
        } else {
            ring.zero()
        }
    };
    let mut inv = vec![vec![ring.zero(); n + 1]; n + 1];
    for j in 0..=n {
        inv[j][j] = ring.one();
        for i in (0..j).rev() {
            let mut acc = ring.zero();
            for l in i + 1..=j {
                acc += &(&u(i, l) * &inv[l][j]);
            }
            inv[i][j] = -acc;
        }
    }
    (0..=n).map(|i| inv[n - i].clone()).collect()
}
