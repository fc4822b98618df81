//! Acceptance criteria. Each criterion prints one PASS/FAIL line; all
//! comparisons are exact equalities and runtime budgets are fixed below.

use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unicon::cobord::{free_theory_independent, gram_matrix, spanning_set, state_space_report, ReportOptions};
use unicon::day::{day_verify, random_instance};
use unicon::exact::{int, rat};
use unicon::foam::{overlap_theta_eval, resultant_of_roots, sphere_overlap_eval, xy_ring, OverlapThetaFoam, SignMode};
use unicon::symfun::{sergeev_pragacz, super_schur_jt, super_schur_product_form};
use unicon::theory::{
    circle_state_space, detect_rational, dual_basis, frobenius_closed_form, frobenius_rank2_series, hankel_window,
    super_hankel_case_formula, super_hankel_det,
};
use unicon::{Cobordism, DayFoamInstance, Error, MultiPoly, Partition, PolyMatrix, Rational, Ring, TheorySpec};

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ok<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn theory(text: &str) -> TheorySpec {
    TheorySpec::parse(text).expect("theory text")
}

fn poly(ring: &Ring, text: &str) -> MultiPoly {
    ring.parse(text).expect("polynomial text")
}

/// Indices of the spanning elements with the given labels, in that order.
fn indices(elems: &[Cobordism], labels: &[&str]) -> Result<Vec<usize>, String> {
    labels
        .iter()
        .map(|l| {
            elems
                .iter()
                .position(|e| e.label() == *l)
                .ok_or_else(|| format!("no spanning element {l}"))
        })
        .collect()
}

fn matrix_of(ring: &Ring, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        ring,
        rows.iter().map(|r| r.iter().map(|e| poly(ring, e)).collect()).collect(),
    )
    .expect("matrix")
}

/// Whether `rel` is a multiple of the combination `expected` of labelled elements.
fn relation_proportional(rel: &[(MultiPoly, Cobordism)], expected: &[(MultiPoly, &str)]) -> bool {
    if rel.len() != expected.len() {
        return false;
    }
    let find = |label: &str| rel.iter().find(|(_, e)| e.label() == label).map(|(c, _)| c.clone());
    let Some(first) = find(expected[0].1) else {
        return false;
    };
    expected
        .iter()
        .all(|(c, label)| find(label).is_some_and(|r| &r * &expected[0].0 == c * &first))
}

fn constant_theory() -> Check {
    let t = theory("const beta");
    let r = t.ring().clone();
    let d2 = ok(ok(gram_matrix(2, &t, None))?.det_fraction_free())?;
    ensure(d2 == poly(&r, "-beta^2"), || format!("det G2 = {d2}"))?;
    let d3 = ok(ok(gram_matrix(3, &t, None))?.det_fraction_free())?;
    ensure(d3 == poly(&r, "-2*beta^5"), || format!("det G3 = {d3}"))?;

    let elems = ok(spanning_set(4, &t, None))?;
    let g = ok(gram_matrix(4, &t, None))?;
    let rows = indices(
        &elems,
        &["y12*y34", "y13*y24", "y14*y23", "y123", "y124", "y134", "y234", "y1234"],
    )?;
    let cols = indices(&elems, &["1", "y12", "y13", "y14", "y23", "y24", "y34"])?;
    let b = "beta^2";
    let g4 = matrix_of(
        &r,
        &[
            &[b, "0", "beta", "beta", "beta", "beta", "0"],
            &[b, "beta", "0", "beta", "beta", "0", "beta"],
            &[b, "beta", "beta", "0", "0", "beta", "beta"],
            &[b, "0", "0", "beta", "0", "beta", "beta"],
            &[b, "0", "beta", "0", "beta", "0", "beta"],
            &[b, "beta", "0", "0", "beta", "beta", "0"],
            &[b, "beta", "beta", "beta", "0", "0", "0"],
            &["beta", "0", "0", "0", "0", "0", "0"],
        ],
    );
    ensure(g.submatrix(&rows, &cols) == g4, || {
        "8x7 block differs from the displayed matrix".into()
    })?;
    let mut seven = rows.clone();
    seven.remove(6);
    let d7 = ok(g.submatrix(&seven, &cols).det_fraction_free())?;
    ensure(d7 == poly(&r, "8*beta^7"), || format!("7x7 determinant = {d7}"))?;
    let y234 = indices(&elems, &["y234"])?[0];
    let keep: Vec<usize> = (0..elems.len()).filter(|&i| i != y234).collect();
    let d14 = ok(g.submatrix(&keep, &keep).det_fraction_free())?;
    ensure(d14 == poly(&r, "-64*beta^14"), || format!("14x14 determinant = {d14}"))?;

    let rep = ok(state_space_report(4, &t, &ReportOptions::default()))?;
    ensure(rep.rank == 14 && rep.kernel_relations.len() == 1, || {
        format!("rank {}", rep.rank)
    })?;
    let one = r.one();
    let m1 = -&one;
    let expected = [
        (one.clone(), "y12*y34"),
        (one.clone(), "y13*y24"),
        (one.clone(), "y14*y23"),
        (m1.clone(), "y123"),
        (m1.clone(), "y124"),
        (m1.clone(), "y134"),
        (m1, "y234"),
        (poly(&r, "beta"), "y1234"),
    ];
    ensure(relation_proportional(&rep.kernel_relations[0], &expected), || {
        "kernel is not the eight-term relation".into()
    })
}

fn graded_ranks() -> Check {
    let t = theory("const beta");
    let table = [
        (0, 1, "1"),
        (1, 1, "1"),
        (2, 2, "1+q^2"),
        (3, 5, "1+3q^2+q^4"),
        (4, 14, "1+6q^2+6q^4+q^6"),
        (5, 42, "1+10q^2+20q^4+10q^6+q^8"),
        (6, 132, "1+15q^2+50q^4+50q^6+15q^8+q^10"),
    ];
    for (k, rank, graded) in table {
        let rep = ok(state_space_report(k, &t, &ReportOptions::default()))?;
        ensure(rep.certified, || format!("k={k}: rank not certified"))?;
        ensure(rep.rank == rank && rep.graded_rank_string() == graded, || {
            format!("k={k}: rank {} graded {}", rep.rank, rep.graded_rank_string())
        })?;
    }
    Ok(())
}

fn linear_theory() -> Check {
    let t = theory("poly b0,b1");
    let r = t.ring().clone();
    let elems = ok(spanning_set(2, &t, Some(1)))?;
    let g = ok(gram_matrix(2, &t, Some(1)))?;
    let order = indices(&elems, &["1", "x1", "x2", "x1*x2", "y12", "x1*y12"])?;
    let expected = matrix_of(
        &r,
        &[
            &["b0^2", "b0*b1", "b0*b1", "b1^2", "b0", "b1"],
            &["b0*b1", "0", "b1^2", "0", "b1", "0"],
            &["b0*b1", "b1^2", "0", "0", "b1", "0"],
            &["b1^2", "0", "0", "0", "0", "0"],
            &["b0", "b1", "b1", "0", "b1", "0"],
            &["b1", "0", "0", "0", "0", "0"],
        ],
    );
    ensure(g.submatrix(&order, &order) == expected, || {
        format!("Gram matrix differs: {g:?}")
    })?;
    let opts = ReportOptions {
        genus_cap: Some(1),
        ..Default::default()
    };
    let rep = ok(state_space_report(2, &t, &opts))?;
    let rel = [(r.one(), "x1*x2"), (-poly(&r, "b1"), "x1*y12")];
    ensure(
        rep.kernel_relations.iter().any(|k| relation_proportional(k, &rel)),
        || "x1x2 - b1*x1y missing".into(),
    )?;
    let mut five = order.clone();
    five.remove(3);
    let d5 = ok(g.submatrix(&five, &five).det_fraction_free())?;
    ensure(d5 == poly(&r, "b1^6*(b1-2)"), || format!("5x5 determinant = {d5}"))?;
    let special = ok(t.specialize(&[("b1".into(), int(2))]))?;
    let rep2 = ok(state_space_report(
        2,
        &special,
        &ReportOptions {
            special_values: true,
            ..opts
        },
    ))?;
    ensure(rep2.rank == 4 && rep2.generic_basis_not_guaranteed, || {
        format!("rank at b1=2 is {}", rep2.rank)
    })
}

fn geometric_theory() -> Check {
    let t = theory("ratio p=beta q=1,-gamma");
    let r = t.ring().clone();
    let d2 = ok(ok(gram_matrix(2, &t, None))?.det_fraction_free())?;
    ensure(d2 == poly(&r, "beta^2*(beta*gamma-1)"), || format!("det G2 = {d2}"))?;
    let d3 = ok(ok(gram_matrix(3, &t, None))?.det_fraction_free())?;
    ensure(d3 == poly(&r, "beta^5*(beta*gamma-1)^4*(beta*gamma-2)"), || {
        format!("det G3 = {d3}")
    })?;
    for (beta, gamma) in [(int(1), int(1)), (int(3), rat(1, 3)), (rat(-2, 5), rat(-5, 2))] {
        let s = ok(t.specialize(&[("beta".into(), beta.clone()), ("gamma".into(), gamma.clone())]))?;
        for k in 1..=3 {
            let rep = ok(state_space_report(
                k,
                &s,
                &ReportOptions {
                    special_values: true,
                    ..Default::default()
                },
            ))?;
            ensure(rep.rank == 1, || {
                format!("beta={beta}, gamma={gamma}, k={k}: rank {}", rep.rank)
            })?;
        }
    }
    for (beta, gamma) in [(int(1), int(2)), (int(4), rat(1, 2))] {
        let s = ok(t.specialize(&[("beta".into(), beta.clone()), ("gamma".into(), gamma.clone())]))?;
        let rep = ok(state_space_report(
            3,
            &s,
            &ReportOptions {
                special_values: true,
                ..Default::default()
            },
        ))?;
        ensure(rep.rank == 4, || {
            format!("beta={beta}, gamma={gamma}: rank {}", rep.rank)
        })?;
        let c = |q: Rational| r.constant(q);
        let rel = [
            (c(&gamma * &gamma), "1"),
            (c(-gamma.clone()), "y12"),
            (c(-gamma.clone()), "y13"),
            (c(-gamma.clone()), "y23"),
            (c(int(2)), "y123"),
        ];
        ensure(
            rep.kernel_relations.len() == 1 && relation_proportional(&rep.kernel_relations[0], &rel),
            || "relation at beta*gamma = 2 differs".into(),
        )?;
    }
    Ok(())
}

fn semi_universal() -> Check {
    for m in 0..=3 {
        for n in 0..=3 {
            if m == 0 && n == 0 {
                continue;
            }
            let cs = ok(circle_state_space(m, n))?;
            ensure(cs.k == (n + 1).max(m) && cs.recurrence_verified, || {
                format!("M={m}, N={n}: K={}", cs.k)
            })?;
            let det = ok(super_hankel_det(cs.k, m, n))?;
            ensure(det == super_hankel_case_formula(m, n), || {
                format!("M={m}, N={n}: determinant {det}")
            })?;
        }
    }
    Ok(())
}

fn monic_polynomial_theory() -> Check {
    for n in 1..=4usize {
        let ring = Ring::new(Ring::indexed("a", n));
        let mut coeffs = ring.gens();
        coeffs.push(ring.one());
        let t = ok(TheorySpec::polynomial(&ring, coeffs))?;
        let alphas = ok(t.alpha_coeffs(2 * n + 2))?;
        let det = ok(ok(hankel_window(&ring, &alphas, 0, n + 1))?.det_fraction_free())?;
        let sign = if (n * (n + 1) / 2) % 2 == 1 {
            -ring.one()
        } else {
            ring.one()
        };
        ensure(det == sign, || format!("N={n}: det H = {det}"))?;
        ensure((0..=n).all(|j| alphas[n + 1 + j].is_zero()), || {
            format!("N={n}: x^(N+1) pairs nontrivially")
        })?;
        let lower = alphas[..n].to_vec();
        let dual = dual_basis(&ring, &lower);
        for (i, d) in dual.iter().enumerate() {
            for j in 0..=n {
                let mut pairing = ring.zero();
                for (l, c) in d.iter().enumerate() {
                    pairing += &(c * &alphas[j + l]);
                }
                let want = if i == j { ring.one() } else { ring.zero() };
                ensure(pairing == want, || {
                    format!("N={n}: dual of x^{i} pairs with x^{j} to {pairing}")
                })?;
            }
        }
        let listed: Vec<Vec<&str>> = match n {
            1 => vec![vec!["0", "1"], vec!["1", "-a1"]],
            2 => vec![vec!["0", "0", "1"], vec!["0", "1", "-a2"], vec!["1", "-a2", "a2^2-a1"]],
            _ => continue,
        };
        let listed: Vec<Vec<MultiPoly>> = listed
            .iter()
            .map(|v| v.iter().map(|e| poly(&ring, e)).collect())
            .collect();
        ensure(dual == listed, || format!("N={n}: dual basis {dual:?}"))?;
    }
    Ok(())
}

fn hook_sweep(
    m: usize,
    n: usize,
    check: &mut dyn FnMut(&Partition, &Ring, &[MultiPoly], &[MultiPoly]) -> Check,
) -> Check {
    let ring = xy_ring(m, n);
    let gens = ring.gens();
    for lambda in Partition::all_up_to(8) {
        check(&lambda, &ring, &gens[..m], &gens[m..])?;
    }
    Ok(())
}

fn sergeev_pragacz_sweep() -> Check {
    for m in 1..=3 {
        for n in 1..=3 {
            hook_sweep(m, n, &mut |lambda, ring, xs, ys| {
                let jt = super_schur_jt(ring, lambda, xs, ys);
                if !lambda.fits_hook(m, n) {
                    ensure(jt.is_zero(), || {
                        format!("{lambda} outside the ({m},{n}) hook is nonzero")
                    })?;
                    return ensure(
                        matches!(sergeev_pragacz(ring, lambda, xs, ys), Err(Error::HookViolation { .. })),
                        || format!("{lambda} outside the hook accepted"),
                    );
                }
                let sp = ok(sergeev_pragacz(ring, lambda, xs, ys))?;
                ensure(sp == jt, || format!("{lambda}, M={m}, N={n}: formulas differ"))?;
                if lambda.contains_rectangle(m, n) {
                    let pf = ok(super_schur_product_form(ring, lambda, xs, ys))?;
                    ensure(pf == jt, || format!("{lambda}, M={m}, N={n}: product form differs"))?;
                }
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn distinct_integers(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut pool: Vec<i64> = (1..=1000).collect();
    pool.shuffle(rng);
    pool[..count]
        .iter()
        .map(|&v| int(if rng.gen_bool(0.5) { v } else { -v }))
        .collect()
}

fn overlap_foam_sweep() -> Check {
    for m in 1..=3 {
        for n in 1..=3 {
            hook_sweep(m, n, &mut |lambda, ring, xs, ys| {
                if !lambda.fits_hook(m, n) {
                    return Ok(());
                }
                let foam = ok(OverlapThetaFoam::new(m, n, lambda.clone()))?;
                let value = ok(overlap_theta_eval(&foam))?;
                ensure(value == super_schur_jt(ring, lambda, xs, ys), || {
                    format!("{lambda}, M={m}, N={n}")
                })
            })?;
        }
    }
    let lambda: Partition = ok("9,7,3,2,2,2,1".parse())?;
    let hook = ok(lambda.hook_decompose(4, 6))?;
    let parts = |p: &Partition| p.parts().to_vec();
    ensure(
        parts(&hook.kappa) == [6, 6, 3, 2] && parts(&hook.tau) == [3, 1] && parts(&hook.eta) == [2, 2, 1],
        || format!("hook decomposition {:?} {:?} {:?}", hook.kappa, hook.tau, hook.eta),
    )?;
    let foam = ok(OverlapThetaFoam::new(4, 6, lambda.clone()))?;
    let ring = Ring::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..3 {
        let values = distinct_integers(&mut rng, 10);
        let (xv, yv) = values.split_at(4);
        let foam_value = ok(foam.evaluate_at(xv, yv))?;
        let c = |v: &[Rational]| v.iter().map(|x| ring.constant(x.clone())).collect::<Vec<_>>();
        let (xs, ys) = (c(xv), c(yv));
        let jt = super_schur_jt(&ring, &lambda, &xs, &ys)
            .constant_value()
            .unwrap_or_else(Rational::zero);
        let sp = ok(sergeev_pragacz(&ring, &lambda, &xs, &ys))?
            .constant_value()
            .unwrap_or_else(Rational::zero);
        ensure(foam_value == jt && sp == jt, || {
            format!("large instance at {values:?}: foam {foam_value}, JT {jt}, SP {sp}")
        })?;
    }
    Ok(())
}

fn resultant() -> Check {
    for m in 1..=4 {
        for n in 1..=4 {
            let sphere = ok(sphere_overlap_eval(m, n, SignMode::Minus))?;
            let res = ok(resultant_of_roots(m, n))?;
            ensure(sphere == res, || {
                format!("M={m}, N={n}: evaluation differs from the resultant")
            })?;
        }
    }
    Ok(())
}

fn day_formula() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut shapes = std::collections::BTreeSet::new();
    for _ in 0..40 {
        let inst = ok(random_instance(&mut rng, 3, 6))?;
        shapes.insert((inst.k(), inst.h(), inst.m()));
        let v = ok(day_verify(&inst))?;
        ensure(v.equal, || {
            format!("{inst:?}: {} vs {}", v.formula_value, v.brute_force_value)
        })?;
    }
    ensure(shapes.len() >= 8, || {
        format!("only {} distinct (k, h, m) shapes sampled", shapes.len())
    })?;
    for n in 0..=8 {
        for r in [int(2), rat(-3, 4), rat(5, 3)] {
            let inst = ok(DayFoamInstance::new(1, n, vec![r.clone()], vec![], vec![]))?;
            let v = ok(day_verify(&inst))?;
            let want = num_traits::pow(-r.clone(), n + 1);
            ensure(v.equal && v.formula_value == want, || {
                format!("triangular r={r}, n={n}")
            })?;
        }
    }
    Ok(())
}

fn rational_detection() -> Check {
    let pool: Vec<Rational> = [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (2, 3), (3, 2), (5, 4)]
        .iter()
        .flat_map(|&(a, b)| [rat(a, b), rat(-a, b)])
        .collect();
    let ring = Ring::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..50 {
        let (m, n) = (rng.gen_range(0..=4usize), rng.gen_range(0..=4usize));
        let pick = |rng: &mut ChaCha8Rng, c: usize| -> Vec<MultiPoly> {
            (0..c)
                .map(|_| ring.constant(pool.choose(rng).expect("pool").clone()))
                .collect()
        };
        let (beta, gamma) = (pick(&mut rng, n), pick(&mut rng, m));
        let t = ok(TheorySpec::rational_by_roots(&ring, beta, gamma))?;
        let k = (n + 1).max(m);
        let series: Vec<Rational> = ok(t.alpha_coeffs(2 * k + 8))?
            .iter()
            .map(|a| a.constant_value().unwrap_or_else(Rational::zero))
            .collect();
        let fit = ok(detect_rational(&series[..2 * k + 2]))?.ok_or_else(|| format!("trial {trial}: rejected"))?;
        ensure(fit.expand(2 * k + 8) == series, || {
            format!("trial {trial}: expansion differs")
        })?;
        let (p, q) = t.numerator_denominator().ok_or("no numerator")?;
        let to_r = |v: &[MultiPoly]| {
            v.iter()
                .map(|c| c.constant_value().unwrap_or_else(Rational::zero))
                .collect::<Vec<_>>()
        };
        let cross = |a: &[Rational], b: &[Rational]| {
            let mut out = vec![Rational::zero(); a.len() + b.len()];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        ensure(cross(&fit.p, &to_r(&q)) == cross(&to_r(&p), &fit.q), || {
            format!("trial {trial}: P/Q differs")
        })?;
    }
    let catalan: Vec<Rational> = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
        .iter()
        .map(|&c| int(c))
        .collect();
    ensure(ok(detect_rational(&catalan))?.is_none(), || {
        "Catalan prefix accepted".into()
    })
}

fn frobenius() -> Check {
    let ring = Ring::new(["u1", "u2", "rho0", "rho1"]);
    let g = ring.gens();
    let s = frobenius_rank2_series(&g[0], &g[1], &g[2], &g[3], 10);
    let (p, q) = frobenius_closed_form(&g[0], &g[1], &g[2], &g[3]);
    ensure(s.matches(&p, &q), || "series differs from the closed form".into())?;
    let sp = frobenius_rank2_series(&g[0], &g[1], &ring.zero(), &ring.one(), 10);
    let series = ok(sp.to_series("T"))?;
    let d = poly(&ring, "(u1-u2)^2");
    let target = ok(unicon::TruncSeries::rational(
        &ring,
        "T",
        10,
        &[ring.zero(), ring.int(2)],
        &[ring.one(), ring.zero(), -d],
    ))?;
    ensure(series == target, || {
        format!("specialization {series} differs from 2T/(1-DT^2)")
    })
}

fn free_theory() -> Check {
    for (k, cap) in [(1, 2), (2, 1), (2, 2), (3, 1)] {
        ensure(ok(free_theory_independent(k, cap))?, || {
            format!("k={k}, cap {cap}: Gram matrix is singular")
        })?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "constant theory Gram data for k <= 4",
        budget: Duration::from_secs(5),
        run: constant_theory,
    },
    Criterion {
        id: 2,
        name: "graded ranks for k <= 6",
        budget: Duration::from_secs(600),
        run: graded_ranks,
    },
    Criterion {
        id: 3,
        name: "linear theory Gram matrix and kernel",
        budget: Duration::from_secs(60),
        run: linear_theory,
    },
    Criterion {
        id: 4,
        name: "theory beta/(1-gamma T)",
        budget: Duration::from_secs(60),
        run: geometric_theory,
    },
    Criterion {
        id: 5,
        name: "semi-universal theories, M, N <= 3",
        budget: Duration::from_secs(120),
        run: semi_universal,
    },
    Criterion {
        id: 6,
        name: "monic polynomial theories, N <= 4",
        budget: Duration::from_secs(60),
        run: monic_polynomial_theory,
    },
    Criterion {
        id: 7,
        name: "Sergeev-Pragacz equals Jacobi-Trudi",
        budget: Duration::from_secs(60),
        run: sergeev_pragacz_sweep,
    },
    Criterion {
        id: 8,
        name: "overlapping theta-foams",
        budget: Duration::from_secs(120),
        run: overlap_foam_sweep,
    },
    Criterion {
        id: 9,
        name: "sphere overlap equals resultant, M, N <= 4",
        budget: Duration::from_secs(60),
        run: resultant,
    },
    Criterion {
        id: 10,
        name: "Day formula against Toeplitz determinants",
        budget: Duration::from_secs(30),
        run: day_formula,
    },
    Criterion {
        id: 11,
        name: "rational detection roundtrip",
        budget: Duration::from_secs(60),
        run: rational_detection,
    },
    Criterion {
        id: 12,
        name: "rank-two Frobenius generating function",
        budget: Duration::from_secs(60),
        run: frobenius,
    },
    Criterion {
        id: 13,
        name: "free theory independence",
        budget: Duration::from_secs(120),
        run: free_theory,
    },
];

/// Writes past the test harness's output capture so every run shows the table.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    report(String::new());
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= c.budget, || {
                format!("took {elapsed:?}, budget {:?}", c.budget)
            })
        });
        match &outcome {
            Ok(()) => report(format!("[PASS] {:>2} {} ({:.2}s)", c.id, c.name, elapsed.as_secs_f64())),
            Err(e) => {
                report(format!(
                    "[FAIL] {:>2} {} ({:.2}s): {e}",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                ));
                failures.push(c.id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

#[test]
#[ignore = "long-running: A(7) has 877 spanning elements"]
fn graded_rank_k7() {
    let rep = state_space_report(7, &theory("const beta"), &ReportOptions::default()).expect("report");
    report(format!(
        "[{}] 2b graded rank for k = 7: {}",
        if rep.rank == 429 { "PASS" } else { "FAIL" },
        rep.graded_rank_string()
    ));
    assert!(rep.certified);
    assert_eq!(rep.rank, 429);
    assert_eq!(rep.graded_rank_string(), "1+21q^2+105q^4+175q^6+105q^8+21q^10+q^12");
}
