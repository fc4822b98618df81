use proptest::prelude::*;
use unicon::cobord::{gram_matrix, spanning_set, state_space_report, RankMethod, ReportOptions};
use unicon::theory::{Tail, TheoryKind};
use unicon::{Cobordism, MultiPoly, Ring, TheorySpec};

const MAX_K: usize = 5;
const MAX_GENUS: u32 = 2;

fn from_owner(k: usize, owner: &[usize], genus: &[u32]) -> Cobordism {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (c, &o) in owner.iter().enumerate() {
        blocks[o].push(c + 1);
    }
    let (blocks, genus): (Vec<Vec<usize>>, Vec<u32>) = blocks
        .into_iter()
        .zip(genus.iter().copied())
        .filter(|(b, _)| !b.is_empty())
        .unzip();
    Cobordism::new(k, &blocks, &genus).expect("valid blocks")
}

fn cobordism(k: usize) -> impl Strategy<Value = Cobordism> {
    (prop::collection::vec(0..k, k), prop::collection::vec(0..=MAX_GENUS, k))
        .prop_map(move |(owner, genus)| from_owner(k, &owner, &genus))
}

fn triple() -> impl Strategy<Value = (Cobordism, Cobordism, Cobordism)> {
    (1..=MAX_K).prop_flat_map(|k| (cobordism(k), cobordism(k), cobordism(k)))
}

/// α_g free variables a0..a_max, so every closed surface evaluates to a
/// distinct monomial.
fn free_theory(max_genus: usize) -> TheorySpec {
    let ring = Ring::new((0..=max_genus).map(|i| format!("a{i}")));
    let alphas = ring.gens();
    TheorySpec::new(
        &ring,
        TheoryKind::Sequence {
            alphas,
            tail: Tail::Undefined,
        },
    )
    .unwrap()
}

/// Weighted degree with deg a_g = 2g − 2.
fn weighted_degree(p: &MultiPoly) -> i64 {
    let (m, _) = p.leading_term().expect("nonzero");
    m.exps()
        .iter()
        .enumerate()
        .map(|(g, &e)| (2 * g as i64 - 2) * e as i64)
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monoid_is_commutative_and_associative((a, b, c) in triple()) {
        prop_assert_eq!(a.monoid_mul(&b).unwrap(), b.monoid_mul(&a).unwrap());
        let left = a.monoid_mul(&b).unwrap().monoid_mul(&c).unwrap();
        let right = a.monoid_mul(&b.monoid_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral((a, _, _) in triple()) {
        prop_assert_eq!(a.monoid_mul(&Cobordism::identity(a.k())).unwrap(), a);
    }

    #[test]
    fn degree_is_additive((a, b, _) in triple()) {
        prop_assert_eq!(a.monoid_mul(&b).unwrap().degree(), a.degree() + b.degree());
    }

    #[test]
    fn pairing_is_symmetric_and_balanced((a, b, c) in triple()) {
        prop_assert_eq!(a.glue(&b).unwrap(), b.glue(&a).unwrap());
        let ab = a.monoid_mul(&b).unwrap();
        let bc = b.monoid_mul(&c).unwrap();
        prop_assert_eq!(ab.glue(&c).unwrap(), a.glue(&bc).unwrap());
    }

    #[test]
    fn text_form_roundtrips((a, _, _) in triple()) {
        prop_assert_eq!(a.to_string().parse::<Cobordism>().unwrap(), a);
    }

    #[test]
    fn free_pairing_is_homogeneous((a, b, _) in triple()) {
        let surface = a.glue(&b).unwrap();
        let theory = free_theory(surface.max_genus() as usize);
        let value = a.glue_pairing(&b, &theory).unwrap();
        prop_assert_eq!(value.num_terms(), 1);
        let expected = a.degree() as i64 + b.degree() as i64 - 2 * a.k() as i64;
        prop_assert_eq!(weighted_degree(&value), expected);
    }

    #[test]
    fn constant_pairing_counts_acyclic_gluings((a, b, _) in triple()) {
        let theory = TheorySpec::parse("const beta").unwrap();
        let beta = theory.ring().var("beta").unwrap();
        let surface = a.glue(&b).unwrap();
        let expected = if surface.max_genus() == 0 { beta.pow(surface.components()) } else { theory.ring().zero() };
        prop_assert_eq!(a.glue_pairing(&b, &theory).unwrap(), expected);
    }
}

#[test]
fn monoid_relations() {
    for k in 3..=MAX_K {
        let y = |c: &[usize]| Cobordism::y(k, c).unwrap();
        let x = |i: usize| Cobordism::x(k, i);
        let y12 = y(&[1, 2]);
        let sq = y12.monoid_mul(&y12).unwrap();
        assert_eq!(sq, y12.monoid_mul(&x(1)).unwrap());
        assert_eq!(sq, y12.monoid_mul(&x(2)).unwrap());
        let a = y12.monoid_mul(&y(&[2, 3])).unwrap();
        assert_eq!(a, y12.monoid_mul(&y(&[1, 3])).unwrap());
        assert_eq!(a, y(&[1, 3]).monoid_mul(&y(&[2, 3])).unwrap());
        assert_eq!(a, y(&[1, 2, 3]));
    }
}

#[test]
fn gram_matrices_are_symmetric_and_match_pairings() {
    for (spec, k) in [("poly b0,b1", 3), ("rational beta=b1 gamma=g1", 2), ("const beta", 4)] {
        let theory = TheorySpec::parse(spec).unwrap();
        let basis = spanning_set(k, &theory, None).unwrap();
        let g = gram_matrix(k, &theory, None).unwrap();
        assert!(g.is_symmetric(), "{spec}");
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                assert_eq!(g.get(i, j), &a.glue_pairing(b, &theory).unwrap(), "{spec} ({i}, {j})");
            }
        }
    }
}

#[test]
fn kernel_relations_pair_to_zero() {
    let exact = ReportOptions {
        method: RankMethod::Exact,
        ..ReportOptions::default()
    };
    let cases = [
        ("poly b0,b1", 2),
        ("poly b0,b1", 3),
        ("rational beta=b1 gamma=g1", 3),
        ("rational beta=b1,b2 gamma=", 2),
        ("const beta", 4),
    ];
    for (spec, k) in cases {
        let theory = TheorySpec::parse(spec).unwrap();
        let basis = spanning_set(k, &theory, None).unwrap();
        let report = state_space_report(k, &theory, &exact).unwrap();
        assert!(report.kernel_computed);
        assert_eq!(
            report.kernel_relations.len(),
            report.spanning_size - report.rank,
            "{spec}"
        );
        for rel in &report.kernel_relations {
            for b in &basis {
                let mut total = theory.ring().zero();
                for (c, a) in rel {
                    total += &(c * &a.glue_pairing(b, &theory).unwrap());
                }
                assert!(total.is_zero(), "{spec}: relation does not annihilate {b}");
            }
        }
    }
}

fn narayana(k: usize, j: usize) -> usize {
    fn binom(n: usize, r: usize) -> usize {
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    binom(k, j) * binom(k, j + 1) / k
}

#[test]
fn constant_theory_graded_ranks_are_narayana() {
    let theory = TheorySpec::parse("const beta").unwrap();
    for k in 1..=5 {
        let report = state_space_report(k, &theory, &ReportOptions::default()).unwrap();
        assert!(report.certified);
        let expected: Vec<usize> = (0..k).map(|j| narayana(k, j)).collect();
        assert_eq!(report.graded_rank, expected, "k = {k}");
    }
}

#[test]
fn rank_methods_agree() {
    for (spec, k) in [("poly b0,b1", 3), ("rational beta=b1 gamma=g1", 3)] {
        let theory = TheorySpec::parse(spec).unwrap();
        let run = |method| {
            let r = state_space_report(
                k,
                &theory,
                &ReportOptions {
                    method,
                    ..ReportOptions::default()
                },
            )
            .unwrap();
            (r.rank, r.graded_rank)
        };
        assert_eq!(run(RankMethod::Exact), run(RankMethod::Modular), "{spec}");
    }
}
