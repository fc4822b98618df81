//! Subcommand implementations: parse the text arguments, call into
//! `unicon-core`, and collect the result fields.

use serde_json::{json, Map, Value};
use unicon::cobord::{gram_matrix, spanning_set, state_space_report, RankMethod, ReportOptions};
use unicon::exact::parse_rational;
use unicon::foam::{
    overlap_theta_eval, resultant_of_roots, sphere_overlap_eval, theta_eval, x_ring, xy_ring, OverlapThetaFoam,
    SignMode, ThetaFoam,
};
use unicon::symfun::{schur_jt, sergeev_pragacz, super_schur_jt};
use unicon::theory::{detect_rational, frobenius_closed_form, frobenius_rank2_series};
use unicon::{day, DayFoamInstance, Error, GramReport, MultiPoly, Partition, Rational, Ring, TheorySpec, TruncSeries};

use crate::report::Outcome;
use crate::{Command, HookArgs, StateSpaceArgs};

/// Largest Gram matrix whose determinant is included in `gram` output.
const GRAM_DET_LIMIT: usize = 12;

type Fields = Map<String, Value>;

pub fn run(cmd: &Command, verbose: bool) -> Outcome {
    let result = match cmd {
        Command::StateSpace(a) => state_space(a, verbose),
        Command::Gram(a) => gram(a),
        Command::Relations(a) => relations(a, verbose),
        Command::GradedRank(a) => graded_rank(a, verbose),
        Command::DetectRational { seq } => detect(seq),
        Command::Schur(a) => schur(a),
        Command::Superschur(a) => superschur(a),
        Command::SpVerify(a) => sp_verify(a),
        Command::FoamTheta { m, mu } => foam_theta(*m, mu),
        Command::FoamOverlap(a) => foam_overlap(a),
        Command::ResultantCheck { m, n } => resultant_check(*m, *n),
        Command::DayVerify { delta, rho, roots, n } => day_verify(delta, rho, roots, *n),
        Command::Frobenius2 { order } => frobenius2(*order),
    };
    match result {
        Ok(Checked::Pass(fields)) => Outcome::Ok(fields),
        Ok(Checked::Mismatch(what)) => Outcome::Internal(what),
        Err(e) if e.is_internal() => Outcome::Internal(e.to_string()),
        Err(e) => Outcome::InvalidInput(e.to_string()),
    }
}

/// Verification commands report a mismatch as an internal failure.
enum Checked {
    Pass(Fields),
    Mismatch(String),
}

fn pass(v: Value) -> unicon::Result<Checked> {
    match v {
        Value::Object(m) => Ok(Checked::Pass(m)),
        _ => unreachable!("results are objects"),
    }
}

fn require(ok: bool, what: &str, v: Value) -> unicon::Result<Checked> {
    if ok {
        pass(v)
    } else {
        Ok(Checked::Mismatch(format!("{what}: {v}")))
    }
}

fn rationals(text: &str) -> unicon::Result<Vec<Rational>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_rational)
        .collect()
}

fn partition(text: &str) -> unicon::Result<Partition> {
    text.parse()
}

fn theory_of(a: &StateSpaceArgs) -> unicon::Result<(TheorySpec, bool)> {
    let theory = TheorySpec::parse(&a.theory)?;
    if a.subst.is_empty() {
        return Ok((theory, false));
    }
    let values = a
        .subst
        .iter()
        .map(|s| {
            let (name, value) = s.split_once('=').ok_or_else(|| Error::Parse {
                token: s.clone(),
                reason: "expected name=value".into(),
            })?;
            Ok((name.trim().to_string(), parse_rational(value)?))
        })
        .collect::<unicon::Result<Vec<_>>>()?;
    Ok((theory.specialize(&values)?, true))
}

fn options(a: &StateSpaceArgs, special: bool, verbose: bool, default: RankMethod) -> unicon::Result<ReportOptions> {
    let method = match a.method.as_str() {
        "auto" => default,
        "exact" => RankMethod::Exact,
        "modular" => RankMethod::Modular,
        other => {
            return Err(Error::Parse {
                token: other.into(),
                reason: "expected auto, exact or modular".into(),
            })
        }
    };
    Ok(ReportOptions {
        genus_cap: a.cap,
        method,
        special_values: special,
        verbose,
        ..ReportOptions::default()
    })
}

fn report_of(a: &StateSpaceArgs, verbose: bool, default: RankMethod) -> unicon::Result<GramReport> {
    let (theory, special) = theory_of(a)?;
    state_space_report(a.k, &theory, &options(a, special, verbose, default)?)
}

fn rank_fields(r: &GramReport) -> Fields {
    let Value::Object(m) = json!({
        "k": r.k,
        "spanning_size": r.spanning_size,
        "rank": r.rank,
        "graded": r.graded_rank_string(),
        "certified": r.certified,
        "generic_basis_not_guaranteed": r.generic_basis_not_guaranteed,
    }) else {
        unreachable!()
    };
    m
}

fn state_space(a: &StateSpaceArgs, verbose: bool) -> unicon::Result<Checked> {
    let r = report_of(a, verbose, RankMethod::Auto)?;
    let mut f = rank_fields(&r);
    let pivots: Vec<String> = r.pivot_elements.iter().map(|c| c.to_string()).collect();
    let labels: Vec<String> = r.pivot_elements.iter().map(|c| c.label()).collect();
    f.insert("pivots".into(), pivots.into());
    f.insert("pivot_labels".into(), labels.into());
    f.insert(
        "relations".into(),
        if r.kernel_computed {
            r.kernel_relations.len().into()
        } else {
            Value::Null
        },
    );
    Ok(Checked::Pass(f))
}

fn graded_rank(a: &StateSpaceArgs, verbose: bool) -> unicon::Result<Checked> {
    Ok(Checked::Pass(rank_fields(&report_of(a, verbose, RankMethod::Auto)?)))
}

fn relations(a: &StateSpaceArgs, verbose: bool) -> unicon::Result<Checked> {
    let r = report_of(a, verbose, RankMethod::Exact)?;
    if !r.kernel_computed {
        return Err(Error::Precondition("kernel relations need the exact method".into()));
    }
    let mut f = rank_fields(&r);
    let rels: Vec<String> = r
        .kernel_relations
        .iter()
        .map(|rel| GramReport::relation_string(rel))
        .collect();
    f.insert("relations".into(), rels.into());
    Ok(Checked::Pass(f))
}

fn gram(a: &StateSpaceArgs) -> unicon::Result<Checked> {
    let (theory, _) = theory_of(a)?;
    let elements = spanning_set(a.k, &theory, a.cap)?;
    let g = gram_matrix(a.k, &theory, a.cap)?;
    let rows: Vec<Vec<String>> = g
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let det = if g.rows() <= GRAM_DET_LIMIT {
        Value::from(g.det_fraction_free()?.to_string())
    } else {
        Value::Null
    };
    pass(json!({
        "elements": elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "labels": elements.iter().map(|c| c.label()).collect::<Vec<_>>(),
        "matrix": rows,
        "det": det,
    }))
}

fn univariate(coeffs: &[Rational]) -> String {
    let ring = Ring::new(["T"]);
    let c: Vec<MultiPoly> = coeffs.iter().map(|x| ring.constant(x.clone())).collect();
    MultiPoly::from_coeffs_in(&ring, 0, &c).to_string()
}

fn detect(seq: &str) -> unicon::Result<Checked> {
    let prefix = rationals(seq)?;
    match detect_rational(&prefix)? {
        None => pass(json!({ "rational": false, "length": prefix.len() })),
        Some(fit) => pass(json!({
            "rational": true,
            "P": univariate(&fit.p),
            "Q": univariate(&fit.q),
            "order": fit.order,
            "valid_from": fit.valid_from,
            "linear_complexity": fit.linear_complexity,
            "taps": fit.taps.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
    }
}

fn schur(a: &HookArgs) -> unicon::Result<Checked> {
    let lambda = partition(&a.lambda)?;
    let ring = x_ring(a.m);
    pass(json!({ "schur": schur_jt(&ring, &lambda, &ring.gens()).to_string() }))
}

fn split_xy(a: &HookArgs) -> (Ring, Vec<MultiPoly>, Vec<MultiPoly>) {
    let ring = xy_ring(a.m, a.n);
    let g = ring.gens();
    (ring, g[..a.m].to_vec(), g[a.m..].to_vec())
}

fn superschur(a: &HookArgs) -> unicon::Result<Checked> {
    let lambda = partition(&a.lambda)?;
    let (ring, xs, ys) = split_xy(a);
    pass(json!({
        "superschur": super_schur_jt(&ring, &lambda, &xs, &ys).to_string(),
        "in_hook": lambda.fits_hook(a.m, a.n),
    }))
}

fn sp_verify(a: &HookArgs) -> unicon::Result<Checked> {
    let lambda = partition(&a.lambda)?;
    let (ring, xs, ys) = split_xy(a);
    let jt = super_schur_jt(&ring, &lambda, &xs, &ys);
    let sp = match sergeev_pragacz(&ring, &lambda, &xs, &ys) {
        Err(Error::HookViolation { .. }) => ring.zero(),
        other => other?,
    };
    require(
        sp == jt,
        "Sergeev-Pragacz differs from Jacobi-Trudi",
        json!({ "equal": sp == jt, "in_hook": lambda.fits_hook(a.m, a.n), "value": jt.to_string() }),
    )
}

fn foam_theta(m: usize, mu: &str) -> unicon::Result<Checked> {
    let mu = partition(mu)?;
    let foam = ThetaFoam::new(m, mu.clone())?;
    let value = theta_eval(&foam)?;
    let ring = x_ring(m);
    let s = schur_jt(&ring, &mu, &ring.gens());
    require(
        value == s,
        "theta-foam differs from the Schur polynomial",
        json!({ "evaluation": value.to_string(), "dots": foam.dots(), "equals_schur": value == s }),
    )
}

fn foam_overlap(a: &HookArgs) -> unicon::Result<Checked> {
    let lambda = partition(&a.lambda)?;
    let foam = OverlapThetaFoam::new(a.m, a.n, lambda.clone())?;
    let hook = lambda.hook_decompose(a.m, a.n)?;
    let value = overlap_theta_eval(&foam)?;
    let (ring, xs, ys) = split_xy(a);
    let s = super_schur_jt(&ring, &lambda, &xs, &ys);
    require(
        value == s,
        "overlap foam differs from the supersymmetric Schur polynomial",
        json!({
            "evaluation": value.to_string(),
            "equals_superschur": value == s,
            "kappa": hook.kappa.to_string(),
            "tau": hook.tau.to_string(),
            "eta": hook.eta.to_string(),
        }),
    )
}

fn resultant_check(m: usize, n: usize) -> unicon::Result<Checked> {
    let foam = sphere_overlap_eval(m, n, SignMode::Minus)?;
    let res = resultant_of_roots(m, n)?;
    require(
        foam == res,
        "sphere overlap differs from the resultant",
        json!({ "equal": foam == res, "resultant": res.to_string() }),
    )
}

fn day_verify(delta: &str, rho: &str, roots: &str, n: usize) -> unicon::Result<Checked> {
    let (delta, rho, roots) = (rationals(delta)?, rationals(rho)?, rationals(roots)?);
    let m = roots
        .len()
        .checked_sub(delta.len())
        .ok_or_else(|| Error::Precondition("need at least as many roots as δ poles".into()))?;
    let inst = DayFoamInstance::new(m, n, roots, delta, rho)?;
    let v = day::day_verify(&inst)?;
    require(
        v.equal,
        "Day's formula differs from the Toeplitz determinant",
        json!({
            "formula": v.formula_value.to_string(),
            "toeplitz": v.brute_force_value.to_string(),
            "equal": v.equal,
            "m": m,
        }),
    )
}

fn frobenius2(order: usize) -> unicon::Result<Checked> {
    let ring = Ring::new(["u1", "u2", "rho0", "rho1"]);
    let g = ring.gens();
    let series = frobenius_rank2_series(&g[0], &g[1], &g[2], &g[3], order);
    let (p, q) = frobenius_closed_form(&g[0], &g[1], &g[2], &g[3]);
    let symbolic = series.matches(&p, &q);

    let sub = Ring::new(["u1", "u2"]);
    let s = sub.gens();
    let special = frobenius_rank2_series(&s[0], &s[1], &sub.zero(), &sub.one(), order).to_series("T")?;
    let d = (&s[0] - &s[1]).pow(2);
    let expected = TruncSeries::rational(
        &sub,
        "T",
        order,
        &[sub.zero(), sub.int(2)],
        &[sub.one(), sub.zero(), -d],
    )?;
    let specialized = special == expected;
    require(
        symbolic && specialized,
        "rank-two Frobenius series differs from its closed form",
        json!({
            "matches_closed_form": symbolic,
            "specialization_matches": specialized,
            "P": p.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "Q": q.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "specialized_series": special.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    )
}
