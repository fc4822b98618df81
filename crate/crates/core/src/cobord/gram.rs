//! Spanning sets, Gram matrices and rank reports for the state spaces A(k).

use std::cmp::Reverse;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ClosedSurface, Cobordism};
use crate::error::{Error, Result};
use crate::exact::{content_free, integer_rank_and_kernel, modp, MultiPoly, PolyMatrix, Ring};
use crate::theory::{TheoryKind, TheorySpec};

/// Default bound on the number of spanning elements.
pub const DEFAULT_SIZE_LIMIT: usize = 2000;

const SEED: u64 = 0x5eed_c0b0;
const MODULAR_POINTS: usize = 2;
const MODULAR_RETRIES: usize = 6;

/// How the rank of a Gram matrix is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Constant theories use the integer pattern, small matrices are reduced
    /// exactly, large ones modulo a prime.
    Auto,
    /// Fraction-free elimination over the parameter ring, with kernel.
    Exact,
    /// Elimination modulo a 61-bit prime at random parameter points; no kernel.
    Modular,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Per-block genus bound; `None` uses the theory's default.
    pub genus_cap: Option<usize>,
    pub method: RankMethod,
    /// Set when parameters were specialized to rational values.
    pub special_values: bool,
    pub size_limit: usize,
    /// Print stage timings to standard error.
    pub verbose: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            genus_cap: None,
            method: RankMethod::Auto,
            special_values: false,
            size_limit: DEFAULT_SIZE_LIMIT,
            verbose: false,
        }
    }
}

/// Rank data of the Gram matrix of a spanning set of A(k).
#[derive(Clone, Debug)]
pub struct GramReport {
    pub k: usize,
    pub spanning_size: usize,
    pub rank: usize,
    /// `graded_rank[i]` is the coefficient of q^{2i}.
    pub graded_rank: Vec<usize>,
    /// Pivot elements in spanning-set order.
    pub pivot_elements: Vec<Cobordism>,
    /// One relation per non-pivot element; empty when not computed.
    pub kernel_relations: Vec<Vec<(MultiPoly, Cobordism)>>,
    /// Whether kernel relations were computed.
    pub kernel_computed: bool,
    /// True when the rank is proven; modular ranks are lower bounds that
    /// agree at independent random points.
    pub certified: bool,
    /// Set for reports at specialized parameter values, where the pivot
    /// degrees need not give the graded rank of the quotient module.
    pub generic_basis_not_guaranteed: bool,
}

impl GramReport {
    /// E.g. `1+6q^2+6q^4+q^6`.
    pub fn graded_rank_string(&self) -> String {
        let terms: Vec<String> = self
            .graded_rank
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (i, 1) => format!("q^{}", 2 * i),
                (i, c) => format!("{c}q^{}", 2 * i),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Renders a relation as `c1*[cob1] + c2*[cob2] + ...`.
    pub fn relation_string(relation: &[(MultiPoly, Cobordism)]) -> String {
        let terms: Vec<String> = relation.iter().map(|(c, cob)| format!("({c})*[{cob}]")).collect();
        terms.join(" + ")
    }
}

/// All set partitions of {0..k} as restricted growth strings.
fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, blocks: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            rec(prefix, blocks.max(b + 1), k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 0, k, &mut out);
    out
}

fn genus_vectors(blocks: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..blocks {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=cap).map(move |g| {
                    let mut w = v.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out
}

/// Canonical cobordisms with per-block genus at most `cap`, in canonical order.
pub(crate) fn spanning_set_capped(k: usize, cap: usize, limit: usize) -> Result<Vec<Cobordism>> {
    let parts = set_partitions(k);
    let mut total = 0usize;
    for rgs in &parts {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        let count = (cap + 1).checked_pow(blocks as u32).unwrap_or(usize::MAX);
        total = total.saturating_add(count);
        if total > limit {
            return Err(Error::SizeLimit(format!(
                "spanning set for k={k}, cap {cap} exceeds {limit} elements"
            )));
        }
    }
    let mut out = Vec::with_capacity(total);
    for rgs in parts {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        for genus in genus_vectors(blocks, cap as u32) {
            out.push(Cobordism::from_rgs(rgs.clone(), genus));
        }
    }
    out.sort_by_cached_key(Cobordism::sort_key);
    Ok(out)
}

fn resolve_cap(theory: &TheorySpec, genus_cap: Option<usize>) -> Result<usize> {
    match genus_cap.or_else(|| theory.default_genus_cap()) {
        Some(c) => Ok(c),
        None => Err(Error::Precondition(
            "theory has no default genus cap; pass one explicitly".into(),
        )),
    }
}

/// Spanning set of A(k): every canonical cobordism with per-block genus at
/// most the cap (the theory's default when `None`), sorted by degree and then
/// canonical partition order.
pub fn spanning_set(k: usize, theory: &TheorySpec, genus_cap: Option<usize>) -> Result<Vec<Cobordism>> {
    spanning_set_capped(k, resolve_cap(theory, genus_cap)?, DEFAULT_SIZE_LIMIT)
}

/// Glued closed surfaces for every pair of a spanning set.
struct SurfaceTable {
    surfaces: Vec<Vec<ClosedSurface>>,
    max_genus: u32,
}

impl SurfaceTable {
    fn new(elems: &[Cobordism]) -> Result<SurfaceTable> {
        let n = elems.len();
        let mut surfaces = vec![vec![ClosedSurface::default(); n]; n];
        let mut max_genus = 0;
        for i in 0..n {
            for j in i..n {
                let s = elems[i].glue(&elems[j])?;
                max_genus = max_genus.max(s.max_genus());
                surfaces[j][i] = s.clone();
                surfaces[i][j] = s;
            }
        }
        Ok(SurfaceTable { surfaces, max_genus })
    }

    fn poly_matrix(&self, ring: &Ring, alphas: &[MultiPoly]) -> Result<PolyMatrix> {
        let one = ring.one();
        let rows = self
            .surfaces
            .iter()
            .map(|row| row.iter().map(|s| s.evaluate(alphas, &one)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, rows)
    }

    fn modular(&self, alphas: &[u64], order: &[usize]) -> Vec<Vec<u64>> {
        self.surfaces
            .iter()
            .map(|row| order.iter().map(|&j| row[j].evaluate_mod(alphas)).collect())
            .collect()
    }
}

/// Gram matrix of the spanning set under the theory's pairing.
pub fn gram_matrix(k: usize, theory: &TheorySpec, genus_cap: Option<usize>) -> Result<PolyMatrix> {
    let elems = spanning_set(k, theory, genus_cap)?;
    let table = SurfaceTable::new(&elems)?;
    let alphas = theory.alpha_coeffs(table.max_genus as usize)?;
    table.poly_matrix(theory.ring(), &alphas)
}

/// Column order for pivot selection: descending degree, canonical order
/// inside a degree. A dependent column is then always of lowest degree among
/// the columns of its relation, which is the element a homogeneous relation
/// removes from a minimal generating set.
fn descending_degree_order(elems: &[Cobordism]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| (Reverse(elems[i].degree()), i));
    order
}

/// `Some(α_0)` when the theory is the constant Z = α_0 with α_0 ≠ 0.
fn constant_value(theory: &TheorySpec) -> Option<MultiPoly> {
    let coeffs = match theory.kind() {
        TheoryKind::Polynomial { coeffs } => coeffs.clone(),
        TheoryKind::Sequence {
            alphas,
            tail: crate::theory::Tail::ZeroExtended,
        } => alphas.clone(),
        _ => return None,
    };
    let c0 = coeffs.first()?.clone();
    (!c0.is_zero() && coeffs[1..].iter().all(MultiPoly::is_zero)).then_some(c0)
}

struct RankOutcome {
    pivots: Vec<usize>,
    kernel: Option<Vec<Vec<MultiPoly>>>,
    certified: bool,
}

fn exact_rank(table: &SurfaceTable, theory: &TheorySpec, order: &[usize]) -> Result<RankOutcome> {
    // A nonsingular specialization proves nonsingularity, and then the
    // kernel is trivial.
    if modular_rank(table, theory, order)?.certified {
        return Ok(RankOutcome {
            pivots: order.to_vec(),
            kernel: Some(Vec::new()),
            certified: true,
        });
    }
    let alphas = theory.alpha_coeffs(table.max_genus as usize)?;
    let g = table.poly_matrix(theory.ring(), &alphas)?;
    let rows: Vec<usize> = (0..g.rows()).collect();
    let rk = g.submatrix(&rows, order).rank_and_kernel()?;
    let pivots = rk.pivot_cols.iter().map(|&c| order[c]).collect();
    let kernel = rk
        .kernel
        .into_iter()
        .map(|v| {
            let mut w = vec![theory.ring().zero(); v.len()];
            for (c, e) in v.into_iter().enumerate() {
                w[order[c]] = e;
            }
            w
        })
        .collect();
    Ok(RankOutcome {
        pivots,
        kernel: Some(kernel),
        certified: true,
    })
}

/// Z = c: every nonzero entry is c^{#components}, and #components equals
/// #blocks(a) + #blocks(b) − k on acyclic gluings, so the Gram matrix is
/// c^{−k}·D·B·D with D = diag(c^{#blocks}) and B the 0/1 acyclicity pattern.
/// Rank and pivots are those of B, and kernel vectors of B become kernel
/// vectors of the Gram matrix after rescaling by D^{−1}.
fn constant_rank(elems: &[Cobordism], table: &SurfaceTable, c: &MultiPoly, order: &[usize]) -> Result<RankOutcome> {
    let pattern: Vec<Vec<BigInt>> = table
        .surfaces
        .iter()
        .map(|row| {
            order
                .iter()
                .map(|&j| {
                    if row[j].max_genus() == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let (pivot_cols, kernel) = integer_rank_and_kernel(pattern)?;
    let pivots = pivot_cols.iter().map(|&p| order[p]).collect();
    let max_blocks = elems.iter().map(Cobordism::num_blocks).max().unwrap_or(0);
    let ring = c.ring();
    let kernel = kernel
        .into_iter()
        .map(|v| {
            let mut w = vec![ring.zero(); v.len()];
            for (col, x) in v.into_iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let i = order[col];
                let shift = (max_blocks - elems[i].num_blocks()) as u32;
                w[i] = ring.constant(x.into()) * c.pow(shift);
            }
            content_free(&w)
        })
        .collect();
    Ok(RankOutcome {
        pivots,
        kernel: Some(kernel),
        certified: true,
    })
}

/// Rank at random points modulo a prime. Any single evaluation is a lower
/// bound for the generic rank, and among full-length runs the generic pivot
/// set is the lexicographically smallest one, so the best of several points
/// is kept.
fn modular_rank(table: &SurfaceTable, theory: &TheorySpec, order: &[usize]) -> Result<RankOutcome> {
    let alphas = theory.alpha_coeffs(table.max_genus as usize)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut best: Option<Vec<usize>> = None;
    let mut agreeing = 0;
    let mut attempts = 0;
    while agreeing < MODULAR_POINTS && attempts < MODULAR_POINTS + MODULAR_RETRIES {
        attempts += 1;
        let point = modp::random_point(&mut rng, theory.ring().nvars());
        let Some(values) = alphas.iter().map(|a| a.eval_mod(&point)).collect::<Option<Vec<u64>>>() else {
            continue;
        };
        let (_, piv) = modp::rank_with_pivots(table.modular(&values, order));
        let better = match &best {
            None => true,
            Some(b) => piv.len() > b.len() || (piv.len() == b.len() && piv < *b),
        };
        if best.as_ref() == Some(&piv) {
            agreeing += 1;
        } else if better {
            best = Some(piv);
            agreeing = 1;
        }
    }
    let piv = best.ok_or_else(|| Error::Internal("no admissible evaluation point".into()))?;
    Ok(RankOutcome {
        pivots: piv.iter().map(|&c| order[c]).collect(),
        kernel: None,
        certified: piv.len() == order.len(),
    })
}

/// Rank, graded rank, pivots and kernel relations of A(k).
pub fn state_space_report(k: usize, theory: &TheorySpec, options: &ReportOptions) -> Result<GramReport> {
    let start = Instant::now();
    let log = |stage: &str| {
        if options.verbose {
            eprintln!("[{:>9.3}s] {stage}", start.elapsed().as_secs_f64());
        }
    };
    let cap = resolve_cap(theory, options.genus_cap)?;
    let elems = spanning_set_capped(k, cap, options.size_limit)?;
    log(&format!("spanning set: {} elements", elems.len()));
    let table = SurfaceTable::new(&elems)?;
    log("gluing table");
    let order = descending_degree_order(&elems);
    let constant = constant_value(theory);
    let outcome = match options.method {
        RankMethod::Exact => exact_rank(&table, theory, &order)?,
        RankMethod::Modular => modular_rank(&table, theory, &order)?,
        RankMethod::Auto => match &constant {
            Some(c) => constant_rank(&elems, &table, c, &order)?,
            None if elems.len() <= 40 => exact_rank(&table, theory, &order)?,
            _ => modular_rank(&table, theory, &order)?,
        },
    };
    log("elimination");
    let mut pivots = outcome.pivots;
    pivots.sort_unstable();
    let max_deg = elems.iter().map(Cobordism::degree).max().unwrap_or(0) as usize;
    let mut graded_rank = vec![0usize; max_deg / 2 + 1];
    for &p in &pivots {
        graded_rank[elems[p].degree() as usize / 2] += 1;
    }
    while graded_rank.len() > 1 && graded_rank.last() == Some(&0) {
        graded_rank.pop();
    }
    let kernel_computed = outcome.kernel.is_some();
    let mut kernel_relations: Vec<Vec<(MultiPoly, Cobordism)>> = outcome
        .kernel
        .unwrap_or_default()
        .into_iter()
        .map(|v| {
            v.into_iter()
                .zip(&elems)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, e)| (c, e.clone()))
                .collect()
        })
        .collect();
    kernel_relations.sort_by_cached_key(|rel| {
        rel.iter()
            .map(|(_, e)| elems.iter().position(|x| x == e).unwrap_or(0))
            .min()
            .unwrap_or(0)
    });
    Ok(GramReport {
        k,
        spanning_size: elems.len(),
        rank: pivots.len(),
        graded_rank,
        pivot_elements: pivots.iter().map(|&p| elems[p].clone()).collect(),
        kernel_relations,
        kernel_computed,
        certified: outcome.certified,
        generic_basis_not_guaranteed: options.special_values,
    })
}

/// Ring ℚ[a0..aG] of the free theory Z = Σ a_g T^g, with G large enough for
/// every gluing of the capped spanning set.
pub(crate) fn free_theory(k: usize, cap: usize) -> Result<TheorySpec> {
    let g = 2 * k * cap + k;
    let ring = Ring::new((0..=g).map(|i| format!("a{i}")));
    let alphas = ring.gens();
    TheorySpec::sequence(&ring, alphas, crate::theory::Tail::Undefined)
}

/// Whether the Gram matrix of the capped spanning set is nonsingular over the
/// fraction field of ℚ[α_0, α_1, …].
///
/// A nonzero determinant modulo a prime at any point certifies
/// nonsingularity; otherwise the matrix is reduced exactly.
pub fn free_theory_independent(k: usize, genus_cap: usize) -> Result<bool> {
    let theory = free_theory(k, genus_cap)?;
    let elems = spanning_set_capped(k, genus_cap, DEFAULT_SIZE_LIMIT)?;
    let table = SurfaceTable::new(&elems)?;
    let order: Vec<usize> = (0..elems.len()).collect();
    if modular_rank(&table, &theory, &order)?.pivots.len() == elems.len() {
        return Ok(true);
    }
    Ok(exact_rank(&table, &theory, &order)?.pivots.len() == elems.len())
}
