//! The cobordism monoid Cob_{2,k}, gluing, and Gram matrices of state spaces.
//!
//! A [`Cobordism`] is a set partition of the boundary circles 1..k with a
//! genus on each block. Multiplication (merging along pants) and gluing (into
//! a closed surface) share the same combinatorics: blocks of both factors are
//! the vertices of a bipartite graph whose edges are the circles, and a
//! connected component of that graph has genus Σ(block genera) + E − V + 1.

mod gram;

pub use gram::{
    free_theory_independent, gram_matrix, spanning_set, state_space_report, GramReport, RankMethod, ReportOptions,
    DEFAULT_SIZE_LIMIT,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::theory::TheorySpec;

/// A surface with k boundary circles and no closed components, in canonical
/// form: blocks are numbered by their smallest circle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cobordism {
    /// Block index of each circle (a restricted growth string).
    rgs: Vec<usize>,
    genus: Vec<u32>,
}

/// A closed surface, recorded as a multiset of component genera.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ClosedSurface {
    pub genus_counts: BTreeMap<u32, u32>,
}

impl ClosedSurface {
    pub fn components(&self) -> u32 {
        self.genus_counts.values().sum()
    }

    pub fn max_genus(&self) -> u32 {
        self.genus_counts.keys().next_back().copied().unwrap_or(0)
    }

    /// ∏ α_g over components; `alphas` must cover every genus present.
    pub fn evaluate(&self, alphas: &[MultiPoly], one: &MultiPoly) -> Result<MultiPoly> {
        let mut acc = one.clone();
        for (&g, &mult) in &self.genus_counts {
            let a = alphas.get(g as usize).ok_or(Error::UndefinedBeyondPrefix(g as usize))?;
            if a.is_zero() {
                return Ok(one.ring().zero());
            }
            acc = &acc * &a.pow(mult);
        }
        Ok(acc)
    }

    /// ∏ α_g modulo the prime of [`crate::exact::modp`].
    pub fn evaluate_mod(&self, alphas: &[u64]) -> u64 {
        use crate::exact::modp;
        let mut acc = 1u64;
        for (&g, &mult) in &self.genus_counts {
            acc = modp::mul(acc, modp::pow(alphas[g as usize], mult as u64));
        }
        acc
    }
}

impl Cobordism {
    /// Builds a canonical cobordism from blocks of 1-based circle labels.
    pub fn new(k: usize, blocks: &[Vec<usize>], genus: &[u32]) -> Result<Cobordism> {
        if blocks.len() != genus.len() {
            return Err(Error::Shape(format!(
                "{} blocks but {} genus labels",
                blocks.len(),
                genus.len()
            )));
        }
        let mut owner = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &c in block {
                if c == 0 || c > k {
                    return Err(Error::Precondition(format!("circle {c} outside 1..{k}")));
                }
                if owner[c - 1] != usize::MAX {
                    return Err(Error::Precondition(format!("circle {c} appears twice")));
                }
                owner[c - 1] = b;
            }
        }
        if let Some(c) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Precondition(format!("circle {} is not covered", c + 1)));
        }
        Ok(Cobordism::from_owner(&owner, genus))
    }

    /// Canonicalizes an arbitrary block labelling.
    fn from_owner(owner: &[usize], genus_of: &[u32]) -> Cobordism {
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rgs = Vec::with_capacity(owner.len());
        let mut genus = Vec::new();
        for &o in owner {
            let next = relabel.len();
            let id = *relabel.entry(o).or_insert_with(|| {
                genus.push(genus_of[o]);
                next
            });
            rgs.push(id);
        }
        Cobordism { rgs, genus }
    }

    /// From a restricted growth string and per-block genera.
    pub(crate) fn from_rgs(rgs: Vec<usize>, genus: Vec<u32>) -> Cobordism {
        Cobordism { rgs, genus }
    }

    /// k disks.
    pub fn identity(k: usize) -> Cobordism {
        Cobordism {
            rgs: (0..k).collect(),
            genus: vec![0; k],
        }
    }

    /// x_i: a one-holed torus on circle i (1-based), disks elsewhere.
    pub fn x(k: usize, i: usize) -> Cobordism {
        let mut genus = vec![0; k];
        genus[i - 1] = 1;
        Cobordism {
            rgs: (0..k).collect(),
            genus,
        }
    }

    /// y_I: a sphere with holes at the circles of I (1-based), disks elsewhere.
    pub fn y(k: usize, circles: &[usize]) -> Result<Cobordism> {
        let mut blocks = vec![circles.to_vec()];
        for c in 1..=k {
            if !circles.contains(&c) {
                blocks.push(vec![c]);
            }
        }
        let genus = vec![0; blocks.len()];
        Cobordism::new(k, &blocks, &genus)
    }

    pub fn k(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.genus.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn genus(&self) -> &[u32] {
        &self.genus
    }

    /// Blocks as sorted lists of 1-based circles, ordered by smallest member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (c, &b) in self.rgs.iter().enumerate() {
            out[b].push(c + 1);
        }
        out
    }

    /// k − χ = 2k − 2·#blocks + 2·Σ genus.
    pub fn degree(&self) -> u32 {
        (2 * self.k() - 2 * self.num_blocks()) as u32 + 2 * self.genus.iter().sum::<u32>()
    }

    /// Canonical enumeration order: degree, then more blocks first, then the
    /// restricted growth string, then larger genus vectors first.
    pub fn sort_key(&self) -> (u32, std::cmp::Reverse<usize>, Vec<usize>, std::cmp::Reverse<Vec<u32>>) {
        (
            self.degree(),
            std::cmp::Reverse(self.num_blocks()),
            self.rgs.clone(),
            std::cmp::Reverse(self.genus.clone()),
        )
    }

    /// Components of the bipartite graph joining blocks of `self` and `other`
    /// along shared circles: (owner of each circle, genus of each component).
    fn join(&self, other: &Cobordism) -> (Vec<usize>, Vec<u32>) {
        let na = self.num_blocks();
        let nb = other.num_blocks();
        let mut parent: Vec<usize> = (0..na + nb).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for c in 0..self.k() {
            let (u, v) = (find(&mut parent, self.rgs[c]), find(&mut parent, na + other.rgs[c]));
            if u != v {
                parent[u] = v;
            }
        }
        let roots: Vec<usize> = (0..na + nb).map(|v| find(&mut parent, v)).collect();
        let mut comp_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        for &r in &roots {
            let next = comp_of_root.len();
            comp_of_root.entry(r).or_insert(next);
        }
        let nc = comp_of_root.len();
        let mut genus = vec![0i64; nc];
        let mut vertices = vec![0i64; nc];
        let mut edges = vec![0i64; nc];
        for v in 0..na + nb {
            let c = comp_of_root[&roots[v]];
            vertices[c] += 1;
            genus[c] += if v < na { self.genus[v] } else { other.genus[v - na] } as i64;
        }
        let owner: Vec<usize> = (0..self.k()).map(|c| comp_of_root[&roots[self.rgs[c]]]).collect();
        for &c in &owner {
            edges[c] += 1;
        }
        let g = (0..nc)
            .map(|c| (genus[c] + edges[c] - vertices[c] + 1) as u32)
            .collect();
        (owner, g)
    }

    /// Product in Cob_{2,k}.
    pub fn monoid_mul(&self, other: &Cobordism) -> Result<Cobordism> {
        if self.k() != other.k() {
            return Err(Error::MismatchedK(self.k(), other.k()));
        }
        let (owner, genus) = self.join(other);
        Ok(Cobordism::from_owner(&owner, &genus))
    }

    /// The closed surface obtained by gluing along all k circles.
    pub fn glue(&self, other: &Cobordism) -> Result<ClosedSurface> {
        if self.k() != other.k() {
            return Err(Error::MismatchedK(self.k(), other.k()));
        }
        let (_, genus) = self.join(other);
        let mut s = ClosedSurface::default();
        for g in genus {
            *s.genus_counts.entry(g).or_insert(0) += 1;
        }
        Ok(s)
    }

    /// Evaluation of the glued closed surface in `theory`.
    pub fn glue_pairing(&self, other: &Cobordism, theory: &TheorySpec) -> Result<MultiPoly> {
        let s = self.glue(other)?;
        let alphas = theory.alpha_coeffs(s.max_genus() as usize)?;
        s.evaluate(&alphas, &theory.ring().one())
    }

    /// Monomial name such as `1`, `x1^2`, `y12`, `x1*y12*y34`.
    pub fn label(&self) -> String {
        let blocks = self.blocks();
        let sep = if self.k() >= 10 { "_" } else { "" };
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (b, g) in blocks.iter().zip(&self.genus) {
            if *g > 0 {
                xs.push(if *g == 1 {
                    format!("x{}", b[0])
                } else {
                    format!("x{}^{}", b[0], g)
                });
            }
            if b.len() > 1 {
                let names: Vec<String> = b.iter().map(ToString::to_string).collect();
                ys.push(format!("y{}", names.join(sep)));
            }
        }
        xs.extend(ys);
        if xs.is_empty() {
            "1".into()
        } else {
            xs.join("*")
        }
    }
}

/// Text form: blocks separated by `|`, genus in parentheses when nonzero,
/// e.g. `1,2(1)|3`. The empty cobordism (k = 0) renders as `-`.
impl fmt::Display for Cobordism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 0 {
            return write!(f, "-");
        }
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .zip(&self.genus)
            .map(|(b, g)| {
                let s: Vec<String> = b.iter().map(ToString::to_string).collect();
                if *g > 0 {
                    format!("{}({g})", s.join(","))
                } else {
                    s.join(",")
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Cobordism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cobordism> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Cobordism::identity(0));
        }
        let mut blocks = Vec::new();
        let mut genus = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            let (members, g) = match part.split_once('(') {
                Some((m, rest)) => {
                    let g = rest
                        .strip_suffix(')')
                        .and_then(|x| x.trim().parse::<u32>().ok())
                        .ok_or_else(|| Error::parse(part, "malformed genus"))?;
                    (m, g)
                }
                None => (part, 0),
            };
            let block = members
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(t.trim(), "not a circle label"))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            genus.push(g);
        }
        let k = blocks.iter().map(Vec::len).sum();
        Cobordism::new(k, &blocks, &genus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cobordism {
        s.parse().unwrap()
    }

    #[test]
    fn tube_squared_gains_a_handle() {
        let y = Cobordism::y(2, &[1, 2]).unwrap();
        let yy = y.monoid_mul(&y).unwrap();
        assert_eq!(yy, c("1,2(1)"));
        assert_eq!(yy, y.monoid_mul(&Cobordism::x(2, 1)).unwrap());
    }

    #[test]
    fn tubes_sharing_a_circle_merge() {
        let a = Cobordism::y(3, &[1, 2]).unwrap();
        let b = Cobordism::y(3, &[1, 3]).unwrap();
        assert_eq!(a.monoid_mul(&b).unwrap(), c("1,2,3"));
    }

    #[test]
    fn identity_is_neutral() {
        let a = c("1,3(2)|2|4(1)");
        assert_eq!(Cobordism::identity(4).monoid_mul(&a).unwrap(), a);
        assert!(matches!(
            a.monoid_mul(&Cobordism::identity(3)),
            Err(Error::MismatchedK(4, 3))
        ));
    }

    #[test]
    fn degrees() {
        assert_eq!(Cobordism::identity(3).degree(), 0);
        assert_eq!(Cobordism::x(3, 2).degree(), 2);
        assert_eq!(Cobordism::y(3, &[1, 3]).unwrap().degree(), 2);
        assert_eq!(Cobordism::y(4, &[1, 2, 3, 4]).unwrap().degree(), 6);
    }

    #[test]
    fn gluing_examples() {
        let t = TheorySpec::parse("const beta").unwrap();
        let disk = Cobordism::identity(1);
        assert_eq!(disk.glue_pairing(&disk, &t).unwrap().to_string(), "beta");
        let y = Cobordism::y(2, &[1, 2]).unwrap();
        assert!(y.glue_pairing(&y, &t).unwrap().is_zero());
        let s = TheorySpec::parse("seq a0,a1,a2,a3,a4,a5").unwrap();
        let x2 = c("1(2)");
        let x3 = c("1(3)");
        assert_eq!(x2.glue_pairing(&x3, &s).unwrap().to_string(), "a5");
    }

    #[test]
    fn text_round_trip() {
        for s in ["1,2(1)|3", "1|2|3", "1,2,3,4", "1,4|2(3)|3", "-"] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(c("3|2,1").to_string(), "1,2|3");
        assert!("1,1".parse::<Cobordism>().is_err());
        assert!("1|3".parse::<Cobordism>().is_err());
        assert!("1(x)".parse::<Cobordism>().is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(c("1|2").label(), "1");
        assert_eq!(c("1(1)|2").label(), "x1");
        assert_eq!(c("1,2(1)").label(), "x1*y12");
        assert_eq!(c("1,2|3,4").label(), "y12*y34");
        assert_eq!(c("1(2)|2,3").label(), "x1^2*y23");
    }
}
