//! Integer partitions and their (M,N)-hook decomposition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and strips trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(
                parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                "parts must be weakly decreasing",
            ));
        }
        if parts.contains(&0) {
            return Err(Error::parse("0", "zero part in the middle of a partition"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the Young diagram contains `cell` = (row, col), 0-based.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.part(row) > col
    }

    /// Cells of the Young diagram in row-major order, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
            .collect()
    }

    /// λ_{M+1} ≤ N.
    pub fn fits_hook(&self, m: usize, n: usize) -> bool {
        self.part(m) <= n
    }

    /// λ contains the M×N rectangle, i.e. λ_M ≥ N (vacuous when M or N is 0).
    pub fn contains_rectangle(&self, m: usize, n: usize) -> bool {
        m == 0 || n == 0 || self.part(m - 1) >= n
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Splits λ into κ (inside the M×N rectangle), τ (to the right of it) and
    /// η (below it).
    pub fn hook_decompose(&self, m: usize, n: usize) -> Result<HookDecomposition> {
        if !self.fits_hook(m, n) {
            return Err(Error::HookViolation {
                partition: self.to_string(),
                m,
                n,
            });
        }
        let kappa = Partition::new((0..m).map(|i| self.part(i).min(n)).collect())?;
        let tau = Partition::new((0..m).map(|i| self.part(i).saturating_sub(n)).collect())?;
        let eta = Partition::new(self.parts.iter().skip(m).copied().collect())?;
        let eta_conjugate = eta.conjugate();
        Ok(HookDecomposition {
            kappa,
            tau,
            eta,
            eta_conjugate,
        })
    }
}

/// The pieces of an (M,N)-hook partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookDecomposition {
    pub kappa: Partition,
    pub tau: Partition,
    pub eta: Partition,
    pub eta_conjugate: Partition,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"9,7,3,2,2,2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(t.trim(), "not a nonnegative integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
