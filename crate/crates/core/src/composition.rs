//! Integer compositions: the index set of every basis in the crate.
//!
//! Compositions are ordered by weight first and then in reverse
//! lexicographic order, so that `[3, 21, 12, 111]` is the order used for
//! the degree-3 transition matrices.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`, or the empty composition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Partial sums `i_1, i_1 + i_2, ...`, excluding the full weight.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The unique composition of `n` whose descent set is `descents`.
    pub fn from_descents(descents: &[usize], n: usize) -> Result<Self> {
        let set: BTreeSet<usize> = descents.iter().copied().collect();
        if let Some(&d) = set.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::DescentOutOfRange {
                descent: d,
                weight: n,
            });
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for d in set.into_iter().chain(std::iter::once(n)) {
            parts.push(d - prev);
            prev = d;
        }
        Ok(Composition(parts))
    }

    /// True iff `self` is finer than (or equal to) `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.weight() != coarser.weight() {
            return false;
        }
        let mine: BTreeSet<usize> = self.descent_set().into_iter().collect();
        coarser.descent_set().iter().all(|d| mine.contains(d))
    }

    pub fn mirror(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The composition whose descent set is the complement of `Des(self)`.
    pub fn mirror_conjugate(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Self::empty();
        }
        let des: BTreeSet<usize> = self.descent_set().into_iter().collect();
        let comp: Vec<usize> = (1..n).filter(|d| !des.contains(d)).collect();
        Self::from_descents(&comp, n).expect("complement descents lie in 1..n")
    }

    /// Ribbon conjugate: mirror of the descent-set complement.
    pub fn conjugate(&self) -> Composition {
        self.mirror_conjugate().mirror()
    }

    pub fn double(&self) -> Composition {
        self.scale(2)
    }

    pub fn scale(&self, k: usize) -> Composition {
        assert!(k >= 1, "scaling factor must be positive");
        Composition(self.0.iter().map(|p| p * k).collect())
    }

    /// Divides every part by `k`, if all parts are multiples of `k`.
    pub fn divide(&self, k: usize) -> Option<Composition> {
        if k == 0 || self.0.iter().any(|p| p % k != 0) {
            return None;
        }
        Some(Composition(self.0.iter().map(|p| p / k).collect()))
    }

    pub fn plus_ones(&self) -> Composition {
        Composition(self.0.iter().map(|p| p + 1).collect())
    }

    /// Subtracts one from every entry of a weak composition and drops zeros.
    pub fn reduce(weak: &[usize]) -> Composition {
        Composition(weak.iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
    }

    /// Packs a weak composition by removing its zero entries.
    pub fn pack(weak: &[usize]) -> Composition {
        Composition(weak.iter().copied().filter(|&p| p > 0).collect())
    }

    /// All compositions `J` with `self` finer than `J` (coarsenings, self included).
    pub fn coarsenings(&self) -> Vec<Composition> {
        let des = self.descent_set();
        let n = self.weight();
        subsets(&des)
            .map(|s| Self::from_descents(&s, n).expect("subset of valid descents"))
            .collect()
    }

    /// All compositions finer than (or equal to) `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = all_compositions(p);
            let mut next = Vec::with_capacity(acc.len() * pieces.len());
            for a in &acc {
                for piece in &pieces {
                    let mut v = a.clone();
                    v.extend_from_slice(piece.parts());
                    next.push(v);
                }
            }
            acc = next;
        }
        acc.into_iter().map(Composition).collect()
    }
}

fn subsets(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..(1u64 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect()
    })
}

/// All compositions of `n` in reverse lexicographic order.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1usize << n.saturating_sub(1));
    rec(n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&format_word(&self.0))
    }
}

/// Digit string when every letter is at most 9, comma list otherwise.
pub fn format_word(letters: &[usize]) -> String {
    if letters.iter().all(|&x| x <= 9) {
        letters.iter().map(|x| x.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a digit string ("312") or a comma list ("3,12,1"); "" and "()" are empty.
pub fn parse_word(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .or_else(|| s.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
        .unwrap_or(s)
        .trim();
    if s.is_empty() || s == "∅" {
        return Some(Vec::new());
    }
    if s.contains(',') || s.contains(' ') {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().ok())
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect()
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_word(s).ok_or_else(|| Error::Parse {
            what: "composition",
            input: s.to_string(),
        })?;
        Composition::new(parts)
    }
}
