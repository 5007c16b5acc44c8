//! Noncrossing partitions, their Kreweras complements, and the two
//! encodings used throughout: nondecreasing parking functions and
//! binary trees (see [`tree`]). [`motzkin`] holds the codec for partitions
//! with blocks of size at most two.

pub mod motzkin;
pub mod tree;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{format_word, parse_word, Composition};
use crate::error::{Error, Result};
use crate::parking::{is_nondecreasing, is_parking};
use crate::permutation::Permutation;

/// A noncrossing partition of `1..=n`, blocks sorted internally and by minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn crosses(a: &[usize], b: &[usize]) -> bool {
    // a < b < c < d with a, c in one block and b, d in the other
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    for w in a.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let any_in = b.iter().any(|&x| inside(x, lo, hi));
        let any_out = b.iter().any(|&x| !inside(x, lo, hi));
        if any_in && any_out {
            return true;
        }
    }
    false
}

impl NoncrossingPartition {
    /// Validates that `blocks` cover `1..=n` disjointly without crossings.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidPartition(format!(
                        "{x} is repeated or outside 1..={n}"
                    )));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("{x} is not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        let p = NoncrossingPartition { n, blocks };
        if !p.is_noncrossing() {
            return Err(Error::InvalidPartition(format!("{p} has crossing blocks")));
        }
        Ok(p)
    }

    pub fn singletons(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    pub fn one_block(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: if n == 0 {
                vec![]
            } else {
                vec![(1..=n).collect()]
            },
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_noncrossing(&self) -> bool {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if crosses(a, b) || crosses(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Block sizes ordered by increasing minima.
    pub fn ordered_type(&self) -> Composition {
        Composition::new(self.blocks.iter().map(Vec::len).collect()).expect("nonempty blocks")
    }

    /// Ordered type with one subtracted from each part, zeros removed.
    pub fn reduced_ordered_type(&self) -> Composition {
        Composition::reduce(self.ordered_type().parts())
    }

    /// The permutation whose cycles are the blocks, each read increasingly.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.blocks).expect("blocks partition 1..=n")
    }

    /// The partition into cycles of a permutation; fails if they cross.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        NoncrossingPartition::new(p.size(), p.cycles())
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NoncrossingPartition) -> bool {
        let mut owner = vec![0; self.n + 1];
        for (k, b) in other.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = k;
            }
        }
        self.n == other.n
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&x| owner[x] == owner[b[0]]))
    }
}

impl fmt::Display for NoncrossingPartition {
    /// Minima-sorted blocks separated by bars, e.g. `157|234|6|89`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n > 9;
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if wide {
                    b.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                } else {
                    format_word(b)
                }
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "noncrossing partition",
            input: s.to_string(),
        };
        let s = s.trim();
        if s.is_empty() {
            return Ok(NoncrossingPartition::singletons(0));
        }
        // with any comma present every block is a comma list
        let wide = s.contains(',');
        let blocks = s
            .split('|')
            .map(|b| {
                if wide && !b.contains(',') {
                    b.trim().parse().ok().map(|x| vec![x])
                } else {
                    parse_word(b).filter(|w| !w.is_empty())
                }
                .ok_or_else(bad)
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        NoncrossingPartition::new(n, blocks)
    }
}

impl TryFrom<String> for NoncrossingPartition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<NoncrossingPartition> for String {
    fn from(p: NoncrossingPartition) -> Self {
        p.to_string()
    }
}

/// All noncrossing partitions of `1..=n`: choose the block of the smallest
/// element, then fill each gap independently.
pub fn enumerate_nc(n: usize) -> Vec<NoncrossingPartition> {
    fn interval(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
        if lo > hi {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        // choose the rest of lo's block as an increasing sequence
        fn extend(
            block: &mut Vec<usize>,
            hi: usize,
            acc: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            let last = *block.last().expect("block holds its minimum");
            // close the block here: the tail after `last` is free
            for tail in interval(last + 1, hi) {
                let mut parts = acc.clone();
                parts.push(block.clone());
                parts.extend(tail);
                out.push(parts);
            }
            for next in last + 1..=hi {
                for gap in interval(last + 1, next - 1) {
                    let mut acc2 = acc.clone();
                    acc2.extend(gap);
                    block.push(next);
                    extend(block, hi, &mut acc2, out);
                    block.pop();
                }
            }
        }
        extend(&mut vec![lo], hi, &mut Vec::new(), &mut out);
        out
    }
    let mut all: Vec<NoncrossingPartition> = interval(1, n)
        .into_iter()
        .map(|blocks| NoncrossingPartition::new(n, blocks).expect("noncrossing by construction"))
        .collect();
    all.sort();
    all
}

/// Kreweras complement: the partition into cycles of `w_π^{−1} γ_n`.
pub fn kreweras(p: &NoncrossingPartition) -> NoncrossingPartition {
    let w = p
        .to_permutation()
        .inverse()
        .compose(&Permutation::long_cycle(p.n));
    NoncrossingPartition::from_permutation(&w)
        .expect("the Kreweras complement of a noncrossing partition is noncrossing")
}

/// The partition whose block minima are the letters of `w`, each repeated
/// as many times as the block size.
pub fn ndpf_to_nc(w: &[usize]) -> Result<NoncrossingPartition> {
    if !is_nondecreasing(w) || !is_parking(w) {
        return Err(Error::NotParking(w.to_vec()));
    }
    let n = w.len();
    let mut size = vec![0usize; n + 1];
    for &x in w {
        size[x] += 1;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // open blocks with their remaining capacity
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for p in 1..=n {
        if size[p] > 0 {
            blocks.push(vec![p]);
            if size[p] > 1 {
                stack.push((blocks.len() - 1, size[p] - 1));
            }
        } else {
            let (b, cap) = stack
                .last_mut()
                .ok_or_else(|| Error::NotParking(w.to_vec()))?;
            blocks[*b].push(p);
            *cap -= 1;
            if *cap == 0 {
                stack.pop();
            }
        }
    }
    NoncrossingPartition::new(n, blocks)
}

/// Block minima repeated by block sizes, sorted.
pub fn nc_to_ndpf(p: &NoncrossingPartition) -> Vec<usize> {
    let mut w: Vec<usize> = p
        .blocks
        .iter()
        .flat_map(|b| std::iter::repeat(b[0]).take(b.len()))
        .collect();
    w.sort_unstable();
    w
}

/// The permutation `w_π` whose cycles are the blocks of `p`.
pub fn nc_to_permutation(p: &NoncrossingPartition) -> Permutation {
    p.to_permutation()
}

/// Two partitions of `[12]` with exchanged full types: the ordered type of
/// each equals the ordered type of the other's Kreweras complement, yet
/// neither complement is the other partition. Kept as a test case for
/// candidate type-exchanging involutions.
pub fn example_pair() -> (NoncrossingPartition, NoncrossingPartition) {
    let p = Permutation::new(vec![4, 2, 3, 5, 9, 6, 8, 7, 1, 12, 11, 10]).expect("valid");
    let q = Permutation::new(vec![7, 2, 4, 5, 3, 6, 8, 1, 12, 11, 10, 9]).expect("valid");
    (
        NoncrossingPartition::from_permutation(&p).expect("noncrossing"),
        NoncrossingPartition::from_permutation(&q).expect("noncrossing"),
    )
}
