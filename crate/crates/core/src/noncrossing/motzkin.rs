//! Motzkin paths and the words encoding noncrossing partitions with blocks
//! of size at most two.
//!
//! `S_n` holds the sorted words with `i ≤ w_i ≤ n` and no letter repeated
//! three times; the reversal `w ↦ (n+1−w_n)…(n+1−w_1)` sends it onto the
//! nondecreasing parking functions with letter multiplicities at most two.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{nc_to_ndpf, ndpf_to_nc, NoncrossingPartition};
use crate::error::{Error, Result};
use crate::parking::{enumerate_ndpf, is_nondecreasing, is_parking};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    U,
    H,
    D,
}

/// A path of `U`, `H`, `D` steps that never goes below zero and ends at zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MotzkinPath(Vec<Step>);

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for s in &steps {
            h += match s {
                Step::U => 1,
                Step::H => 0,
                Step::D => -1,
            };
            if h < 0 {
                break;
            }
        }
        if h != 0 {
            return Err(Error::OutOfDomain(format!(
                "{} is not a Motzkin path",
                MotzkinPath(steps)
            )));
        }
        Ok(MotzkinPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn up_steps(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::U).count()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::U),
                'H' => Ok(Step::H),
                'D' => Ok(Step::D),
                _ => Err(Error::Parse {
                    what: "Motzkin path",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

impl TryFrom<String> for MotzkinPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MotzkinPath> for String {
    fn from(p: MotzkinPath) -> Self {
        p.to_string()
    }
}

fn max_multiplicity(w: &[usize]) -> usize {
    w.chunk_by(|a, b| a == b)
        .map(<[usize]>::len)
        .max()
        .unwrap_or(0)
}

pub fn is_s_word(w: &[usize]) -> bool {
    let n = w.len();
    is_nondecreasing(w)
        && w.iter().enumerate().all(|(i, &x)| i < x && x <= n)
        && max_multiplicity(w) <= 2
}

pub fn is_sprime_word(w: &[usize]) -> bool {
    is_nondecreasing(w) && is_parking(w) && max_multiplicity(w) <= 2
}

fn reverse_complement(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    w.iter().rev().map(|&x| n + 1 - x).collect()
}

/// `S_n → S′_n`.
pub fn s_to_sprime(w: &[usize]) -> Result<Vec<usize>> {
    if !is_s_word(w) {
        return Err(Error::OutOfDomain(format!("{w:?} is not in S_n")));
    }
    Ok(reverse_complement(w))
}

/// `S′_n → S_n`; the reversal is an involution.
pub fn sprime_to_s(w: &[usize]) -> Result<Vec<usize>> {
    if !is_sprime_word(w) {
        return Err(Error::OutOfDomain(format!("{w:?} is not in S'_n")));
    }
    Ok(reverse_complement(w))
}

/// Up step at the smaller element of a pair, down step at the larger,
/// flat step at a singleton.
pub fn partition_to_path(p: &NoncrossingPartition) -> Result<MotzkinPath> {
    let mut steps = vec![Step::H; p.size()];
    for b in p.blocks() {
        match b.as_slice() {
            [_] => {}
            [a, c] => {
                steps[a - 1] = Step::U;
                steps[c - 1] = Step::D;
            }
            _ => {
                return Err(Error::OutOfDomain(format!("{p} has a block of size > 2")));
            }
        }
    }
    MotzkinPath::new(steps)
}

/// Matches each down step with the last open up step.
pub fn path_to_partition(path: &MotzkinPath) -> NoncrossingPartition {
    let mut blocks = Vec::new();
    let mut open = Vec::new();
    for (k, s) in path.0.iter().enumerate() {
        match s {
            Step::U => open.push(k + 1),
            Step::H => blocks.push(vec![k + 1]),
            Step::D => blocks.push(vec![open.pop().expect("valid path"), k + 1]),
        }
    }
    NoncrossingPartition::new(path.len(), blocks).expect("matchings of a path never cross")
}

/// `S′_n → Motzkin(n)`.
pub fn word_to_path(w: &[usize]) -> Result<MotzkinPath> {
    if !is_sprime_word(w) {
        return Err(Error::OutOfDomain(format!("{w:?} is not in S'_n")));
    }
    partition_to_path(&ndpf_to_nc(w)?)
}

/// `Motzkin(n) → S′_n`.
pub fn path_to_word(path: &MotzkinPath) -> Vec<usize> {
    nc_to_ndpf(&path_to_partition(path))
}

pub fn enumerate_s_words(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = enumerate_sprime_words(n)
        .iter()
        .map(|w| reverse_complement(w))
        .collect();
    out.sort();
    out
}

pub fn enumerate_sprime_words(n: usize) -> Vec<Vec<usize>> {
    enumerate_ndpf(n)
        .into_iter()
        .filter(|w| max_multiplicity(w) <= 2)
        .collect()
}

pub fn enumerate_motzkin(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, height: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            if height == 0 {
                out.push(MotzkinPath(cur.clone()));
            }
            return;
        }
        for s in [Step::U, Step::H, Step::D] {
            let h = match s {
                Step::U if height < left - 1 => height + 1,
                Step::H if height < left => height,
                Step::D if height > 0 => height - 1,
                _ => continue,
            };
            cur.push(s);
            go(n, h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of words in `S_n` with exactly `k` repeated letters, by enumeration.
pub fn count_by_repeats(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n / 2 + 1];
    for w in enumerate_s_words(n) {
        let repeats = w.chunk_by(|a, b| a == b).filter(|c| c.len() == 2).count();
        counts[repeats] += 1;
    }
    counts
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut b = BigUint::from(1u32);
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `binom(n, 2k) · C_k`.
pub fn count_closed_form(n: usize, k: usize) -> BigUint {
    if 2 * k > n {
        return BigUint::from(0u32);
    }
    binomial(n, 2 * k) * catalan(k)
}

/// Both sides of `Σ_k 2^{n−2k} binom(n,2k) C_k = C_{n+1}`.
pub fn touchard_sides(n: usize) -> (BigUint, BigUint) {
    let lhs = (0..=n / 2)
        .map(|k| count_closed_form(n, k) << (n - 2 * k))
        .sum();
    (lhs, catalan(n + 1))
}
