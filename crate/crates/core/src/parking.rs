//! Nondecreasing parking functions, profiles and biprofiles, the C / C′
//! codecs between profiles and compositions, and compatible pairs.
//!
//! Words are plain slices of positive letters. Functions that need a
//! nondecreasing word say so and return [`Error::NotNondecreasing`] otherwise.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{all_compositions, format_word, Composition};
use crate::error::{Error, Result};

pub fn is_nondecreasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

fn require_nondecreasing(w: &[usize]) -> Result<()> {
    if !is_nondecreasing(w) || w.contains(&0) {
        return Err(Error::NotNondecreasing(w.to_vec()));
    }
    Ok(())
}

/// Sorted rearrangement satisfies `a_i ≤ k(i−1)+1`.
pub fn is_k_parking(w: &[usize], k: usize) -> bool {
    let mut a = w.to_vec();
    a.sort_unstable();
    a.iter().enumerate().all(|(i, &x)| x >= 1 && x <= k * i + 1)
}

pub fn is_parking(w: &[usize]) -> bool {
    is_k_parking(w, 1)
}

/// All nondecreasing parking functions of length `n`, in lexicographic order.
pub fn enumerate_ndpf(n: usize) -> Vec<Vec<usize>> {
    enumerate_k_ndpf(n, 1)
}

/// All nondecreasing `k`-parking functions of length `n`, in lexicographic order.
pub fn enumerate_k_ndpf(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = w.len();
        if i == n {
            out.push(w.clone());
            return;
        }
        let lo = w.last().copied().unwrap_or(1);
        for x in lo..=k * i + 1 {
            w.push(x);
            rec(n, k, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Number of occurrences of each letter 1..=len.
pub fn evaluation(w: &[usize], len: usize) -> Vec<usize> {
    let mut ev = vec![0; len];
    for &x in w {
        if x >= 1 && x <= len {
            ev[x - 1] += 1;
        }
    }
    ev
}

/// The evaluation with zeros removed.
pub fn type_of(w: &[usize]) -> Composition {
    let max = w.iter().copied().max().unwrap_or(0);
    Composition::pack(&evaluation(w, max))
}

/// Evaluation over the letters 1..=kn+1.
pub fn k_evaluation(w: &[usize], k: usize) -> Vec<usize> {
    evaluation(w, k * w.len() + 1)
}

/// The partial sums `k(e_1+⋯+e_i) − i` are nonnegative for `i < len(e)`.
pub fn lukasiewicz(ev: &[usize], k: usize) -> bool {
    let mut acc: i64 = 0;
    for (i, &e) in ev.iter().enumerate() {
        acc += (k * e) as i64 - 1;
        if i + 1 < ev.len() && acc < 0 {
            return false;
        }
    }
    acc == -1
}

/// Number of nondecreasing parking functions of type `t`.
///
/// The distinct letters `a_1 < ⋯ < a_r` must satisfy `a_1 = 1` and
/// `a_j ≤ 1 + t_1 + ⋯ + t_{j−1}`.
pub fn count_ndpf_of_type(t: &Composition) -> u128 {
    fn rec(parts: &[usize], j: usize, prev: usize, partial: usize) -> u128 {
        if j == parts.len() {
            return 1;
        }
        (prev + 1..=partial + 1)
            .map(|a| rec(parts, j + 1, a, partial + parts[j]))
            .sum()
    }
    match t.parts().first() {
        None => 1,
        Some(&first) => rec(t.parts(), 1, 1, first),
    }
}

/// Parkization of a nondecreasing word: repeatedly find the smallest `d`
/// with fewer than `d` letters `≤ d` and lower every letter above `d` by one.
pub fn parkize(w: &[usize]) -> Result<Vec<usize>> {
    require_nondecreasing(w)?;
    let mut v = w.to_vec();
    loop {
        let gap = (1..=v.len()).find(|&d| v.iter().filter(|&&x| x <= d).count() < d);
        match gap {
            None => return Ok(v),
            Some(d) => v.iter_mut().filter(|x| **x > d).for_each(|x| *x -= 1),
        }
    }
}

/// Positions `p` (1 ≤ p < n) with `w_{p+1} = p+1`, read as a composition of `n`.
pub fn breakpoints(w: &[usize]) -> Result<Composition> {
    if !is_nondecreasing(w) || !is_parking(w) {
        return Err(Error::NotParking(w.to_vec()));
    }
    let n = w.len();
    let cuts: Vec<usize> = (1..n).filter(|&p| w[p] == p + 1).collect();
    Composition::from_descents(&cuts, n)
}

/// Starts and lengths of the maximal factorization into shifted parking functions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Profile {
    starts: Vec<usize>,
    lengths: Vec<usize>,
}

impl Profile {
    /// Checks `s_{i+1} > s_i + c_i` and positivity.
    pub fn new(starts: Vec<usize>, lengths: Vec<usize>) -> Result<Self> {
        let bad = |why: &str| {
            Err(Error::InvalidArgument(format!(
                "not a profile ({}; {}): {why}",
                format_word(&starts),
                format_word(&lengths)
            )))
        };
        if starts.len() != lengths.len() {
            return bad("rows differ in length");
        }
        if starts.contains(&0) || lengths.contains(&0) {
            return bad("entries must be positive");
        }
        for i in 1..starts.len() {
            if starts[i] <= starts[i - 1] + lengths[i - 1] {
                return bad("starts too close");
            }
        }
        Ok(Profile { starts, lengths })
    }

    pub fn empty() -> Self {
        Profile {
            starts: Vec::new(),
            lengths: Vec::new(),
        }
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Total number of letters of any word with this profile.
    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// The lengths as a composition (the "bottom" of the biword).
    pub fn bottom(&self) -> Composition {
        Composition::new(self.lengths.clone()).expect("positive lengths")
    }

    /// The lexicographically smallest word with this profile, `s_1^{c_1}⋯s_k^{c_k}`.
    pub fn min_word(&self) -> Vec<usize> {
        self.starts
            .iter()
            .zip(&self.lengths)
            .flat_map(|(&s, &c)| std::iter::repeat(s).take(c))
            .collect()
    }

    fn shifted_tail(&self, shift: usize) -> Profile {
        Profile {
            starts: self.starts[1..].iter().map(|s| s - shift).collect(),
            lengths: self.lengths[1..].to_vec(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({};{})",
            format_word(&self.starts),
            format_word(&self.lengths)
        )
    }
}

/// Greedy factorization of a nondecreasing word: each factor is the longest
/// prefix that, shifted down by its first letter minus one, is parking.
pub fn profile(w: &[usize]) -> Result<Profile> {
    require_nondecreasing(w)?;
    let mut starts = Vec::new();
    let mut lengths = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let s = w[i];
        let mut len = 1;
        while i + len < w.len() && w[i + len] - (s - 1) <= len + 1 {
            len += 1;
        }
        starts.push(s);
        lengths.push(len);
        i += len;
    }
    Ok(Profile { starts, lengths })
}

/// The factors of the profile factorization.
pub fn factorize_word(w: &[usize]) -> Result<Vec<Vec<usize>>> {
    let p = profile(w)?;
    let mut out = Vec::with_capacity(p.len());
    let mut i = 0;
    for &c in p.lengths() {
        out.push(w[i..i + c].to_vec());
        i += c;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Biprofile {
    pub left: Profile,
    pub right: Profile,
}

impl Biprofile {
    pub fn new(left: Profile, right: Profile) -> Self {
        Biprofile { left, right }
    }

    pub fn of_words(u: &[usize], v: &[usize]) -> Result<Self> {
        Ok(Biprofile {
            left: profile(u)?,
            right: profile(v)?,
        })
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    pub fn swap(&self) -> Self {
        Biprofile {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// The merged biword, sorted by start, left biletters first on ties.
    pub fn joint(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<(usize, u8, usize)> = Vec::new();
        for (&s, &c) in self.left.starts.iter().zip(&self.left.lengths) {
            all.push((s, 0, c));
        }
        for (&s, &c) in self.right.starts.iter().zip(&self.right.lengths) {
            all.push((s, 1, c));
        }
        all.sort();
        all.into_iter().map(|(s, _, c)| (s, c)).collect()
    }
}

impl fmt::Display for Biprofile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |p: &Profile| {
            let w = p.min_word();
            if w.is_empty() {
                "∅".to_string()
            } else {
                format_word(&w)
            }
        };
        write!(f, "({}, {})", word(&self.left), word(&self.right))
    }
}

/// `x_m ≤ y_1 + ⋯ + y_{m−1} + 1` on the joint biword.
pub fn is_parking_biprofile(b: &Biprofile) -> bool {
    let mut total = 0;
    for (x, y) in b.joint() {
        if x > total + 1 {
            return false;
        }
        total += y;
    }
    true
}

fn nondecreasing_words(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, max: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.len() == len {
            out.push(w.clone());
            return;
        }
        for x in w.last().copied().unwrap_or(1)..=max {
            w.push(x);
            rec(len, max, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

/// All parking biprofiles with `n` letters in total.
pub fn enumerate_parking_biprofiles(n: usize) -> Vec<Biprofile> {
    let mut minimal: Vec<Vec<Profile>> = Vec::with_capacity(n + 1);
    for len in 0..=n {
        let mut ps: BTreeSet<Profile> = BTreeSet::new();
        for w in nondecreasing_words(len, n.max(1)) {
            ps.insert(profile(&w).expect("nondecreasing"));
        }
        minimal.push(ps.into_iter().collect());
    }
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for left in &minimal[a] {
            for right in &minimal[n - a] {
                let b = Biprofile::new(left.clone(), right.clone());
                if is_parking_biprofile(&b) {
                    out.push(b);
                }
            }
        }
    }
    out
}

/// The map C: profile to composition, padded with ones to weight `n`.
pub fn c_map(p: &Profile, n: usize) -> Result<Composition> {
    let mut parts = Vec::new();
    let mut cur = p.clone();
    while !cur.is_empty() {
        if cur.starts[0] == 1 {
            let c = cur.lengths[0];
            parts.push(1 + c);
            cur = cur.shifted_tail(c + 1);
        } else {
            parts.push(1);
            cur = Profile {
                starts: cur.starts.iter().map(|s| s - 1).collect(),
                lengths: cur.lengths,
            };
        }
    }
    let weight: usize = parts.iter().sum();
    if weight > n {
        let needed = p
            .starts
            .last()
            .zip(p.lengths.last())
            .map_or(0, |(s, c)| s + c);
        return Err(Error::ProfileTooLong { needed, n });
    }
    parts.extend(std::iter::repeat(1).take(n - weight));
    Composition::new(parts)
}

/// The inverse map C′: biletters `(1 + i_1 + ⋯ + i_{j−1}; i_j − 1)`, zeros dropped.
pub fn c_inverse(i: &Composition) -> Profile {
    let mut starts = Vec::new();
    let mut lengths = Vec::new();
    let mut d = 1;
    for &p in i.parts() {
        if p > 1 {
            starts.push(d);
            lengths.push(p - 1);
        }
        d += p;
    }
    Profile { starts, lengths }
}

/// The pair of compositions of weight `size + 1` encoding a biprofile.
pub fn biprofile_to_pair(b: &Biprofile) -> Result<(Composition, Composition)> {
    let n = b.size() + 1;
    Ok((c_map(&b.left, n)?, c_map(&b.right, n)?))
}

/// Same weight `n`, `ℓ(I)+ℓ(J) = n+1`, and the sorted merged descents satisfy `z_ℓ ≥ ℓ`.
pub fn is_compatible(i: &Composition, j: &Composition) -> bool {
    let n = i.weight();
    if j.weight() != n || i.len() + j.len() != n + 1 {
        return false;
    }
    let mut z = i.descent_set();
    z.extend(j.descent_set());
    z.sort_unstable();
    z.iter().enumerate().all(|(l, &x)| x > l)
}

/// All compatible pairs of weight `n`.
pub fn compatible_pairs(n: usize) -> Vec<(Composition, Composition)> {
    let comps = all_compositions(n);
    let mut out = Vec::new();
    for i in &comps {
        for j in &comps {
            if is_compatible(i, j) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

/// Every `J` compatible with `I`, from the top element `mirror_conjugate(I)`
/// closed under `c_{i−1} += 1, c_i −= 1` (for `i > 1`, `c_i > 1`), in
/// lexicographic order.
pub fn compatible_with(i: &Composition) -> Vec<Composition> {
    let top = i.mirror_conjugate().into_parts();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![top];
    while let Some(c) = stack.pop() {
        if !seen.insert(c.clone()) {
            continue;
        }
        for k in 1..c.len() {
            if c[k] > 1 {
                let mut d = c.clone();
                d[k - 1] += 1;
                d[k] -= 1;
                stack.push(d);
            }
        }
    }
    seen.into_iter()
        .map(|p| Composition::new(p).expect("positive parts"))
        .collect()
}

/// Sends a compatible pair of weight `n` to a nondecreasing parking function of length `n`.
pub fn dumb_bijection(i: &Composition, j: &Composition) -> Result<Vec<usize>> {
    if !is_compatible(i, j) {
        return Err(Error::Incompatible {
            left: i.to_string(),
            right: j.to_string(),
        });
    }
    let n = i.weight();
    let mut w: Vec<usize> = i.descent_set().iter().map(|d| 2 * d - 1).collect();
    w.extend(j.descent_set().iter().map(|d| 2 * d));
    w.push(2 * n - 1);
    w.sort_unstable();
    let mut out = vec![0; n];
    for (idx, &wi) in w.iter().enumerate() {
        let i1 = idx + 1;
        out[n - i1] = n + i1 - wi;
    }
    Ok(out)
}

pub fn dumb_bijection_inverse(w: &[usize]) -> Result<(Composition, Composition)> {
    if !is_nondecreasing(w) || !is_parking(w) || w.is_empty() {
        return Err(Error::NotParking(w.to_vec()));
    }
    let n = w.len();
    let mut orig: Vec<usize> = Vec::with_capacity(n);
    for i1 in 1..=n {
        let v = (n + i1)
            .checked_sub(w[n - i1])
            .ok_or_else(|| Error::NotParking(w.to_vec()))?;
        orig.push(v);
    }
    orig.sort_unstable();
    if orig.pop() != Some(2 * n - 1) {
        return Err(Error::OutOfDomain(format!(
            "{} is not in the image of compatible pairs",
            format_word(w)
        )));
    }
    let di: Vec<usize> = orig
        .iter()
        .filter(|v| *v % 2 == 1)
        .map(|v| (v + 1) / 2)
        .collect();
    let dj: Vec<usize> = orig.iter().filter(|v| *v % 2 == 0).map(|v| v / 2).collect();
    let bad = || {
        Error::OutOfDomain(format!(
            "{} is not in the image of compatible pairs",
            format_word(w)
        ))
    };
    let i = Composition::from_descents(&di, n).map_err(|_| bad())?;
    let j = Composition::from_descents(&dj, n).map_err(|_| bad())?;
    if !is_compatible(&i, &j) || dumb_bijection(&i, &j)? != w {
        return Err(bad());
    }
    Ok((i, j))
}
