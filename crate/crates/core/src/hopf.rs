//! The coproduct of `g_n` on the `g⊗g` basis.
//!
//! Three routes compute the same tensor: the algebraic one through the S
//! basis, a tally over parking biprofiles, and a tally over noncrossing
//! partitions of `[n+1]` paired with their Kreweras complements. The word
//! level coproduct of the P basis explains why the biprofile tally works;
//! the commutative image is also read off the branch-length series of
//! binary trees.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{coproduct, write_signed_term, NSymBasis, NSymElement, TensorElement};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::noncrossing::tree::{all_trees, tree_phi, BinaryTree};
use crate::noncrossing::{enumerate_nc, kreweras, NoncrossingPartition};
use crate::parking::{
    enumerate_ndpf, enumerate_parking_biprofiles, is_nondecreasing, is_parking, parkize, profile,
    type_of, Biprofile,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaRoute {
    Algebraic,
    Biprofile,
    Noncrossing,
}

impl DeltaRoute {
    pub const ALL: [DeltaRoute; 3] = [
        DeltaRoute::Algebraic,
        DeltaRoute::Biprofile,
        DeltaRoute::Noncrossing,
    ];
}

pub fn delta_g(n: usize, route: DeltaRoute) -> Result<TensorElement> {
    match route {
        DeltaRoute::Algebraic => delta_g_algebraic(n),
        DeltaRoute::Biprofile => Ok(delta_g_biprofiles(n)),
        DeltaRoute::Noncrossing => Ok(delta_g_noncrossing(n)),
    }
}

/// `g_n` expanded on S, the S coproduct applied, both legs converted to G.
pub fn delta_g_algebraic(n: usize) -> Result<TensorElement> {
    let g = NSymElement::generator(NSymBasis::G, n).convert(NSymBasis::S)?;
    coproduct(&g)?.convert(NSymBasis::G, NSymBasis::G)
}

/// One `G^I ⊗ G^J` per parking biprofile, `I`, `J` its two length words.
pub fn biprofile_terms(n: usize) -> Vec<(Biprofile, Composition, Composition)> {
    enumerate_parking_biprofiles(n)
        .into_iter()
        .map(|b| {
            let i = lengths(&b.left);
            let j = lengths(&b.right);
            (b, i, j)
        })
        .collect()
}

fn lengths(p: &crate::parking::Profile) -> Composition {
    Composition::new(p.lengths().to_vec()).expect("profile lengths are positive")
}

pub fn delta_g_biprofiles(n: usize) -> TensorElement {
    let mut out = TensorElement::zero(NSymBasis::G, NSymBasis::G);
    for (_, i, j) in biprofile_terms(n) {
        out.add_term(i, j, BigInt::one());
    }
    out
}

/// `Σ_{π ∈ NC_{n+1}} g^{t̄(π)} ⊗ g^{t̄(K(π))}` with reduced ordered types.
pub fn delta_g_noncrossing(n: usize) -> TensorElement {
    let mut out = TensorElement::zero(NSymBasis::G, NSymBasis::G);
    for p in enumerate_nc(n + 1) {
        let k = kreweras(&p);
        out.add_term(
            p.reduced_ordered_type(),
            k.reduced_ordered_type(),
            BigInt::one(),
        );
    }
    out
}

/// The partitions of `[n+1]` counted by the coefficient of `g^I ⊗ g^J`.
pub fn witnesses(n: usize, i: &Composition, j: &Composition) -> Vec<NoncrossingPartition> {
    enumerate_nc(n + 1)
        .into_iter()
        .filter(|p| &p.reduced_ordered_type() == i && &kreweras(p).reduced_ordered_type() == j)
        .collect()
}

fn check_ndpf(pi: &[usize]) -> Result<()> {
    if is_nondecreasing(pi) && is_parking(pi) {
        Ok(())
    } else {
        Err(Error::NotParking(pi.to_vec()))
    }
}

/// All splits of the letters of `pi` into two nondecreasing words,
/// each once: the unparkized coproduct of `P^pi`.
pub fn unparkized_terms(pi: &[usize]) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    check_ndpf(pi)?;
    let runs: Vec<&[usize]> = pi.chunk_by(|a, b| a == b).collect();
    let mut out = vec![(Vec::new(), Vec::new())];
    for run in runs {
        let mut next = Vec::with_capacity(out.len() * (run.len() + 1));
        for (u, v) in &out {
            for k in 0..=run.len() {
                let mut u2: Vec<usize> = u.clone();
                let mut v2: Vec<usize> = v.clone();
                u2.extend_from_slice(&run[..k]);
                v2.extend_from_slice(&run[k..]);
                next.push((u2, v2));
            }
        }
        out = next;
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(out)
}

/// `ΔP^pi = Σ P^{Park u} ⊗ P^{Park v}` with multiplicities.
pub fn coproduct_p(pi: &[usize]) -> Result<Vec<(Vec<usize>, Vec<usize>, usize)>> {
    let mut tally: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for (u, v) in unparkized_terms(pi)? {
        let pu = parkize(&u)?;
        let pv = parkize(&v)?;
        *tally.entry((pu.len(), pu, pv)).or_default() += 1;
    }
    Ok(tally.into_iter().map(|((_, u, v), m)| (u, v, m)).collect())
}

/// All unparkized terms of `ΔG_n`, i.e. pairs of nondecreasing words whose
/// concatenation is a parking function.
pub fn delta_big_g_words(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    enumerate_ndpf(n)
        .iter()
        .flat_map(|pi| unparkized_terms(pi).expect("enumerated words are NDPFs"))
        .collect()
}

/// The image of the word-level `ΔG_n` under `P^π ↦ S^{t(π)}` on both legs.
pub fn delta_g_from_words(n: usize) -> TensorElement {
    let mut out = TensorElement::zero(NSymBasis::S, NSymBasis::S);
    for (u, v) in delta_big_g_words(n) {
        let tu = type_of(&parkize(&u).expect("nondecreasing"));
        let tv = type_of(&parkize(&v).expect("nondecreasing"));
        out.add_term(tu, tv, BigInt::one());
    }
    out
}

/// The distinct biprofiles of the word-level terms of `ΔG_n`.
pub fn biprofiles_of_words(n: usize) -> Vec<Biprofile> {
    let mut seen: Vec<Biprofile> = delta_big_g_words(n)
        .iter()
        .map(|(u, v)| Biprofile::new(profile(u).expect("sorted"), profile(v).expect("sorted")))
        .collect();
    seen.sort();
    seen.dedup();
    seen
}

/// `(Δ⊗id)Δ g_n = (id⊗Δ)Δ g_n` on the `g⊗g⊗g` basis.
pub fn coassociativity_check(n: usize) -> Result<bool> {
    type Triple = BTreeMap<(Composition, Composition, Composition), BigInt>;
    let d = delta_g_algebraic(n)?;
    let delta_of = |c: &Composition| coproduct(&NSymElement::monomial(NSymBasis::G, c.clone()));
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in d.terms() {
        for ((x, y), e) in delta_of(a)?.terms() {
            *left.entry((x.clone(), y.clone(), b.clone())).or_default() += c * e;
        }
        for ((x, y), e) in delta_of(b)?.terms() {
            *right.entry((a.clone(), x.clone(), y.clone())).or_default() += c * e;
        }
    }
    left.retain(|_, v| !v.is_zero());
    right.retain(|_, v| !v.is_zero());
    Ok(left == right)
}

fn partition(mut parts: Vec<usize>) -> Composition {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Composition::new(parts).expect("positive parts")
}

/// A polynomial in commuting markers `u_m`, `v_m` (`m ≥ 1`), a monomial
/// being a pair of partitions. `u_m` and `v_m` have degree `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MarkerPolynomial {
    terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl MarkerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(Composition::empty(), Composition::empty(), BigInt::one());
        p
    }

    pub fn u(m: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(partition(vec![m]), Composition::empty(), BigInt::one());
        p
    }

    pub fn v(m: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(Composition::empty(), partition(vec![m]), BigInt::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Composition, v: &Composition) -> BigInt {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Composition, v: Composition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((u, v)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    /// Product keeping only monomials of degree at most `max_degree`.
    pub fn multiply(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                if u1.weight() + v1.weight() + u2.weight() + v2.weight() > max_degree {
                    continue;
                }
                let u = partition([u1.parts(), u2.parts()].concat());
                let v = partition([v1.parts(), v2.parts()].concat());
                out.add_term(u, v, c1 * c2);
            }
        }
        out
    }

    pub fn component(&self, d: usize) -> Self {
        MarkerPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|((u, v), _)| u.weight() + v.weight() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MarkerPolynomial {
    /// Low degrees first, `u` before `v`: `u_2 + 3*u_1v_1 + v_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|((u, v), _)| (u.weight() + v.weight(), Reverse(u.clone())));
        for (n, ((u, v), c)) in keys.into_iter().enumerate() {
            let mut mon = String::new();
            for (name, p) in [("u", u), ("v", v)] {
                for run in p.parts().chunk_by(|a, b| a == b) {
                    mon.push_str(&format!("{name}_{}", run[0]));
                    if run.len() > 1 {
                        mon.push_str(&format!("^{}", run.len()));
                    }
                }
            }
            write_signed_term(f, n == 0, c, (!mon.is_empty()).then_some(mon.as_str()))?;
        }
        Ok(())
    }
}

/// `Π_{left branches} u_{e} · Π_{right branches} v_{e}`, `e` the number of
/// edges of the branch and `u_0 = v_0 = 1`.
pub fn tree_weight(t: &BinaryTree) -> (Composition, Composition) {
    let (l, r) = tree_phi(t);
    (
        partition(l.reduced_ordered_type().into_parts()),
        partition(r.reduced_ordered_type().into_parts()),
    )
}

/// `W = Σ_t w(t; u, v)` over nonempty trees, up to degree `max_degree`
/// (a tree with `d+1` nodes has degree `d`), from the system
/// `V = Σ v_n U^n`, `U = Σ u_n V^n`, `W = UV`.
pub fn branch_series(max_degree: usize) -> MarkerPolynomial {
    // components by degree
    let mut u: Vec<MarkerPolynomial> = vec![MarkerPolynomial::one()];
    let mut v: Vec<MarkerPolynomial> = vec![MarkerPolynomial::one()];
    let sum = |parts: &[MarkerPolynomial]| {
        parts
            .iter()
            .fold(MarkerPolynomial::zero(), |acc, p| acc.add(p))
    };
    for d in 1..=max_degree {
        let (mut ud, mut vd) = (MarkerPolynomial::zero(), MarkerPolynomial::zero());
        let (su, sv) = (sum(&u), sum(&v));
        let (mut pu, mut pv) = (MarkerPolynomial::one(), MarkerPolynomial::one());
        for n in 1..=d {
            pu = pu.multiply(&su, d - n);
            pv = pv.multiply(&sv, d - n);
            ud = ud.add(&MarkerPolynomial::u(n).multiply(&pv.component(d - n), d));
            vd = vd.add(&MarkerPolynomial::v(n).multiply(&pu.component(d - n), d));
        }
        u.push(ud);
        v.push(vd);
    }
    sum(&u).multiply(&sum(&v), max_degree)
}

/// `Δg_n` in the commutative image: pairs of partitions with coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommutativeRoute {
    /// Sort the indices of the noncommutative tensor.
    Sorting,
    /// Degree-`n` part of the branch-length series.
    System,
    /// Direct sum of tree weights over trees with `n+1` nodes.
    Trees,
}

impl CommutativeRoute {
    pub const ALL: [CommutativeRoute; 3] = [
        CommutativeRoute::Sorting,
        CommutativeRoute::System,
        CommutativeRoute::Trees,
    ];
}

pub fn delta_g_commutative(n: usize, route: CommutativeRoute) -> MarkerPolynomial {
    let mut out = MarkerPolynomial::zero();
    match route {
        CommutativeRoute::Sorting => {
            for ((i, j), c) in delta_g_noncrossing(n).terms() {
                out.add_term(
                    partition(i.parts().to_vec()),
                    partition(j.parts().to_vec()),
                    c.clone(),
                );
            }
        }
        CommutativeRoute::System => out = branch_series(n).component(n),
        CommutativeRoute::Trees => {
            for t in all_trees(n + 1) {
                let (u, v) = tree_weight(&t);
                out.add_term(u, v, BigInt::one());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noncrossing::tree::BinaryTree;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn delta_g3() {
        let d = delta_g_algebraic(3).unwrap();
        let mut expected = TensorElement::zero(NSymBasis::G, NSymBasis::G);
        for (l, r, k) in [
            ("3", "", 1),
            ("2", "1", 4),
            ("11", "1", 2),
            ("1", "2", 4),
            ("1", "11", 2),
            ("", "3", 1),
        ] {
            expected.add_term(c(l), c(r), BigInt::from(k));
        }
        assert_eq!(d, expected);
        assert_eq!(d.coeff(&c("2"), &c("1")), BigInt::from(4));
        assert_eq!(d.coeff(&c("11"), &c("1")), BigInt::from(2));
        assert_eq!(d.coeff(&c("1"), &c("11")), BigInt::from(2));
        assert_eq!(d.len(), 6);
        assert_eq!(
            delta_g_algebraic(1).unwrap().to_string(),
            "1 ⊗ G[1] + G[1] ⊗ 1"
        );
    }

    #[test]
    fn three_routes_agree() {
        for n in 0..=6 {
            let a = delta_g_algebraic(n).unwrap();
            assert_eq!(delta_g_biprofiles(n), a, "biprofiles at {n}");
            assert_eq!(delta_g_noncrossing(n), a, "noncrossing at {n}");
            assert_eq!(a.swap(), a);
        }
        let d5 = delta_g_noncrossing(5);
        assert_eq!(d5.coeff(&c("12"), &c("11")), BigInt::from(7));
        assert_eq!(d5.coeff(&c("21"), &c("11")), BigInt::from(11));
        assert_eq!(witnesses(5, &c("12"), &c("11")).len(), 7);
        assert_eq!(biprofile_terms(3).len(), 14);
        assert_eq!(biprofile_terms(4).len(), 42);
        assert_eq!(delta_big_g_words(2).len(), 7);
        assert_eq!(delta_g_biprofiles(0).to_string(), "1 ⊗ 1");
    }

    #[test]
    fn terms_are_bihomogeneous() {
        for n in 1..=6 {
            for ((i, j), _) in delta_g_noncrossing(n).terms() {
                assert_eq!(i.weight() + j.weight(), n);
            }
        }
        let full = NoncrossingPartition::one_block(4);
        assert_eq!(witnesses(3, &c("3"), &Composition::empty()), vec![full]);
    }

    #[test]
    fn coassociative() {
        for n in 0..=5 {
            assert!(coassociativity_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn p_coproduct_example() {
        let terms = coproduct_p(&[1, 1, 2, 4]).unwrap();
        let find = |u: &[usize], v: &[usize]| {
            terms
                .iter()
                .find(|(a, b, _)| a == u && b == v)
                .map(|t| t.2)
                .unwrap_or(0)
        };
        assert_eq!(find(&[1], &[1, 1, 2]), 1);
        assert_eq!(find(&[1], &[1, 1, 3]), 1);
        assert_eq!(find(&[1], &[1, 2, 3]), 1);
        assert_eq!(find(&[1, 1], &[1, 2]), 1);
        assert_eq!(find(&[1, 2], &[1, 1]), 1);
        assert_eq!(find(&[1, 2], &[1, 2]), 2);
        assert_eq!(find(&[], &[1, 1, 2, 4]), 1);
        assert_eq!(terms.iter().map(|t| t.2).sum::<usize>(), 12);

        let raw = unparkized_terms(&[1, 1, 2, 4]).unwrap();
        assert_eq!(raw.len(), 12);
        assert!(raw.contains(&(vec![1, 4], vec![1, 2])));
        assert!(raw.contains(&(vec![2, 4], vec![1, 1])));
        assert_eq!(
            unparkized_terms(&[1]).unwrap(),
            vec![(vec![], vec![1]), (vec![1], vec![])]
        );
        assert!(coproduct_p(&[2, 2]).is_err());
    }

    #[test]
    fn word_level_coproduct() {
        for n in 0..=6 {
            let words = delta_big_g_words(n);
            // each split occurs once
            let mut sorted = words.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), words.len());
            assert_eq!(biprofiles_of_words(n), {
                let mut b = enumerate_parking_biprofiles(n);
                b.sort();
                b
            });
            let s = delta_g_algebraic(n)
                .unwrap()
                .convert(NSymBasis::S, NSymBasis::S)
                .unwrap();
            assert_eq!(delta_g_from_words(n), s);
        }
    }

    #[test]
    fn commutative_routes() {
        let w = branch_series(2);
        assert_eq!(w.to_string(), "1 + u_1 + v_1 + u_2 + 3*u_1v_1 + v_2");
        let t: BinaryTree = "(((..)(.((..).)))(((.((..).))(..)).))".parse().unwrap();
        let (u, v) = tree_weight(&t);
        let mut mp = MarkerPolynomial::zero();
        mp.add_term(u, v, BigInt::one());
        assert_eq!(mp.to_string(), "u_2^2u_1^2v_2v_1^3");
        assert_eq!(
            delta_g_commutative(1, CommutativeRoute::System).to_string(),
            "u_1 + v_1"
        );
        for n in 0..=7 {
            let a = delta_g_commutative(n, CommutativeRoute::Sorting);
            assert_eq!(
                delta_g_commutative(n, CommutativeRoute::System),
                a,
                "n = {n}"
            );
            assert_eq!(
                delta_g_commutative(n, CommutativeRoute::Trees),
                a,
                "n = {n}"
            );
        }
    }
}
