//! Minimal factorizations `σ = αβ` of permutations, counted by the reduced
//! ordered cycle types of the factors. For the canonical permutation `σ_I`
//! these counts are the coefficients of `Δ(g^I)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{coproduct, NSymBasis, NSymElement};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Largest ambient symmetric group searched.
pub const MAX_AMBIENT: usize = 10;

/// `(1 2 ⋯ i_1+1)(i_1+2 ⋯ i_1+i_2+2)⋯` in `S_{|I|+ℓ(I)}`.
pub fn canonical_permutation(i: &Composition) -> Permutation {
    let mut cycles = Vec::with_capacity(i.len());
    let mut next = 1;
    for &p in i.parts() {
        cycles.push((next..=next + p).collect::<Vec<_>>());
        next += p + 1;
    }
    Permutation::from_cycles(next - 1, &cycles).expect("consecutive cycles are disjoint")
}

/// Cycle lengths by increasing minima, minus one, zeros dropped.
pub fn reduced_ordered_cycle_type(w: &Permutation) -> Composition {
    let lengths: Vec<usize> = w.cycles().iter().map(Vec::len).collect();
    Composition::reduce(&lengths)
}

pub(crate) enum Shape<'a> {
    /// Nontrivial cycles of lengths `j_k + 1`, in order of minima.
    Exact(&'a [usize]),
    /// Any permutation with transposition length at most the budget.
    Budget(usize),
}

/// Calls `f` on every permutation of `1..=n` of the requested shape,
/// building cycles from their minima upwards.
pub(crate) fn for_each_permutation(n: usize, shape: Shape<'_>, f: &mut dyn FnMut(&Permutation)) {
    struct State<'s, 'f> {
        n: usize,
        images: Vec<usize>,
        used: Vec<bool>,
        shape: Shape<'s>,
        f: &'f mut dyn FnMut(&Permutation),
    }

    fn rec(st: &mut State<'_, '_>, start: usize, cycle: usize, budget: usize) {
        let Some(x) = (start..=st.n).find(|&x| !st.used[x]) else {
            if let Shape::Exact(j) = st.shape {
                if cycle != j.len() {
                    return;
                }
            }
            let p = Permutation::new(st.images[1..].to_vec()).expect("built as a bijection");
            (st.f)(&p);
            return;
        };
        st.used[x] = true;
        st.images[x] = x;
        rec(st, x + 1, cycle, budget);
        let lengths: Vec<usize> = match st.shape {
            Shape::Exact(j) => j.get(cycle).copied().into_iter().collect(),
            Shape::Budget(_) => (1..=budget).collect(),
        };
        for m in lengths {
            let mut chosen = Vec::with_capacity(m);
            arrange(st, x, m, &mut chosen, cycle, budget.saturating_sub(m));
        }
        st.used[x] = false;
    }

    // choose the rest of the cycle through `x` as an ordered sequence
    fn arrange(
        st: &mut State<'_, '_>,
        x: usize,
        m: usize,
        chosen: &mut Vec<usize>,
        cycle: usize,
        budget: usize,
    ) {
        if chosen.len() == m {
            let mut prev = x;
            for &y in chosen.iter() {
                st.images[prev] = y;
                prev = y;
            }
            st.images[prev] = x;
            rec(st, x + 1, cycle + 1, budget);
            return;
        }
        for y in x + 1..=st.n {
            if !st.used[y] {
                st.used[y] = true;
                chosen.push(y);
                arrange(st, x, m, chosen, cycle, budget);
                chosen.pop();
                st.used[y] = false;
            }
        }
    }

    let budget = match shape {
        Shape::Budget(b) => b,
        Shape::Exact(j) => j.iter().sum(),
    };
    let mut st = State {
        n,
        images: (0..=n).collect(),
        used: vec![false; n + 1],
        shape,
        f,
    };
    rec(&mut st, 1, 0, budget);
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_AMBIENT {
        return Err(Error::SizeBound {
            size: n,
            max: MAX_AMBIENT,
        });
    }
    Ok(())
}

/// Minimal factorizations `σ = αβ` with `α`, `β` of reduced ordered cycle
/// types `j`, `k`.
pub fn minimal_factorizations(
    sigma: &Permutation,
    j: &Composition,
    k: &Composition,
) -> Result<Vec<(Permutation, Permutation)>> {
    let n = sigma.size();
    check_ambient(n)?;
    let target = sigma.transposition_length();
    let mut out = Vec::new();
    if j.weight() + k.weight() != target {
        return Ok(out);
    }
    for_each_permutation(n, Shape::Exact(j.parts()), &mut |alpha| {
        let beta = alpha.inverse().compose(sigma);
        if beta.transposition_length() == k.weight() && &reduced_ordered_cycle_type(&beta) == k {
            out.push((alpha.clone(), beta));
        }
    });
    Ok(out)
}

/// Number of minimal factorizations of `σ_I` into factors of types `j`, `k`.
pub fn count_minimal_factorizations(
    i: &Composition,
    j: &Composition,
    k: &Composition,
) -> Result<usize> {
    Ok(minimal_factorizations(&canonical_permutation(i), j, k)?.len())
}

/// Every minimal factorization of `σ`, tallied by the pair of reduced
/// ordered cycle types.
pub fn factorization_tally(
    sigma: &Permutation,
) -> Result<BTreeMap<(Composition, Composition), u64>> {
    let n = sigma.size();
    check_ambient(n)?;
    let target = sigma.transposition_length();
    let mut tally = BTreeMap::new();
    for_each_permutation(n, Shape::Budget(target), &mut |alpha| {
        let beta = alpha.inverse().compose(sigma);
        if alpha.transposition_length() + beta.transposition_length() == target {
            let key = (
                reduced_ordered_cycle_type(alpha),
                reduced_ordered_cycle_type(&beta),
            );
            *tally.entry(key).or_insert(0) += 1;
        }
    });
    Ok(tally)
}

/// The tally with both types sorted into partitions.
pub fn partition_tally(sigma: &Permutation) -> Result<BTreeMap<(Vec<usize>, Vec<usize>), u64>> {
    let sorted = |c: &Composition| {
        let mut p = c.parts().to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    };
    let mut out = BTreeMap::new();
    for ((j, k), c) in factorization_tally(sigma)? {
        *out.entry((sorted(&j), sorted(&k))).or_insert(0) += c;
    }
    Ok(out)
}

/// Whether the factorization tally of `σ_I` equals `Δ(g^I)` term by term.
pub fn factorizations_match_coproduct(i: &Composition) -> Result<bool> {
    let tally = factorization_tally(&canonical_permutation(i))?;
    let delta = coproduct(&NSymElement::monomial(NSymBasis::G, i.clone()))?;
    if delta.len() != tally.len() {
        return Ok(false);
    }
    Ok(tally
        .iter()
        .all(|((j, k), &c)| delta.coeff(j, k) == BigInt::from(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn canonical_permutations() {
        assert_eq!(canonical_permutation(&c("5")).to_string(), "(1,2,3,4,5,6)");
        assert_eq!(canonical_permutation(&c("1")).to_string(), "(1,2)");
        let p = canonical_permutation(&c("21"));
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(reduced_ordered_cycle_type(&p), c("21"));
    }

    #[test]
    fn reduced_types() {
        assert!(reduced_ordered_cycle_type(&Permutation::identity(4)).is_empty());
        let w = Permutation::new(vec![5, 3, 4, 2, 7, 6, 1, 9, 8]).unwrap();
        assert_eq!(reduced_ordered_cycle_type(&w), c("221"));
        assert_eq!(
            reduced_ordered_cycle_type(&Permutation::long_cycle(6)),
            c("5")
        );
    }

    #[test]
    fn enumeration_covers_the_group() {
        for n in 0..=6 {
            let mut count = 0;
            for_each_permutation(n, Shape::Budget(n.saturating_sub(1)), &mut |_| count += 1);
            assert_eq!(count, factorial(n));
        }
        let mut count = 0;
        for_each_permutation(5, Shape::Exact(&[1, 1]), &mut |p| {
            assert_eq!(reduced_ordered_cycle_type(p), c("11"));
            count += 1;
        });
        // pairs of disjoint transpositions in S_5
        assert_eq!(count, 15);
    }

    #[test]
    fn six_cycle_counts() {
        assert_eq!(
            count_minimal_factorizations(&c("5"), &c("12"), &c("11")).unwrap(),
            7
        );
        assert_eq!(
            count_minimal_factorizations(&c("5"), &c("21"), &c("11")).unwrap(),
            11
        );
        assert_eq!(
            count_minimal_factorizations(&c("2"), &c("1"), &c("1")).unwrap(),
            3
        );
        assert_eq!(
            count_minimal_factorizations(&c("32"), &Composition::empty(), &c("32")).unwrap(),
            1
        );
        assert_eq!(
            count_minimal_factorizations(&c("3"), &c("1"), &c("1")).unwrap(),
            0
        );
        let pairs =
            minimal_factorizations(&canonical_permutation(&c("2")), &c("1"), &c("1")).unwrap();
        for (a, b) in pairs {
            assert_eq!(a.compose(&b), canonical_permutation(&c("2")));
        }
    }

    #[test]
    fn factorization_counts_match_the_coproduct() {
        for i in ["1", "2", "3", "5", "21", "12", "11", "111", "22", "211"] {
            assert!(factorizations_match_coproduct(&c(i)).unwrap(), "I = {i}");
        }
        assert!(matches!(
            factorizations_match_coproduct(&c("2222")),
            Err(Error::SizeBound { size: 12, max: 10 })
        ));
    }

    #[test]
    fn partition_counts_do_not_depend_on_the_representative() {
        for i in ["3", "4", "21", "5", "32"] {
            let canonical = canonical_permutation(&c(i));
            let n = canonical.size();
            // conjugate by the reversal w0
            let w0 = Permutation::new((1..=n).rev().collect()).unwrap();
            let other = w0.compose(&canonical).compose(&w0);
            assert_ne!(other, canonical);
            assert_eq!(
                partition_tally(&canonical).unwrap(),
                partition_tally(&other).unwrap(),
                "I = {i}"
            );
        }
        // the refined counts do depend on it
        let six = canonical_permutation(&c("5"));
        let other = Permutation::from_cycles(6, &[vec![1, 3, 5, 2, 4, 6]]).unwrap();
        let t1 = factorization_tally(&six).unwrap();
        let t2 = factorization_tally(&other).unwrap();
        assert_ne!(t1, t2);
    }
}
