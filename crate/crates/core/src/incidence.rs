//! Multiplicative functions on noncrossing partition lattices.
//!
//! A multiplicative function `φ` is fixed by its values `a_n = φ(g_n)` on
//! the intervals `[0̂, 1̂]` of `NC_{n+1}`, or equivalently by its hat series
//! `φ̂(t) = Σ α_n t^n` with `Φ(t) = Σ α_n t^n Φ(t)^n`. Convolution is the
//! product of hat series. [`NcLattice`] computes the same numbers from the
//! lattices themselves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::composition::{all_compositions, Composition};
use crate::error::{Error, Result};
use crate::factorization::{for_each_permutation, Shape};
use crate::noncrossing::{enumerate_nc, NoncrossingPartition};
use crate::permutation::Permutation;

/// Largest `NC_n` the lattice oracle builds.
pub const MAX_LATTICE: usize = 7;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficients `0..=n` of `Φ^k` from the coefficients of `Φ`.
fn power(series: &[BigRational], k: usize, n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    out[0] = BigRational::one();
    for _ in 0..k {
        let mut next = vec![BigRational::zero(); n + 1];
        for (i, a) in out.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in series.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeFunction {
    hat: Vec<BigRational>,
}

impl MultiplicativeFunction {
    /// From `α_0..=α_N`; `α_0` must be 1.
    pub fn from_hat(hat: Vec<BigRational>) -> Result<Self> {
        if hat.first() != Some(&BigRational::one()) {
            return Err(Error::NonUnitConstant);
        }
        Ok(MultiplicativeFunction { hat })
    }

    fn truncated(mut hat: Vec<BigRational>, max_degree: usize) -> Self {
        hat.resize(max_degree + 1, BigRational::zero());
        MultiplicativeFunction { hat }
    }

    /// The counit: 1 on `[0̂, 0̂]`, 0 on every larger interval.
    pub fn identity(max_degree: usize) -> Self {
        Self::truncated(vec![BigRational::one()], max_degree)
    }

    /// `ζ̂ = 1 + t`.
    pub fn zeta(max_degree: usize) -> Self {
        Self::truncated(vec![rat(1), rat(1)], max_degree)
    }

    /// `μ̂ = 1/(1 + t)`.
    pub fn mobius(max_degree: usize) -> Self {
        Self::truncated(
            (0..=max_degree)
                .map(|n| rat(if n % 2 == 0 { 1 } else { -1 }))
                .collect(),
            max_degree,
        )
    }

    /// `φ_u(g_n) = u^n`, i.e. `φ̂_u = 1 + u t`.
    pub fn rank_weight(u: BigRational, max_degree: usize) -> Self {
        Self::truncated(vec![BigRational::one(), u], max_degree)
    }

    /// The function with `φ(g_n) = a_n`; `a_0` must be 1.
    pub fn from_g_values(a: &[BigRational]) -> Result<Self> {
        if a.first() != Some(&BigRational::one()) {
            return Err(Error::NonUnitConstant);
        }
        let n = a.len() - 1;
        let mut hat = vec![BigRational::one()];
        for d in 1..=n {
            // a_d = α_d + Σ_{1≤k<d} α_k [Φ^k]_{d−k}
            let mut rest = BigRational::zero();
            for (k, alpha) in hat.iter().enumerate().skip(1) {
                rest += alpha * &power(a, k, d - k)[d - k];
            }
            hat.push(&a[d] - rest);
        }
        Ok(MultiplicativeFunction { hat })
    }

    pub fn max_degree(&self) -> usize {
        self.hat.len() - 1
    }

    pub fn hat(&self) -> &[BigRational] {
        &self.hat
    }

    /// `a_n = φ(g_n)` for `n = 0..=N`, solved degree by degree.
    pub fn g_values(&self) -> Vec<BigRational> {
        let n = self.max_degree();
        let mut a = vec![BigRational::one()];
        for d in 1..=n {
            let mut v = BigRational::zero();
            for k in 1..=d {
                if self.hat[k].is_zero() {
                    continue;
                }
                v += &self.hat[k] * &power(&a, k, d - k)[d - k];
            }
            a.push(v);
        }
        a
    }

    /// Integer g-values; fails if any value is fractional.
    pub fn integer_g_values(&self) -> Result<Vec<BigInt>> {
        self.g_values()
            .into_iter()
            .map(|v| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::InvalidArgument(format!("{v} is not an integer")))
                }
            })
            .collect()
    }

    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if self.max_degree() != other.max_degree() {
            return Err(Error::InvalidArgument(format!(
                "degree bounds differ: {} and {}",
                self.max_degree(),
                other.max_degree()
            )));
        }
        let n = self.max_degree();
        let mut hat = vec![BigRational::zero(); n + 1];
        for (i, a) in self.hat.iter().enumerate() {
            for (j, b) in other.hat.iter().enumerate().take(n + 1 - i) {
                hat[i + j] += a * b;
            }
        }
        Ok(MultiplicativeFunction { hat })
    }

    /// Convolution inverse: the reciprocal hat series.
    pub fn inverse(&self) -> Self {
        let n = self.max_degree();
        let mut inv = vec![BigRational::one()];
        for d in 1..=n {
            let s: BigRational = (1..=d).map(|j| &self.hat[j] * &inv[d - j]).sum();
            inv.push(-s);
        }
        MultiplicativeFunction { hat: inv }
    }

    /// `φ^{⋆k}`.
    pub fn convolution_power(&self, k: usize) -> Self {
        MultiplicativeFunction {
            hat: power(&self.hat, k, self.max_degree()),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `1/((j−1)(n+1)+1) · binom(j(n+1), n+1)`, the g-value of `ζ^{⋆j}` at `n`.
pub fn fuss_catalan(j: usize, n: usize) -> BigInt {
    binomial(j * (n + 1), n + 1) / ((j - 1) * (n + 1) + 1)
}

/// Multichains `π_1 ≤ ⋯ ≤ π_k` in `NC_{n+1}`: the g-value of `ζ^{⋆(k+1)}`.
pub fn multichain_count(n: usize, k: usize) -> BigInt {
    MultiplicativeFunction::zeta(n)
        .convolution_power(k + 1)
        .integer_g_values()
        .expect("zeta powers have integer values")
        .swap_remove(n)
}

/// Chains `0̂ = π_0 ≤ π_1 ≤ ⋯ ≤ π_{r+1} = 1̂` of `NC_{n+1}` with rank jumps
/// `s`: `1/(n+1) · Π binom(n+1, s_i)`.
pub fn chain_count(n_plus_1: usize, s: &[usize]) -> Result<BigInt> {
    let n = n_plus_1
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidArgument("the lattice size must be at least 1".into()))?;
    let got: usize = s.iter().sum();
    if got != n {
        return Err(Error::RankMismatch { got, expected: n });
    }
    let num: BigInt = s.iter().map(|&si| binomial(n_plus_1, si)).product();
    let (q, r) = num.div_rem(&BigInt::from(n_plus_1));
    assert!(
        r.is_zero(),
        "chain count {num}/{n_plus_1} is not an integer"
    );
    Ok(q)
}

/// Minimal factorizations of an `n`-cycle into cycles of the given orders:
/// `n^{r−1}`, or 0 when the orders do not add up.
pub fn biane_count(n: usize, orders: &[usize]) -> BigInt {
    let minimal =
        orders.iter().all(|&a| a >= 1) && orders.iter().map(|a| a - 1).sum::<usize>() + 1 == n;
    if !minimal {
        return BigInt::zero();
    }
    if orders.is_empty() {
        // the 1-cycle is the empty product
        return BigInt::one();
    }
    BigInt::from(n).pow(orders.len() as u32 - 1)
}

/// Direct count of `γ_n = c_1 ⋯ c_r`, `c_i` an `a_i`-cycle, with
/// transposition lengths adding up.
pub fn biane_brute_force(n: usize, orders: &[usize]) -> Result<u64> {
    if n > crate::factorization::MAX_AMBIENT {
        return Err(Error::SizeBound {
            size: n,
            max: crate::factorization::MAX_AMBIENT,
        });
    }
    let mut cycles: Vec<Vec<Permutation>> = Vec::new();
    for &a in orders {
        let mut cs = Vec::new();
        if a >= 2 {
            for_each_permutation(n, Shape::Exact(&[a - 1]), &mut |p| cs.push(p.clone()));
        } else {
            cs.push(Permutation::identity(n));
        }
        cycles.push(cs);
    }
    fn rec(target: &Permutation, rest: &[Vec<Permutation>]) -> u64 {
        let Some((first, tail)) = rest.split_first() else {
            return u64::from(target.transposition_length() == 0);
        };
        let need = target.transposition_length();
        first
            .iter()
            .filter_map(|c| {
                let left = c.inverse().compose(target);
                (left.transposition_length() + c.transposition_length() == need)
                    .then(|| rec(&left, tail))
            })
            .sum()
    }
    Ok(rec(&Permutation::long_cycle(n), &cycles))
}

/// `NC_n` ordered by refinement, computed from the definition.
pub struct NcLattice {
    n: usize,
    elements: Vec<NoncrossingPartition>,
    leq: Vec<Vec<bool>>,
}

impl NcLattice {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_LATTICE {
            return Err(Error::SizeBound {
                size: n,
                max: MAX_LATTICE,
            });
        }
        let mut elements = enumerate_nc(n);
        elements.sort_by_key(|p| std::cmp::Reverse(p.block_count()));
        let leq = elements
            .iter()
            .map(|p| elements.iter().map(|q| p.refines(q)).collect())
            .collect();
        Ok(NcLattice { n, elements, leq })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Elements sorted by increasing rank.
    pub fn elements(&self) -> &[NoncrossingPartition] {
        &self.elements
    }

    pub fn index(&self, p: &NoncrossingPartition) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.n - self.elements[i].block_count()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn interval_size(&self, i: usize, j: usize) -> usize {
        (0..self.elements.len())
            .filter(|&x| self.leq[i][x] && self.leq[x][j])
            .count()
    }

    /// `μ(i, j)` by `μ(i, i) = 1`, `μ(i, j) = −Σ_{i ≤ x < j} μ(i, x)`.
    pub fn mobius(&self, i: usize, j: usize) -> BigInt {
        if !self.leq[i][j] {
            return BigInt::zero();
        }
        // elements are sorted by rank, so every x below y comes first
        let mut mu = vec![BigInt::zero(); self.elements.len()];
        for y in 0..=j {
            if !(self.leq[i][y] && self.leq[y][j]) {
                continue;
            }
            mu[y] = if y == i {
                BigInt::one()
            } else {
                -(0..y)
                    .filter(|&x| self.leq[i][x] && self.leq[x][y] && x != y)
                    .map(|x| mu[x].clone())
                    .sum::<BigInt>()
            };
        }
        mu[j].clone()
    }

    /// Multichains `x_1 ≤ ⋯ ≤ x_k`.
    pub fn multichains(&self, k: usize) -> BigInt {
        let m = self.elements.len();
        let mut f = vec![BigInt::one(); m];
        for _ in 1..k {
            f = (0..m)
                .map(|y| {
                    (0..m)
                        .filter(|&x| self.leq[x][y])
                        .map(|x| f[x].clone())
                        .sum()
                })
                .collect();
        }
        if k == 0 {
            return BigInt::one();
        }
        f.into_iter().sum()
    }

    /// Chains from bottom to top whose consecutive rank differences are `s`.
    pub fn chains_with_ranks(&self, s: &[usize]) -> BigInt {
        let m = self.elements.len();
        let mut f = vec![BigInt::zero(); m];
        f[self.bottom()] = BigInt::one();
        for &step in s {
            f = (0..m)
                .map(|y| {
                    (0..m)
                        .filter(|&x| {
                            self.leq[x][y] && self.rank(x) + step == self.rank(y) && !f[x].is_zero()
                        })
                        .map(|x| f[x].clone())
                        .sum()
                })
                .collect();
        }
        f[self.top()].clone()
    }
}

/// Every rank vector with positive entries summing to `n`.
pub fn rank_vectors(n: usize) -> Vec<Composition> {
    all_compositions(n)
}

/// `(−1)^n C_n`, the Möbius g-value.
pub fn signed_catalan(n: usize) -> BigInt {
    let c = catalan(n);
    if n % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Exact rational as text, `p/q` or `p`.
pub fn format_rational(v: &BigRational) -> String {
    if v.is_integer() {
        v.to_integer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom().abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zeta_mobius_identity() {
        let z = MultiplicativeFunction::zeta(8);
        let m = MultiplicativeFunction::mobius(8);
        assert_eq!(z.integer_g_values().unwrap(), ints(&[1; 9]));
        assert_eq!(
            m.integer_g_values().unwrap(),
            (0..=8).map(signed_catalan).collect::<Vec<_>>()
        );
        let id = MultiplicativeFunction::identity(8);
        assert_eq!(z.convolve(&m).unwrap(), id);
        assert_eq!(m.convolve(&z).unwrap(), id);
        assert_eq!(z.inverse(), m);
        let mut expect = vec![1];
        expect.extend([0; 8]);
        assert_eq!(id.integer_g_values().unwrap(), ints(&expect));
    }

    #[test]
    fn g_values_round_trip() {
        let a: Vec<BigRational> = [1, 3, -2, 7, 0, 5].iter().map(|&x| rat(x)).collect();
        let phi = MultiplicativeFunction::from_g_values(&a).unwrap();
        assert_eq!(phi.g_values(), a);
        let z = MultiplicativeFunction::zeta(5);
        assert_eq!(
            MultiplicativeFunction::from_g_values(&z.g_values()).unwrap(),
            z
        );
        assert!(MultiplicativeFunction::from_g_values(&[rat(2)]).is_err());
    }

    #[test]
    fn zeta_powers() {
        let z = MultiplicativeFunction::zeta(6);
        assert_eq!(
            z.convolution_power(2).integer_g_values().unwrap(),
            ints(&[1, 2, 5, 14, 42, 132, 429])
        );
        assert_eq!(
            z.convolution_power(3).integer_g_values().unwrap()[..4],
            ints(&[1, 3, 12, 55])[..]
        );
        for j in 1..=4 {
            let v = z.convolution_power(j).integer_g_values().unwrap();
            for (n, x) in v.iter().enumerate() {
                assert_eq!(*x, fuss_catalan(j, n), "j = {j}, n = {n}");
            }
        }
        assert_eq!(multichain_count(1, 2), BigInt::from(3));
    }

    #[test]
    fn convolution_is_commutative_and_associative() {
        let mk = |v: &[i64]| {
            MultiplicativeFunction::from_hat(
                v.iter()
                    .enumerate()
                    .map(|(i, &x)| BigRational::new(BigInt::from(x), BigInt::from(i as i64 + 1)))
                    .collect(),
            )
        };
        let a = mk(&[1, 2, -3, 5, 1]).unwrap();
        let b = mk(&[1, -1, 4, 0, 2]).unwrap();
        let c = mk(&[1, 7, 1, -2, 3]).unwrap();
        assert_eq!(a.convolve(&b).unwrap(), b.convolve(&a).unwrap());
        assert_eq!(
            a.convolve(&b).unwrap().convolve(&c).unwrap(),
            a.convolve(&b.convolve(&c).unwrap()).unwrap()
        );
        assert!(mk(&[2, 1]).is_err());
    }

    #[test]
    fn lattice_oracle() {
        let l = NcLattice::new(4).unwrap();
        assert_eq!(l.elements().len(), 14);
        assert_eq!(l.mobius(l.bottom(), l.top()), BigInt::from(-5));
        for n in 1..=7 {
            let l = NcLattice::new(n).unwrap();
            assert_eq!(l.mobius(l.bottom(), l.top()), signed_catalan(n - 1));
        }
        let l = NcLattice::new(5).unwrap();
        let m = l.elements().len();
        for i in 0..m {
            assert!(l.leq(i, i));
            for j in 0..m {
                if i != j {
                    assert!(!(l.leq(i, j) && l.leq(j, i)));
                }
                for k in 0..m {
                    if l.leq(i, j) && l.leq(j, k) {
                        assert!(l.leq(i, k));
                    }
                }
            }
        }
        assert!(NcLattice::new(8).is_err());
    }

    #[test]
    fn lower_intervals_are_products() {
        let l = NcLattice::new(6).unwrap();
        for (i, p) in l.elements().iter().enumerate() {
            let expected: BigInt = p.blocks().iter().map(|b| catalan(b.len())).product();
            assert_eq!(BigInt::from(l.interval_size(l.bottom(), i)), expected);
        }
    }

    #[test]
    fn multichains_match_the_oracle() {
        for n in 0..=4 {
            let l = NcLattice::new(n + 1).unwrap();
            for k in 0..=3 {
                assert_eq!(l.multichains(k), multichain_count(n, k), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn edelman() {
        assert_eq!(chain_count(4, &[1, 1, 1]).unwrap(), BigInt::from(16));
        assert_eq!(chain_count(5, &[4]).unwrap(), BigInt::one());
        assert!(matches!(
            chain_count(4, &[1, 1]),
            Err(Error::RankMismatch {
                got: 2,
                expected: 3
            })
        ));
        for n1 in 1..=6 {
            let l = NcLattice::new(n1).unwrap();
            for s in rank_vectors(n1 - 1) {
                assert_eq!(
                    l.chains_with_ranks(s.parts()),
                    chain_count(n1, s.parts()).unwrap()
                );
            }
        }
    }

    #[test]
    fn biane() {
        assert_eq!(biane_count(3, &[2, 2]), BigInt::from(3));
        assert_eq!(biane_count(5, &[5]), BigInt::one());
        assert_eq!(biane_count(4, &[2, 2, 2]), BigInt::from(16));
        assert_eq!(biane_count(4, &[2, 2]), BigInt::zero());
        for n in 1..=7 {
            for c in all_compositions(n - 1) {
                let orders: Vec<usize> = c.parts().iter().map(|a| a + 1).collect();
                assert_eq!(
                    BigInt::from(biane_brute_force(n, &orders).unwrap()),
                    biane_count(n, &orders),
                    "{orders:?}"
                );
            }
        }
    }
}
