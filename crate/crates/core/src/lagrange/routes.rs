use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{g_series, gk_series, TransitionMatrix};
use crate::algebra::{
    antipode, chi, neg_alphabet, pair, tilde, NSymBasis, NSymElement, QSymBasis, QSymElement,
};
use crate::composition::{all_compositions, Composition};
use crate::error::Result;
use crate::parking::{breakpoints, count_ndpf_of_type, enumerate_k_ndpf, enumerate_ndpf, type_of};

fn sign(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Σ over the nondecreasing k-parking functions of length n of S^{type}.
fn ndpf_sum(n: usize, k: usize) -> NSymElement {
    let mut out = NSymElement::zero(NSymBasis::S);
    for w in enumerate_k_ndpf(n, k) {
        out.add_term(type_of(&w), BigInt::one());
    }
    out
}

/// g_n from the solver against the sum over nondecreasing parking functions.
pub fn g_expansion_check(n: usize) -> Result<bool> {
    Ok(g_series(n)?.component(n) == &ndpf_sum(n, 1))
}

/// g^{(k)}_n from the solver against the k-parking enumeration.
pub fn k_parking_check(n: usize, k: usize) -> Result<bool> {
    Ok(gk_series(k, n)?.component(n) == &ndpf_sum(n, k))
}

/// The f → S matrix at degree `n`: each nondecreasing parking function adds
/// one at (row = its type, column = its breakpoint composition).
pub fn f_basis_table(n: usize) -> Result<TransitionMatrix> {
    let index = all_compositions(n);
    let pos = |c: &Composition| index.binary_search(c).expect("composition of n");
    let mut rows = vec![vec![BigInt::zero(); index.len()]; index.len()];
    for w in enumerate_ndpf(n) {
        rows[pos(&type_of(&w))][pos(&breakpoints(&w)?)] += 1;
    }
    Ok(TransitionMatrix {
        degree: n,
        index,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GNegRoute {
    /// Apply A ↦ −A to g_n and convert to the g basis.
    NegAlphabet,
    /// a_I = ⟨E_{2I}, g_{2n}⟩.
    Essential,
    /// a_I = number of nondecreasing parking functions of type 2I+1^r.
    Parking,
    /// (−1)^n · tilde(g^{(2)}_n).
    Tilde,
}

impl GNegRoute {
    pub const ALL: [GNegRoute; 4] = [
        GNegRoute::NegAlphabet,
        GNegRoute::Essential,
        GNegRoute::Parking,
        GNegRoute::Tilde,
    ];
}

/// g_n(−A) on the g basis, by the chosen route.
pub fn g_neg(n: usize, route: GNegRoute) -> Result<NSymElement> {
    match route {
        GNegRoute::NegAlphabet => {
            neg_alphabet(&NSymElement::generator(NSymBasis::G, n))?.convert(NSymBasis::G)
        }
        GNegRoute::Essential => g_neg_by_essential(n),
        GNegRoute::Parking => Ok(g_neg_by_parking(n)),
        GNegRoute::Tilde => g_neg_by_tilde(n),
    }
}

pub fn g_neg_by_essential(n: usize) -> Result<NSymElement> {
    let g2n = g_series(2 * n)?.component(2 * n).clone();
    let mut out = NSymElement::zero(NSymBasis::G);
    for i in all_compositions(n) {
        let e = QSymElement::monomial(QSymBasis::E, i.double());
        out.add_term(i.clone(), sign(i.len()) * pair(&e, &g2n)?);
    }
    Ok(out)
}

pub fn g_neg_by_parking(n: usize) -> NSymElement {
    let mut out = NSymElement::zero(NSymBasis::G);
    for i in all_compositions(n) {
        let a = count_ndpf_of_type(&i.double().plus_ones());
        out.add_term(i.clone(), sign(i.len()) * BigInt::from(a));
    }
    out
}

pub fn g_neg_by_tilde(n: usize) -> Result<NSymElement> {
    let h = gk_series(2, n)?.component(n).clone();
    Ok(tilde(&h)?.scale(&sign(n)))
}

/// ω̃(g_n) through the generic antipode.
pub fn antipode_g(n: usize) -> Result<NSymElement> {
    antipode(&NSymElement::generator(NSymBasis::G, n))?.convert(NSymBasis::G)
}

/// ω̃(g_n) as (−1)^n tilde(χ(g^{(2)}_n)): expand g^{(2)}_n on g, mirror,
/// sign, expand on Λ, replace Λ by g.
pub fn antipode_g_four_step(n: usize) -> Result<NSymElement> {
    let h = gk_series(2, n)?.component(n).convert(NSymBasis::G)?;
    let mirrored = chi(&h)?.scale(&sign(n));
    tilde(&mirrored)
}

/// One term `⟨V_I, g^J⟩ · ⟨M_{mirror J}, g⟩` of the antipode coefficient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub i: Composition,
    pub j: Composition,
    pub v_pairing: BigInt,
    pub m_pairing: BigInt,
}

impl Contribution {
    pub fn product(&self) -> BigInt {
        &self.v_pairing * &self.m_pairing
    }
}

/// ⟨V_K, g_j⟩ = (−1)^{j−ℓ(K)} Σ_{K' coarser than K} [S^{K'}] g_j.
fn v_against_generator(k: &Composition, gj: &NSymElement) -> BigInt {
    let total: BigInt = k.coarsenings().iter().map(|c| gj.coeff(c)).sum();
    sign(k.weight() - k.len()) * total
}

/// ⟨V_I, g^J⟩, factored over the parts of J.
fn v_against_g(i: &Composition, j: &Composition, g: &[NSymElement]) -> BigInt {
    let parts = i.parts();
    let mut start = 0;
    let mut acc = BigInt::one();
    for &jk in j.parts() {
        let mut end = start;
        let mut w = 0;
        while end < parts.len() && w < jk {
            w += parts[end];
            end += 1;
        }
        if w != jk {
            return BigInt::zero();
        }
        let piece = Composition::new(parts[start..end].to_vec()).expect("positive parts");
        acc *= v_against_generator(&piece, &g[jk]);
        start = end;
    }
    if start != parts.len() {
        return BigInt::zero();
    }
    acc
}

/// The nonzero terms of ⟨c_I, ω̃(g_n)⟩ = (−1)^n Σ_J ⟨V_I, g^J⟩⟨M_{mirror J}, g⟩, grouped by I.
pub fn antipode_g_contributions(n: usize) -> Result<BTreeMap<Composition, Vec<Contribution>>> {
    let series = g_series(n)?;
    let g = series.components();
    let mut out = BTreeMap::new();
    for i in all_compositions(n) {
        let mut terms = Vec::new();
        for j in all_compositions(n) {
            let v = v_against_g(&i, &j, g);
            let m = g[n].coeff(&j.mirror());
            if !v.is_zero() && !m.is_zero() {
                terms.push(Contribution {
                    i: i.clone(),
                    j,
                    v_pairing: v,
                    m_pairing: m,
                });
            }
        }
        out.insert(i, terms);
    }
    Ok(out)
}

/// ω̃(g_n) summed from [`antipode_g_contributions`].
pub fn antipode_g_by_formula(n: usize) -> Result<NSymElement> {
    let mut out = NSymElement::zero(NSymBasis::G);
    for (i, terms) in antipode_g_contributions(n)? {
        let total: BigInt = terms.iter().map(Contribution::product).sum();
        out.add_term(i, sign(n) * total);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parking_expansions() {
        for n in 0..=7 {
            assert!(g_expansion_check(n).unwrap(), "n = {n}");
        }
        assert!(k_parking_check(3, 2).unwrap());
        assert!(k_parking_check(4, 2).unwrap());
        for k in 1..=4 {
            assert!(k_parking_check(1, k).unwrap());
            assert!(k_parking_check(4, k).unwrap());
        }
    }

    #[test]
    fn f_table() {
        let m = f_basis_table(3).unwrap();
        assert_eq!(
            m.to_i64_rows().unwrap(),
            vec![
                vec![1, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1]
            ]
        );
        assert_eq!(
            f_basis_table(1).unwrap().to_i64_rows().unwrap(),
            vec![vec![1]]
        );
        // the algebraic f basis gives the same matrix
        for n in 1..=6 {
            let m = f_basis_table(n).unwrap();
            for (col, j) in m.index.iter().enumerate() {
                let f = NSymElement::monomial(NSymBasis::F, j.clone())
                    .convert(NSymBasis::S)
                    .unwrap();
                for (row, i) in m.index.iter().enumerate() {
                    assert_eq!(f.coeff(i), m.rows[row][col]);
                }
            }
        }
    }

    #[test]
    fn breakpoint_reading_of_g_basis() {
        // [S^J] g^I counts NDPFs of type J whose breakpoints contain Des(I)
        for n in 1..=6 {
            for i in all_compositions(n) {
                let gi = NSymElement::monomial(NSymBasis::G, i.clone())
                    .convert(NSymBasis::S)
                    .unwrap();
                let mut expected = NSymElement::zero(NSymBasis::S);
                for w in enumerate_ndpf(n) {
                    if breakpoints(&w).unwrap().refines(&i) {
                        expected.add_term(type_of(&w), BigInt::one());
                    }
                }
                assert_eq!(gi, expected);
            }
        }
    }

    #[test]
    fn g_neg_values() {
        assert_eq!(
            g_neg(3, GNegRoute::NegAlphabet).unwrap().to_string(),
            "-G[3] + 5*G[2,1] + 3*G[1,2] - 12*G[1,1,1]"
        );
        assert_eq!(
            g_neg(4, GNegRoute::Parking).unwrap().to_string(),
            "-G[4] + 7*G[3,1] + 5*G[2,2] - 25*G[2,1,1] + 3*G[1,3] - 18*G[1,2,1] - 12*G[1,1,2] + 55*G[1,1,1,1]"
        );
        let sums: Vec<BigInt> = (1..=4)
            .map(|n| g_neg(n, GNegRoute::Essential).unwrap().abs_sum())
            .collect();
        assert_eq!(sums, [1, 4, 21, 126].map(BigInt::from));
        for n in 0..=6 {
            let a = g_neg(n, GNegRoute::NegAlphabet).unwrap();
            for route in GNegRoute::ALL {
                assert_eq!(g_neg(n, route).unwrap(), a, "{route:?} at {n}");
            }
        }
    }

    #[test]
    fn essential_identity() {
        // Σ_{J coarser than 2I} ⟨M_J, g⟩ = ⟨M_{2I+1^r}, g⟩
        let g = g_series(2 * 5 + 5).unwrap();
        for n in 1..=5 {
            for i in all_compositions(n) {
                let lhs = pair(
                    &QSymElement::monomial(QSymBasis::E, i.double()),
                    g.component(2 * n),
                )
                .unwrap();
                let t = i.double().plus_ones();
                let rhs = g.component(t.weight()).coeff(&t);
                assert_eq!(lhs, rhs, "I = {i}");
            }
        }
    }

    #[test]
    fn antipode_routes() {
        assert_eq!(
            antipode_g(3).unwrap().to_string(),
            "-G[3] + 4*G[2,1] + 4*G[1,2] - 12*G[1,1,1]"
        );
        assert_eq!(antipode_g(1).unwrap().to_string(), "-G[1]");
        for n in 0..=6 {
            let a = antipode_g(n).unwrap();
            assert_eq!(antipode_g_four_step(n).unwrap(), a, "four-step at {n}");
            assert_eq!(antipode_g_by_formula(n).unwrap(), a, "formula at {n}");
        }
    }

    #[test]
    fn antipode_contribution_split() {
        let all = antipode_g_contributions(3).unwrap();
        let split = |i: &str| -> Vec<(String, i64, i64)> {
            all[&i.parse::<Composition>().unwrap()]
                .iter()
                .map(|c| {
                    (
                        c.j.to_string(),
                        i64::try_from(c.v_pairing.clone()).unwrap(),
                        i64::try_from(c.m_pairing.clone()).unwrap(),
                    )
                })
                .collect()
        };
        assert_eq!(split("21"), vec![("3".into(), -3, 1), ("21".into(), -1, 1)]);
        assert_eq!(split("12"), vec![("3".into(), -2, 1), ("12".into(), -1, 2)]);
        // one sign per I
        for n in 1..=6 {
            for terms in antipode_g_contributions(n).unwrap().values() {
                let signs: std::collections::BTreeSet<bool> =
                    terms.iter().map(|t| t.v_pairing.is_positive()).collect();
                assert!(signs.len() <= 1);
                assert!(terms.iter().all(|t| t.m_pairing.is_positive()));
            }
        }
    }
}
