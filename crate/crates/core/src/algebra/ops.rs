use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{NSymBasis, NSymElement, QSymBasis, QSymElement, TensorElement};
use crate::composition::Composition;
use crate::error::{Error, Result};

fn parity_sign(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The duality pairing with ⟨M_I, S^J⟩ = δ_{IJ}.
pub fn pair(q: &QSymElement, f: &NSymElement) -> Result<BigInt> {
    let q = q.convert(QSymBasis::M)?;
    let f = f.convert(NSymBasis::S)?;
    let mut acc = BigInt::zero();
    for (i, a) in q.terms() {
        let b = f.coeff(i);
        if !b.is_zero() {
            acc += a * b;
        }
    }
    Ok(acc)
}

fn generator_coproduct(basis: NSymBasis, n: usize) -> TensorElement {
    let mut t = TensorElement::zero(basis, basis);
    for i in 0..=n {
        t.add_term(Composition::row(i), Composition::row(n - i), BigInt::one());
    }
    t
}

/// Coproduct of `x`, returned with both legs in the basis of `x`.
///
/// S and Λ generators are group-like in the graded sense; g and the
/// non-multiplicative bases go through S and convert per leg.
pub fn coproduct(x: &NSymElement) -> Result<TensorElement> {
    let basis = x.basis();
    let mut gens: BTreeMap<usize, TensorElement> = BTreeMap::new();
    let (work, work_basis) = match basis {
        NSymBasis::S | NSymBasis::Lambda | NSymBasis::G => (x.clone(), basis),
        NSymBasis::R | NSymBasis::F => (x.convert(NSymBasis::S)?, NSymBasis::S),
    };
    let mut out = TensorElement::zero(work_basis, work_basis);
    for (index, c) in work.terms() {
        let mut acc = TensorElement::one(work_basis, work_basis);
        for &p in index.parts() {
            if !gens.contains_key(&p) {
                let g = match work_basis {
                    NSymBasis::G => {
                        let gs = NSymElement::generator(NSymBasis::G, p).convert(NSymBasis::S)?;
                        coproduct(&gs)?.convert(NSymBasis::G, NSymBasis::G)?
                    }
                    b => generator_coproduct(b, p),
                };
                gens.insert(p, g);
            }
            acc = acc.multiply(&gens[&p])?;
        }
        for ((l, r), v) in acc.terms() {
            out.add_term(l.clone(), r.clone(), v * c);
        }
    }
    if work_basis != basis {
        out = out.convert(basis, basis)?;
    }
    Ok(out)
}

/// The antipode ω̃: S^I ↦ (−1)^{|I|} Λ^{mirror(I)}. Result in Λ.
pub fn antipode(x: &NSymElement) -> Result<NSymElement> {
    let s = x.convert(NSymBasis::S)?;
    Ok(NSymElement::from_terms(
        NSymBasis::Lambda,
        s.terms()
            .map(|(i, c)| (i.mirror(), c * parity_sign(i.weight()))),
    ))
}

/// The automorphism A ↦ −A: S^I ↦ (−1)^{|I|} Λ^I. Result in Λ.
pub fn neg_alphabet(x: &NSymElement) -> Result<NSymElement> {
    let s = x.convert(NSymBasis::S)?;
    Ok(NSymElement::from_terms(
        NSymBasis::Lambda,
        s.terms()
            .map(|(i, c)| (i.clone(), c * parity_sign(i.weight()))),
    ))
}

/// The automorphism Λ^I ↦ g^I. Result in G.
pub fn tilde(x: &NSymElement) -> Result<NSymElement> {
    Ok(x.convert(NSymBasis::Lambda)?.relabel(NSymBasis::G))
}

/// g^I ↦ g^{mirror(I)}. Result in G.
pub fn chi(x: &NSymElement) -> Result<NSymElement> {
    Ok(x.convert(NSymBasis::G)?.map_indices(Composition::mirror))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionInvolution {
    Mirror,
    Conjugate,
    MirrorConjugate,
}

impl CompositionInvolution {
    pub fn apply(self, i: &Composition) -> Composition {
        match self {
            CompositionInvolution::Mirror => i.mirror(),
            CompositionInvolution::Conjugate => i.conjugate(),
            CompositionInvolution::MirrorConjugate => i.mirror_conjugate(),
        }
    }
}

/// Whether the S-expansion of g_n is invariant under reindexing by `reading`.
pub fn mirror_invariance_check(n: usize, reading: CompositionInvolution) -> Result<bool> {
    let g = crate::lagrange::tables().g_in_s(n)?;
    let symmetric = g.terms().all(|(i, c)| &g.coeff(&reading.apply(i)) == c);
    Ok(symmetric)
}

/// ψ^k: M_I ↦ M_{kI}. Result in M.
pub fn psi_k(x: &QSymElement, k: usize) -> Result<QSymElement> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    Ok(x.convert(QSymBasis::M)?.map_indices(|i| i.scale(k)))
}

/// φ_k, adjoint of ψ^k: keeps the S^J with all parts divisible by k. Result in S.
pub fn phi_k(x: &NSymElement, k: usize) -> Result<NSymElement> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let s = x.convert(NSymBasis::S)?;
    Ok(NSymElement::from_terms(
        NSymBasis::S,
        s.terms()
            .filter_map(|(i, c)| i.divide(k).map(|j| (j, c.clone()))),
    ))
}
