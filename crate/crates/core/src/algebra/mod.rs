//! Composition-indexed linear combinations with exact integer coefficients.
//!
//! [`NSymElement`] lives in the algebra of noncommutative symmetric
//! functions (bases S, Λ, R, g, f), [`QSymElement`] in its graded dual
//! (bases M, E, V, c), and [`TensorElement`] in the tensor square of the
//! noncommutative side. Zero coefficients are never stored.

mod convert;
mod ops;

pub use convert::{convert_qsym_with, convert_with};
pub use ops::{
    antipode, chi, coproduct, mirror_invariance_check, neg_alphabet, pair, phi_k, psi_k, tilde,
    CompositionInvolution,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

pub trait Basis: Copy + Eq + Ord + fmt::Debug + fmt::Display {
    const SIDE: &'static str;
    fn symbol(self) -> &'static str;
    fn from_symbol(s: &str) -> Option<Self>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NSymBasis {
    /// Complete homogeneous functions S^I.
    S,
    /// Elementary functions Λ^I.
    Lambda,
    /// Ribbon Schur functions R_I.
    R,
    /// The Lagrange basis g^I = g_{i_1} ... g_{i_r}.
    G,
    /// f^I, the Möbius transform of g over refinement.
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QSymBasis {
    /// Monomial quasi-symmetric functions, dual to S^I.
    M,
    /// Essential basis: E_I is the sum of M_J over J coarser than I.
    E,
    /// V_I = (-1)^{|I|-l(I)} E_I, dual to Λ^I.
    V,
    /// The basis dual to g^I.
    C,
}

impl Basis for NSymBasis {
    const SIDE: &'static str = "nsym";

    fn symbol(self) -> &'static str {
        match self {
            NSymBasis::S => "S",
            NSymBasis::Lambda => "L",
            NSymBasis::R => "R",
            NSymBasis::G => "G",
            NSymBasis::F => "F",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "S" => Some(NSymBasis::S),
            "L" | "Λ" | "Lambda" => Some(NSymBasis::Lambda),
            "R" => Some(NSymBasis::R),
            "G" | "g" => Some(NSymBasis::G),
            "F" | "f" => Some(NSymBasis::F),
            _ => None,
        }
    }
}

impl Basis for QSymBasis {
    const SIDE: &'static str = "qsym";

    fn symbol(self) -> &'static str {
        match self {
            QSymBasis::M => "M",
            QSymBasis::E => "E",
            QSymBasis::V => "V",
            QSymBasis::C => "C",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "M" => Some(QSymBasis::M),
            "E" => Some(QSymBasis::E),
            "V" => Some(QSymBasis::V),
            "C" | "c" => Some(QSymBasis::C),
            _ => None,
        }
    }
}

impl fmt::Display for NSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl fmt::Display for QSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<B> {
    basis: B,
    terms: BTreeMap<Composition, BigInt>,
}

pub type NSymElement = Element<NSymBasis>;
pub type QSymElement = Element<QSymBasis>;

impl<B: Basis> Element<B> {
    pub fn zero(basis: B) -> Self {
        Element {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: B) -> Self {
        Self::monomial(basis, Composition::empty())
    }

    pub fn monomial(basis: B, index: Composition) -> Self {
        Self::term(basis, index, BigInt::one())
    }

    pub fn term(basis: B, index: Composition, coeff: BigInt) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(index, coeff);
        e
    }

    pub fn from_terms<I, C>(basis: B, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut e = Self::zero(basis);
        for (index, c) in terms {
            e.add_term(index, c.into());
        }
        e
    }

    pub fn basis(&self) -> B {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Composition, BigInt> {
        self.terms
    }

    pub fn coeff(&self, index: &Composition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight of a stored index, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Composition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(Composition::weight);
        match weights.next() {
            None => true,
            Some(w) => weights.all(|x| x == w),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        Element {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn abs_sum(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn add_term(&mut self, index: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        Ok(out)
    }

    /// `self += c * other`, assuming equal bases.
    pub(crate) fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        debug_assert_eq!(self.basis, other.basis);
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.basis);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// Applies a linear map given on basis indices, keeping the basis tag.
    pub fn map_indices(&self, f: impl Fn(&Composition) -> Composition) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(k, v)| (f(k), v.clone())),
        )
    }

    /// Reinterprets the same coefficients in another basis.
    pub fn relabel(&self, basis: B) -> Self {
        Element {
            basis,
            terms: self.terms.clone(),
        }
    }
}

impl NSymElement {
    /// The generator of degree `n` of a multiplicative basis (S_n, Λ_n, g_n).
    pub fn generator(basis: NSymBasis, n: usize) -> Self {
        Self::monomial(basis, Composition::row(n))
    }

    /// Product in the current basis: concatenation for S, Λ and g, the
    /// two-term ribbon rule for R.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        match self.basis {
            NSymBasis::S | NSymBasis::Lambda | NSymBasis::G => Ok(self.concat_product(other)),
            NSymBasis::R => {
                let mut out = Self::zero(NSymBasis::R);
                for (i, a) in &self.terms {
                    for (j, b) in &other.terms {
                        let c = a * b;
                        out.add_term(i.concat(j), c.clone());
                        if let Some(merged) = ribbon_merge(i, j) {
                            out.add_term(merged, c);
                        }
                    }
                }
                Ok(out)
            }
            NSymBasis::F => Err(Error::UnsupportedProduct(self.basis.to_string())),
        }
    }

    pub(crate) fn concat_product(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.basis);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_term(i.concat(j), a * b);
            }
        }
        out
    }
}

fn ribbon_merge(i: &Composition, j: &Composition) -> Option<Composition> {
    let (a, b) = (i.parts(), j.parts());
    let (&last, head) = a.split_last()?;
    let (&first, tail) = b.split_first()?;
    let mut parts = head.to_vec();
    parts.push(last + first);
    parts.extend_from_slice(tail);
    Some(Composition::new(parts).expect("positive parts"))
}

impl<B: Basis> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let symbol = self.basis.symbol();
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let mon = if k.is_empty() {
                None
            } else {
                Some(format!("{}[{}]", symbol, join(k.parts())))
            };
            write_signed_term(f, n == 0, c, mon.as_deref())?;
        }
        Ok(())
    }
}

pub(crate) fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    monomial: Option<&str>,
) -> fmt::Result {
    let abs = c.abs();
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    match monomial {
        None => write!(f, "{}", abs),
        Some(m) if abs.is_one() => f.write_str(m),
        Some(m) => write!(f, "{}*{}", abs, m),
    }
}

/// An element of the tensor square, both legs in one declared basis each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    left: NSymBasis,
    right: NSymBasis,
    terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl TensorElement {
    pub fn zero(left: NSymBasis, right: NSymBasis) -> Self {
        TensorElement {
            left,
            right,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(left: NSymBasis, right: NSymBasis) -> Self {
        let mut t = Self::zero(left, right);
        t.add_term(Composition::empty(), Composition::empty(), BigInt::one());
        t
    }

    pub fn bases(&self) -> (NSymBasis, NSymBasis) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((left, right)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.bases() != other.bases() {
            return Err(Error::BasisMismatch {
                left: format!("{}⊗{}", self.left, self.right),
                right: format!("{}⊗{}", other.left, other.right),
            });
        }
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    /// Legwise product `(a⊗b)(c⊗d) = ac⊗bd` for multiplicative bases.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.bases() != other.bases() {
            return Err(Error::BasisMismatch {
                left: format!("{}⊗{}", self.left, self.right),
                right: format!("{}⊗{}", other.left, other.right),
            });
        }
        for b in [self.left, self.right] {
            if !matches!(b, NSymBasis::S | NSymBasis::Lambda | NSymBasis::G) {
                return Err(Error::UnsupportedProduct(b.to_string()));
            }
        }
        let mut out = Self::zero(self.left, self.right);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), x * y);
            }
        }
        Ok(out)
    }

    /// Exchanges the two legs.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.right, self.left);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Re-expresses both legs, each in its own target basis.
    pub fn convert(&self, left: NSymBasis, right: NSymBasis) -> Result<Self> {
        self.convert_with(left, right, crate::lagrange::tables())
    }

    pub fn convert_with(
        &self,
        left: NSymBasis,
        right: NSymBasis,
        tables: &crate::lagrange::TransitionTables,
    ) -> Result<Self> {
        let mut lmemo: BTreeMap<Composition, NSymElement> = BTreeMap::new();
        let mut rmemo: BTreeMap<Composition, NSymElement> = BTreeMap::new();
        let mut out = Self::zero(left, right);
        for ((l, r), c) in &self.terms {
            if !lmemo.contains_key(l) {
                let e = convert_with(&NSymElement::monomial(self.left, l.clone()), left, tables)?;
                lmemo.insert(l.clone(), e);
            }
            if !rmemo.contains_key(r) {
                let e = convert_with(&NSymElement::monomial(self.right, r.clone()), right, tables)?;
                rmemo.insert(r.clone(), e);
            }
            for (a, x) in lmemo[l].terms() {
                for (b, y) in rmemo[r].terms() {
                    out.add_term(a.clone(), b.clone(), c * x * y);
                }
            }
        }
        Ok(out)
    }

    /// Applies `f ⊗ g` where both act on single basis elements.
    pub fn map_legs(
        &self,
        f: impl Fn(&Composition) -> NSymElement,
        g: impl Fn(&Composition) -> NSymElement,
        left: NSymBasis,
        right: NSymBasis,
    ) -> Self {
        let mut out = Self::zero(left, right);
        for ((l, r), c) in &self.terms {
            let fl = f(l);
            let gr = g(r);
            for (a, x) in fl.terms() {
                for (b, y) in gr.terms() {
                    out.add_term(a.clone(), b.clone(), c * x * y);
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let leg = |b: NSymBasis, k: &Composition| {
            if k.is_empty() {
                "1".to_string()
            } else {
                format!("{}[{}]", b.symbol(), join(k.parts()))
            }
        };
        for (n, ((l, r), c)) in self.terms.iter().enumerate() {
            let mon = format!("{} ⊗ {}", leg(self.left, l), leg(self.right, r));
            write_signed_term(f, n == 0, c, Some(&mon))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn products() {
        let s2 = NSymElement::generator(NSymBasis::S, 2);
        let s1 = NSymElement::generator(NSymBasis::S, 1);
        assert_eq!(
            s2.multiply(&s1).unwrap(),
            NSymElement::monomial(NSymBasis::S, c(&[2, 1]))
        );
        let r1 = NSymElement::monomial(NSymBasis::R, c(&[1]));
        assert_eq!(
            r1.multiply(&r1).unwrap(),
            NSymElement::from_terms(NSymBasis::R, [(c(&[1, 1]), 1), (c(&[2]), 1)])
        );
        let g2 = NSymElement::generator(NSymBasis::G, 2);
        let g1 = NSymElement::generator(NSymBasis::G, 1);
        assert_eq!(
            g2.multiply(&g1).unwrap(),
            NSymElement::monomial(NSymBasis::G, c(&[2, 1]))
        );
        assert!(matches!(s1.multiply(&g1), Err(Error::BasisMismatch { .. })));
        let f1 = NSymElement::generator(NSymBasis::F, 1);
        assert!(matches!(
            f1.multiply(&f1),
            Err(Error::UnsupportedProduct(_))
        ));
    }

    #[test]
    fn zero_pruning_and_display() {
        let a = NSymElement::from_terms(NSymBasis::S, [(c(&[3]), 1), (c(&[2, 1]), 2)]);
        let b = NSymElement::from_terms(NSymBasis::S, [(c(&[3]), -1)]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.to_string(), "2*S[2,1]");
        assert_eq!(a.sub(&a).unwrap(), NSymElement::zero(NSymBasis::S));
        let g = NSymElement::from_terms(
            NSymBasis::S,
            [
                (c(&[1, 1, 1]), 1),
                (c(&[1, 2]), 1),
                (c(&[2, 1]), 2),
                (c(&[3]), 1),
            ],
        );
        assert_eq!(g.to_string(), "S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]");
        assert_eq!(NSymElement::one(NSymBasis::S).to_string(), "1");
        let n = NSymElement::from_terms(NSymBasis::G, [(c(&[2]), -1), (c(&[1, 1]), 3)]);
        assert_eq!(n.to_string(), "-G[2] + 3*G[1,1]");
    }

    #[test]
    fn tensor_basics() {
        let mut t = TensorElement::zero(NSymBasis::G, NSymBasis::G);
        t.add_term(c(&[1]), Composition::empty(), BigInt::one());
        t.add_term(Composition::empty(), c(&[1]), BigInt::one());
        assert_eq!(t.to_string(), "1 ⊗ G[1] + G[1] ⊗ 1");
        assert_eq!(t.swap(), t);
        let sq = t.multiply(&t).unwrap();
        assert_eq!(sq.coeff(&c(&[1]), &c(&[1])), BigInt::from(2));
        assert_eq!(sq.len(), 3);
    }
}
