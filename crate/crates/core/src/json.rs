//! JSON forms of the algebraic values. Coefficients are exact integers or
//! rationals written as strings, indices are arrays of parts.
//!
//! ```json
//! {"side": "nsym", "basis": "G", "terms": [{"index": [2, 1], "coeff": "4"}]}
//! {"left": "G", "right": "G", "terms": [{"left": [2], "right": [1], "coeff": "4"}]}
//! {"terms": [{"u": [1], "v": [1], "coeff": "3"}]}
//! {"hat": ["1", "-1", "1"]}
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Basis, Element, NSymBasis, TensorElement};
use crate::composition::Composition;
use crate::hopf::MarkerPolynomial;
use crate::incidence::{format_rational, MultiplicativeFunction};

fn parse_int<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.parse()
        .map_err(|_| E::custom(format!("{s:?} is not an integer")))
}

#[derive(Serialize, Deserialize)]
struct ElementTerm {
    index: Composition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementForm {
    side: String,
    basis: String,
    terms: Vec<ElementTerm>,
}

impl<B: Basis> Serialize for Element<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementForm {
            side: B::SIDE.to_string(),
            basis: self.basis().symbol().to_string(),
            terms: self
                .terms()
                .map(|(i, c)| ElementTerm {
                    index: i.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, B: Basis> Deserialize<'de> for Element<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let form = ElementForm::deserialize(d)?;
        if form.side != B::SIDE {
            return Err(D::Error::custom(format!(
                "expected a {} element, found {}",
                B::SIDE,
                form.side
            )));
        }
        let basis = B::from_symbol(&form.basis)
            .ok_or_else(|| D::Error::custom(format!("unknown basis {}", form.basis)))?;
        let mut out = Element::zero(basis);
        for t in form.terms {
            out.add_term(t.index, parse_int(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    left: Composition,
    right: Composition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorForm {
    left: String,
    right: String,
    terms: Vec<TensorTerm>,
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (l, r) = self.bases();
        TensorForm {
            left: l.symbol().to_string(),
            right: r.symbol().to_string(),
            terms: self
                .terms()
                .map(|((a, b), c)| TensorTerm {
                    left: a.clone(),
                    right: b.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let form = TensorForm::deserialize(d)?;
        let basis = |s: &str| {
            NSymBasis::from_symbol(s).ok_or_else(|| D::Error::custom(format!("unknown basis {s}")))
        };
        let mut out = TensorElement::zero(basis(&form.left)?, basis(&form.right)?);
        for t in form.terms {
            out.add_term(t.left, t.right, parse_int(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct MarkerTerm {
    u: Composition,
    v: Composition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MarkerForm {
    terms: Vec<MarkerTerm>,
}

impl Serialize for MarkerPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MarkerForm {
            terms: self
                .terms()
                .map(|((u, v), c)| MarkerTerm {
                    u: u.clone(),
                    v: v.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkerPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let form = MarkerForm::deserialize(d)?;
        let mut out = MarkerPolynomial::zero();
        for t in form.terms {
            out.add_term(t.u, t.v, parse_int(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct HatForm {
    hat: Vec<String>,
}

impl Serialize for MultiplicativeFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HatForm {
            hat: self.hat().iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiplicativeFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let form = HatForm::deserialize(d)?;
        let hat = form
            .hat
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|_| D::Error::custom(format!("{s:?} is not a rational")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MultiplicativeFunction::from_hat(hat).map_err(D::Error::custom)
    }
}

/// Exact integer as a JSON string.
pub fn int_value(n: &BigInt) -> serde_json::Value {
    serde_json::Value::String(n.to_string())
}
