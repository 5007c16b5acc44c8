use num_bigint::BigInt;
use num_traits::One;

use super::{NSymBasis, NSymElement, QSymBasis, QSymElement};
use crate::composition::all_compositions;
use crate::error::Result;
use crate::lagrange::TransitionTables;

fn sign(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Λ_n in S, or S_n in Λ: the same alternating sum over all compositions.
fn alternating_row(basis: NSymBasis, n: usize) -> NSymElement {
    NSymElement::from_terms(
        basis,
        all_compositions(n).into_iter().map(|i| {
            let s = sign(n - i.len());
            (i, s)
        }),
    )
}

/// Expands every index as a product of per-part generators.
fn expand_multiplicative(
    x: &NSymElement,
    target: NSymBasis,
    mut generator: impl FnMut(usize) -> Result<NSymElement>,
) -> Result<NSymElement> {
    let mut cache: Vec<Option<NSymElement>> = Vec::new();
    let mut out = NSymElement::zero(target);
    for (index, c) in x.terms() {
        let mut acc = NSymElement::one(target);
        for &p in index.parts() {
            if cache.len() <= p {
                cache.resize(p + 1, None);
            }
            if cache[p].is_none() {
                cache[p] = Some(generator(p)?);
            }
            acc = acc.concat_product(cache[p].as_ref().expect("filled above"));
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// Sum over coarser (or finer) indices with an optional length sign.
fn boolean_transform(
    x: &NSymElement,
    target: NSymBasis,
    coarser: bool,
    signed: bool,
) -> NSymElement {
    let mut out = NSymElement::zero(target);
    for (i, c) in x.terms() {
        let others = if coarser {
            i.coarsenings()
        } else {
            i.refinements()
        };
        for j in others {
            let s = if signed {
                sign(i.len().abs_diff(j.len()))
            } else {
                BigInt::one()
            };
            out.add_term(j, c * s);
        }
    }
    out
}

fn to_s(x: &NSymElement, tables: &TransitionTables) -> Result<NSymElement> {
    match x.basis() {
        NSymBasis::S => Ok(x.clone()),
        NSymBasis::Lambda => {
            expand_multiplicative(x, NSymBasis::S, |n| Ok(alternating_row(NSymBasis::S, n)))
        }
        NSymBasis::R => Ok(boolean_transform(x, NSymBasis::S, true, true)),
        NSymBasis::G => expand_multiplicative(x, NSymBasis::S, |n| tables.g_in_s(n)),
        NSymBasis::F => to_s(&f_to_g(x), tables),
    }
}

fn from_s(x: &NSymElement, target: NSymBasis, tables: &TransitionTables) -> Result<NSymElement> {
    debug_assert_eq!(x.basis(), NSymBasis::S);
    match target {
        NSymBasis::S => Ok(x.clone()),
        NSymBasis::Lambda => expand_multiplicative(x, NSymBasis::Lambda, |n| {
            Ok(alternating_row(NSymBasis::Lambda, n))
        }),
        NSymBasis::R => Ok(boolean_transform(
            &x.relabel(NSymBasis::R),
            NSymBasis::R,
            true,
            false,
        )),
        NSymBasis::G => expand_multiplicative(x, NSymBasis::G, |n| tables.s_in_g(n)),
        NSymBasis::F => Ok(g_to_f(&from_s(x, NSymBasis::G, tables)?)),
    }
}

fn f_to_g(x: &NSymElement) -> NSymElement {
    boolean_transform(x, NSymBasis::G, false, true)
}

fn g_to_f(x: &NSymElement) -> NSymElement {
    boolean_transform(x, NSymBasis::F, false, false)
}

/// Re-expresses `x` in `target`, using `tables` for anything touching g or f.
pub fn convert_with(
    x: &NSymElement,
    target: NSymBasis,
    tables: &TransitionTables,
) -> Result<NSymElement> {
    use NSymBasis::*;
    match (x.basis(), target) {
        (a, b) if a == b => Ok(x.clone()),
        (G, F) => Ok(g_to_f(x)),
        (F, G) => Ok(f_to_g(x)),
        _ => from_s(&to_s(x, tables)?, target, tables),
    }
}

impl NSymElement {
    pub fn convert(&self, target: NSymBasis) -> Result<NSymElement> {
        convert_with(self, target, crate::lagrange::tables())
    }
}

fn qsym_to_m(x: &QSymElement, tables: &TransitionTables) -> Result<QSymElement> {
    let mut out = QSymElement::zero(QSymBasis::M);
    match x.basis() {
        QSymBasis::M => return Ok(x.clone()),
        QSymBasis::E | QSymBasis::V => {
            for (i, c) in x.terms() {
                let c = if x.basis() == QSymBasis::V {
                    c * sign(i.weight() - i.len())
                } else {
                    c.clone()
                };
                for j in i.coarsenings() {
                    out.add_term(j, c.clone());
                }
            }
        }
        QSymBasis::C => {
            // c_I = sum_J [g^I](S^J) M_J
            for (i, c) in x.terms() {
                let n = i.weight();
                let m = tables.s_to_g_matrix(n)?;
                let row = m.position(i);
                for (j, col) in m.index.iter().enumerate() {
                    out.add_term(col.clone(), c * &m.rows[row][j]);
                }
            }
        }
    }
    Ok(out)
}

fn m_to_qsym(x: &QSymElement, target: QSymBasis, tables: &TransitionTables) -> Result<QSymElement> {
    let mut out = QSymElement::zero(target);
    match target {
        QSymBasis::M => return Ok(x.clone()),
        QSymBasis::E | QSymBasis::V => {
            for (i, c) in x.terms() {
                for j in i.coarsenings() {
                    let mut s = sign(i.len() - j.len());
                    if target == QSymBasis::V {
                        s *= sign(j.weight() - j.len());
                    }
                    out.add_term(j, c * s);
                }
            }
        }
        QSymBasis::C => {
            // M_J = sum_I [S^J](g^I) c_I
            for (j, c) in x.terms() {
                let n = j.weight();
                let m = tables.g_to_s_matrix(n)?;
                let row = m.position(j);
                for (i, col) in m.index.iter().enumerate() {
                    out.add_term(col.clone(), c * &m.rows[row][i]);
                }
            }
        }
    }
    Ok(out)
}

pub fn convert_qsym_with(
    x: &QSymElement,
    target: QSymBasis,
    tables: &TransitionTables,
) -> Result<QSymElement> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    m_to_qsym(&qsym_to_m(x, tables)?, target, tables)
}

impl QSymElement {
    pub fn convert(&self, target: QSymBasis) -> Result<QSymElement> {
        convert_qsym_with(self, target, crate::lagrange::tables())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::pair;
    use crate::composition::Composition;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    const NSYM: [NSymBasis; 5] = [
        NSymBasis::S,
        NSymBasis::Lambda,
        NSymBasis::R,
        NSymBasis::G,
        NSymBasis::F,
    ];

    #[test]
    fn lambda_and_ribbons_in_s() {
        let l2 = NSymElement::generator(NSymBasis::Lambda, 2);
        assert_eq!(
            l2.convert(NSymBasis::S).unwrap(),
            NSymElement::from_terms(NSymBasis::S, [(c(&[1, 1]), 1), (c(&[2]), -1)])
        );
        let r12 = NSymElement::monomial(NSymBasis::R, c(&[1, 2]));
        assert_eq!(
            r12.convert(NSymBasis::S).unwrap(),
            NSymElement::from_terms(NSymBasis::S, [(c(&[1, 2]), 1), (c(&[3]), -1)])
        );
    }

    #[test]
    fn g3_in_s() {
        let g3 = NSymElement::generator(NSymBasis::G, 3);
        assert_eq!(
            g3.convert(NSymBasis::S).unwrap().to_string(),
            "S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]"
        );
        assert_eq!(
            g3.convert(NSymBasis::Lambda).unwrap().to_string(),
            "L[3] - 3*L[2,1] - 2*L[1,2] + 5*L[1,1,1]"
        );
        assert_eq!(
            NSymElement::generator(NSymBasis::Lambda, 3)
                .convert(NSymBasis::S)
                .unwrap()
                .to_string(),
            "S[3] - S[2,1] - S[1,2] + S[1,1,1]"
        );
    }

    #[test]
    fn round_trips_between_all_bases() {
        for n in 0..=6 {
            for i in all_compositions(n) {
                for &a in &NSYM {
                    let x = NSymElement::monomial(a, i.clone());
                    for &b in &NSYM {
                        let y = x.convert(b).unwrap();
                        assert_eq!(y.convert(a).unwrap(), x, "{a} -> {b} -> {a} on {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn qsym_round_trips_and_duality() {
        let pairs = [
            (QSymBasis::M, NSymBasis::S),
            (QSymBasis::V, NSymBasis::Lambda),
            (QSymBasis::C, NSymBasis::G),
        ];
        for n in 1..=5 {
            let comps = all_compositions(n);
            for (q, b) in pairs {
                for i in &comps {
                    let qi = QSymElement::monomial(q, i.clone());
                    for target in [QSymBasis::M, QSymBasis::E, QSymBasis::V, QSymBasis::C] {
                        assert_eq!(qi.convert(target).unwrap().convert(q).unwrap(), qi);
                    }
                    for j in &comps {
                        let bj = NSymElement::monomial(b, j.clone());
                        let expected = if i == j { 1 } else { 0 };
                        assert_eq!(pair(&qi, &bj).unwrap(), BigInt::from(expected));
                    }
                }
            }
        }
    }

    #[test]
    fn essential_pairs_with_coarser_s() {
        for n in 1..=5 {
            for i in all_compositions(n) {
                let e = QSymElement::monomial(QSymBasis::E, i.clone());
                for j in all_compositions(n) {
                    let s = NSymElement::monomial(NSymBasis::S, j.clone());
                    let expected = i.refines(&j) as i32;
                    assert_eq!(pair(&e, &s).unwrap(), BigInt::from(expected));
                }
            }
        }
    }
}
