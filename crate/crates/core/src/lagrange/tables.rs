use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::g_series;
use crate::algebra::{NSymBasis, NSymElement};
use crate::composition::{all_compositions, Composition};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: usize = 10;

/// A square matrix indexed by the compositions of one weight in reverse-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub degree: usize,
    pub index: Vec<Composition>,
    pub rows: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn position(&self, i: &Composition) -> usize {
        self.index
            .binary_search(i)
            .expect("composition of the matrix degree")
    }

    pub fn entry(&self, row: &Composition, col: &Composition) -> &BigInt {
        &self.rows[self.position(row)][self.position(col)]
    }

    /// Entries as plain integers, for display.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }
}

#[derive(Default)]
struct Data {
    // g_n in S, n = 0..
    g: Vec<NSymElement>,
    // S_n in g, n = 0..
    s: Vec<NSymElement>,
    g_to_s: BTreeMap<usize, Arc<TransitionMatrix>>,
    s_to_g: BTreeMap<usize, Arc<TransitionMatrix>>,
}

/// Lazily extended S ↔ g tables, readable concurrently and extended under
/// an exclusive lock.
pub struct TransitionTables {
    max_degree: usize,
    data: RwLock<Data>,
}

impl TransitionTables {
    pub fn new(max_degree: usize) -> Self {
        TransitionTables {
            max_degree,
            data: RwLock::new(Data::default()),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeTooLarge {
                degree: n,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    fn ensure(&self, n: usize) -> Result<()> {
        self.check(n)?;
        if self.data.read().expect("table lock").s.len() > n {
            return Ok(());
        }
        let mut data = self.data.write().expect("table lock");
        if data.s.len() > n {
            return Ok(());
        }
        let g = g_series(n)?;
        data.g = g.components().to_vec();
        while data.s.len() <= n {
            let d = data.s.len();
            let next = s_from_lower(&data.g[d], &data.s, d);
            data.s.push(next);
        }
        Ok(())
    }

    /// g_n expanded on the S basis.
    pub fn g_in_s(&self, n: usize) -> Result<NSymElement> {
        self.ensure(n)?;
        Ok(self.data.read().expect("table lock").g[n].clone())
    }

    /// S_n expanded on the g basis.
    pub fn s_in_g(&self, n: usize) -> Result<NSymElement> {
        self.ensure(n)?;
        Ok(self.data.read().expect("table lock").s[n].clone())
    }

    /// Rows S^I, columns g^J: entry is the coefficient of S^I in g^J.
    pub fn g_to_s_matrix(&self, n: usize) -> Result<Arc<TransitionMatrix>> {
        self.matrix(n, true)
    }

    /// Rows g^I, columns S^J: entry is the coefficient of g^I in S^J.
    pub fn s_to_g_matrix(&self, n: usize) -> Result<Arc<TransitionMatrix>> {
        self.matrix(n, false)
    }

    fn matrix(&self, n: usize, g_to_s: bool) -> Result<Arc<TransitionMatrix>> {
        self.check(n)?;
        {
            let data = self.data.read().expect("table lock");
            let cache = if g_to_s { &data.g_to_s } else { &data.s_to_g };
            if let Some(m) = cache.get(&n) {
                return Ok(m.clone());
            }
        }
        let (from, to) = if g_to_s {
            (NSymBasis::G, NSymBasis::S)
        } else {
            (NSymBasis::S, NSymBasis::G)
        };
        let index = all_compositions(n);
        let columns = index
            .iter()
            .map(|j| {
                crate::algebra::convert_with(&NSymElement::monomial(from, j.clone()), to, self)
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = index
            .iter()
            .map(|i| columns.iter().map(|col| col.coeff(i)).collect())
            .collect();
        let m = Arc::new(TransitionMatrix {
            degree: n,
            index,
            rows,
        });
        let mut data = self.data.write().expect("table lock");
        let cache = if g_to_s {
            &mut data.g_to_s
        } else {
            &mut data.s_to_g
        };
        Ok(cache.entry(n).or_insert(m).clone())
    }
}

/// S_d = g_d − Σ_{I ≠ (d)} [S^I]g_d · S^I, with every S^I on lower S_i.
fn s_from_lower(g_d: &NSymElement, lower: &[NSymElement], d: usize) -> NSymElement {
    if d == 0 {
        return NSymElement::one(NSymBasis::G);
    }
    let mut out = NSymElement::generator(NSymBasis::G, d);
    for (i, c) in g_d.terms() {
        if i.len() == 1 {
            continue;
        }
        let mut prod = NSymElement::one(NSymBasis::G);
        for &p in i.parts() {
            prod = prod.concat_product(&lower[p]);
        }
        out.add_scaled(&prod, &-c);
    }
    out
}

/// The process-wide tables; the bound comes from `NCLAG_MAX_DEGREE` (default 10).
pub fn tables() -> &'static TransitionTables {
    static TABLES: OnceLock<TransitionTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let max = std::env::var("NCLAG_MAX_DEGREE")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_DEGREE);
        TransitionTables::new(max)
    })
}

/// Inverse of a lower unitriangular integer matrix, by forward substitution.
pub fn invert_unitriangular(m: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n || !row[i].is_one() || row[i + 1..].iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidArgument(
                "matrix is not lower unitriangular".into(),
            ));
        }
    }
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        inv[j][j] = BigInt::one();
        for i in j + 1..n {
            let mut acc = BigInt::zero();
            for k in j..i {
                acc += &m[i][k] * &inv[k][j];
            }
            inv[i][j] = -acc;
        }
    }
    Ok(inv)
}

/// The S → g matrix at degree `n` obtained by inverting the g → S matrix.
pub fn s_to_g_by_inversion(n: usize) -> Result<TransitionMatrix> {
    let index = all_compositions(n);
    let g = g_series(n)?;
    // g^J in S, built by direct multiplication of the solved components
    let columns: Vec<NSymElement> = index
        .iter()
        .map(|j| {
            j.parts()
                .iter()
                .fold(NSymElement::one(NSymBasis::S), |acc, &p| {
                    acc.concat_product(g.component(p))
                })
        })
        .collect();
    let forward: Vec<Vec<BigInt>> = index
        .iter()
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    let rows = invert_unitriangular(&forward)?;
    Ok(TransitionMatrix {
        degree: n,
        index,
        rows,
    })
}

/// S_n on the g basis: expand g_{n−1} on Λ and replace each Λ^I by
/// g^{(i_1+1, i_2, …)} − g^{(1, I)}, then multiply by (−1)^n.
pub fn s_to_g_via_recipe(n: usize) -> Result<NSymElement> {
    match n {
        0 => return Ok(NSymElement::one(NSymBasis::G)),
        1 => return Ok(NSymElement::generator(NSymBasis::G, 1)),
        _ => {}
    }
    let g = g_series(n - 1)?;
    let lam = g.component(n - 1).convert(NSymBasis::Lambda)?;
    let mut out = NSymElement::zero(NSymBasis::G);
    let sign = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    for (i, c) in lam.terms() {
        let c = c * &sign;
        let mut bumped = i.parts().to_vec();
        bumped[0] += 1;
        let mut prefixed = vec![1];
        prefixed.extend_from_slice(i.parts());
        out.add_term(Composition::new(prefixed)?, -&c);
        out.add_term(Composition::new(bumped)?, c);
    }
    Ok(out)
}
