//! Degreewise solvers for Lagrange-type functional equations in NSym, and
//! the cached S ↔ g transition tables every g-basis conversion relies on.

mod routes;
mod tables;

pub use routes::{
    antipode_g, antipode_g_by_formula, antipode_g_contributions, antipode_g_four_step,
    f_basis_table, g_expansion_check, g_neg, g_neg_by_essential, g_neg_by_parking, g_neg_by_tilde,
    k_parking_check, Contribution, GNegRoute,
};
pub use tables::{
    invert_unitriangular, s_to_g_by_inversion, s_to_g_via_recipe, tables, TransitionMatrix,
    TransitionTables, DEFAULT_MAX_DEGREE,
};

use num_traits::One;

use crate::algebra::{neg_alphabet, NSymBasis, NSymElement};
use crate::error::{Error, Result};

/// A truncated graded series in the S basis, component `d` homogeneous of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    components: Vec<NSymElement>,
}

impl GradedSeries {
    /// Builds a series from S-basis components, converting if needed.
    pub fn new(components: Vec<NSymElement>) -> Result<Self> {
        let components = components
            .into_iter()
            .map(|c| c.convert(NSymBasis::S))
            .collect::<Result<Vec<_>>>()?;
        for (d, c) in components.iter().enumerate() {
            if c.terms().any(|(i, _)| i.weight() != d) {
                return Err(Error::InvalidArgument(format!(
                    "component {d} is not homogeneous of degree {d}"
                )));
            }
        }
        Ok(GradedSeries { components })
    }

    /// σ_1 = Σ_{n ≤ N} S_n.
    pub fn sigma(max_degree: usize) -> Self {
        GradedSeries {
            components: (0..=max_degree)
                .map(|n| NSymElement::generator(NSymBasis::S, n))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.components.len().saturating_sub(1)
    }

    pub fn component(&self, d: usize) -> &NSymElement {
        &self.components[d]
    }

    pub fn components(&self) -> &[NSymElement] {
        &self.components
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        GradedSeries {
            components: self.components[..=max_degree.min(self.max_degree())].to_vec(),
        }
    }

    fn has_unit_constant(&self) -> bool {
        self.components
            .first()
            .is_some_and(|c| c == &NSymElement::one(NSymBasis::S))
    }

    /// Truncated product, up to the smaller of the two degrees.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.max_degree().min(other.max_degree());
        let components = (0..=n)
            .map(|d| {
                let mut acc = NSymElement::zero(NSymBasis::S);
                for j in 0..=d {
                    acc.add_scaled(
                        &self.components[j].concat_product(&other.components[d - j]),
                        &One::one(),
                    );
                }
                acc
            })
            .collect();
        GradedSeries { components }
    }

    /// Applies a degree-preserving linear map componentwise.
    pub fn map(&self, f: impl Fn(&NSymElement) -> Result<NSymElement>) -> Result<Self> {
        GradedSeries::new(self.components.iter().map(f).collect::<Result<Vec<_>>>()?)
    }

    /// The series evaluated at −A.
    pub fn negate_alphabet(&self) -> Result<Self> {
        self.map(neg_alphabet)
    }
}

/// Powers `G^p` of a series that is being built degree by degree.
struct PowerTable {
    // pow[p][m] = degree-m component of G^p
    pow: Vec<Vec<NSymElement>>,
}

impl PowerTable {
    fn new(max_power: usize) -> Self {
        let pow = (0..=max_power)
            .map(|_| vec![NSymElement::one(NSymBasis::S)])
            .collect();
        PowerTable { pow }
    }

    /// Records degree `d` of G (all lower degrees already present).
    fn push(&mut self, g: &[NSymElement]) {
        let d = g.len() - 1;
        for p in 0..self.pow.len() {
            let next = if p == 0 {
                NSymElement::zero(NSymBasis::S)
            } else {
                let mut acc = NSymElement::zero(NSymBasis::S);
                // pow[p - 1] already holds degree d: lower powers are extended first
                for j in 0..=d {
                    acc.add_scaled(&self.pow[p - 1][j].concat_product(&g[d - j]), &One::one());
                }
                acc
            };
            self.pow[p].push(next);
        }
    }

    fn get(&self, p: usize, m: usize) -> &NSymElement {
        &self.pow[p][m]
    }
}

/// Solves `G = Σ_n coeffs(n) · G^{power(n)}` degree by degree up to `max_degree`.
///
/// `coeffs(n)` must be homogeneous of degree `n` with `coeffs(0) = 1`, and
/// `power(0) = 0`.
pub fn solve_functional_equation(
    coeffs: impl Fn(usize) -> Result<NSymElement>,
    power: impl Fn(usize) -> usize,
    max_degree: usize,
) -> Result<GradedSeries> {
    if coeffs(0)?.convert(NSymBasis::S)? != NSymElement::one(NSymBasis::S) || power(0) != 0 {
        return Err(Error::NonUnitConstant);
    }
    let cs: Vec<NSymElement> = (1..=max_degree)
        .map(|n| coeffs(n).and_then(|c| c.convert(NSymBasis::S)))
        .collect::<Result<_>>()?;
    let max_power = (1..=max_degree).map(&power).max().unwrap_or(0);
    let mut table = PowerTable::new(max_power);
    let mut g = vec![NSymElement::one(NSymBasis::S)];
    for d in 1..=max_degree {
        let mut gd = NSymElement::zero(NSymBasis::S);
        for n in 1..=d {
            let p = power(n);
            gd.add_scaled(&cs[n - 1].concat_product(table.get(p, d - n)), &One::one());
        }
        g.push(gd);
        table.push(&g);
    }
    GradedSeries::new(g)
}

/// The noncommutative Lagrange series g = 1 + Σ S_n g^n.
pub fn g_series(max_degree: usize) -> Result<GradedSeries> {
    gk_series(1, max_degree)
}

/// g^{(k)} = Σ S_n [g^{(k)}]^{kn}.
pub fn gk_series(k: usize, max_degree: usize) -> Result<GradedSeries> {
    solve_functional_equation(
        |n| Ok(NSymElement::generator(NSymBasis::S, n)),
        |n| k * n,
        max_degree,
    )
}

/// g^{(k)} through the iteration g^{(k)} = Σ g^{(k−1)}_n [g^{(k)}]^n, starting at g^{(0)} = σ_1.
pub fn gk_by_iteration(k: usize, max_degree: usize) -> Result<GradedSeries> {
    let mut current = GradedSeries::sigma(max_degree);
    for _ in 0..k {
        let prev = current;
        current = solve_functional_equation(|n| Ok(prev.component(n).clone()), |n| n, max_degree)?;
    }
    Ok(current)
}

/// Noncommutative multiplicative inverse, degree by degree.
pub fn series_inverse(s: &GradedSeries) -> Result<GradedSeries> {
    if !s.has_unit_constant() {
        return Err(Error::NonUnitConstant);
    }
    let mut inv = vec![NSymElement::one(NSymBasis::S)];
    for d in 1..=s.max_degree() {
        let mut acc = NSymElement::zero(NSymBasis::S);
        for j in 1..=d {
            acc.add_scaled(
                &s.component(j).concat_product(&inv[d - j]),
                &-num_bigint::BigInt::one(),
            );
        }
        inv.push(acc);
    }
    Ok(GradedSeries { components: inv })
}

/// Free cumulants: σ_1 = Σ K_n σ_1^n.
pub fn free_cumulants(max_degree: usize) -> Result<GradedSeries> {
    let sigma = GradedSeries::sigma(max_degree);
    let mut table = PowerTable::new(max_degree);
    let mut sig_prefix = vec![NSymElement::one(NSymBasis::S)];
    for d in 1..=max_degree {
        sig_prefix.push(sigma.component(d).clone());
        table.push(&sig_prefix);
    }
    let mut k = vec![NSymElement::one(NSymBasis::S)];
    for d in 1..=max_degree {
        let mut kd = sigma.component(d).clone();
        for n in 1..d {
            kd.add_scaled(
                &k[n].concat_product(table.get(n, d - n)),
                &-num_bigint::BigInt::one(),
            );
        }
        k.push(kd);
    }
    GradedSeries::new(k)
}

/// Parses the series names used on the command line: g, g2, gk:<k>, K.
pub fn named_series(name: &str, max_degree: usize) -> Result<GradedSeries> {
    match name {
        "g" => g_series(max_degree),
        "g2" => gk_series(2, max_degree),
        "K" => free_cumulants(max_degree),
        other => match other.strip_prefix("gk:").map(str::parse::<usize>) {
            Some(Ok(k)) => gk_series(k, max_degree),
            _ => Err(Error::Parse {
                what: "series name",
                input: name.to_string(),
            }),
        },
    }
}

#[cfg(test)]
pub(crate) fn comp(parts: &[usize]) -> crate::composition::Composition {
    crate::composition::Composition::new(parts.to_vec()).expect("positive parts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::phi_k;

    #[test]
    fn first_components() {
        let g = g_series(3).unwrap();
        assert_eq!(g.component(0).to_string(), "1");
        assert_eq!(g.component(1).to_string(), "S[1]");
        assert_eq!(g.component(2).to_string(), "S[2] + S[1,1]");
        assert_eq!(
            g.component(3).to_string(),
            "S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]"
        );
        let h = gk_series(2, 3).unwrap();
        assert_eq!(
            h.component(3).to_string(),
            "S[3] + 4*S[2,1] + 2*S[1,2] + 5*S[1,1,1]"
        );
    }

    #[test]
    fn three_routes_to_g2() {
        let direct = gk_series(2, 6).unwrap();
        let iterated = gk_by_iteration(2, 6).unwrap();
        assert_eq!(direct, iterated);
        let g = g_series(12).unwrap();
        for d in 0..=6 {
            let phi = phi_k(g.component(2 * d), 2).unwrap();
            assert_eq!(&phi, direct.component(d), "degree {d}");
        }
    }

    #[test]
    fn fixed_point() {
        let g = g_series(8).unwrap();
        let mut rhs = GradedSeries::new(vec![NSymElement::one(NSymBasis::S)]).unwrap();
        rhs.components.resize(9, NSymElement::zero(NSymBasis::S));
        let mut power = GradedSeries::new(vec![NSymElement::one(NSymBasis::S)]).unwrap();
        power.components.resize(9, NSymElement::zero(NSymBasis::S));
        for n in 1..=8 {
            power = power.multiply(&g);
            for d in n..=8 {
                let t =
                    NSymElement::generator(NSymBasis::S, n).concat_product(power.component(d - n));
                rhs.components[d].add_scaled(&t, &One::one());
            }
        }
        assert_eq!(rhs, g);
    }

    #[test]
    fn inverse_and_cumulants() {
        let one = GradedSeries::new(vec![NSymElement::one(NSymBasis::S)]).unwrap();
        assert_eq!(series_inverse(&one).unwrap(), one);
        let g = g_series(6).unwrap();
        let prod = g.multiply(&series_inverse(&g).unwrap());
        for d in 1..=6 {
            assert!(prod.component(d).is_zero());
        }
        let k = free_cumulants(6).unwrap();
        assert_eq!(k.component(1).to_string(), "S[1]");
        let gneg = g.negate_alphabet().unwrap();
        assert_eq!(series_inverse(&gneg).unwrap(), k);
        let bad = GradedSeries::new(vec![NSymElement::zero(NSymBasis::S)]).unwrap();
        assert_eq!(series_inverse(&bad), Err(Error::NonUnitConstant));
    }

    #[test]
    fn gamma_identity() {
        // g(−A)^{−1} = Σ S_n(A) g(−A)^n
        let n = 6;
        let gneg = g_series(n).unwrap().negate_alphabet().unwrap();
        let lhs = series_inverse(&gneg).unwrap();
        let rhs = solve_like_sum(&gneg, n);
        assert_eq!(lhs, rhs);
    }

    fn solve_like_sum(x: &GradedSeries, n: usize) -> GradedSeries {
        let mut out = vec![NSymElement::zero(NSymBasis::S); n + 1];
        let mut power = GradedSeries::new(vec![NSymElement::one(NSymBasis::S)]).unwrap();
        power
            .components
            .resize(n + 1, NSymElement::zero(NSymBasis::S));
        for m in 0..=n {
            for d in m..=n {
                let t =
                    NSymElement::generator(NSymBasis::S, m).concat_product(power.component(d - m));
                out[d].add_scaled(&t, &One::one());
            }
            power = power.multiply(x);
        }
        GradedSeries::new(out).unwrap()
    }

    #[test]
    fn cumulants_substitute_into_g() {
        // K_n = Σ k_I S^I  ⇔  S_n = Σ k_I g^I
        let k = free_cumulants(6).unwrap();
        for n in 1..=6 {
            let s_in_g = tables().s_in_g(n).unwrap();
            assert_eq!(k.component(n).relabel(NSymBasis::G), s_in_g);
        }
    }

    #[test]
    fn named() {
        assert_eq!(named_series("gk:2", 4).unwrap(), gk_series(2, 4).unwrap());
        assert!(named_series("h", 3).is_err());
    }
}
