//! Cross-route verification suites. Each case compares two independent
//! computations of the same object; failures carry the smallest failing
//! parameter.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{mirror_invariance_check, CompositionInvolution};
use crate::composition::{all_compositions, Composition};
use crate::error::Result;
use crate::factorization::{
    count_minimal_factorizations, factorizations_match_coproduct, MAX_AMBIENT,
};
use crate::hopf::{
    biprofile_terms, coassociativity_check, delta_g, delta_g_algebraic, delta_g_commutative,
    CommutativeRoute, DeltaRoute,
};
use crate::incidence::{
    biane_brute_force, biane_count, catalan, chain_count, multichain_count, signed_catalan,
    MultiplicativeFunction, NcLattice, MAX_LATTICE,
};
use crate::lagrange::{
    antipode_g, antipode_g_by_formula, antipode_g_four_step, g_expansion_check, g_neg,
    gk_by_iteration, gk_series, k_parking_check, GNegRoute,
};
use crate::noncrossing::motzkin::{
    count_by_repeats, count_closed_form, enumerate_s_words, path_to_word, s_to_sprime,
    touchard_sides, word_to_path,
};
use crate::noncrossing::tree::{all_trees, infix_successor, rebuild_tree, tau, tree_phi};
use crate::noncrossing::{enumerate_nc, kreweras, nc_to_ndpf, ndpf_to_nc};
use crate::parking::enumerate_ndpf;

pub const SUITES: [&str; 8] = [
    "expansion",
    "antipode",
    "coproduct",
    "trees",
    "noncrossing",
    "factorization",
    "motzkin",
    "incidence",
];

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub n: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: usize,
    pub cases: Vec<Case>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.ok)
    }
}

struct Builder {
    cases: Vec<Case>,
}

impl Builder {
    fn case(&mut self, name: &str, n: usize, ok: bool) {
        self.cases.push(Case {
            name: name.to_string(),
            n,
            ok,
            witness: None,
        });
    }

    /// Records a case whose failure is explained by `witness`.
    fn witnessed(&mut self, name: &str, n: usize, witness: Option<String>) {
        self.cases.push(Case {
            name: name.to_string(),
            n,
            ok: witness.is_none(),
            witness,
        });
    }
}

/// Runs one named suite, or every suite for "all".
pub fn run_suite(suite: &str, max_n: usize) -> Result<Vec<VerificationReport>> {
    if suite == "all" {
        return SUITES.iter().map(|s| run_one(s, max_n)).collect();
    }
    Ok(vec![run_one(suite, max_n)?])
}

fn run_one(suite: &str, max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut b = Builder { cases: Vec::new() };
    match suite {
        "expansion" => expansion(&mut b, max_n)?,
        "antipode" => antipode(&mut b, max_n)?,
        "coproduct" => coproduct(&mut b, max_n)?,
        "trees" => trees(&mut b, max_n)?,
        "noncrossing" => noncrossing(&mut b, max_n)?,
        "factorization" => factorization(&mut b, max_n)?,
        "motzkin" => motzkin(&mut b, max_n)?,
        "incidence" => incidence(&mut b, max_n)?,
        other => {
            return Err(crate::Error::InvalidArgument(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(VerificationReport {
        suite: suite.to_string(),
        max_n,
        cases: b.cases,
        elapsed: start.elapsed(),
    })
}

fn expansion(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 0..=max_n.min(7) {
        b.case(
            "g_n = sum over nondecreasing parking functions",
            n,
            g_expansion_check(n)?,
        );
        b.case(
            "g_n invariant under conjugation",
            n,
            mirror_invariance_check(n, CompositionInvolution::Conjugate)?,
        );
    }
    for n in 0..=max_n.min(6) {
        b.case(
            "g^(2)_n = sum over 2-parking functions",
            n,
            k_parking_check(n, 2)?,
        );
        b.case(
            "g^(3)_n = sum over 3-parking functions",
            n,
            k_parking_check(n, 3)?,
        );
    }
    let d = max_n.min(6);
    b.case(
        "g^(2): power solve = iteration",
        d,
        gk_series(2, d)? == gk_by_iteration(2, d)?,
    );
    for n in 1..=max_n.min(6) {
        let a = g_neg(n, GNegRoute::NegAlphabet)?;
        let mut ok = true;
        for route in GNegRoute::ALL {
            ok &= g_neg(n, route)? == a;
        }
        b.case("g_n(-A) agrees over four routes", n, ok);
    }
    Ok(())
}

fn antipode(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 0..=max_n.min(6) {
        let a = antipode_g(n)?;
        b.case(
            "antipode: generic = four-step",
            n,
            antipode_g_four_step(n)? == a,
        );
        b.case(
            "antipode: generic = coefficient formula",
            n,
            antipode_g_by_formula(n)? == a,
        );
    }
    Ok(())
}

fn coproduct(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 0..=max_n.min(7) {
        let a = delta_g_algebraic(n)?;
        for route in [DeltaRoute::Biprofile, DeltaRoute::Noncrossing] {
            let other = delta_g(n, route)?;
            let witness = (other != a).then(|| format!("{route:?} route gives {other}"));
            b.witnessed(&format!("Δg_n: algebraic = {route:?}"), n, witness);
        }
        b.case(
            "ΔG_n has Catalan(n+1) biprofile terms",
            n,
            BigInt::from(biprofile_terms(n).len()) == catalan(n + 1),
        );
        b.case(
            "commutative image: sorting = system = trees",
            n,
            CommutativeRoute::ALL.iter().all(|&r| {
                delta_g_commutative(n, r) == delta_g_commutative(n, CommutativeRoute::Sorting)
            }),
        );
    }
    for n in 0..=max_n.min(5) {
        b.case("coassociativity on g_n", n, coassociativity_check(n)?);
    }
    if max_n >= 5 {
        let d5 = delta_g_algebraic(5)?;
        let c = |s: &str| s.parse::<Composition>().expect("literal");
        let seven = d5.coeff(&c("12"), &c("11"));
        let eleven = d5.coeff(&c("21"), &c("11"));
        b.witnessed(
            "a_{12,11} = 7 at n=5",
            5,
            (seven != BigInt::from(7)).then(|| format!("got {seven}")),
        );
        b.witnessed(
            "a_{21,11} = 11 at n=5",
            5,
            (eleven != BigInt::from(11)).then(|| format!("got {eleven}")),
        );
    }
    Ok(())
}

fn trees(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 1..=max_n.min(8) {
        let mut failure = None;
        let mut images = std::collections::BTreeSet::new();
        for t in all_trees(n) {
            let (i, j) = tau(&t);
            images.insert((i.clone(), j.clone()));
            if failure.is_none() && rebuild_tree(&i, &j).as_ref() != Ok(&t) {
                failure = Some(format!("tree {t}"));
            }
            let (left, right) = tree_phi(&t);
            if failure.is_none() && kreweras(&left) != right {
                failure = Some(format!("K({left}) != {right} for tree {t}"));
            }
            if failure.is_none() {
                if let Some(i) = (1..=n).find(|&i| infix_successor(&t, i) != Ok(i % n + 1)) {
                    failure = Some(format!("infix successor of {i} in {t}"));
                }
            }
        }
        b.witnessed("rebuild ∘ τ = id, K(π′) = π″, infix rule", n, failure);
        b.case("τ injective", n, BigInt::from(images.len()) == catalan(n));
    }
    Ok(())
}

fn noncrossing(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 1..=max_n.min(9) {
        let all = enumerate_nc(n);
        b.case(
            "|NC_n| = Catalan(n)",
            n,
            BigInt::from(all.len()) == catalan(n),
        );
        let bad = all.iter().find(|p| {
            let k = kreweras(p);
            p.block_count() + k.block_count() != n + 1 || !k.is_noncrossing()
        });
        b.witnessed(
            "Kreweras complement block count",
            n,
            bad.map(ToString::to_string),
        );
        let bad = enumerate_ndpf(n)
            .into_iter()
            .find(|w| ndpf_to_nc(w).map(|p| nc_to_ndpf(&p)).as_ref() != Ok(w));
        b.witnessed(
            "NDPF → NC → NDPF round trip",
            n,
            bad.map(|w| crate::composition::format_word(&w)),
        );
    }
    Ok(())
}

fn factorization(b: &mut Builder, max_n: usize) -> Result<()> {
    // |I| + ℓ(I) ≤ max_n + 1 keeps the ambient group at S_{max_n+1} at most
    let bound = (max_n + 1).min(MAX_AMBIENT).min(8);
    for w in 1..bound {
        for i in all_compositions(w) {
            if i.weight() + i.len() <= bound {
                b.witnessed(
                    "minimal factorizations of σ_I = Δg^I",
                    i.weight(),
                    (!factorizations_match_coproduct(&i)?).then(|| format!("I = {i}")),
                );
            }
        }
    }
    if max_n >= 5 {
        let c = |s: &str| s.parse::<Composition>().expect("literal");
        let seven = count_minimal_factorizations(&c("5"), &c("12"), &c("11"))?;
        let eleven = count_minimal_factorizations(&c("5"), &c("21"), &c("11"))?;
        b.case("six-cycle counts 7 and 11", 5, seven == 7 && eleven == 11);
    }
    Ok(())
}

fn motzkin(b: &mut Builder, max_n: usize) -> Result<()> {
    for n in 0..=max_n.min(10) {
        let bad = enumerate_s_words(n).into_iter().find(|w| {
            let v = match s_to_sprime(w) {
                Ok(v) => v,
                Err(_) => return true,
            };
            word_to_path(&v).map(|p| path_to_word(&p)).as_ref() != Ok(&v)
        });
        b.witnessed(
            "S_n → S′_n → Motzkin round trip",
            n,
            bad.map(|w| crate::composition::format_word(&w)),
        );
        let counts = count_by_repeats(n);
        b.case(
            "|S_{n,k}| = binom(n,2k) C_k",
            n,
            counts
                .iter()
                .enumerate()
                .all(|(k, &x)| num_bigint::BigUint::from(x) == count_closed_form(n, k)),
        );
    }
    for n in 0..=max_n.min(12) {
        let (l, r) = touchard_sides(n);
        b.case("Touchard identity", n, l == r);
    }
    Ok(())
}

fn incidence(b: &mut Builder, max_n: usize) -> Result<()> {
    let top = (max_n + 1).min(MAX_LATTICE);
    let mobius = MultiplicativeFunction::mobius(top).integer_g_values()?;
    for n1 in 1..=top {
        let l = NcLattice::new(n1)?;
        let mu = l.mobius(l.bottom(), l.top());
        b.case(
            "lattice Möbius = (−1)^n C_n = μ̂ inverse",
            n1 - 1,
            mu == signed_catalan(n1 - 1) && mu == mobius[n1 - 1],
        );
        for k in 1..=3 {
            b.case(
                "multichains = Fuss–Catalan",
                n1 - 1,
                l.multichains(k) == multichain_count(n1 - 1, k),
            );
        }
        for s in all_compositions(n1 - 1) {
            b.case(
                "chains by rank = Edelman count",
                n1 - 1,
                l.chains_with_ranks(s.parts()) == chain_count(n1, s.parts())?,
            );
        }
    }
    for n in 1..=max_n.min(7) {
        for comp in all_compositions(n - 1) {
            let orders: Vec<usize> = comp.parts().iter().map(|a| a + 1).collect();
            b.case(
                "Biane count = brute force",
                n,
                BigInt::from(biane_brute_force(n, &orders)?) == biane_count(n, &orders),
            );
        }
    }
    Ok(())
}
