//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
//! only. Exits with status 1 if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use num_bigint::BigInt;

use nclag::algebra::{NSymBasis, NSymElement, TensorElement};
use nclag::composition::all_compositions;
use nclag::factorization::{
    canonical_permutation, count_minimal_factorizations, factorizations_match_coproduct,
    partition_tally,
};
use nclag::hopf::{biprofile_terms, delta_g, delta_g_algebraic, DeltaRoute};
use nclag::incidence::{
    biane_brute_force, biane_count, catalan, chain_count, signed_catalan, MultiplicativeFunction,
    NcLattice,
};
use nclag::lagrange::{
    antipode_g, antipode_g_by_formula, antipode_g_contributions, antipode_g_four_step, g_neg,
    g_series, gk_by_iteration, gk_series, tables, GNegRoute,
};
use nclag::noncrossing::motzkin::{
    count_by_repeats, count_closed_form, enumerate_motzkin, enumerate_s_words, path_to_word,
    s_to_sprime, sprime_to_s, touchard_sides, word_to_path,
};
use nclag::noncrossing::tree::{
    all_trees, infix_successor, rebuild_trace, rebuild_tree, tau, tree_phi, BinaryTree,
};
use nclag::noncrossing::{kreweras, NoncrossingPartition};
use nclag::parking::{compatible_pairs, compatible_with};
use nclag::permutation::Permutation;
use nclag::Composition;

/// Named sub-checks of one criterion.
struct Report {
    checks: Vec<(String, bool)>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(w, _)| w.as_str())
            .collect()
    }
}

fn c(s: &str) -> Composition {
    s.parse().expect("composition literal")
}

fn g_elem(terms: &[(&str, i64)]) -> NSymElement {
    NSymElement::from_terms(NSymBasis::G, terms.iter().map(|&(i, k)| (c(i), k)))
}

fn criterion_1() -> Report {
    let mut r = Report::new();
    let g = g_series(3).unwrap();
    r.check(
        "g_3 = S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]",
        g.component(3).to_string() == "S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]",
    );
    let g2s = tables().g_to_s_matrix(3).unwrap().to_i64_rows();
    r.check(
        "G->S matrix at n=3",
        g2s == Some(vec![
            vec![1, 0, 0, 0],
            vec![2, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![1, 1, 1, 1],
        ]),
    );
    let s2g = tables().s_to_g_matrix(3).unwrap().to_i64_rows();
    r.check(
        "S->G matrix at n=3",
        s2g == Some(vec![
            vec![1, 0, 0, 0],
            vec![-2, 1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![2, -1, -1, 1],
        ]),
    );
    r
}

fn criterion_2() -> Report {
    let mut r = Report::new();
    let direct = gk_series(2, 6).unwrap();
    let expected = [
        "1",
        "S[1]",
        "S[2] + 2*S[1,1]",
        "S[3] + 4*S[2,1] + 2*S[1,2] + 5*S[1,1,1]",
    ];
    for (d, e) in expected.iter().enumerate() {
        r.check(
            format!("g^(2) degree {d} = {e}"),
            direct.component(d).to_string() == *e,
        );
    }
    r.check(
        "power solve = iteration to degree 6",
        gk_by_iteration(2, 6).unwrap() == direct,
    );
    let g = g_series(12).unwrap();
    let phi_ok = (0..=6)
        .all(|d| &nclag::algebra::phi_k(g.component(2 * d), 2).unwrap() == direct.component(d));
    r.check("power solve = phi_2(g) to degree 6", phi_ok);
    r
}

fn criterion_3() -> Report {
    let mut r = Report::new();
    let table = [
        g_elem(&[("1", -1)]),
        g_elem(&[("2", -1), ("11", 3)]),
        g_elem(&[("3", -1), ("21", 5), ("12", 3), ("111", -12)]),
        g_elem(&[
            ("4", -1),
            ("31", 7),
            ("22", 5),
            ("13", 3),
            ("211", -25),
            ("121", -18),
            ("112", -12),
            ("1111", 55),
        ]),
    ];
    for (k, e) in table.iter().enumerate() {
        let n = k + 1;
        r.check(
            format!("g_{n}(-A) = {e}"),
            &g_neg(n, GNegRoute::NegAlphabet).unwrap() == e,
        );
    }
    let sums: Vec<BigInt> = (1..=4)
        .map(|n| g_neg(n, GNegRoute::NegAlphabet).unwrap().abs_sum())
        .collect();
    r.check(
        "absolute sums 1, 4, 21, 126",
        sums == [1, 4, 21, 126].map(BigInt::from),
    );
    for n in 1..=6 {
        let a = g_neg(n, GNegRoute::NegAlphabet).unwrap();
        let all = GNegRoute::ALL
            .iter()
            .all(|&route| g_neg(n, route).unwrap() == a);
        r.check(format!("four routes agree at n={n}"), all);
    }
    r
}

fn criterion_4() -> Report {
    let mut r = Report::new();
    let expected = g_elem(&[("3", -1), ("21", 4), ("12", 4), ("111", -12)]);
    r.check("generic antipode", antipode_g(3).unwrap() == expected);
    r.check(
        "four-step algorithm",
        antipode_g_four_step(3).unwrap() == expected,
    );
    r.check(
        "coefficient formula",
        antipode_g_by_formula(3).unwrap() == expected,
    );
    let contributions = antipode_g_contributions(3).unwrap();
    let split = |i: &str| -> Vec<(String, BigInt, BigInt)> {
        contributions[&c(i)]
            .iter()
            .map(|t| (t.j.to_string(), t.v_pairing.clone(), t.m_pairing.clone()))
            .collect()
    };
    let triple = |j: &str, v: i64, m: i64| (j.to_string(), BigInt::from(v), BigInt::from(m));
    r.check(
        "g^21 receives -3x1 and -1x1",
        split("21") == vec![triple("3", -3, 1), triple("21", -1, 1)],
    );
    r.check(
        "g^12 receives -2x1 and -1x2",
        split("12") == vec![triple("3", -2, 1), triple("12", -1, 2)],
    );
    r
}

fn criterion_5() -> Report {
    let mut r = Report::new();
    for n in 0..=6 {
        let a = delta_g_algebraic(n).unwrap();
        let ok = DeltaRoute::ALL
            .iter()
            .all(|&route| delta_g(n, route).unwrap() == a);
        r.check(format!("three routes agree at n={n}"), ok);
    }
    let mut d3 = TensorElement::zero(NSymBasis::G, NSymBasis::G);
    for (l, rt, k) in [
        ("3", "", 1),
        ("2", "1", 4),
        ("11", "1", 2),
        ("1", "2", 4),
        ("1", "11", 2),
        ("", "3", 1),
    ] {
        d3.add_term(c(l), c(rt), BigInt::from(k));
    }
    r.check("Δg_3", delta_g_algebraic(3).unwrap() == d3);
    let d5 = delta_g_algebraic(5).unwrap();
    r.check(
        "Δg_5: 7 on g^12⊗g^11",
        d5.coeff(&c("12"), &c("11")) == BigInt::from(7),
    );
    r.check(
        "Δg_5: 11 on g^21⊗g^11",
        d5.coeff(&c("21"), &c("11")) == BigInt::from(11),
    );
    for n in 0..=8 {
        let terms = biprofile_terms(n);
        let distinct: BTreeSet<_> = terms.iter().map(|t| t.0.clone()).collect();
        r.check(
            format!("ΔG_{n} has Catalan({}) terms", n + 1),
            terms.len() == distinct.len() && BigInt::from(terms.len()) == catalan(n + 1),
        );
    }
    r
}

fn criterion_6() -> Report {
    let mut r = Report::new();
    for n in 1..=8 {
        let trees = all_trees(n);
        let images: BTreeSet<_> = trees.iter().map(tau).collect();
        r.check(
            format!("τ injective on {n}-node trees"),
            images.len() == trees.len(),
        );
        let round = trees.iter().all(|t| {
            let (i, j) = tau(t);
            rebuild_tree(&i, &j).as_ref() == Ok(t)
        });
        r.check(format!("rebuild ∘ τ = id on {n}-node trees"), round);
    }
    let arb12: BinaryTree = "(((..)(.((..).)))(((.((..).))(..)).))".parse().unwrap();
    let (tree, trace) = rebuild_trace(&c("312321"), &c("1312212")).unwrap();
    let order: Vec<String> = trace
        .iter()
        .map(|s| format!("{}{}", s.side, s.part))
        .collect();
    r.check(
        "trace on I=312321, J=1312212",
        tree == arb12 && order.join(" ") == "i1 j1 j2 i2 i3 j3 j4 i4 j5 i5 j6 j7 i6",
    );
    let infix = (1..=7).all(|n| {
        all_trees(n)
            .iter()
            .all(|t| (1..=n).all(|i| infix_successor(t, i) == Ok(i % n + 1)))
    });
    r.check("infix successor rule on trees with ≤ 7 nodes", infix);
    r
}

fn criterion_7() -> Report {
    let mut r = Report::new();
    let mut all_ok = true;
    let mut count = 0;
    for w in 1..=7 {
        for i in all_compositions(w) {
            if i.weight() + i.len() > 8 {
                continue;
            }
            count += 1;
            if !factorizations_match_coproduct(&i).unwrap() {
                all_ok = false;
                r.check(
                    format!("factorization tally of σ_I vs Δg^I for I={i}"),
                    false,
                );
            }
        }
    }
    r.check(
        format!("factorization tallies for all {count} I with |I|+ℓ(I) ≤ 8"),
        all_ok,
    );
    let seven = count_minimal_factorizations(&c("5"), &c("12"), &c("11")).unwrap();
    let eleven = count_minimal_factorizations(&c("5"), &c("21"), &c("11")).unwrap();
    let tally = partition_tally(&canonical_permutation(&c("5"))).unwrap();
    let eighteen = tally.get(&(vec![2, 1], vec![1, 1])).copied();
    r.check(
        "six-cycle: 7 + 11 = 18",
        seven == 7 && eleven == 11 && eighteen == Some(18),
    );
    r
}

fn criterion_8() -> Report {
    let mut r = Report::new();
    let w = Permutation::new(vec![5, 3, 4, 2, 7, 6, 1, 9, 8]).unwrap();
    let pi = NoncrossingPartition::from_permutation(&w).unwrap();
    r.check(
        "K(π) = (1,4)(5,6)(7,9)",
        kreweras(&pi).to_permutation().to_string() == "(1,4)(5,6)(7,9)",
    );
    let arb12: BinaryTree = "(((..)(.((..).)))(((.((..).))(..)).))".parse().unwrap();
    let (l, rt) = tree_phi(&arb12);
    r.check(
        "tree_phi on the 12-node tree",
        l.to_string() == "1,2,6|3|4,5|7,10,12|8,9|11"
            && rt.to_string() == "1|2,3,5|4|6,12|7,9|8|10,11",
    );
    let ok = (1..=8).all(|n| {
        all_trees(n).iter().all(|t| {
            let (a, b) = tree_phi(t);
            kreweras(&a) == b
        })
    });
    r.check("kreweras(π′) = π″ on trees with ≤ 8 nodes", ok);
    r
}

fn criterion_9() -> Report {
    let mut r = Report::new();
    let listed: BTreeSet<(Composition, Composition)> = [
        ("4", "1111"),
        ("31", "211"),
        ("31", "121"),
        ("31", "112"),
        ("22", "211"),
        ("22", "121"),
        ("211", "31"),
        ("211", "22"),
        ("211", "13"),
        ("13", "211"),
        ("121", "31"),
        ("121", "22"),
        ("112", "31"),
        ("1111", "4"),
    ]
    .iter()
    .map(|&(i, j)| (c(i), c(j)))
    .collect();
    let got: BTreeSet<_> = compatible_pairs(4).into_iter().collect();
    r.check("the 14 compatible pairs of weight 4", got == listed);
    let with = compatible_with(&c("321"));
    r.check(
        "compatible_with(321): 9 elements, top 1122",
        with.len() == 9 && with.first() == Some(&c("1122")),
    );
    let mut round = true;
    for n in 0..=10 {
        let words = enumerate_s_words(n);
        round &= words.len() == enumerate_motzkin(n).len();
        for w in &words {
            let v = s_to_sprime(w).unwrap();
            let p = word_to_path(&v).unwrap();
            round &= path_to_word(&p) == v && sprime_to_s(&v).as_ref() == Ok(w);
        }
    }
    r.check("Motzkin triple bijection round-trips for n ≤ 10", round);
    let counts = (0..=10).all(|n| {
        count_by_repeats(n)
            .iter()
            .enumerate()
            .all(|(k, &x)| num_bigint::BigUint::from(x) == count_closed_form(n, k))
    });
    r.check(
        "|S_{n,k}| = binom(n,2k) C_k, row n=5 is 1 10 10",
        counts && count_by_repeats(5) == vec![1, 10, 10],
    );
    let touchard = (0..=12).all(|n| {
        let (a, b) = touchard_sides(n);
        a == b
    });
    r.check("Touchard identity for n ≤ 12", touchard);
    r
}

fn criterion_10() -> Report {
    let mut r = Report::new();
    let mobius = MultiplicativeFunction::mobius(6)
        .integer_g_values()
        .unwrap();
    let oracle = (1..=7).all(|n1| {
        let l = NcLattice::new(n1).unwrap();
        let mu = l.mobius(l.bottom(), l.top());
        mu == mobius[n1 - 1] && mu == signed_catalan(n1 - 1)
    });
    r.check(
        "Möbius g-values = (−1)^n C_n = lattice Möbius, n+1 ≤ 7",
        oracle,
    );

    let zeta2 = MultiplicativeFunction::zeta(3)
        .convolution_power(2)
        .integer_g_values()
        .unwrap();
    let literal = [1, 3, 12, 55].map(BigInt::from);
    let shown: Vec<String> = zeta2.iter().map(ToString::to_string).collect();
    r.check(
        format!(
            "ζ⋆ζ g-values are 1,3,12,55 (computed {}; 1,3,12,55 is ζ⋆ζ⋆ζ)",
            shown.join(",")
        ),
        zeta2 == literal,
    );

    let mut edelman = true;
    for n1 in 1..=6 {
        let l = NcLattice::new(n1).unwrap();
        for s in all_compositions(n1 - 1) {
            edelman &= l.chains_with_ranks(s.parts()) == chain_count(n1, s.parts()).unwrap();
        }
    }
    r.check("Edelman chain counts = lattice chains, n+1 ≤ 6", edelman);

    let mut biane = biane_count(3, &[2, 2]) == BigInt::from(3)
        && biane_count(4, &[2, 2, 2]) == BigInt::from(16);
    for n in 1..=7 {
        for comp in all_compositions(n - 1) {
            let orders: Vec<usize> = comp.parts().iter().map(|a| a + 1).collect();
            biane &=
                BigInt::from(biane_brute_force(n, &orders).unwrap()) == biane_count(n, &orders);
        }
    }
    r.check(
        "Biane counts = brute force, n ≤ 7 (3 and 16 examples)",
        biane,
    );
    r
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Report); 10] = [
        ("g_3 on S and the n=3 transition matrices", criterion_1),
        ("g^(2) by three routes", criterion_2),
        ("g_n(-A) table, sums and four routes", criterion_3),
        (
            "antipode of g_3 by three routes with contribution splits",
            criterion_4,
        ),
        (
            "Δg_n by three routes, examples, Catalan term counts",
            criterion_5,
        ),
        (
            "τ injective, rebuild round trip and trace, infix rule",
            criterion_6,
        ),
        ("minimal factorizations match Δg^I", criterion_7),
        (
            "Kreweras example, tree_phi, complement on trees",
            criterion_8,
        ),
        ("compatible pairs, Motzkin codec, Touchard", criterion_9),
        ("incidence algebra against the lattice oracle", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let report = run();
        if report.passed() {
            println!("PASS criterion {:>2}: {title}", k + 1);
        } else {
            failed += 1;
            println!(
                "FAIL criterion {:>2}: {title} [{}]",
                k + 1,
                report.failures().join("; ")
            );
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
