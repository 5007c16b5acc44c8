use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nclag::algebra::{Basis, NSymBasis, NSymElement, QSymBasis, QSymElement};
use nclag::composition::{format_word, parse_word};
use nclag::factorization::{canonical_permutation, factorization_tally, minimal_factorizations};
use nclag::hopf::{coproduct_p, delta_g, witnesses, DeltaRoute};
use nclag::incidence::{biane_count, chain_count, multichain_count, MultiplicativeFunction};
use nclag::json::int_value;
use nclag::lagrange::{
    antipode_g, antipode_g_by_formula, antipode_g_contributions, antipode_g_four_step, g_neg,
    named_series, tables, GNegRoute,
};
use nclag::noncrossing::motzkin::{enumerate_motzkin, MotzkinPath};
use nclag::noncrossing::tree::{all_trees, rebuild_trace, tau, tree_phi, BinaryTree};
use nclag::noncrossing::{enumerate_nc, example_pair, kreweras, NoncrossingPartition};
use nclag::parking::{
    compatible_pairs, compatible_with, enumerate_k_ndpf, enumerate_parking_biprofiles,
    factorize_word, profile, type_of,
};
use nclag::verify::run_suite;
use nclag::{Composition, Error};

/// Exact computations with the noncommutative Lagrange series and its combinatorics.
#[derive(Parser)]
#[command(name = "nclag", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree-n component of a series: g, g2, gk:<k> or K.
    Expand {
        #[arg(long, default_value = "g")]
        series: String,
        #[arg(long)]
        degree: usize,
        /// S, L, R, G or F.
        #[arg(long, default_value = "S")]
        basis: String,
        /// One term per line with aligned coefficients.
        #[arg(long)]
        aligned: bool,
    },
    /// Change of basis for a sum of basis elements.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Indices of the summed basis elements, e.g. 21 or 2,1.
        #[arg(required = true)]
        indices: Vec<String>,
    },
    /// Coproduct of g_n, or of a P-basis element indexed by a parking function.
    Coproduct(CoproductArgs),
    /// Antipode of g_n, or g_n(-A) with --neg-alphabet.
    Antipode {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        route: AntipodeRoute,
        #[arg(long)]
        neg_alphabet: bool,
        /// How each g^J contributes to the g^I coefficient.
        #[arg(long)]
        contributions: bool,
    },
    /// Enumerate nondecreasing parking functions, noncrossing partitions or trees.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateWhat,
        #[arg(long)]
        n: usize,
        /// For ndpf: k-parking functions.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Profile of a nondecreasing word.
    Profile { word: String },
    /// Compositions compatible with --i, or every compatible pair of weight --n.
    Compatible {
        #[arg(long, conflicts_with = "n")]
        i: Option<String>,
        #[arg(long, required_unless_present = "i")]
        n: Option<usize>,
    },
    /// Parking biprofiles of size n with their pairs of lengths.
    Biprofiles {
        #[arg(long)]
        n: usize,
    },
    /// Kreweras complement of a noncrossing partition.
    Kreweras {
        /// Blocks like "157|234|6|89", or comma lists above 9.
        #[arg(long, required_unless_present = "example_pair")]
        blocks: Option<String>,
        /// Apply the complement this many times.
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// The pair of partitions with exchanged types under K.
        #[arg(long)]
        example_pair: bool,
    },
    /// Binary trees and their branch partitions.
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
    /// Motzkin paths of length n.
    Motzkin {
        #[arg(long)]
        n: usize,
        /// Group the paths by number of up steps.
        #[arg(long)]
        by_upsteps: bool,
    },
    /// Minimal factorizations of the canonical permutation of I.
    Factorize {
        #[arg(long)]
        i: String,
        #[arg(long, requires = "k")]
        j: Option<String>,
        #[arg(long, requires = "j")]
        k: Option<String>,
        /// Print the factor pairs in cycle notation.
        #[arg(long, requires = "j")]
        list: bool,
    },
    /// Counts in the incidence algebra of noncrossing partitions.
    Incidence {
        #[command(subcommand)]
        command: IncidenceCommand,
    },
    /// Run cross-route verification suites.
    Verify {
        /// expansion, antipode, coproduct, trees, noncrossing,
        /// factorization, motzkin, incidence or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Args)]
struct CoproductArgs {
    /// g for g_n, P for a parking function.
    #[arg(value_enum)]
    target: CoproductTarget,
    #[arg(long, required_if_eq("target", "g"))]
    n: Option<usize>,
    /// The parking function indexing P.
    #[arg(long, required_if_eq("target", "p"))]
    word: Option<String>,
    #[arg(long, value_enum, default_value = "algebraic")]
    route: RouteChoice,
    /// I,J: noncrossing partitions realizing the coefficient of g^I ⊗ g^J.
    #[arg(long)]
    witness: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductTarget {
    G,
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteChoice {
    Algebraic,
    Biprofile,
    Noncrossing,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AntipodeRoute {
    Generic,
    FourStep,
    Formula,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Ndpf,
    Nc,
    Trees,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Rebuild the tree with left and right branch lengths.
    Rebuild {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Print the intermediate states.
        #[arg(long)]
        trace: bool,
    },
    /// Branch partitions and their types for a tree like "((..).)".
    Phi { tree: String },
}

#[derive(Subcommand)]
enum IncidenceCommand {
    /// μ(0̂, 1̂) in NC_{m+1} for m = 0..=n.
    Mobius {
        #[arg(long)]
        n: usize,
    },
    /// Chains of NC_n with the given rank jumps (summing to n - 1).
    Chains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ranks: String,
    },
    /// Multichains π_1 ≤ ⋯ ≤ π_k in NC_{n+1}.
    Multichains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Minimal factorizations of an n-cycle into cycles of the given orders.
    Biane {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        orders: String,
    },
}

/// What went wrong, and which exit code it maps to.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn composition(s: &str) -> Result<Composition, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("cannot read a composition from {s:?}")))
}

fn word(s: &str) -> Result<Vec<usize>, Failure> {
    parse_word(s).ok_or_else(|| Failure::Usage(format!("cannot read a word from {s:?}")))
}

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    let out = if json {
        serde_json::to_string_pretty(&value).expect("values serialize")
    } else {
        text()
    };
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

/// Degrees above the transition table bound are refused up front.
fn check_degree(n: usize) -> Result<(), Failure> {
    let max = tables().max_degree();
    if n > max {
        return Err(Error::DegreeTooLarge { degree: n, max }.into());
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Expand {
            series,
            degree,
            basis,
            aligned,
        } => expand(json, series, *degree, basis, *aligned),
        Command::Convert { from, to, indices } => convert(json, from, to, indices),
        Command::Coproduct(args) => coproduct(json, args),
        Command::Antipode {
            n,
            route,
            neg_alphabet,
            contributions,
        } => antipode(json, *n, *route, *neg_alphabet, *contributions),
        Command::Enumerate { what, n, k } => enumerate(json, *what, *n, *k),
        Command::Profile { word: w } => {
            let w = word(w)?;
            let p = profile(&w)?;
            let factors: Vec<String> = factorize_word(&w)?.iter().map(|f| format_word(f)).collect();
            emit(
                json,
                json!({"word": format_word(&w), "starts": p.starts(), "lengths": p.lengths(), "factors": factors}),
                || format!("{p}\nfactors: {}", factors.join(" ")),
            );
            Ok(())
        }
        Command::Compatible { i, n } => {
            if let Some(i) = i {
                let i = composition(i)?;
                let with: Vec<String> = compatible_with(&i)
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                emit(json, json!({"i": i, "compatible": with}), || {
                    with.join("\n")
                });
            } else {
                let pairs = compatible_pairs(n.expect("clap requires --n"));
                let rows: Vec<Value> = pairs.iter().map(|(a, b)| json!([a, b])).collect();
                emit(json, Value::Array(rows), || {
                    pairs
                        .iter()
                        .map(|(a, b)| format!("{a} {b}"))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
            Ok(())
        }
        Command::Biprofiles { n } => {
            let all = enumerate_parking_biprofiles(*n);
            let rows: Vec<Value> = all
                .iter()
                .map(|b| json!({"left": b.left, "right": b.right, "text": b.to_string()}))
                .collect();
            emit(json, Value::Array(rows), || {
                all.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(())
        }
        Command::Kreweras {
            blocks,
            iterate,
            example_pair: pair,
        } => kreweras_cmd(json, blocks.as_deref(), *iterate, *pair),
        Command::Tree { command } => tree(json, command),
        Command::Motzkin { n, by_upsteps } => motzkin(json, *n, *by_upsteps),
        Command::Factorize { i, j, k, list } => {
            factorize(json, i, j.as_deref(), k.as_deref(), *list)
        }
        Command::Incidence { command } => incidence(json, command),
        Command::Verify { suite, max_n } => verify(json, suite, *max_n),
    }
}

fn nsym_basis(s: &str) -> Result<NSymBasis, Failure> {
    NSymBasis::from_symbol(s).ok_or_else(|| Failure::Usage(format!("unknown basis {s:?}")))
}

fn expand(json: bool, series: &str, degree: usize, basis: &str, aligned: bool) -> Outcome {
    let basis = nsym_basis(basis)?;
    check_degree(degree)?;
    let s = named_series(series, degree)?;
    let x = s.component(degree).convert(basis)?;
    emit(
        json,
        serde_json::to_value(&x).expect("elements serialize"),
        || {
            if !aligned {
                return x.to_string();
            }
            let width = x
                .terms()
                .map(|(_, c)| c.to_string().len())
                .max()
                .unwrap_or(0);
            x.terms()
                .map(|(i, c)| {
                    format!(
                        "{c:>width$}  {basis}[{}]",
                        i.parts()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join("\n")
        },
    );
    Ok(())
}

fn convert(json: bool, from: &str, to: &str, indices: &[String]) -> Outcome {
    let comps = indices
        .iter()
        .map(|s| composition(s))
        .collect::<Result<Vec<_>, _>>()?;
    for c in &comps {
        check_degree(c.weight())?;
    }
    let terms = comps.into_iter().map(|c| (c, 1));
    match (NSymBasis::from_symbol(from), QSymBasis::from_symbol(from)) {
        (Some(b), _) => {
            let x = NSymElement::from_terms(b, terms).convert(nsym_basis(to)?)?;
            emit(json, serde_json::to_value(&x).expect("serializes"), || {
                x.to_string()
            });
        }
        (None, Some(b)) => {
            let target = QSymBasis::from_symbol(to)
                .ok_or_else(|| Failure::Usage(format!("unknown QSym basis {to:?}")))?;
            let x = QSymElement::from_terms(b, terms).convert(target)?;
            emit(json, serde_json::to_value(&x).expect("serializes"), || {
                x.to_string()
            });
        }
        (None, None) => return Err(Failure::Usage(format!("unknown basis {from:?}"))),
    }
    Ok(())
}

fn coproduct(json: bool, args: &CoproductArgs) -> Outcome {
    if let CoproductTarget::P = args.target {
        let w = word(args.word.as_deref().expect("clap requires --word"))?;
        let terms = coproduct_p(&w)?;
        let rows: Vec<Value> = terms
            .iter()
            .map(|(u, v, m)| json!({"left": format_word(u), "right": format_word(v), "mult": m}))
            .collect();
        emit(json, Value::Array(rows), || {
            terms
                .iter()
                .map(|(u, v, m)| {
                    let side = |x: &[usize]| {
                        if x.is_empty() {
                            "1".to_string()
                        } else {
                            format!("P[{}]", format_word(x))
                        }
                    };
                    let mult = if *m == 1 {
                        String::new()
                    } else {
                        format!("{m}*")
                    };
                    format!("{mult}{} ⊗ {}", side(u), side(v))
                })
                .collect::<Vec<_>>()
                .join(" + ")
        });
        return Ok(());
    }
    let n = args.n.expect("clap requires --n");
    check_degree(n)?;
    if let Some(w) = &args.witness {
        let (i, j) = w
            .split_once(['/', ';'])
            .or_else(|| w.split_once(','))
            .ok_or_else(|| Failure::Usage("--witness expects I,J".into()))?;
        let (i, j) = (composition(i)?, composition(j)?);
        let found = witnesses(n, &i, &j);
        let rows: Vec<String> = found.iter().map(ToString::to_string).collect();
        emit(
            json,
            json!({"left": i, "right": j, "count": found.len(), "partitions": rows}),
            || {
                let mut out = vec![format!("{} partitions", found.len())];
                out.extend(found.iter().map(|p| format!("{p}  K = {}", kreweras(p))));
                out.join("\n")
            },
        );
        return Ok(());
    }
    let routes: Vec<DeltaRoute> = match args.route {
        RouteChoice::Algebraic => vec![DeltaRoute::Algebraic],
        RouteChoice::Biprofile => vec![DeltaRoute::Biprofile],
        RouteChoice::Noncrossing => vec![DeltaRoute::Noncrossing],
        RouteChoice::All => DeltaRoute::ALL.to_vec(),
    };
    let results = routes
        .iter()
        .map(|&r| delta_g(n, r))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = results.windows(2).all(|w| w[0] == w[1]);
    if !agree {
        for (r, d) in routes.iter().zip(&results) {
            eprintln!("{r:?}: {d}");
        }
        eprintln!("routes disagree at n = {n}");
        return Err(Failure::Verification);
    }
    emit(
        json,
        serde_json::to_value(&results[0]).expect("serializes"),
        || results[0].to_string(),
    );
    Ok(())
}

fn antipode(json: bool, n: usize, route: AntipodeRoute, neg: bool, contributions: bool) -> Outcome {
    check_degree(n)?;
    if contributions {
        let all = antipode_g_contributions(n)?;
        let rows: Vec<Value> = all
            .iter()
            .map(|(i, cs)| {
                json!({"index": i, "contributions": cs.iter().map(|c| json!({
                    "from": c.j, "v_pairing": int_value(&c.v_pairing), "m_pairing": int_value(&c.m_pairing)
                })).collect::<Vec<_>>()})
            })
            .collect();
        emit(json, Value::Array(rows), || {
            all.iter()
                .map(|(i, cs)| {
                    let parts: Vec<String> = cs
                        .iter()
                        .map(|c| format!("g^{}: {} x {}", c.j, c.v_pairing, c.m_pairing))
                        .collect();
                    format!("g^{i} <- {}", parts.join(", "))
                })
                .collect::<Vec<_>>()
                .join("\n")
        });
        return Ok(());
    }
    let results: Vec<NSymElement> = if neg {
        GNegRoute::ALL
            .iter()
            .map(|&r| g_neg(n, r))
            .collect::<Result<_, _>>()?
    } else {
        let fs: Vec<fn(usize) -> nclag::Result<NSymElement>> = match route {
            AntipodeRoute::Generic => vec![antipode_g],
            AntipodeRoute::FourStep => vec![antipode_g_four_step],
            AntipodeRoute::Formula => vec![antipode_g_by_formula],
            AntipodeRoute::All => vec![antipode_g, antipode_g_four_step, antipode_g_by_formula],
        };
        fs.iter().map(|f| f(n)).collect::<Result<_, _>>()?
    };
    if !results.windows(2).all(|w| w[0] == w[1]) {
        for r in &results {
            eprintln!("{r}");
        }
        eprintln!("routes disagree at n = {n}");
        return Err(Failure::Verification);
    }
    emit(
        json,
        serde_json::to_value(&results[0]).expect("serializes"),
        || results[0].to_string(),
    );
    Ok(())
}

fn enumerate(json: bool, what: EnumerateWhat, n: usize, k: usize) -> Outcome {
    let rows: Vec<(String, String)> = match what {
        EnumerateWhat::Ndpf => enumerate_k_ndpf(n, k)
            .iter()
            .map(|w| (format_word(w), type_of(w).to_string()))
            .collect(),
        EnumerateWhat::Nc => enumerate_nc(n)
            .iter()
            .map(|p| (p.to_string(), p.ordered_type().to_string()))
            .collect(),
        EnumerateWhat::Trees => all_trees(n)
            .iter()
            .map(|t| {
                let (i, j) = tau(t);
                (t.to_string(), format!("{i} {j}"))
            })
            .collect(),
    };
    let values: Vec<Value> = rows
        .iter()
        .map(|(x, t)| json!({"value": x, "type": t}))
        .collect();
    emit(json, Value::Array(values), || {
        rows.iter()
            .map(|(x, t)| format!("{x}  {t}"))
            .collect::<Vec<_>>()
            .join("\n")
    });
    Ok(())
}

fn kreweras_cmd(json: bool, blocks: Option<&str>, iterate: usize, pair: bool) -> Outcome {
    if pair {
        let (p, q) = example_pair();
        let row = |x: &NoncrossingPartition| {
            let k = kreweras(x);
            (
                x.to_string(),
                x.ordered_type(),
                k.to_string(),
                k.ordered_type(),
            )
        };
        let rows = [row(&p), row(&q)];
        let values: Vec<Value> = rows
            .iter()
            .map(|(a, ta, b, tb)| json!({"partition": a, "type": ta, "kreweras": b, "kreweras_type": tb}))
            .collect();
        emit(json, Value::Array(values), || {
            rows.iter()
                .map(|(a, ta, b, tb)| format!("{a} type {ta}  K = {b} type {tb}"))
                .collect::<Vec<_>>()
                .join("\n")
        });
        return Ok(());
    }
    let p: NoncrossingPartition = blocks
        .expect("clap requires --blocks")
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let mut k = p.clone();
    for _ in 0..iterate {
        k = kreweras(&k);
    }
    emit(
        json,
        json!({"partition": p, "kreweras": k, "permutation": k.to_permutation().to_string(), "type": k.ordered_type()}),
        || format!("{k}\n{}", k.to_permutation()),
    );
    Ok(())
}

fn tree(json: bool, command: &TreeCommand) -> Outcome {
    match command {
        TreeCommand::Rebuild { left, right, trace } => {
            let (i, j) = (composition(left)?, composition(right)?);
            let (t, steps) = rebuild_trace(&i, &j)?;
            emit(
                json,
                if *trace {
                    json!({"tree": t, "trace": steps})
                } else {
                    json!({"tree": t})
                },
                || {
                    let mut out = Vec::new();
                    if *trace {
                        for s in &steps {
                            out.push(format!(
                                "{:>3} {}{} len {}  {}",
                                s.step, s.side, s.part, s.length, s.state
                            ));
                        }
                    }
                    out.push(t.to_string());
                    out.join("\n")
                },
            );
        }
        TreeCommand::Phi { tree } => {
            let t: BinaryTree = tree
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let (a, b) = tree_phi(&t);
            let (i, j) = tau(&t);
            emit(
                json,
                json!({"tree": t, "left": a, "right": b, "left_type": i, "right_type": j}),
                || format!("{a}\n{b}\n{i} {j}"),
            );
        }
    }
    Ok(())
}

fn motzkin(json: bool, n: usize, by_upsteps: bool) -> Outcome {
    let paths = enumerate_motzkin(n);
    if by_upsteps {
        let mut groups: Vec<Vec<&MotzkinPath>> = vec![Vec::new(); n / 2 + 1];
        for p in &paths {
            groups[p.up_steps()].push(p);
        }
        let values: Vec<Value> = groups
            .iter()
            .enumerate()
            .map(|(k, g)| json!({"up_steps": k, "count": g.len(), "paths": g.iter().map(|p| p.to_string()).collect::<Vec<_>>()}))
            .collect();
        emit(json, Value::Array(values), || {
            groups
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let ps: Vec<String> = g.iter().map(|p| p.to_string()).collect();
                    format!("{k}: {}  {}", g.len(), ps.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n")
        });
    } else {
        let ps: Vec<String> = paths.iter().map(ToString::to_string).collect();
        emit(json, json!(ps), || ps.join("\n"));
    }
    Ok(())
}

fn factorize(json: bool, i: &str, j: Option<&str>, k: Option<&str>, list: bool) -> Outcome {
    let i = composition(i)?;
    let sigma = canonical_permutation(&i);
    if let (Some(j), Some(k)) = (j, k) {
        let (j, k) = (composition(j)?, composition(k)?);
        let pairs = minimal_factorizations(&sigma, &j, &k)?;
        let mut value =
            json!({"sigma": sigma.to_string(), "left": j, "right": k, "count": pairs.len()});
        if list {
            value["pairs"] = pairs
                .iter()
                .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                .collect();
        }
        emit(json, value, || {
            let mut out = vec![format!("{} = αβ: {} factorizations", sigma, pairs.len())];
            if list {
                out.extend(pairs.iter().map(|(a, b)| format!("{a} · {b}")));
            }
            out.join("\n")
        });
    } else {
        let tally = factorization_tally(&sigma)?;
        let rows: Vec<Value> = tally
            .iter()
            .map(|((a, b), c)| json!({"left": a, "right": b, "count": c}))
            .collect();
        emit(
            json,
            json!({"sigma": sigma.to_string(), "tally": rows}),
            || {
                tally
                    .iter()
                    .map(|((a, b), c)| format!("{c:>6}  {a} {b}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            },
        );
    }
    Ok(())
}

fn orders(s: &str) -> Result<Vec<usize>, Failure> {
    word(s)
}

fn incidence(json: bool, command: &IncidenceCommand) -> Outcome {
    let value = match command {
        IncidenceCommand::Mobius { n } => {
            let values = MultiplicativeFunction::mobius(*n).integer_g_values()?;
            let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
            emit(
                json,
                json!({"mobius": values.iter().map(int_value).collect::<Vec<_>>()}),
                || strings.join(" "),
            );
            return Ok(());
        }
        IncidenceCommand::Chains { n, ranks } => chain_count(*n, &orders(ranks)?)?,
        IncidenceCommand::Multichains { n, k } => multichain_count(*n, *k),
        IncidenceCommand::Biane { n, orders: o } => biane_count(*n, &orders(o)?),
    };
    emit(json, json!({"count": int_value(&value)}), || {
        value.to_string()
    });
    Ok(())
}

fn verify(json: bool, suite: &str, max_n: usize) -> Outcome {
    let reports = run_suite(suite, max_n)?;
    let ok = reports.iter().all(|r| r.passed());
    emit(
        json,
        serde_json::to_value(&reports).expect("serializes"),
        || {
            let mut out = Vec::new();
            for r in &reports {
                let passed = r.cases.iter().filter(|c| c.ok).count();
                out.push(format!(
                    "{} {} (max n {}): {passed}/{} cases",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.suite,
                    r.max_n,
                    r.cases.len()
                ));
                for c in &r.cases {
                    let mark = if c.ok { "ok  " } else { "FAIL" };
                    out.push(match &c.witness {
                        Some(w) => format!("  {mark} n={} {}: {w}", c.n, c.name),
                        None => format!("  {mark} n={} {}", c.n, c.name),
                    });
                }
            }
            out.join("\n")
        },
    );
    for r in &reports {
        eprintln!("{}: {:.2?}", r.suite, r.elapsed);
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
