use std::process::{Command, Output};

use nclag::algebra::{NSymElement, TensorElement};
use nclag::hopf::delta_g_algebraic;

fn nclag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nclag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nclag(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn expand_g3() {
    assert_eq!(
        stdout(&["expand", "--series", "g", "--degree", "3", "--basis", "S"]).trim(),
        "S[3] + 2*S[2,1] + S[1,2] + S[1,1,1]"
    );
    assert_eq!(
        stdout(&["expand", "--series", "g", "--degree", "0"]).trim(),
        "1"
    );
    assert_eq!(
        stdout(&["expand", "--series", "g2", "--degree", "2"]).trim(),
        "S[2] + 2*S[1,1]"
    );
}

#[test]
fn expand_json_round_trips() {
    let text = stdout(&[
        "--json", "expand", "--series", "g", "--degree", "4", "--basis", "G",
    ]);
    let x: NSymElement = serde_json::from_str(&text).unwrap();
    assert_eq!(x.to_string(), "G[4]");
}

#[test]
fn coproduct_routes_and_json() {
    let text = stdout(&["coproduct", "g", "--n", "4", "--route", "all", "--json"]);
    let d: TensorElement = serde_json::from_str(&text).unwrap();
    assert_eq!(d, delta_g_algebraic(4).unwrap());
    let w = stdout(&["coproduct", "g", "--n", "5", "--witness", "12,11"]);
    assert!(w.starts_with("7 partitions"));
}

#[test]
fn verify_reports_the_footnote_values() {
    let text = stdout(&["verify", "--suite", "coproduct", "--max-n", "5"]);
    assert!(text.starts_with("PASS coproduct"));
    assert!(text.contains("ok   n=5 a_{12,11} = 7 at n=5"));
    assert!(text.contains("ok   n=5 a_{21,11} = 11 at n=5"));
}

#[test]
fn antipode_and_negated_alphabet() {
    assert_eq!(
        stdout(&["antipode", "--n", "3"]).trim(),
        "-G[3] + 4*G[2,1] + 4*G[1,2] - 12*G[1,1,1]"
    );
    assert_eq!(
        stdout(&["antipode", "--n", "2", "--neg-alphabet"]).trim(),
        "-G[2] + 3*G[1,1]"
    );
}

#[test]
fn combinatorics() {
    assert_eq!(
        stdout(&["kreweras", "--blocks", "157|234|6|89"]),
        "14|2|3|56|79|8\n(1,4)(5,6)(7,9)\n"
    );
    let trace = stdout(&[
        "tree", "rebuild", "--left", "312321", "--right", "1312212", "--trace",
    ]);
    assert!(trace
        .trim_end()
        .ends_with("(((..)(.((..).)))(((.((..).))(..)).))"));
    assert_eq!(trace.lines().count(), 14);
    let m = stdout(&["motzkin", "--n", "5", "--by-upsteps"]);
    let counts: Vec<&str> = m
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(counts, ["1", "10", "10"]);
    let f = stdout(&[
        "factorize",
        "--i",
        "5",
        "--j",
        "1,2",
        "--k",
        "1,1",
        "--list",
    ]);
    assert!(f.starts_with("(1,2,3,4,5,6) = αβ: 7 factorizations"));
    assert_eq!(f.lines().count(), 8);
    assert_eq!(stdout(&["compatible", "--n", "4"]).lines().count(), 14);
    assert_eq!(stdout(&["profile", "1124"]).lines().next(), Some("(1;4)"));
}

#[test]
fn incidence_counts() {
    assert_eq!(
        stdout(&["incidence", "mobius", "--n", "3"]).trim(),
        "1 -1 2 -5"
    );
    assert_eq!(
        stdout(&["incidence", "biane", "--n", "4", "--orders", "2,2,2"]).trim(),
        "16"
    );
    assert_eq!(
        stdout(&[
            "incidence",
            "chains",
            "--n",
            "5",
            "--ranks",
            "2,1,1",
            "--json"
        ]),
        "{\n  \"count\": \"50\"\n}\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(nclag(&["bogus"]).status.code(), Some(2));
    assert_eq!(nclag(&["expand"]).status.code(), Some(2));
    let out = nclag(&["expand", "--degree", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
    assert_eq!(
        nclag(&["kreweras", "--blocks", "13|24"]).status.code(),
        Some(2)
    );
    assert_eq!(nclag(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(nclag(&["--help"]).status.code(), Some(0));
}
