mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use fhtw_cli::{emit_decomposition, parse_decomposition, parse_hypergraph};
use fhtw_core::{solve, Measure, SolveOptions};
use proptest::prelude::*;

fn fhtw(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fhtw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

const TRIANGLE: &str = "p hg 3 3\n1 2\n2 3\n1 3\n";

#[test]
fn stdin_to_stdout() {
    let out = fhtw(&["-", "--measure", "fhw", "--check"], TRIANGLE);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s htd 1 3/2 3 fhw\nb 1 1 2 3\n");
}

#[test]
fn output_file_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c5.gr");
    std::fs::write(&input, "c five-cycle\np tw 5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    let td = dir.path().join("c5.td");
    let stats = dir.path().join("stats.json");
    let out = fhtw(
        &[
            input.to_str().unwrap(),
            "-m",
            "tw",
            "-o",
            td.to_str().unwrap(),
            "--stats-json",
            stats.to_str().unwrap(),
            "--oracle",
        ],
        "",
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let parsed = parse_decomposition(&std::fs::read_to_string(&td).unwrap()).unwrap();
    assert_eq!(parsed.width.to_string(), "2");
    assert_eq!(parsed.decomposition.len(), 3);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(json["width"], "2");
    assert_eq!(json["minimal_separators"], 5);
    // five ears and five triangles with a single cycle edge
    assert_eq!(json["potential_maximal_cliques"], 10);
}

#[test]
fn ghw_certificates() {
    let out = fhtw(&["-", "--measure", "ghw"], "p hg 4 3\n1 2\n2 3\n3 4\n");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = parse_decomposition(&text).unwrap();
    assert_eq!(parsed.width.to_string(), "1");
    assert_eq!(parsed.certificates, vec![(0, vec![1]), (1, vec![2]), (2, vec![3])]);
}

#[test]
fn named_input() {
    let out = fhtw(&["-", "--measure", "ghw", "--ghw-method", "zeta", "--check"], "e R: a b c\ne S: c d\ne T: d a\n");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "s htd 2 2 4 ghw\nb 1 1 2 3\nb 2 1 3 4\n1 2\nc 1 1\nc 2 1 2\n"
    );
}

#[test]
fn exit_codes() {
    let out = fhtw(&["-", "--measure", "tw"], "p hg 3 1\n1 2\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 3"));
    let out = fhtw(&["-", "--measure", "tw", "--patch-isolated"], "p hg 3 1\n1 2\n");
    assert!(out.status.success());
    let out = fhtw(&["-", "--measure", "tw"], "p hg 2 1\n1 x\n");
    assert_eq!(out.status.code(), Some(1));
    let path: String = std::iter::once("p tw 12 11\n".to_string())
        .chain((1..12).map(|i| format!("{i} {}\n", i + 1)))
        .collect();
    let out = fhtw(&["-", "--measure", "tw", "--oracle"], &path);
    assert_eq!(out.status.code(), Some(2));
    let out = fhtw(&["-", "--measure", "ghw", "--ghw-method", "zeta", "--zeta-max-n", "8"], &path);
    assert_eq!(out.status.code(), Some(2));
    let out = fhtw(&["-"], TRIANGLE);
    assert_eq!(out.status.code(), Some(2), "clap usage errors exit with 2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn emitted_files_round_trip(seed in any::<u64>(), n in 1usize..=10, m in 1usize..=12) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_hypergraph(&mut rng, n, m, 4);
        let mut text = format!("p hg {} {}\n", h.n(), h.m());
        for e in h.edges() {
            let vs: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            text += &vs.join(" ");
            text.push('\n');
        }
        let input = parse_hypergraph(&text, false).unwrap();
        prop_assert_eq!(&input.hypergraph, &h);
        for measure in [Measure::Tw, Measure::Ghw, Measure::Fhw] {
            let r = solve(&h, measure, &SolveOptions::default()).unwrap();
            let out = emit_decomposition(&r, &input, measure).unwrap();
            let back = parse_decomposition(&out).unwrap();
            prop_assert_eq!(&back.width, &r.width);
            prop_assert_eq!(&back.decomposition.bags, &r.decomposition.bags);
            prop_assert_eq!(&back.decomposition.edges, &r.decomposition.edges);
            prop_assert_eq!(emit_decomposition(&r, &input, measure).unwrap(), out);
        }
    }
}
