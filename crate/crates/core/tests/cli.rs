use std::io::Write;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_knotbound");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn corpus_file(body: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "id,kind,strands,word,invariant,value").unwrap();
    file.write_all(body.as_bytes()).unwrap();
    file
}

#[test]
fn golden_outputs_match_byte_for_byte() {
    let cases: [(&[&str], &str); 3] = [
        (&["torus", "3", "5", "--json"], "torus_3_5.json"),
        (&["braid", "1 1 1", "--strands", "2", "--json"], "braid_1_1_1.json"),
        (&["front", "L1 R1", "--json"], "front_saucer.json"),
    ];
    for (args, name) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{name}");
    }
}

#[test]
fn consistent_corpus_exits_zero() {
    let file = corpus_file("\"T(2,3)\",braid,2,1 1 1,s_sharp,1\n\"T(2,3)\",braid,2,1 1 1,g4,1\n");
    let out = run(&["corpus", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn violated_corpus_exits_one() {
    let file = corpus_file("\"T(2,3)\",braid,2,1 1 1,s_sharp,-1\n");
    let out = run(&["corpus", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["summary"]["violations"].as_u64().unwrap() >= 1);
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["braid", "1 x 2"][..],
        &["braid", "0"],
        &["braid", "3", "--strands", "2"],
        &["front", "L1 Q2"],
        &["front", "L1"],
        &["torus", "2", "4"],
        &["verify", "nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_corpus_exits_two() {
    let file = corpus_file("a,braid,2,1 1 1,genus,1\n");
    let out = run(&["corpus", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["torus-equality", "cobordism-chain", "markov", "pushoff"] {
        let out = run(&["verify", suite, "--samples", "50"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn word_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1 1 1").unwrap();
    let out = run(&["braid", "--file", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["invariants"]["self_linking"], 1);
}
