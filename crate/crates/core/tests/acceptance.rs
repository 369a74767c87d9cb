//! End-to-end acceptance run. Prints one pass/fail line per criterion.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use knotbound::bounds::torus_knot_invariants;
use knotbound::corpus::{torus_corpus, verify_corpus, CorpusInvariant};
use knotbound::front::parse_front;
use knotbound::report::Inequality;
use knotbound::suites::{self, SuiteOutcome, DEFAULT_SEED};

type Verdict = Result<String, String>;

fn from_suite(outcome: SuiteOutcome, min_cases: usize) -> Verdict {
    if outcome.cases < min_cases {
        return Err(format!("only {} cases, need {min_cases}", outcome.cases));
    }
    if outcome.passed() {
        Ok(outcome.to_string())
    } else {
        Err(format!("{outcome}; first: {:?}", outcome.failures.first()))
    }
}

fn torus_equality() -> Verdict {
    let start = Instant::now();
    let outcome = suites::torus_equality(13);
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    // 2 <= p < q <= 13, gcd 1
    let expected = (2..=13u32)
        .flat_map(|q| (2..q).map(move |p| (p, q)))
        .filter(|&(p, q)| (1..=p).rev().find(|d| p % d == 0 && q % d == 0) == Some(1))
        .count();
    if outcome.cases != expected {
        return Err(format!("{} pairs checked, expected {expected}", outcome.cases));
    }
    from_suite(outcome, expected).map(|s| format!("{s} in {elapsed:?}"))
}

fn front_anchors() -> Verdict {
    let tb_rot = |word: &str| {
        let of = parse_front(word).unwrap().orient().unwrap();
        (of.thurston_bennequin(), of.rotation_number())
    };
    let saucer = tb_rot("L1 R1");
    let (fish_tb, fish_rot) = tb_rot("L1 X1 R1");
    let trefoil = tb_rot("L1 L3 X2 X2 X2 R1 R1");
    let s_sharp = torus_knot_invariants(2, 3).unwrap().s_sharp;
    let summary = format!(
        "saucer {saucer:?}, fish ({fish_tb}, |{fish_rot}|), trefoil {trefoil:?}, T(2,3) s_sharp {s_sharp}"
    );
    let ok = saucer == (-1, 0)
        && (fish_tb, fish_rot.abs()) == (-2, 1)
        && trefoil == (1, 0)
        && trefoil.0 + trefoil.1.abs() == s_sharp
        && s_sharp == 1;
    if ok {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn corpus_round_trip() -> Verdict {
    let corpus = torus_corpus(13);
    let findings = verify_corpus(&corpus);
    let violations = findings.iter().filter(|f| f.is_violated()).count();
    if violations > 0 {
        return Err(format!("{violations} violations on the clean corpus"));
    }
    let mut corrupted = 0;
    for (i, record) in corpus.iter().enumerate() {
        if record.invariant != CorpusInvariant::SSharp {
            continue;
        }
        let mut bad = corpus.clone();
        bad[i].value -= 2;
        let caught = verify_corpus(&bad).iter().any(|f| {
            f.is_violated()
                && (f.cites(Inequality::SharpBennequin) || f.cites(Inequality::GenusBound))
        });
        if !caught {
            return Err(format!("corrupting {} s_sharp went unnoticed", record.id));
        }
        corrupted += 1;
    }
    if corrupted == 0 {
        return Err("no s_sharp records to corrupt".into());
    }
    Ok(format!(
        "{} records, {} findings, 0 violations; {corrupted} single corruptions all caught",
        corpus.len(),
        findings.len()
    ))
}

fn cli_contract() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_knotbound");
    let golden_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let goldens: [(&[&str], &str); 3] = [
        (&["torus", "3", "5", "--json"], "torus_3_5.json"),
        (&["braid", "1 1 1", "--strands", "2", "--json"], "braid_1_1_1.json"),
        (&["front", "L1 R1", "--json"], "front_saucer.json"),
    ];
    for (args, name) in goldens {
        let out = run(args);
        let expected = std::fs::read(format!("{golden_dir}/{name}")).unwrap();
        if out.status.code() != Some(0) || out.stdout != expected {
            return Err(format!("{name} does not match"));
        }
    }

    let mut corpus = tempfile::NamedTempFile::new().unwrap();
    write!(corpus, "id,kind,strands,word,invariant,value\n\"T(2,3)\",braid,2,1 1 1,s_sharp,-1\n").unwrap();
    let codes = [
        run(&["verify", "torus-equality"]).status.code(),
        run(&["corpus", corpus.path().to_str().unwrap()]).status.code(),
        run(&["braid", "1 x"]).status.code(),
    ];
    if codes != [Some(0), Some(1), Some(2)] {
        return Err(format!("exit codes {codes:?}, expected 0/1/2"));
    }
    Ok("3 goldens byte-identical; exit codes 0/1/2".into())
}

#[test]
fn acceptance() {
    let seed = DEFAULT_SEED;
    let criteria: Vec<(&str, Verdict)> = vec![
        ("torus equality", torus_equality()),
        ("cobordism chain", from_suite(suites::cobordism_chain(500, seed), 500)),
        (
            "resolution decomposition",
            from_suite(suites::resolution_decomposition(500, seed), 500),
        ),
        ("markov moves", from_suite(suites::markov(1000, seed), 1000)),
        ("front anchors", front_anchors()),
        ("push-off identity", from_suite(suites::pushoff(500, seed), 500)),
        ("corpus round trip", corpus_round_trip()),
        ("cli contract", cli_contract()),
    ];

    let mut failed = 0;
    for (i, (name, verdict)) in criteria.iter().enumerate() {
        match verdict {
            Ok(detail) => println!("criterion {} ({name}): PASS  {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL  {detail}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} criteria failed");
}
