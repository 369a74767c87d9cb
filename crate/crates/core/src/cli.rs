//! Command-line surface. [`run`] does all the work and returns the text to print and
//! the exit code, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 verification or corpus violation, 2 usage or parse error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{sharp_bound_from_braid, sharp_bound_from_front, TorusKnotInvariants};
use crate::braid::{parse_braid, torus_braid};
use crate::corpus::{load_corpus, verify_corpus, VerificationFinding};
use crate::front::{parse_front, Pushoff};
use crate::report::{Bound, BoundReport, Invariant, Representative, Subject};
use crate::suites::{self, SuiteOutcome, DEFAULT_SEED};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "knotbound", version, about = "Classical invariants and certified s#, s and g4 bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Word given inline
    pub word: Option<String>,
    /// Read the word from a file
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl Input {
    fn text(&self) -> Result<String, String> {
        match (&self.word, &self.file) {
            (Some(word), _) => Ok(word.clone()),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display())),
            (None, None) => Err("no input given".into()),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and bounds for the closure of a braid word
    Braid {
        #[command(flatten)]
        input: Input,
        /// Strand count; inferred as max|k| + 1 when omitted
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Invariants and bounds for a Legendrian front
    Front {
        #[command(flatten)]
        input: Input,
    },
    /// Closed-form invariants of the torus knot T(p, q)
    Torus { p: u32, q: u32 },
    /// Run a verification suite
    Verify {
        suite: Suite,
        /// Largest q for torus-equality
        #[arg(long, default_value_t = 13)]
        max: u32,
        /// Number of random cases for the sampled suites
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Check a CSV corpus of asserted invariant values
    Corpus {
        /// Corpus file
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        file: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    TorusEquality,
    CobordismChain,
    Markov,
    Pushoff,
}

/// What a command wants printed, and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a, I: Serialize> {
    tool_version: &'static str,
    subject: &'a Subject,
    invariants: I,
    bounds: &'a [Bound],
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Braid { input, strands } => braid(input, *strands, cli.json),
        Command::Front { input } => front(input, cli.json),
        Command::Torus { p, q } => torus(*p, *q, cli.json),
        Command::Verify {
            suite,
            max,
            samples,
            seed,
        } => verify(*suite, *max, *samples, *seed, cli.json),
        Command::Corpus { path, file } => match path.as_ref().or(file.as_ref()) {
            Some(p) => corpus(p, cli.json),
            None => Outcome::usage("a corpus path is required"),
        },
    }
}

#[derive(Serialize)]
struct BraidInvariants {
    strands: usize,
    x_plus: i64,
    x_minus: i64,
    writhe: i64,
    components: usize,
    is_knot: bool,
    self_linking: i64,
}

fn braid(input: &Input, strands: Option<usize>, json: bool) -> Outcome {
    let text = match input.text() {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let b = match parse_braid(&text, strands) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let (x_plus, x_minus) = b.crossing_counts();
    let invariants = BraidInvariants {
        strands: b.strands(),
        x_plus,
        x_minus,
        writhe: b.writhe(),
        components: b.component_count(),
        is_knot: b.is_knot_closure(),
        self_linking: b.self_linking(),
    };
    let report = sharp_bound_from_braid(&b).unwrap_or_else(|_| {
        BoundReport::new(Subject {
            id: None,
            representative: Representative::Braid {
                strands: b.strands(),
                word: b.to_string(),
            },
        })
    });

    if json {
        return Outcome::ok(to_json(&JsonReport {
            tool_version: TOOL_VERSION,
            subject: &report.subject,
            invariants,
            bounds: report.bounds(),
        }));
    }
    let mut out = format!(
        "strands: {}\nx+: {}\nx-: {}\ncomponents: {}\nknot: {}\nsl: {}\n",
        invariants.strands,
        invariants.x_plus,
        invariants.x_minus,
        invariants.components,
        invariants.is_knot,
        invariants.self_linking
    );
    if invariants.is_knot {
        out.push_str(&summary(&report));
        out.push_str(&report.render_text());
    } else {
        out.push_str("closure is a link; knot bounds do not apply\n");
    }
    Outcome::ok(out)
}

#[derive(Serialize)]
struct FrontInvariants {
    crossings: usize,
    right_cusps: usize,
    tb: i64,
    rot: i64,
    sl_positive_pushoff: i64,
    sl_negative_pushoff: i64,
}

fn front(input: &Input, json: bool) -> Outcome {
    let text = match input.text() {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let of = match parse_front(&text).and_then(|f| f.orient()) {
        Ok(of) => of,
        Err(e) => return Outcome::usage(e),
    };
    let invariants = FrontInvariants {
        crossings: of.front().crossing_count(),
        right_cusps: of.front().right_cusp_count(),
        tb: of.thurston_bennequin(),
        rot: of.rotation_number(),
        sl_positive_pushoff: of.transverse_pushoff_sl(Pushoff::Positive),
        sl_negative_pushoff: of.transverse_pushoff_sl(Pushoff::Negative),
    };
    let report = sharp_bound_from_front(&of);
    if json {
        return Outcome::ok(to_json(&JsonReport {
            tool_version: TOOL_VERSION,
            subject: &report.subject,
            invariants,
            bounds: report.bounds(),
        }));
    }
    let mut out = format!(
        "tb: {}\nrot: {}\nsl(positive push-off): {}\nsl(negative push-off): {}\n",
        invariants.tb, invariants.rot, invariants.sl_positive_pushoff, invariants.sl_negative_pushoff
    );
    out.push_str(&summary(&report));
    out.push_str(&report.render_text());
    Outcome::ok(out)
}

#[derive(Serialize)]
struct TorusInvariants {
    s_sharp: i64,
    s: i64,
    g4: i64,
    sl_max: i64,
    braid_strands: usize,
    braid_word: String,
    self_linking: i64,
}

fn torus(p: u32, q: u32, json: bool) -> Outcome {
    let t = match TorusKnotInvariants::new(p, q) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let b = match torus_braid(p, q) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let braid_report = sharp_bound_from_braid(&b).expect("coprime torus braids close to knots");
    let subject = Subject {
        id: None,
        representative: Representative::Torus { p, q },
    };
    let invariants = TorusInvariants {
        s_sharp: t.s_sharp,
        s: t.s,
        g4: t.g4,
        sl_max: t.sl_max,
        braid_strands: b.strands(),
        braid_word: b.to_string(),
        self_linking: b.self_linking(),
    };
    if json {
        return Outcome::ok(to_json(&JsonReport {
            tool_version: TOOL_VERSION,
            subject: &subject,
            invariants,
            bounds: braid_report.bounds(),
        }));
    }
    let mut out = format!(
        "T({p},{q})\ns#: {}\ns: {}\ng4: {}\nsl_max: {}\nbraid: [{}] on {} strands, sl = {}\n",
        t.s_sharp, t.s, t.g4, t.sl_max, invariants.braid_word, invariants.braid_strands, invariants.self_linking
    );
    out.push_str(&braid_report.render_text());
    Outcome::ok(out)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    tool_version: &'static str,
    seed: u64,
    outcomes: &'a [SuiteOutcome],
    passed: bool,
}

fn verify(suite: Suite, max: u32, samples: Option<usize>, seed: u64, json: bool) -> Outcome {
    let outcomes = match suite {
        Suite::TorusEquality => vec![suites::torus_equality(max)],
        Suite::CobordismChain => {
            let n = samples.unwrap_or(500);
            vec![
                suites::cobordism_chain(n, seed),
                suites::resolution_decomposition(n, seed),
            ]
        }
        Suite::Markov => vec![suites::markov(samples.unwrap_or(1000), seed)],
        Suite::Pushoff => vec![suites::pushoff(samples.unwrap_or(500), seed)],
    };
    let passed = outcomes.iter().all(SuiteOutcome::passed);
    let stdout = if json {
        to_json(&VerifyJson {
            tool_version: TOOL_VERSION,
            seed,
            outcomes: &outcomes,
            passed,
        })
    } else {
        let mut out = String::new();
        for o in &outcomes {
            out.push_str(&format!("{o}\n"));
            for failure in o.failures.iter().take(10) {
                out.push_str(&format!("  {failure}\n"));
            }
        }
        out
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    }
}

#[derive(Serialize)]
struct CorpusJson<'a> {
    tool_version: &'static str,
    subject: CorpusSubject,
    summary: CorpusSummary,
    findings: &'a [VerificationFinding],
}

#[derive(Serialize)]
struct CorpusSubject {
    kind: &'static str,
    path: String,
}

#[derive(Serialize)]
struct CorpusSummary {
    records: usize,
    findings: usize,
    violations: usize,
}

fn corpus(path: &std::path::Path, json: bool) -> Outcome {
    let records = match load_corpus(path) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let findings = verify_corpus(&records);
    let summary = CorpusSummary {
        records: records.len(),
        findings: findings.len(),
        violations: findings.iter().filter(|f| f.is_violated()).count(),
    };
    let code = if summary.violations > 0 { EXIT_VIOLATION } else { EXIT_OK };
    let stdout = if json {
        to_json(&CorpusJson {
            tool_version: TOOL_VERSION,
            subject: CorpusSubject {
                kind: "corpus",
                path: path.display().to_string(),
            },
            summary,
            findings: &findings,
        })
    } else {
        let mut out: String = findings.iter().map(|f| format!("{f}\n")).collect();
        out.push_str(&format!(
            "{} records, {} findings, {} violations\n",
            summary.records, summary.findings, summary.violations
        ));
        out
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn summary(report: &BoundReport) -> String {
    let mut out = String::new();
    for (target, label) in [
        (Invariant::SSharp, "s#"),
        (Invariant::S, "s"),
        (Invariant::G4, "g4"),
        (Invariant::SlMax, "sl_max"),
        (Invariant::STilde, "2*s~"),
    ] {
        if let Some(b) = report.best_lower(target) {
            out.push_str(&format!("{label} >= {}\n", b.value()));
        }
    }
    out
}
