//! Externally asserted invariant values and their consistency checks.
//!
//! A corpus is a CSV file with the header `id,kind,strands,word,invariant,value`.
//! `kind` is `braid` or `front`; `strands` is blank for fronts and may be blank for
//! braids (the count is then inferred); `word` uses the braid or front text format;
//! `invariant` is one of `s_sharp`, `s`, `g4`, `sl_max`, `s_tilde_times_two`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::TorusKnotInvariants;
use crate::braid::{parse_braid, torus_braid, BraidError, BraidWord};
use crate::front::{parse_front, FrontDiagram, FrontError, Pushoff};
use crate::report::Inequality;

pub const HEADER: [&str; 6] = ["id", "kind", "strands", "word", "invariant", "value"];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus: {0}")]
    Io(#[from] std::io::Error),
    #[error("row {row}: {message}")]
    Schema { row: u64, message: String },
    #[error("row {row}: bad braid: {source}")]
    Braid { row: u64, source: BraidError },
    #[error("row {row}: bad front: {source}")]
    Front { row: u64, source: FrontError },
    #[error("rows {first_row} and {second_row} assert {invariant} of {id:?} as {first} and {second}")]
    ConflictingValues {
        id: String,
        invariant: CorpusInvariant,
        first_row: u64,
        second_row: u64,
        first: i64,
        second: i64,
    },
    #[error("rows {first_row} and {second_row} give different representatives for {id:?}")]
    ConflictingRepresentatives {
        id: String,
        first_row: u64,
        second_row: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusInvariant {
    SSharp,
    S,
    G4,
    SlMax,
    STildeTimesTwo,
}

impl CorpusInvariant {
    pub fn name(self) -> &'static str {
        match self {
            CorpusInvariant::SSharp => "s_sharp",
            CorpusInvariant::S => "s",
            CorpusInvariant::G4 => "g4",
            CorpusInvariant::SlMax => "sl_max",
            CorpusInvariant::STildeTimesTwo => "s_tilde_times_two",
        }
    }
}

impl fmt::Display for CorpusInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusInvariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "s_sharp" => CorpusInvariant::SSharp,
            "s" => CorpusInvariant::S,
            "g4" => CorpusInvariant::G4,
            "sl_max" => CorpusInvariant::SlMax,
            "s_tilde_times_two" => CorpusInvariant::STildeTimesTwo,
            other => return Err(format!("unknown invariant {other:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusRepresentative {
    Braid(BraidWord),
    Front(FrontDiagram),
}

impl CorpusRepresentative {
    fn kind(&self) -> &'static str {
        match self {
            CorpusRepresentative::Braid(_) => "braid",
            CorpusRepresentative::Front(_) => "front",
        }
    }

    fn strands_field(&self) -> String {
        match self {
            CorpusRepresentative::Braid(b) => b.strands().to_string(),
            CorpusRepresentative::Front(_) => String::new(),
        }
    }

    fn word(&self) -> String {
        match self {
            CorpusRepresentative::Braid(b) => b.to_string(),
            CorpusRepresentative::Front(f) => f.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusRecord {
    pub id: String,
    pub representative: CorpusRepresentative,
    pub invariant: CorpusInvariant,
    pub value: i64,
    /// Line of the source file the record came from, 0 for generated records.
    pub row: u64,
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusRecord>, CorpusError> {
    let file = std::fs::File::open(path)?;
    read_corpus(file)
}

/// Reads and validates a corpus, dropping exact duplicates of `(id, invariant)` rows.
pub fn read_corpus(reader: impl Read) -> Result<Vec<CorpusRecord>, CorpusError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(reader);

    let headers = csv.headers().map_err(|e| csv_error(e, 1))?.clone();
    if headers.is_empty() || headers.iter().eq([""]) {
        return Err(CorpusError::Schema {
            row: 1,
            message: "missing header".into(),
        });
    }
    if !headers.iter().eq(HEADER) {
        return Err(CorpusError::Schema {
            row: 1,
            message: format!("header must be {:?}", HEADER.join(",")),
        });
    }

    let mut records: Vec<CorpusRecord> = Vec::new();
    let mut values: HashMap<(String, CorpusInvariant), usize> = HashMap::new();
    let mut representatives: HashMap<String, (CorpusRepresentative, u64)> = HashMap::new();

    for (i, result) in csv.records().enumerate() {
        let fallback_row = i as u64 + 2;
        let record = result.map_err(|e| csv_error(e, fallback_row))?;
        let row = record.position().map_or(fallback_row, |p| p.line());
        let parsed = parse_row(&record, row)?;

        match representatives.get(&parsed.id) {
            Some((existing, first_row)) if *existing != parsed.representative => {
                return Err(CorpusError::ConflictingRepresentatives {
                    id: parsed.id,
                    first_row: *first_row,
                    second_row: row,
                });
            }
            Some(_) => {}
            None => {
                representatives.insert(parsed.id.clone(), (parsed.representative.clone(), row));
            }
        }

        let key = (parsed.id.clone(), parsed.invariant);
        if let Some(&index) = values.get(&key) {
            let first = &records[index];
            if first.value != parsed.value {
                return Err(CorpusError::ConflictingValues {
                    id: parsed.id,
                    invariant: parsed.invariant,
                    first_row: first.row,
                    second_row: row,
                    first: first.value,
                    second: parsed.value,
                });
            }
            continue;
        }
        values.insert(key, records.len());
        records.push(parsed);
    }
    Ok(records)
}

fn csv_error(e: csv::Error, fallback_row: u64) -> CorpusError {
    let row = e.position().map_or(fallback_row, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => CorpusError::Io(io),
        csv::ErrorKind::UnequalLengths { len, .. } => CorpusError::Schema {
            row,
            message: format!("expected {} fields, found {len}", HEADER.len()),
        },
        other => CorpusError::Schema {
            row,
            message: format!("{other:?}"),
        },
    }
}

fn parse_row(record: &csv::StringRecord, row: u64) -> Result<CorpusRecord, CorpusError> {
    let schema = |message: String| CorpusError::Schema { row, message };
    let field = |i: usize| record.get(i).unwrap_or_default();

    let id = field(0).to_string();
    if id.is_empty() {
        return Err(schema("empty id".into()));
    }
    let strands = match field(2).trim() {
        "" => None,
        s => Some(
            s.parse::<usize>()
                .map_err(|_| schema(format!("strands {s:?} is not a positive integer")))?,
        ),
    };
    let representative = match field(1) {
        "braid" => CorpusRepresentative::Braid(
            parse_braid(field(3), strands).map_err(|source| CorpusError::Braid { row, source })?,
        ),
        "front" => {
            if strands.is_some() {
                return Err(schema("strands must be blank for fronts".into()));
            }
            CorpusRepresentative::Front(
                parse_front(field(3)).map_err(|source| CorpusError::Front { row, source })?,
            )
        }
        other => return Err(schema(format!("kind {other:?} is neither braid nor front"))),
    };
    let invariant = field(4).parse().map_err(schema)?;
    let value = field(5)
        .trim()
        .parse()
        .map_err(|_| schema(format!("value {:?} is not an integer", field(5))))?;
    Ok(CorpusRecord {
        id,
        representative,
        invariant,
        value,
        row,
    })
}

pub fn write_corpus(records: &[CorpusRecord], writer: impl Write) -> Result<(), CorpusError> {
    let mut csv = csv::Writer::from_writer(writer);
    let into_io = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(io) => CorpusError::Io(io),
        other => CorpusError::Schema {
            row: 0,
            message: format!("{other:?}"),
        },
    };
    csv.write_record(HEADER).map_err(into_io)?;
    for r in records {
        csv.write_record([
            r.id.clone(),
            r.representative.kind().to_string(),
            r.representative.strands_field(),
            r.representative.word(),
            r.invariant.name().to_string(),
            r.value.to_string(),
        ])
        .map_err(into_io)?;
    }
    csv.flush()?;
    Ok(())
}

/// Corpus of the exact torus-knot values for every coprime `2 ≤ p < q ≤ max`.
pub fn torus_corpus(max: u32) -> Vec<CorpusRecord> {
    let mut records = Vec::new();
    for p in 2..=max {
        for q in p + 1..=max {
            let Ok(t) = TorusKnotInvariants::new(p, q) else {
                continue;
            };
            let braid = torus_braid(p, q).expect("small torus braid");
            for (invariant, value) in [
                (CorpusInvariant::SSharp, t.s_sharp),
                (CorpusInvariant::S, t.s),
                (CorpusInvariant::G4, t.g4),
                (CorpusInvariant::SlMax, t.sl_max),
            ] {
                records.push(CorpusRecord {
                    id: format!("T({p},{q})"),
                    representative: CorpusRepresentative::Braid(braid.clone()),
                    invariant,
                    value,
                    row: 0,
                });
            }
        }
    }
    records
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Violated,
}

/// Which relation a finding checks. Everything except the knot check cites an
/// encoded inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Check {
    Inequality(Inequality),
    KnotRepresentative,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Inequality(i) => write!(f, "{i}"),
            Check::KnotRepresentative => f.write_str("knot-representative"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationFinding {
    pub id: String,
    pub inequality: Check,
    pub relation: String,
    pub observed: BTreeMap<String, i64>,
    pub verdict: Verdict,
}

impl VerificationFinding {
    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn cites(&self, inequality: Inequality) -> bool {
        self.inequality == Check::Inequality(inequality)
    }
}

impl fmt::Display for VerificationFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Consistent => "ok",
            Verdict::Violated => "VIOLATED",
        };
        let observed: Vec<String> = self.observed.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{verdict:>8}  {}  {}: {}  [{}]",
            self.id,
            self.inequality,
            self.relation,
            observed.join(", ")
        )
    }
}

/// Checks every applicable inequality between the self-linking number of each
/// representative and the values asserted for it. Findings follow the order in which
/// ids first appear.
pub fn verify_corpus(records: &[CorpusRecord]) -> Vec<VerificationFinding> {
    let mut order: Vec<&str> = Vec::new();
    let mut groups: HashMap<&str, Vec<&CorpusRecord>> = HashMap::new();
    for r in records {
        groups
            .entry(&r.id)
            .or_insert_with(|| {
                order.push(&r.id);
                Vec::new()
            })
            .push(r);
    }
    order
        .par_iter()
        .map(|id| verify_knot(id, &groups[id]))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[allow(clippy::int_plus_one)] // relations are written as stated
fn verify_knot(id: &str, records: &[&CorpusRecord]) -> Vec<VerificationFinding> {
    let finding = |check: Check, relation: &str, observed: &[(&str, i64)], holds: bool| VerificationFinding {
        id: id.to_string(),
        inequality: check,
        relation: relation.to_string(),
        observed: observed.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        verdict: if holds { Verdict::Consistent } else { Verdict::Violated },
    };

    let (components, sl) = match &records[0].representative {
        CorpusRepresentative::Braid(b) => (b.component_count(), b.self_linking()),
        CorpusRepresentative::Front(f) => match f.orient() {
            Ok(of) => (
                1,
                of.transverse_pushoff_sl(Pushoff::Positive)
                    .max(of.transverse_pushoff_sl(Pushoff::Negative)),
            ),
            Err(_) => (f.component_count(), 0),
        },
    };
    if components != 1 {
        return vec![finding(
            Check::KnotRepresentative,
            "components == 1",
            &[("components", components as i64)],
            false,
        )];
    }

    let asserted: HashMap<CorpusInvariant, i64> =
        records.iter().map(|r| (r.invariant, r.value)).collect();
    let get = |i| asserted.get(&i).copied();
    let use_ineq = Check::Inequality;
    let mut out = Vec::new();

    if let Some(s_sharp) = get(CorpusInvariant::SSharp) {
        out.push(finding(
            use_ineq(Inequality::SharpBennequin),
            "sl <= s_sharp",
            &[("sl", sl), ("s_sharp", s_sharp)],
            sl <= s_sharp,
        ));
    }
    if let Some(s) = get(CorpusInvariant::S) {
        out.push(finding(
            use_ineq(Inequality::PlamenevskayaShumakovitch),
            "sl <= s - 1",
            &[("sl", sl), ("s", s)],
            sl <= s - 1,
        ));
    }
    if let Some(g4) = get(CorpusInvariant::G4) {
        out.push(finding(
            use_ineq(Inequality::SliceBennequin),
            "sl <= 2*g4 - 1",
            &[("sl", sl), ("g4", g4)],
            sl <= 2 * g4 - 1,
        ));
        if let Some(s_sharp) = get(CorpusInvariant::SSharp) {
            out.push(finding(
                use_ineq(Inequality::GenusBound),
                "s_sharp <= 2*g4",
                &[("s_sharp", s_sharp), ("g4", g4)],
                s_sharp <= 2 * g4,
            ));
        }
        if let Some(s) = get(CorpusInvariant::S) {
            out.push(finding(
                use_ineq(Inequality::GenusBound),
                "s <= 2*g4",
                &[("s", s), ("g4", g4)],
                s <= 2 * g4,
            ));
        }
    }
    if let Some(sl_max) = get(CorpusInvariant::SlMax) {
        out.push(finding(
            use_ineq(Inequality::SelfLinkingMaximum),
            "sl <= sl_max",
            &[("sl", sl), ("sl_max", sl_max)],
            sl <= sl_max,
        ));
        if let Some(s_sharp) = get(CorpusInvariant::SSharp) {
            out.push(finding(
                use_ineq(Inequality::SharpBennequin),
                "sl_max <= s_sharp",
                &[("sl_max", sl_max), ("s_sharp", s_sharp)],
                sl_max <= s_sharp,
            ));
        }
        if let Some(s) = get(CorpusInvariant::S) {
            out.push(finding(
                use_ineq(Inequality::PlamenevskayaShumakovitch),
                "sl_max <= s - 1",
                &[("sl_max", sl_max), ("s", s)],
                sl_max <= s - 1,
            ));
        }
        if let Some(g4) = get(CorpusInvariant::G4) {
            out.push(finding(
                use_ineq(Inequality::SliceBennequin),
                "sl_max <= 2*g4 - 1",
                &[("sl_max", sl_max), ("g4", g4)],
                sl_max <= 2 * g4 - 1,
            ));
        }
    }
    if let Some(tilde2) = get(CorpusInvariant::STildeTimesTwo) {
        out.push(finding(
            use_ineq(Inequality::TildeBennequin),
            "sl <= s_tilde_times_two - 1",
            &[("sl", sl), ("s_tilde_times_two", tilde2)],
            sl <= tilde2 - 1,
        ));
        if let Some(s_sharp) = get(CorpusInvariant::SSharp) {
            out.push(finding(
                use_ineq(Inequality::TildeRelation),
                "|s_sharp - s_tilde_times_two| <= 1",
                &[("s_sharp", s_sharp), ("s_tilde_times_two", tilde2)],
                (s_sharp - tilde2).abs() <= 1,
            ));
        }
        if let Some(sl_max) = get(CorpusInvariant::SlMax) {
            out.push(finding(
                use_ineq(Inequality::TildeBennequin),
                "sl_max <= s_tilde_times_two - 1",
                &[("sl_max", sl_max), ("s_tilde_times_two", tilde2)],
                sl_max <= tilde2 - 1,
            ));
        }
    }
    out
}
