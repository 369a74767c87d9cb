//! Bound reports: which invariant is bounded, in which direction, by how much, and the
//! chain of inequalities that produced the value.
//!
//! The JSON form of a report is the stable interchange format:
//!
//! ```text
//! {
//!   "subject": { "id"?: string, "kind": "braid" | "front" | "torus", ... },
//!   "bounds": [
//!     {
//!       "target": "s_sharp" | "s" | "g4" | "sl_max" | "s_tilde",
//!       "direction": "lower" | "upper",
//!       "value": integer,              // every target except s_tilde
//!       "value_times_two": integer,    // s_tilde only
//!       "derivation": [ { "inequality": string, "relation": string, "detail": string } ]
//!     }
//!   ]
//! }
//! ```

use std::fmt;

use serde::Serialize;

use crate::bounds::BoundsError;

/// Invariants the engine can bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    SSharp,
    S,
    G4,
    SlMax,
    /// Stored doubled so that half-integer values stay integral.
    STilde,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::SSharp => "s_sharp",
            Invariant::S => "s",
            Invariant::G4 => "g4",
            Invariant::SlMax => "sl_max",
            Invariant::STilde => "s_tilde",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The inequalities and formulas a derivation step may cite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inequality {
    /// Self-linking number of a closed braid.
    BennequinFormula,
    /// Self-linking numbers of the two transverse push-offs of a Legendrian knot.
    LegendrianPushoff,
    /// The maximal self-linking number dominates every transverse representative.
    SelfLinkingMaximum,
    /// Lower bound on s# by the self-linking number.
    SharpBennequin,
    /// Closed forms for positive torus knots.
    TorusKnotValues,
    PlamenevskayaShumakovitch,
    /// Both s and s# are bounded by twice the 4-ball genus.
    GenusBound,
    SliceBennequin,
    /// Behaviour of s# under link cobordisms.
    CobordismInequality,
    CrossingChange,
    TildeBennequin,
    TildeRelation,
}

impl Inequality {
    pub fn name(self) -> &'static str {
        match self {
            Inequality::BennequinFormula => "bennequin-formula",
            Inequality::LegendrianPushoff => "legendrian-pushoff",
            Inequality::SelfLinkingMaximum => "self-linking-maximum",
            Inequality::SharpBennequin => "sharp-bennequin",
            Inequality::TorusKnotValues => "torus-knot-values",
            Inequality::PlamenevskayaShumakovitch => "plamenevskaya-shumakovitch",
            Inequality::GenusBound => "genus-bound",
            Inequality::SliceBennequin => "slice-bennequin",
            Inequality::CobordismInequality => "cobordism-inequality",
            Inequality::CrossingChange => "crossing-change",
            Inequality::TildeBennequin => "tilde-bennequin",
            Inequality::TildeRelation => "tilde-relation",
        }
    }

    /// The relation in plain text.
    pub fn relation(self) -> &'static str {
        match self {
            Inequality::BennequinFormula => "sl(closure of b) = x+ - x- - n",
            Inequality::LegendrianPushoff => "sl(L+-) = tb -+ rot, so max sl = tb + |rot|",
            Inequality::SelfLinkingMaximum => "sl(T) <= sl_max(K) for every transverse T of type K",
            Inequality::SharpBennequin => "sl(T) <= s_sharp(T)",
            Inequality::TorusKnotValues => {
                "s_sharp(T(p,q)) = 2 g4 - 1 = s - 1 = sl_max = (p-1)(q-1) - 1"
            }
            Inequality::PlamenevskayaShumakovitch => "sl(T) <= s(T) - 1",
            Inequality::GenusBound => "s(K), s_sharp(K) <= 2 g4(K)",
            Inequality::SliceBennequin => "sl(T) <= 2 g4(T) - 1",
            Inequality::CobordismInequality => {
                "s_sharp(L2) - s_sharp(L1) <= -chi(S) + |L1| - |L2|"
            }
            Inequality::CrossingChange => "|s_sharp(L+) - s_sharp(L-)| <= 2",
            Inequality::TildeBennequin => "sl(T) <= 2 s_tilde(T) - 1",
            Inequality::TildeRelation => "|s_sharp(K) - 2 s_tilde(K)| <= 1",
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationStep {
    pub inequality: Inequality,
    pub relation: &'static str,
    pub detail: String,
}

impl DerivationStep {
    pub fn new(inequality: Inequality, detail: impl Into<String>) -> Self {
        DerivationStep {
            inequality,
            relation: inequality.relation(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundDirection {
    Lower,
    Upper,
}

impl fmt::Display for BoundDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundDirection::Lower => ">=",
            BoundDirection::Upper => "<=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub target: Invariant,
    pub direction: BoundDirection,
    #[serde(flatten)]
    value: BoundValue,
    pub derivation: Vec<DerivationStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
enum BoundValue {
    Integer { value: i64 },
    Doubled { value_times_two: i64 },
}

impl Bound {
    /// A bound on `target`. For [`Invariant::STilde`] the value is twice the bound.
    pub fn new(
        target: Invariant,
        direction: BoundDirection,
        value: i64,
        derivation: Vec<DerivationStep>,
    ) -> Self {
        assert!(!derivation.is_empty(), "a bound needs a derivation");
        let value = match target {
            Invariant::STilde => BoundValue::Doubled {
                value_times_two: value,
            },
            _ => BoundValue::Integer { value },
        };
        Bound {
            target,
            direction,
            value,
            derivation,
        }
    }

    /// The bound, doubled for `s_tilde`.
    pub fn value(&self) -> i64 {
        match self.value {
            BoundValue::Integer { value } => value,
            BoundValue::Doubled { value_times_two } => value_times_two,
        }
    }

    pub fn is_doubled(&self) -> bool {
        matches!(self.value, BoundValue::Doubled { .. })
    }

    pub fn cites(&self, inequality: Inequality) -> bool {
        self.derivation.iter().any(|s| s.inequality == inequality)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_doubled() {
            write!(f, "2*{} {} {}", self.target, self.direction, self.value())
        } else {
            write!(f, "{} {} {}", self.target, self.direction, self.value())
        }
    }
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subject {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub representative: Representative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Representative {
    Braid { strands: usize, word: String },
    Front { word: String },
    Torus { p: u32, q: u32 },
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(id) = &self.id {
            write!(f, "{id}: ")?;
        }
        match &self.representative {
            Representative::Braid { strands, word } => {
                let plural = if *strands == 1 { "" } else { "s" };
                write!(f, "braid on {strands} strand{plural} [{word}]")
            }
            Representative::Front { word } => write!(f, "front [{word}]"),
            Representative::Torus { p, q } => write!(f, "torus knot T({p},{q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub subject: Subject,
    bounds: Vec<Bound>,
}

impl BoundReport {
    pub fn new(subject: Subject) -> Self {
        BoundReport {
            subject,
            bounds: Vec::new(),
        }
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    /// Adds a bound, refusing one that would leave a lower bound above an upper bound.
    pub fn push(&mut self, bound: Bound) -> Result<(), BoundsError> {
        let candidate = std::iter::once(&bound).chain(self.bounds.iter().filter(|b| b.target == bound.target));
        let lower = candidate
            .clone()
            .filter(|b| b.direction == BoundDirection::Lower)
            .map(Bound::value)
            .max();
        let upper = candidate
            .filter(|b| b.direction == BoundDirection::Upper)
            .map(Bound::value)
            .min();
        if let (Some(lower), Some(upper)) = (lower, upper) {
            if lower > upper {
                return Err(BoundsError::Inconsistent {
                    target: bound.target,
                    lower,
                    upper,
                });
            }
        }
        self.bounds.push(bound);
        Ok(())
    }

    /// The largest lower bound on `target`, earliest entry on ties.
    pub fn best_lower(&self, target: Invariant) -> Option<&Bound> {
        self.bounds
            .iter()
            .filter(|b| b.target == target && b.direction == BoundDirection::Lower)
            .fold(None, |best: Option<&Bound>, b| match best {
                Some(best) if best.value() >= b.value() => Some(best),
                _ => Some(b),
            })
    }

    pub fn best_upper(&self, target: Invariant) -> Option<&Bound> {
        self.bounds
            .iter()
            .filter(|b| b.target == target && b.direction == BoundDirection::Upper)
            .fold(None, |best: Option<&Bound>, b| match best {
                Some(best) if best.value() <= b.value() => Some(best),
                _ => Some(b),
            })
    }

    /// Indented text rendering, one bound per block with its derivation beneath it.
    pub fn render_text(&self) -> String {
        let mut out = format!("subject: {}\n", self.subject);
        for bound in &self.bounds {
            out.push_str(&format!("  {bound}\n"));
            for step in &bound.derivation {
                out.push_str(&format!("    - {}: {} ({})\n", step.inequality, step.relation, step.detail));
            }
        }
        out
    }
}
