//! Classical invariants of braids and Legendrian fronts, and the lower bounds they
//! certify for the concordance invariants s# and s and for the 4-ball genus.
//!
//! - [`braid`]: braid words, closures, Bennequin's self-linking number, Markov moves.
//! - [`front`]: Legendrian fronts as slice events; Thurston–Bennequin and rotation numbers.
//! - [`bounds`]: torus-knot closed forms and the inequality chain, with cobordism and
//!   crossing-change bookkeeping.
//! - [`report`]: bound reports with their derivations.
//! - [`corpus`]: CSV corpora of asserted values and their consistency checks.
//! - [`suites`]: seeded randomized verification suites.
//! - [`cli`]: the `knotbound` command line.

pub mod bounds;
pub mod braid;
pub mod cli;
pub mod corpus;
pub mod front;
pub mod report;
pub mod suites;

pub use bounds::{
    cobordism_propagate, crossing_change_interval, positive_braid_cobordism_check,
    resolution_bound_decomposition, s_tilde_relations, sharp_bound_from_braid,
    sharp_bound_from_front, torus_knot_invariants, BoundsError, CobordismData, Interval,
    TorusKnotInvariants,
};
pub use braid::{parse_braid, torus_braid, BraidError, BraidWord, Permutation};
pub use corpus::{load_corpus, verify_corpus, CorpusError, CorpusRecord, VerificationFinding};
pub use front::{parse_front, FrontDiagram, FrontError, OrientedFront, Pushoff};
pub use report::{Bound, BoundDirection, BoundReport, Inequality, Invariant};
