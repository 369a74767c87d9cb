//! Seeded verification suites over generated braids and fronts.
//!
//! Randomness comes from [`SuiteRng`]: ChaCha8 (as implemented by `rand_chacha`)
//! seeded through `SeedableRng::seed_from_u64`, with bounded integers drawn by
//! rejection sampling on `next_u64` so that a given seed always yields the same cases.

use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    admissible_l, crossing_change_interval, positive_braid_cobordism_check,
    positive_braid_cobordism_check_with_l, resolution_bound_decomposition, sharp_bound_from_braid,
    TorusKnotInvariants,
};
use crate::braid::{torus_braid, BraidWord};
use crate::front::{FrontDiagram, OrientedFront, Pushoff, SliceEvent};
use crate::report::Invariant;

pub const DEFAULT_SEED: u64 = 7;
pub const MAX_STRANDS: usize = 8;
pub const MAX_LETTERS: usize = 40;
pub const MAX_FRONT_EVENTS: usize = 20;

/// Deterministic source of bounded integers.
pub struct SuiteRng(ChaCha8Rng);

impl SuiteRng {
    pub fn new(seed: u64) -> Self {
        SuiteRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform integer in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        // largest multiple of n representable, minus one
        let zone = u64::MAX - (u64::MAX - n + 1) % n;
        loop {
            let x = self.0.next_u64();
            if x <= zone {
                return x % n;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.below(2) == 1
    }
}

/// A braid on `1..=max_strands` strands with `0..=max_letters` letters. Single-strand
/// braids are always empty.
pub fn random_braid(rng: &mut SuiteRng, max_strands: usize, max_letters: usize, positive: bool) -> BraidWord {
    let strands = 1 + rng.index(max_strands);
    let len = rng.index(max_letters + 1);
    let letters = if strands == 1 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let k = 1 + rng.index(strands - 1) as i32;
                if positive || rng.coin() {
                    k
                } else {
                    -k
                }
            })
            .collect()
    };
    BraidWord::new(strands, letters).expect("generated letters are in range")
}

/// Rejection-samples braids until the closure is a knot.
pub fn random_knot_braid(rng: &mut SuiteRng, max_strands: usize, max_letters: usize, positive: bool) -> BraidWord {
    loop {
        let b = random_braid(rng, max_strands, max_letters, positive);
        if b.is_knot_closure() {
            return b;
        }
    }
}

/// A valid front of at most `max_events` events, built left to right by picking only
/// events that keep the slice valid and leave enough room to close every strand.
pub fn random_front(rng: &mut SuiteRng, max_events: usize) -> FrontDiagram {
    let mut events = Vec::new();
    let mut strands = 0usize;
    loop {
        let remaining = max_events - events.len();
        let needed = strands / 2;
        if strands == 0 && !events.is_empty() && (remaining < 2 || rng.index(4) == 0) {
            break;
        }
        let mut choices = Vec::with_capacity(3);
        if remaining > needed + 1 {
            choices.push('L');
        }
        if strands >= 2 && remaining > needed {
            choices.push('X');
        }
        if strands >= 2 {
            choices.push('R');
        }
        let event = match choices[rng.index(choices.len())] {
            'L' => SliceEvent::LeftCusp(1 + rng.index(strands + 1)),
            'X' => SliceEvent::Crossing(1 + rng.index(strands - 1)),
            _ => SliceEvent::RightCusp(1 + rng.index(strands - 1)),
        };
        match event {
            SliceEvent::LeftCusp(_) => strands += 2,
            SliceEvent::RightCusp(_) => strands -= 2,
            SliceEvent::Crossing(_) => {}
        }
        events.push(event);
    }
    FrontDiagram::new(events).expect("generator keeps every event valid")
}

/// Rejection-samples fronts until one has a single component.
pub fn random_knot_front(rng: &mut SuiteRng, max_events: usize) -> OrientedFront {
    loop {
        if let Ok(of) = random_front(rng, max_events).orient() {
            return of;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome {
            suite: suite.to_string(),
            cases: 0,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} checks, {} failures: {}",
            self.suite,
            self.cases,
            self.checks,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Coprime pairs `2 ≤ p < q ≤ max`.
pub fn coprime_pairs(max: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=max).flat_map(move |p| (p + 1..=max).map(move |q| (p, q))).filter(|&(p, q)| {
        TorusKnotInvariants::new(p, q).is_ok()
    })
}

/// Bennequin's formula on torus braids against the torus-knot closed forms.
pub fn torus_equality(max: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("torus-equality");
    for (p, q) in coprime_pairs(max) {
        out.cases += 1;
        let t = TorusKnotInvariants::new(p, q).expect("coprime");
        let closed_form = i64::from(p - 1) * i64::from(q - 1) - 1;
        let braid = match torus_braid(p, q) {
            Ok(b) => b,
            Err(e) => {
                out.check(false, || format!("T({p},{q}): {e}"));
                continue;
            }
        };
        let sl = braid.self_linking();
        out.check(braid.is_knot_closure(), || format!("T({p},{q}) closure is not a knot"));
        out.check(sl == closed_form && closed_form == t.s_sharp, || {
            format!("T({p},{q}): sl {sl}, (p-1)(q-1)-1 {closed_form}, s_sharp {}", t.s_sharp)
        });
        out.check(
            t.s_sharp == 2 * t.g4 - 1 && t.s_sharp == t.s - 1 && t.s_sharp == t.sl_max,
            || format!("T({p},{q}): closed forms disagree: {t:?}"),
        );
        let bound = sharp_bound_from_braid(&braid)
            .ok()
            .and_then(|r| r.best_lower(Invariant::SSharp).map(|b| b.value()));
        out.check(bound == Some(t.s_sharp), || {
            format!("T({p},{q}): s_sharp lower bound {bound:?} is not tight")
        });
    }
    out
}

/// The positive-braid cobordism to `T(n, l)` recovers `x₊ − n`, for the three smallest
/// admissible `l`.
pub fn cobordism_chain(samples: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cobordism-chain");
    let mut rng = SuiteRng::new(seed);
    for _ in 0..samples {
        out.cases += 1;
        let b = random_knot_braid(&mut rng, MAX_STRANDS, MAX_LETTERS, true);
        let (plus, _) = b.crossing_counts();
        let expected = plus - b.strands() as i64;
        match positive_braid_cobordism_check(&b) {
            Ok(c) => out.check(c.recovered_bound == expected, || {
                format!("[{b}] n={}: recovered {} != {expected}", b.strands(), c.recovered_bound)
            }),
            Err(e) => out.check(false, || format!("[{b}]: {e}")),
        }
        for l in admissible_l(b.strands(), plus).take(3) {
            let recovered = positive_braid_cobordism_check_with_l(&b, l).map(|c| c.recovered_bound);
            out.check(recovered == Ok(expected), || {
                format!("[{b}] n={} l={l}: recovered {recovered:?} != {expected}", b.strands())
            });
        }
    }
    out
}

/// Positive resolution plus crossing changes reproduces Bennequin's bound.
pub fn resolution_decomposition(samples: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("resolution-decomposition");
    let mut rng = SuiteRng::new(seed);
    for _ in 0..samples {
        out.cases += 1;
        let b = random_knot_braid(&mut rng, MAX_STRANDS, MAX_LETTERS, false);
        let d = match resolution_bound_decomposition(&b) {
            Ok(d) => d,
            Err(e) => {
                out.check(false, || format!("[{b}]: {e}"));
                continue;
            }
        };
        out.check(d.final_bound == b.self_linking(), || {
            format!("[{b}]: final {} != sl {}", d.final_bound, b.self_linking())
        });
        out.check(d.final_bound == d.positive_bound - 2 * d.switches as i64, || {
            format!("[{b}]: {d:?} does not decompose")
        });
        let interval = crossing_change_interval(d.positive_bound, d.switches);
        out.check(interval.lo == d.final_bound, || {
            format!("[{b}]: crossing-change interval {interval:?} vs final {}", d.final_bound)
        });
    }
    out
}

/// Markov moves and crossing changes against the self-linking number and component count.
pub fn markov(samples: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("markov");
    let mut rng = SuiteRng::new(seed);
    for _ in 0..samples {
        out.cases += 1;
        let b = random_braid(&mut rng, MAX_STRANDS, MAX_LETTERS, false);
        let sl = b.self_linking();
        let components = b.component_count();
        if b.strands() > 1 {
            let k = 1 + rng.index(b.strands() - 1);
            let c = b.conjugate(k).expect("valid generator");
            out.check(c.self_linking() == sl, || format!("[{b}] conjugate by {k} changes sl"));
            out.check(c.component_count() == components, || {
                format!("[{b}] conjugate by {k} changes components")
            });
        }
        let up = b.stabilize(true);
        out.check(up.self_linking() == sl, || format!("[{b}] positive stabilization changes sl"));
        let down = b.stabilize(false);
        out.check(down.self_linking() == sl - 2, || {
            format!("[{b}] negative stabilization gives sl {}", down.self_linking())
        });
        out.check(
            up.component_count() == components && down.component_count() == components,
            || format!("[{b}] stabilization changes components"),
        );
        if !b.is_empty() {
            let position = 1 + rng.index(b.len());
            let changed = b.crossing_change(position).expect("in range");
            out.check(changed.component_count() == components, || {
                format!("[{b}] crossing change at {position} changes components")
            });
        }
        out.check(b.positive_resolution().0.component_count() == components, || {
            format!("[{b}] positive resolution changes components")
        });
    }
    out
}

/// Push-off self-linking numbers and orientation reversal on random knot fronts.
pub fn pushoff(samples: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("pushoff");
    let mut rng = SuiteRng::new(seed);
    for _ in 0..samples {
        out.cases += 1;
        let of = random_knot_front(&mut rng, MAX_FRONT_EVENTS);
        let word = of.front().to_string();
        let (tb, rot) = (of.thurston_bennequin(), of.rotation_number());
        let best = of
            .transverse_pushoff_sl(Pushoff::Positive)
            .max(of.transverse_pushoff_sl(Pushoff::Negative));
        out.check(best == tb + rot.abs(), || {
            format!("[{word}]: max push-off sl {best} != tb + |rot| = {}", tb + rot.abs())
        });
        let rev = of.reverse_orientation();
        out.check(rev.thurston_bennequin() == tb, || format!("[{word}]: tb changes under reversal"));
        out.check(rev.rotation_number() == -rot, || format!("[{word}]: rot does not negate"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rng_is_reproducible() {
        let a: Vec<u64> = {
            let mut r = SuiteRng::new(42);
            (0..20).map(|_| r.below(1000)).collect()
        };
        let b: Vec<u64> = {
            let mut r = SuiteRng::new(42);
            (0..20).map(|_| r.below(1000)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|&x| x < 1000));
        let mut r = SuiteRng::new(1);
        assert!((0..100).all(|_| r.below(1) == 0));
    }

    #[test]
    fn below_covers_range() {
        let mut r = SuiteRng::new(3);
        let mut seen = [false; 6];
        for _ in 0..200 {
            seen[r.index(6)] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn generated_braids_respect_limits() {
        let mut r = SuiteRng::new(5);
        for _ in 0..200 {
            let b = random_braid(&mut r, 4, 10, true);
            assert!(b.strands() <= 4 && b.len() <= 10);
            assert_eq!(b.crossing_counts().1, 0);
        }
        for _ in 0..50 {
            assert!(random_knot_braid(&mut r, 6, 20, false).is_knot_closure());
        }
    }

    #[test]
    fn generated_fronts_are_valid() {
        let mut r = SuiteRng::new(11);
        for _ in 0..300 {
            let f = random_front(&mut r, 20);
            assert!(f.events().len() <= 20);
            assert!(!f.events().is_empty());
        }
        for _ in 0..50 {
            assert!(random_knot_front(&mut r, 20).front().is_knot());
        }
    }

    #[test]
    fn coprime_pair_count() {
        assert_eq!(coprime_pairs(5).collect::<Vec<_>>(), vec![(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn small_suites_pass() {
        assert!(torus_equality(7).passed());
        assert!(cobordism_chain(30, 1).passed());
        assert!(resolution_decomposition(30, 1).passed());
        assert!(markov(50, 1).passed());
        assert!(pushoff(30, 1).passed());
    }
}
