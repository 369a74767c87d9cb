//! The inequality engine.
//!
//! Everything here is exact integer arithmetic. Nothing computes s# or s directly;
//! values come from the classical invariants of a representative (or from torus-knot
//! closed forms) and are pushed through the known inequalities, each step recorded.

use num_integer::Integer;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::front::{OrientedFront, Pushoff};
use crate::report::{
    Bound, BoundDirection, BoundReport, DerivationStep, Inequality, Invariant, Representative,
    Subject,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("T({p},{q}) needs positive parameters")]
    NonPositive { p: u32, q: u32 },
    #[error("({p},{q}) is not a coprime pair, so T({p},{q}) is a link")]
    NotCoprime { p: u32, q: u32 },
    #[error("closure has {components} components; a knot is required")]
    NotAKnot { components: usize },
    #[error("braid has {negative} negative crossings; a positive braid is required")]
    NotPositive { negative: i64 },
    #[error("l = {l} is not admissible: need l >= {min} and gcd({strands}, l) = 1")]
    InadmissibleL { l: u64, min: u64, strands: usize },
    #[error("a link has at least one component")]
    EmptyLink,
    #[error("{target} would have lower bound {lower} above upper bound {upper}")]
    Inconsistent {
        target: Invariant,
        lower: i64,
        upper: i64,
    },
}

/// Invariants of the positive torus knot `T(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusKnotInvariants {
    pub p: u32,
    pub q: u32,
    pub s_sharp: i64,
    pub s: i64,
    pub g4: i64,
    pub sl_max: i64,
}

impl TorusKnotInvariants {
    pub fn new(p: u32, q: u32) -> Result<Self, BoundsError> {
        if p == 0 || q == 0 {
            return Err(BoundsError::NonPositive { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(BoundsError::NotCoprime { p, q });
        }
        let twice_genus = (i64::from(p) - 1) * (i64::from(q) - 1);
        debug_assert!(twice_genus.is_even());
        Ok(TorusKnotInvariants {
            p,
            q,
            s_sharp: twice_genus - 1,
            s: twice_genus,
            g4: twice_genus / 2,
            sl_max: twice_genus - 1,
        })
    }

    /// Exact values as a report: each invariant bounded above and below by the same number.
    pub fn report(&self) -> BoundReport {
        let mut report = BoundReport::new(Subject {
            id: None,
            representative: Representative::Torus { p: self.p, q: self.q },
        });
        let detail = format!("T({},{}): (p-1)(q-1) = {}", self.p, self.q, self.s);
        for (target, value) in [
            (Invariant::SSharp, self.s_sharp),
            (Invariant::S, self.s),
            (Invariant::G4, self.g4),
            (Invariant::SlMax, self.sl_max),
        ] {
            for direction in [BoundDirection::Lower, BoundDirection::Upper] {
                let step = DerivationStep::new(Inequality::TorusKnotValues, detail.clone());
                report
                    .push(Bound::new(target, direction, value, vec![step]))
                    .expect("equal bounds never cross");
            }
        }
        report
    }
}

pub fn torus_knot_invariants(p: u32, q: u32) -> Result<TorusKnotInvariants, BoundsError> {
    TorusKnotInvariants::new(p, q)
}

/// `⌈a / 2⌉` for any sign of `a`.
fn half_ceil(a: i64) -> i64 {
    -(-a).div_euclid(2)
}

/// Lower bound on g4 from `sl ≤ s# ≤ 2 g4`.
pub fn genus_from_sharp_branch(sl: i64) -> i64 {
    half_ceil(sl)
}

/// Lower bound on g4 from `sl ≤ 2 g4 − 1`.
pub fn genus_from_slice_bennequin(sl: i64) -> i64 {
    half_ceil(sl + 1)
}

/// Lower bounds implied by a transverse representative with self-linking number `sl`.
/// `origin` holds the steps that produced `sl` and is prefixed to every derivation.
fn push_transverse_bounds(report: &mut BoundReport, sl: i64, origin: &[DerivationStep]) {
    let chain = |steps: &[(Inequality, String)]| -> Vec<DerivationStep> {
        origin
            .iter()
            .cloned()
            .chain(steps.iter().map(|(i, d)| DerivationStep::new(*i, d.clone())))
            .collect()
    };
    let lower = |target, value, steps: &[(Inequality, String)]| {
        Bound::new(target, BoundDirection::Lower, value, chain(steps))
    };

    let via_sharp = genus_from_sharp_branch(sl);
    let via_slice = genus_from_slice_bennequin(sl);
    let bounds = [
        lower(
            Invariant::SSharp,
            sl,
            &[(Inequality::SharpBennequin, format!("s_sharp >= sl = {sl}"))],
        ),
        lower(
            Invariant::SlMax,
            sl,
            &[(
                Inequality::SelfLinkingMaximum,
                format!("this representative realizes sl = {sl}"),
            )],
        ),
        lower(
            Invariant::S,
            sl + 1,
            &[(
                Inequality::PlamenevskayaShumakovitch,
                format!("s >= sl + 1 = {}", sl + 1),
            )],
        ),
        lower(
            Invariant::G4,
            via_sharp,
            &[
                (Inequality::SharpBennequin, format!("s_sharp >= {sl}")),
                (Inequality::GenusBound, format!("g4 >= ceil({sl}/2) = {via_sharp}")),
            ],
        ),
        lower(
            Invariant::G4,
            via_slice,
            &[(
                Inequality::SliceBennequin,
                format!("g4 >= ceil(({sl}+1)/2) = {via_slice}"),
            )],
        ),
        lower(
            Invariant::STilde,
            sl + 1,
            &[(
                Inequality::TildeBennequin,
                format!("2 s_tilde >= sl + 1 = {}", sl + 1),
            )],
        ),
    ];
    for bound in bounds {
        report.push(bound).expect("report holds lower bounds only");
    }
}

/// Lower bounds for the knot closing up `braid`, starting from Bennequin's formula.
pub fn sharp_bound_from_braid(braid: &BraidWord) -> Result<BoundReport, BoundsError> {
    sharp_bound_from_braid_with_id(braid, None)
}

pub fn sharp_bound_from_braid_with_id(
    braid: &BraidWord,
    id: Option<String>,
) -> Result<BoundReport, BoundsError> {
    let components = braid.component_count();
    if components != 1 {
        return Err(BoundsError::NotAKnot { components });
    }
    let (plus, minus) = braid.crossing_counts();
    let n = braid.strands();
    let sl = braid.self_linking();
    let mut report = BoundReport::new(Subject {
        id,
        representative: Representative::Braid {
            strands: n,
            word: braid.to_string(),
        },
    });
    let origin = [DerivationStep::new(
        Inequality::BennequinFormula,
        format!("sl = {plus} - {minus} - {n} = {sl}"),
    )];
    push_transverse_bounds(&mut report, sl, &origin);
    Ok(report)
}

/// Lower bounds for a Legendrian knot: the better push-off has `sl = tb + |rot|`, and
/// the transverse chain applies to it.
pub fn sharp_bound_from_front(front: &OrientedFront) -> BoundReport {
    sharp_bound_from_front_with_id(front, None)
}

pub fn sharp_bound_from_front_with_id(front: &OrientedFront, id: Option<String>) -> BoundReport {
    let tb = front.thurston_bennequin();
    let rot = front.rotation_number();
    let sl = front
        .transverse_pushoff_sl(Pushoff::Positive)
        .max(front.transverse_pushoff_sl(Pushoff::Negative));
    debug_assert_eq!(sl, tb + rot.abs());
    let mut report = BoundReport::new(Subject {
        id,
        representative: Representative::Front {
            word: front.front().to_string(),
        },
    });
    let origin = [DerivationStep::new(
        Inequality::LegendrianPushoff,
        format!("tb = {tb}, rot = {rot}, best push-off sl = {sl}"),
    )];
    push_transverse_bounds(&mut report, sl, &origin);
    report
}

/// Euler characteristic and boundary component counts of a link cobordism `L1 → L2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CobordismData {
    pub chi: i64,
    pub components_from: usize,
    pub components_to: usize,
}

impl CobordismData {
    pub fn new(chi: i64, components_from: usize, components_to: usize) -> Result<Self, BoundsError> {
        if components_from == 0 || components_to == 0 {
            return Err(BoundsError::EmptyLink);
        }
        Ok(CobordismData {
            chi,
            components_from,
            components_to,
        })
    }

    /// The genus-one cobordism realizing a crossing change on a link with `components`
    /// components.
    pub fn crossing_change(components: usize) -> Result<Self, BoundsError> {
        Self::new(-2, components, components)
    }
}

/// Upper bound on `s#(L2)` from `s#(L1)` across a cobordism. The caller asserts that
/// every component of the surface has boundary in `L1`; the assertion is recorded in
/// the derivation rather than checked.
pub fn cobordism_propagate(known_s_sharp_from: i64, cob: &CobordismData) -> Bound {
    let value = known_s_sharp_from - cob.chi + cob.components_from as i64 - cob.components_to as i64;
    let detail = format!(
        "s_sharp(L1) = {known_s_sharp_from}, chi = {}, |L1| = {}, |L2| = {}; \
         caller asserts every surface component meets L1",
        cob.chi, cob.components_from, cob.components_to
    );
    Bound::new(
        Invariant::SSharp,
        BoundDirection::Upper,
        value,
        vec![DerivationStep::new(Inequality::CobordismInequality, detail)],
    )
}

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn width(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Range of s# after `switches` crossing changes from a link with known s#.
pub fn crossing_change_interval(known_s_sharp: i64, switches: u64) -> Interval {
    let spread = 2 * switches as i64;
    Interval {
        lo: known_s_sharp - spread,
        hi: known_s_sharp + spread,
    }
}

/// The cobordism from a positive braid closure to `T(n, l)` and the bound it recovers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveCobordismCheck {
    pub l: u64,
    pub chi: i64,
    pub torus_s_sharp: i64,
    pub recovered_bound: i64,
}

/// Admissible torus parameters `l ≥ max(x₊, 1)` with `gcd(n, l) = 1`, in increasing order.
pub fn admissible_l(strands: usize, x_plus: i64) -> impl Iterator<Item = u64> {
    let start = x_plus.max(1) as u64;
    let n = strands as u64;
    (start..).filter(move |l| l.gcd(&n) == 1)
}

fn check_positive_knot(braid: &BraidWord) -> Result<(), BoundsError> {
    let (_, minus) = braid.crossing_counts();
    if minus != 0 {
        return Err(BoundsError::NotPositive { negative: minus });
    }
    let components = braid.component_count();
    if components != 1 {
        return Err(BoundsError::NotAKnot { components });
    }
    Ok(())
}

/// Runs the positive-braid argument with the smallest admissible `l`.
pub fn positive_braid_cobordism_check(braid: &BraidWord) -> Result<PositiveCobordismCheck, BoundsError> {
    check_positive_knot(braid)?;
    let (plus, _) = braid.crossing_counts();
    let l = admissible_l(braid.strands(), plus).next().expect("admissible l exists");
    cobordism_check_at(braid, l)
}

/// Runs the positive-braid argument for a caller-chosen `l`.
pub fn positive_braid_cobordism_check_with_l(
    braid: &BraidWord,
    l: u64,
) -> Result<PositiveCobordismCheck, BoundsError> {
    check_positive_knot(braid)?;
    let (plus, _) = braid.crossing_counts();
    let min = plus.max(1) as u64;
    if l < min || l.gcd(&(braid.strands() as u64)) != 1 {
        return Err(BoundsError::InadmissibleL {
            l,
            min,
            strands: braid.strands(),
        });
    }
    cobordism_check_at(braid, l)
}

fn cobordism_check_at(braid: &BraidWord, l: u64) -> Result<PositiveCobordismCheck, BoundsError> {
    let (plus, _) = braid.crossing_counts();
    let n = braid.strands();
    let inadmissible = || BoundsError::InadmissibleL {
        l,
        min: plus.max(1) as u64,
        strands: n,
    };
    let p = u32::try_from(n).map_err(|_| inadmissible())?;
    let q = u32::try_from(l).map_err(|_| inadmissible())?;
    let torus = TorusKnotInvariants::new(p, q)?;
    let (n, l_signed) = (n as i64, l as i64);
    let chi = plus + l_signed - l_signed * n;
    Ok(PositiveCobordismCheck {
        l,
        chi,
        torus_s_sharp: torus.s_sharp,
        recovered_bound: torus.s_sharp + chi,
    })
}

/// The bound for `b` assembled from its positive resolution and crossing changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionDecomposition {
    pub positive_bound: i64,
    pub switches: u64,
    pub final_bound: i64,
}

pub fn resolution_bound_decomposition(braid: &BraidWord) -> Result<ResolutionDecomposition, BoundsError> {
    let components = braid.component_count();
    if components != 1 {
        return Err(BoundsError::NotAKnot { components });
    }
    let (resolved, switches) = braid.positive_resolution();
    // positive braid bound: s#(β⁺) ≥ x₊(β⁺) − n
    let positive_bound = resolved.self_linking();
    Ok(ResolutionDecomposition {
        positive_bound,
        switches,
        final_bound: positive_bound - 2 * switches as i64,
    })
}

/// A known value of s# or of 2s̃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TildeKnown {
    SSharp(i64),
    STildeTimesTwo(i64),
}

/// Interval for the other quantity: `2s̃` from s#, or s# from `2s̃`.
pub fn s_tilde_relations(known: TildeKnown) -> Interval {
    let centre = match known {
        TildeKnown::SSharp(v) | TildeKnown::STildeTimesTwo(v) => v,
    };
    Interval {
        lo: centre - 1,
        hi: centre + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_braid, torus_braid};
    use crate::front::parse_front;

    fn lower(report: &BoundReport, target: Invariant) -> i64 {
        report.best_lower(target).unwrap().value()
    }

    #[test]
    fn torus_values() {
        let t = torus_knot_invariants(2, 3).unwrap();
        assert_eq!((t.s_sharp, t.s, t.g4, t.sl_max), (1, 2, 1, 1));
        let t = torus_knot_invariants(3, 5).unwrap();
        assert_eq!((t.s_sharp, t.s, t.g4, t.sl_max), (7, 8, 4, 7));
        for q in 1..10 {
            let t = torus_knot_invariants(1, q).unwrap();
            assert_eq!((t.s_sharp, t.s, t.g4, t.sl_max), (-1, 0, 0, -1));
        }
        assert_eq!(
            torus_knot_invariants(5, 3).unwrap().s_sharp,
            torus_knot_invariants(3, 5).unwrap().s_sharp
        );
    }

    #[test]
    fn torus_errors() {
        assert_eq!(torus_knot_invariants(2, 4), Err(BoundsError::NotCoprime { p: 2, q: 4 }));
        assert_eq!(torus_knot_invariants(0, 3), Err(BoundsError::NonPositive { p: 0, q: 3 }));
    }

    #[test]
    fn torus_report_is_exact() {
        let r = torus_knot_invariants(3, 5).unwrap().report();
        for target in [Invariant::SSharp, Invariant::S, Invariant::G4, Invariant::SlMax] {
            assert_eq!(
                r.best_lower(target).unwrap().value(),
                r.best_upper(target).unwrap().value()
            );
        }
    }

    #[test]
    fn braid_bounds_torus_3_5() {
        let r = sharp_bound_from_braid(&torus_braid(3, 5).unwrap()).unwrap();
        assert_eq!(lower(&r, Invariant::SSharp), 7);
        assert_eq!(lower(&r, Invariant::G4), 4);
        assert_eq!(lower(&r, Invariant::S), 8);
        assert_eq!(lower(&r, Invariant::SlMax), 7);
        assert_eq!(lower(&r, Invariant::STilde), 8);
    }

    #[test]
    fn braid_bounds_unknot() {
        let r = sharp_bound_from_braid(&BraidWord::identity(1).unwrap()).unwrap();
        assert_eq!(lower(&r, Invariant::SSharp), -1);
        assert_eq!(lower(&r, Invariant::G4), 0);
        assert_eq!(lower(&r, Invariant::S), 0);
    }

    #[test]
    fn braid_bounds_need_a_knot() {
        // closes to a two-component link, so no knot bounds apply
        let b = parse_braid("1 1 2 2 -1", Some(3)).unwrap();
        assert_eq!(b.self_linking(), 0);
        assert_eq!(
            sharp_bound_from_braid(&b),
            Err(BoundsError::NotAKnot { components: 2 })
        );
        assert!(resolution_bound_decomposition(&b).is_err());
    }

    #[test]
    fn genus_branches() {
        // the branches differ only for even sl, which braid closures of knots never have
        assert_eq!((genus_from_sharp_branch(0), genus_from_slice_bennequin(0)), (0, 1));
        assert_eq!((genus_from_sharp_branch(1), genus_from_slice_bennequin(1)), (1, 1));
        assert_eq!((genus_from_sharp_branch(-1), genus_from_slice_bennequin(-1)), (0, 0));
        assert_eq!((genus_from_sharp_branch(-4), genus_from_slice_bennequin(-4)), (-2, -1));
        assert_eq!((genus_from_sharp_branch(7), genus_from_slice_bennequin(7)), (4, 4));
    }

    #[test]
    fn both_genus_routes_are_reported() {
        let r = sharp_bound_from_braid(&torus_braid(2, 5).unwrap()).unwrap();
        let genus: Vec<_> = r.bounds().iter().filter(|b| b.target == Invariant::G4).collect();
        assert_eq!(genus.len(), 2);
        assert!(genus[0].cites(Inequality::GenusBound));
        assert!(genus[1].cites(Inequality::SliceBennequin));
        for bound in r.bounds() {
            assert_eq!(bound.derivation[0].inequality, Inequality::BennequinFormula);
        }
    }

    #[test]
    fn front_bounds() {
        let trefoil = parse_front("L1 L3 X2 X2 X2 R1 R1").unwrap().orient().unwrap();
        let r = sharp_bound_from_front(&trefoil);
        assert_eq!(lower(&r, Invariant::SSharp), 1);
        assert_eq!(lower(&r, Invariant::SSharp), torus_knot_invariants(2, 3).unwrap().s_sharp);
        assert!(r.bounds().iter().all(|b| b.cites(Inequality::LegendrianPushoff)));

        let saucer = parse_front("L1 R1").unwrap().orient().unwrap();
        assert_eq!(lower(&sharp_bound_from_front(&saucer), Invariant::SSharp), -1);

        let fish = parse_front("L1 X1 R1").unwrap().orient().unwrap();
        assert_eq!(lower(&sharp_bound_from_front(&fish), Invariant::SSharp), -1);
        let values = |r: &BoundReport| r.bounds().iter().map(Bound::value).collect::<Vec<_>>();
        assert_eq!(
            values(&sharp_bound_from_front(&fish.reverse_orientation())),
            values(&sharp_bound_from_front(&fish))
        );
    }

    #[test]
    fn cobordism_examples() {
        let same = CobordismData::new(0, 1, 1).unwrap();
        assert_eq!(cobordism_propagate(1, &same).value(), 1);
        let genus_one = CobordismData::crossing_change(1).unwrap();
        assert_eq!(cobordism_propagate(7, &genus_one).value(), 9);
        assert_eq!(CobordismData::new(0, 0, 1), Err(BoundsError::EmptyLink));
        let b = cobordism_propagate(1, &genus_one);
        assert_eq!(b.direction, BoundDirection::Upper);
        assert!(b.derivation[0].detail.contains("caller asserts"));
    }

    #[test]
    fn genus_one_cobordism_both_ways_gives_crossing_change_width() {
        let cob = CobordismData::crossing_change(1).unwrap();
        for known in -5..=5 {
            // s#(L+) ≤ s#(L-) + 2 and s#(L-) ≤ s#(L+) + 2
            let upper = cobordism_propagate(known, &cob).value();
            let lower = known - (cobordism_propagate(0, &cob).value());
            let interval = crossing_change_interval(known, 1);
            assert_eq!((lower, upper), (interval.lo, interval.hi));
            assert_eq!(interval.width(), 4);
        }
    }

    #[test]
    fn crossing_change_intervals() {
        assert_eq!(crossing_change_interval(1, 0), Interval { lo: 1, hi: 1 });
        assert_eq!(crossing_change_interval(1, 1), Interval { lo: -1, hi: 3 });
        assert_eq!(crossing_change_interval(7, 3), Interval { lo: 1, hi: 13 });
    }

    #[test]
    fn positive_cobordism_examples() {
        let c = positive_braid_cobordism_check(&torus_braid(2, 3).unwrap()).unwrap();
        assert_eq!(
            c,
            PositiveCobordismCheck {
                l: 3,
                chi: 0,
                torus_s_sharp: 1,
                recovered_bound: 1
            }
        );
        let c = positive_braid_cobordism_check(&BraidWord::identity(1).unwrap()).unwrap();
        assert_eq!(
            c,
            PositiveCobordismCheck {
                l: 1,
                chi: 0,
                torus_s_sharp: -1,
                recovered_bound: -1
            }
        );
        // x₊ = 4 on 2 strands: l skips 4 to reach 5
        let b = parse_braid("1 1 1 1", Some(2)).unwrap();
        assert!(!b.is_knot_closure());
        let b = parse_braid("1 1 1 1 1", Some(2)).unwrap();
        assert_eq!(positive_braid_cobordism_check(&b).unwrap().l, 5);
        let b = parse_braid("1 2 1 2", Some(3)).unwrap();
        assert_eq!(positive_braid_cobordism_check(&b).unwrap().l, 4);
    }

    #[test]
    fn positive_cobordism_errors() {
        let b = parse_braid("1 -1 1", Some(2)).unwrap();
        assert_eq!(positive_braid_cobordism_check(&b), Err(BoundsError::NotPositive { negative: 1 }));
        let b = BraidWord::identity(2).unwrap();
        assert_eq!(positive_braid_cobordism_check(&b), Err(BoundsError::NotAKnot { components: 2 }));
        let t = torus_braid(2, 3).unwrap();
        assert!(matches!(
            positive_braid_cobordism_check_with_l(&t, 2),
            Err(BoundsError::InadmissibleL { .. })
        ));
        assert!(matches!(
            positive_braid_cobordism_check_with_l(&t, 4),
            Err(BoundsError::InadmissibleL { .. })
        ));
        assert_eq!(positive_braid_cobordism_check_with_l(&t, 7).unwrap().recovered_bound, 1);
    }

    #[test]
    fn admissible_l_sequence() {
        assert_eq!(admissible_l(6, 3).take(3).collect::<Vec<_>>(), vec![5, 7, 11]);
        assert_eq!(admissible_l(1, 0).take(2).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn resolution_examples() {
        let b = parse_braid("-1 -1 -1", Some(2)).unwrap();
        assert_eq!(
            resolution_bound_decomposition(&b).unwrap(),
            ResolutionDecomposition {
                positive_bound: 1,
                switches: 3,
                final_bound: -5
            }
        );
        let t = torus_braid(3, 4).unwrap();
        let d = resolution_bound_decomposition(&t).unwrap();
        assert_eq!(d.switches, 0);
        assert_eq!(d.final_bound, d.positive_bound);
        // 3-strand knot with one negative crossing
        let b = parse_braid("1 1 2 -1", Some(3)).unwrap();
        assert!(b.is_knot_closure());
        let d = resolution_bound_decomposition(&b).unwrap();
        assert_eq!((d.positive_bound, d.switches, d.final_bound), (1, 1, -1));
        assert_eq!(d.final_bound, b.self_linking());
    }

    #[test]
    fn tilde_relations() {
        assert_eq!(s_tilde_relations(TildeKnown::SSharp(1)), Interval { lo: 0, hi: 2 });
        assert_eq!(s_tilde_relations(TildeKnown::STildeTimesTwo(0)), Interval { lo: -1, hi: 1 });
        assert_eq!(s_tilde_relations(TildeKnown::SSharp(7)), Interval { lo: 6, hi: 8 });
    }
}
