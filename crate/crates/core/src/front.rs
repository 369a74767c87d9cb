//! Legendrian front diagrams encoded as a left-to-right sequence of slice events.
//!
//! Between events the front is a stack of strands numbered 1, 2, … from top to bottom.
//! `L<i>` opens a left cusp whose two new strands occupy positions `i` and `i+1`,
//! `R<i>` closes strands `i` and `i+1` with a right cusp, and `X<i>` crosses strands
//! `i` and `i+1`. Over/under information is not recorded since in a front it is
//! determined by the slopes of the two strands.
//!
//! Internally every event boundary cuts the strands into arcs. An arc runs from the
//! event that created it (a left cusp or the outgoing side of a crossing) to the event
//! that consumes it (a right cusp or the incoming side of a crossing).

use std::fmt;

use thiserror::Error;

use crate::braid::tokens;

pub const DEFAULT_MAX_EVENTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("token {index} ({token:?}) at byte {offset} is not of the form L<i>, R<i> or X<i>")]
    MalformedToken {
        index: usize,
        offset: usize,
        token: String,
    },
    #[error("event {index} ({event}) is out of range with {strands} strands present")]
    PositionOutOfRange {
        index: usize,
        event: SliceEvent,
        strands: usize,
    },
    #[error("front ends with {open} open strands ({left} left cusps, {right} right cusps)")]
    Unclosed {
        open: usize,
        left: usize,
        right: usize,
    },
    #[error("front has more than {max} events")]
    TooLong { max: usize },
    #[error("front has {components} components; a single-component front is required")]
    NotAKnot { components: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceEvent {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
}

impl fmt::Display for SliceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceEvent::LeftCusp(i) => write!(f, "L{i}"),
            SliceEvent::RightCusp(i) => write!(f, "R{i}"),
            SliceEvent::Crossing(i) => write!(f, "X{i}"),
        }
    }
}

/// Horizontal direction of travel along an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Rightward => 1,
            Direction::Leftward => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Junction {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Arc {
    start: Junction,
    end: Junction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cusp {
    upper: usize,
    lower: usize,
}

impl Cusp {
    fn partner(&self, arc: usize) -> usize {
        if arc == self.upper {
            self.lower
        } else {
            self.upper
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Crossing {
    upper_in: usize,
    lower_in: usize,
    upper_out: usize,
    lower_out: usize,
}

/// A validated front together with its arc connectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDiagram {
    events: Vec<SliceEvent>,
    arcs: Vec<Arc>,
    left_cusps: Vec<Cusp>,
    right_cusps: Vec<Cusp>,
    crossings: Vec<Crossing>,
}

const UNSET: Junction = Junction::Crossing(usize::MAX);

impl FrontDiagram {
    /// Replays the events from an empty slice, rejecting any event whose position is
    /// out of range and any front that does not close up.
    pub fn new(events: Vec<SliceEvent>) -> Result<Self, FrontError> {
        if events.len() > DEFAULT_MAX_EVENTS {
            return Err(FrontError::TooLong {
                max: DEFAULT_MAX_EVENTS,
            });
        }
        let mut arcs: Vec<Arc> = Vec::new();
        let mut left_cusps = Vec::new();
        let mut right_cusps = Vec::new();
        let mut crossings = Vec::new();
        // arc ids currently occupying each strand position, top to bottom
        let mut slice: Vec<usize> = Vec::new();

        for (index, &event) in events.iter().enumerate() {
            let out_of_range = || FrontError::PositionOutOfRange {
                index,
                event,
                strands: slice.len(),
            };
            match event {
                SliceEvent::LeftCusp(i) => {
                    if i == 0 || i > slice.len() + 1 {
                        return Err(out_of_range());
                    }
                    let id = left_cusps.len();
                    let upper = arcs.len();
                    let lower = upper + 1;
                    arcs.push(Arc {
                        start: Junction::LeftCusp(id),
                        end: UNSET,
                    });
                    arcs.push(Arc {
                        start: Junction::LeftCusp(id),
                        end: UNSET,
                    });
                    left_cusps.push(Cusp { upper, lower });
                    slice.splice(i - 1..i - 1, [upper, lower]);
                }
                SliceEvent::RightCusp(i) => {
                    if i == 0 || i >= slice.len() {
                        return Err(out_of_range());
                    }
                    let id = right_cusps.len();
                    let (upper, lower) = (slice[i - 1], slice[i]);
                    arcs[upper].end = Junction::RightCusp(id);
                    arcs[lower].end = Junction::RightCusp(id);
                    right_cusps.push(Cusp { upper, lower });
                    slice.drain(i - 1..=i);
                }
                SliceEvent::Crossing(i) => {
                    if i == 0 || i >= slice.len() {
                        return Err(out_of_range());
                    }
                    let id = crossings.len();
                    let (upper_in, lower_in) = (slice[i - 1], slice[i]);
                    arcs[upper_in].end = Junction::Crossing(id);
                    arcs[lower_in].end = Junction::Crossing(id);
                    let upper_out = arcs.len();
                    let lower_out = upper_out + 1;
                    arcs.push(Arc {
                        start: Junction::Crossing(id),
                        end: UNSET,
                    });
                    arcs.push(Arc {
                        start: Junction::Crossing(id),
                        end: UNSET,
                    });
                    crossings.push(Crossing {
                        upper_in,
                        lower_in,
                        upper_out,
                        lower_out,
                    });
                    slice[i - 1] = upper_out;
                    slice[i] = lower_out;
                }
            }
        }

        if !slice.is_empty() {
            return Err(FrontError::Unclosed {
                open: slice.len(),
                left: left_cusps.len(),
                right: right_cusps.len(),
            });
        }

        Ok(FrontDiagram {
            events,
            arcs,
            left_cusps,
            right_cusps,
            crossings,
        })
    }

    pub fn events(&self) -> &[SliceEvent] {
        &self.events
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn right_cusp_count(&self) -> usize {
        self.right_cusps.len()
    }

    pub fn left_cusp_count(&self) -> usize {
        self.left_cusps.len()
    }

    /// Follows the strand from `arc` moving in direction `dir` to the next arc.
    fn step(&self, arc: usize, dir: Direction) -> (usize, Direction) {
        match dir {
            Direction::Rightward => match self.arcs[arc].end {
                Junction::Crossing(c) => {
                    let x = &self.crossings[c];
                    let next = if arc == x.upper_in { x.lower_out } else { x.upper_out };
                    (next, Direction::Rightward)
                }
                Junction::RightCusp(c) => (self.right_cusps[c].partner(arc), Direction::Leftward),
                Junction::LeftCusp(_) => unreachable!("an arc never ends at a left cusp"),
            },
            Direction::Leftward => match self.arcs[arc].start {
                Junction::Crossing(c) => {
                    let x = &self.crossings[c];
                    let next = if arc == x.upper_out { x.lower_in } else { x.upper_in };
                    (next, Direction::Leftward)
                }
                Junction::LeftCusp(c) => (self.left_cusps[c].partner(arc), Direction::Rightward),
                Junction::RightCusp(_) => unreachable!("an arc never starts at a right cusp"),
            },
        }
    }

    /// Walks the cycle through `start`, recording the direction of every arc visited.
    fn trace(&self, start: usize, dir: Direction, directions: &mut [Option<Direction>]) {
        let (mut arc, mut dir) = (start, dir);
        while directions[arc].is_none() {
            directions[arc] = Some(dir);
            (arc, dir) = self.step(arc, dir);
        }
    }

    /// Number of components of the Legendrian link.
    pub fn component_count(&self) -> usize {
        let mut directions = vec![None; self.arcs.len()];
        let mut components = 0;
        for arc in 0..self.arcs.len() {
            if directions[arc].is_none() {
                components += 1;
                self.trace(arc, Direction::Rightward, &mut directions);
            }
        }
        components
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Orients a knot front by traversing from the upper strand of the first left cusp,
    /// heading right.
    pub fn orient(&self) -> Result<OrientedFront, FrontError> {
        let components = self.component_count();
        if components != 1 {
            return Err(FrontError::NotAKnot { components });
        }
        let mut directions = vec![None; self.arcs.len()];
        self.trace(self.left_cusps[0].upper, Direction::Rightward, &mut directions);
        Ok(OrientedFront {
            front: self.clone(),
            directions: directions.into_iter().map(|d| d.expect("single cycle")).collect(),
        })
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, event) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{event}")?;
        }
        Ok(())
    }
}

pub fn parse_front(text: &str) -> Result<FrontDiagram, FrontError> {
    let mut events = Vec::new();
    for (index, (offset, token)) in tokens(text).enumerate() {
        if events.len() == DEFAULT_MAX_EVENTS {
            return Err(FrontError::TooLong {
                max: DEFAULT_MAX_EVENTS,
            });
        }
        let malformed = || FrontError::MalformedToken {
            index,
            offset,
            token: token.to_string(),
        };
        let (kind, digits) = token.split_at(token.chars().next().map_or(0, char::len_utf8));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let position: usize = digits.parse().map_err(|_| malformed())?;
        if position == 0 {
            return Err(malformed());
        }
        let event = match kind {
            "L" => SliceEvent::LeftCusp(position),
            "R" => SliceEvent::RightCusp(position),
            "X" => SliceEvent::Crossing(position),
            _ => return Err(malformed()),
        };
        events.push(event);
    }
    FrontDiagram::new(events)
}

/// Whether the orientation carries the traversal from the upper to the lower branch
/// of a cusp (down) or the other way (up).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspOrientation {
    Down,
    Up,
}

/// A knot front with a direction assigned to every arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedFront {
    front: FrontDiagram,
    directions: Vec<Direction>,
}

/// Which transverse push-off of a Legendrian knot to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pushoff {
    Positive,
    Negative,
}

impl OrientedFront {
    pub fn front(&self) -> &FrontDiagram {
        &self.front
    }

    /// Direction of travel along each arc, indexed in creation order.
    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn reverse_orientation(&self) -> OrientedFront {
        OrientedFront {
            front: self.front.clone(),
            directions: self.directions.iter().map(|d| d.reversed()).collect(),
        }
    }

    /// Sign of each crossing in event order: the product of the directions of the two
    /// strands entering it from the left.
    pub fn crossing_signs(&self) -> Vec<i64> {
        self.front
            .crossings
            .iter()
            .map(|x| self.directions[x.upper_in].sign() * self.directions[x.lower_in].sign())
            .collect()
    }

    /// Incoming direction pairs `(upper, lower)` at each crossing.
    pub fn crossing_directions(&self) -> Vec<(Direction, Direction)> {
        self.front
            .crossings
            .iter()
            .map(|x| (self.directions[x.upper_in], self.directions[x.lower_in]))
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().sum()
    }

    pub fn left_cusp_orientations(&self) -> Vec<CuspOrientation> {
        // traversal enters a left cusp moving left, so a leftward upper branch means down
        self.front
            .left_cusps
            .iter()
            .map(|c| match self.directions[c.upper] {
                Direction::Leftward => CuspOrientation::Down,
                Direction::Rightward => CuspOrientation::Up,
            })
            .collect()
    }

    pub fn right_cusp_orientations(&self) -> Vec<CuspOrientation> {
        self.front
            .right_cusps
            .iter()
            .map(|c| match self.directions[c.upper] {
                Direction::Rightward => CuspOrientation::Down,
                Direction::Leftward => CuspOrientation::Up,
            })
            .collect()
    }

    /// Writhe minus the number of right cusps.
    pub fn thurston_bennequin(&self) -> i64 {
        self.writhe() - self.front.right_cusp_count() as i64
    }

    /// Half the difference between down and up cusps.
    pub fn rotation_number(&self) -> i64 {
        let (mut down, mut up) = (0i64, 0i64);
        for o in self
            .left_cusp_orientations()
            .into_iter()
            .chain(self.right_cusp_orientations())
        {
            match o {
                CuspOrientation::Down => down += 1,
                CuspOrientation::Up => up += 1,
            }
        }
        debug_assert_eq!((down - up) % 2, 0);
        (down - up) / 2
    }

    /// Self-linking number of a transverse push-off: `tb ∓ rot`.
    pub fn transverse_pushoff_sl(&self, pushoff: Pushoff) -> i64 {
        let (tb, rot) = (self.thurston_bennequin(), self.rotation_number());
        match pushoff {
            Pushoff::Positive => tb - rot,
            Pushoff::Negative => tb + rot,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAUCER: &str = "L1 R1";
    const FISH: &str = "L1 X1 R1";
    const TREFOIL: &str = "L1 L3 X2 X2 X2 R1 R1";

    fn oriented(text: &str) -> OrientedFront {
        parse_front(text).unwrap().orient().unwrap()
    }

    #[test]
    fn parses_minimal_fronts() {
        for text in [SAUCER, FISH, TREFOIL] {
            let front = parse_front(text).unwrap();
            assert_eq!(front.to_string(), text);
            assert!(front.is_knot());
        }
        assert_eq!(parse_front("").unwrap().component_count(), 0);
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        for bad in ["L", "Q1", "L0", "l1", "L-1", "L1x", "L+1", "X"] {
            assert!(
                matches!(parse_front(bad), Err(FrontError::MalformedToken { .. })),
                "{bad}"
            );
        }
        assert_eq!(
            parse_front("L1 R1 Z2"),
            Err(FrontError::MalformedToken {
                index: 2,
                offset: 6,
                token: "Z2".into()
            })
        );
    }

    #[test]
    fn parse_rejects_out_of_range_positions() {
        assert_eq!(
            parse_front("L2 R1"),
            Err(FrontError::PositionOutOfRange {
                index: 0,
                event: SliceEvent::LeftCusp(2),
                strands: 0
            })
        );
        assert!(matches!(parse_front("L1 X2 R1"), Err(FrontError::PositionOutOfRange { index: 1, .. })));
        assert!(matches!(parse_front("L1 R2"), Err(FrontError::PositionOutOfRange { .. })));
        assert!(matches!(parse_front("R1"), Err(FrontError::PositionOutOfRange { .. })));
    }

    #[test]
    fn parse_rejects_unclosed_fronts() {
        assert_eq!(
            parse_front("L1"),
            Err(FrontError::Unclosed {
                open: 2,
                left: 1,
                right: 0
            })
        );
        assert_eq!(
            parse_front("L1 L1 R1"),
            Err(FrontError::Unclosed {
                open: 2,
                left: 2,
                right: 1
            })
        );
    }

    #[test]
    fn nested_cusps_inside_a_saucer_form_a_link() {
        // inner strands inserted between the outer pair never meet it
        let front = parse_front("L1 L2 X2 X2 X2 R2 R1").unwrap();
        assert_eq!(front.component_count(), 2);
        assert_eq!(front.orient(), Err(FrontError::NotAKnot { components: 2 }));
        assert_eq!(parse_front("L1 R1 L1 R1").unwrap().component_count(), 2);
    }

    #[test]
    fn saucer_orientation() {
        let of = oriented(SAUCER);
        assert_eq!(of.directions(), [Direction::Rightward, Direction::Leftward]);
        let rev = of.reverse_orientation();
        assert_eq!(rev.directions(), [Direction::Leftward, Direction::Rightward]);
    }

    #[test]
    fn trefoil_crossings_are_same_direction() {
        let of = oriented(TREFOIL);
        for (u, v) in of.crossing_directions() {
            assert_eq!(u, v);
        }
        assert_eq!(of.crossing_signs(), vec![1, 1, 1]);
    }

    #[test]
    fn anchor_values() {
        let saucer = oriented(SAUCER);
        assert_eq!((saucer.thurston_bennequin(), saucer.rotation_number()), (-1, 0));

        let fish = oriented(FISH);
        assert_eq!(fish.crossing_signs(), vec![-1]);
        assert_eq!(fish.thurston_bennequin(), -2);
        assert_eq!(fish.rotation_number().abs(), 1);

        let trefoil = oriented(TREFOIL);
        assert_eq!((trefoil.thurston_bennequin(), trefoil.rotation_number()), (1, 0));
    }

    #[test]
    fn fish_cusps_point_the_same_way() {
        let fish = oriented(FISH);
        assert_eq!(fish.left_cusp_orientations(), vec![CuspOrientation::Up]);
        assert_eq!(fish.right_cusp_orientations(), vec![CuspOrientation::Up]);
        assert_eq!(fish.rotation_number(), -1);
        assert_eq!(fish.reverse_orientation().rotation_number(), 1);
    }

    #[test]
    fn pushoffs() {
        let saucer = oriented(SAUCER);
        assert_eq!(saucer.transverse_pushoff_sl(Pushoff::Positive), -1);
        assert_eq!(saucer.transverse_pushoff_sl(Pushoff::Negative), -1);

        let fish = oriented(FISH).reverse_orientation();
        assert_eq!(fish.rotation_number(), 1);
        assert_eq!(fish.transverse_pushoff_sl(Pushoff::Positive), -3);
        assert_eq!(fish.transverse_pushoff_sl(Pushoff::Negative), -1);
    }

    #[test]
    fn triple_twist_curl() {
        // one strand rightward, the other leftward at every crossing
        let of = oriented("L1 X1 X1 X1 R1");
        assert_eq!(of.crossing_signs(), vec![-1, -1, -1]);
        assert_eq!(of.thurston_bennequin(), -4);
        assert_eq!(of.rotation_number(), -1);
    }
}
