//! Braid words in the Artin generators and their closures.
//!
//! A letter `+k` is the positive generator `σ_k` and `-k` is `σ_k⁻¹`; generators are
//! indexed from 1 so that `k` ranges over `1..=strands-1`. The closure is the standard
//! trace closure, joining the top of strand position `i` to the bottom of position `i`.

use std::fmt;

use thiserror::Error;

/// Default maximum number of letters accepted by the parser.
pub const DEFAULT_MAX_LETTERS: usize = 1_000_000;
/// Default maximum strand count accepted by the parser.
pub const DEFAULT_MAX_STRANDS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("token {index} ({token:?}) at byte {offset} is not an integer")]
    NotAnInteger {
        index: usize,
        offset: usize,
        token: String,
    },
    #[error("token {index} at byte {offset} is zero; generators are indexed from 1")]
    ZeroLetter { index: usize, offset: usize },
    #[error("token {index} at byte {offset} uses generator {letter} but a {strands}-strand braid only has generators 1..={max}", max = .strands.saturating_sub(1))]
    GeneratorOutOfRange {
        index: usize,
        offset: usize,
        letter: i64,
        strands: usize,
    },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("{strands} strands exceeds the limit of {max}")]
    TooManyStrands { strands: usize, max: usize },
    #[error("word has more than {max} letters")]
    TooLong { max: usize },
    #[error("crossing position {index} is outside 1..={len}")]
    PositionOutOfRange { index: usize, len: usize },
    #[error("generator index {k} is outside 1..={max}", max = .strands.saturating_sub(1))]
    InvalidGenerator { k: usize, strands: usize },
    #[error("torus braid parameters must be positive, got ({p}, {q})")]
    NonPositiveTorusParameter { p: u32, q: u32 },
}

/// Resource limits enforced while parsing or generating braid words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_letters: usize,
    pub max_strands: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_letters: DEFAULT_MAX_LETTERS,
            max_strands: DEFAULT_MAX_STRANDS,
        }
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a braid word, validating every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        Self::with_limits(strands, letters, &Limits::default())
    }

    pub fn with_limits(strands: usize, letters: Vec<i32>, limits: &Limits) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if strands > limits.max_strands {
            return Err(BraidError::TooManyStrands {
                strands,
                max: limits.max_strands,
            });
        }
        if letters.len() > limits.max_letters {
            return Err(BraidError::TooLong {
                max: limits.max_letters,
            });
        }
        for (index, &letter) in letters.iter().enumerate() {
            if letter == 0 {
                return Err(BraidError::ZeroLetter { index, offset: 0 });
            }
            if letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange {
                    index,
                    offset: 0,
                    letter: letter.into(),
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands; its closure is the unlink.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Numbers of positive and negative crossings, `(x₊, x₋)`.
    pub fn crossing_counts(&self) -> (i64, i64) {
        let positive = self.letters.iter().filter(|&&k| k > 0).count() as i64;
        (positive, self.letters.len() as i64 - positive)
    }

    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        let (plus, minus) = self.crossing_counts();
        plus - minus
    }

    /// Bennequin's formula for the transverse closure: `x₊ − x₋ − n`.
    pub fn self_linking(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    /// Permutation of strand positions induced by the word, ignoring crossing signs.
    ///
    /// `images[i-1]` is the bottom position reached by the strand that starts at top
    /// position `i`.
    pub fn closure_permutation(&self) -> Permutation {
        // occupant[pos] = starting position of the strand currently at pos
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize - 1;
            occupant.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &start) in occupant.iter().enumerate() {
            images[start] = pos + 1;
        }
        Permutation { images }
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        self.closure_permutation().cycle_count()
    }

    pub fn is_knot_closure(&self) -> bool {
        self.component_count() == 1
    }

    /// Replaces every negative letter by its positive counterpart and reports how many
    /// crossings were switched.
    pub fn positive_resolution(&self) -> (BraidWord, u64) {
        let switches = self.letters.iter().filter(|&&k| k < 0).count() as u64;
        let letters = self.letters.iter().map(|k| k.abs()).collect();
        (
            BraidWord {
                strands: self.strands,
                letters,
            },
            switches,
        )
    }

    /// Switches the crossing at 1-based `position`.
    pub fn crossing_change(&self, position: usize) -> Result<BraidWord, BraidError> {
        if position == 0 || position > self.letters.len() {
            return Err(BraidError::PositionOutOfRange {
                index: position,
                len: self.letters.len(),
            });
        }
        let mut letters = self.letters.clone();
        letters[position - 1] = -letters[position - 1];
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Conjugates by `σ_k`: the word becomes `σ_k⁻¹ · w · σ_k`.
    pub fn conjugate(&self, k: usize) -> Result<BraidWord, BraidError> {
        if k == 0 || k >= self.strands {
            return Err(BraidError::InvalidGenerator {
                k,
                strands: self.strands,
            });
        }
        let k = k as i32;
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(-k);
        letters.extend_from_slice(&self.letters);
        letters.push(k);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Markov stabilization onto `n + 1` strands, appending `σ_n` or `σ_n⁻¹`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|k| -k).collect(),
        }
    }
}

/// Renders the canonical text form: letters separated by single spaces.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated nonzero integers. Without an explicit strand count the
/// braid gets `max|k| + 1` strands (one strand for the empty word).
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, BraidError> {
    parse_braid_with_limits(text, strands, &Limits::default())
}

pub fn parse_braid_with_limits(
    text: &str,
    strands: Option<usize>,
    limits: &Limits,
) -> Result<BraidWord, BraidError> {
    if let Some(n) = strands {
        if n == 0 {
            return Err(BraidError::NoStrands);
        }
        if n > limits.max_strands {
            return Err(BraidError::TooManyStrands {
                strands: n,
                max: limits.max_strands,
            });
        }
    }

    let mut letters = Vec::new();
    let mut max_abs: u64 = 0;
    for (index, (offset, token)) in tokens(text).enumerate() {
        if letters.len() == limits.max_letters {
            return Err(BraidError::TooLong {
                max: limits.max_letters,
            });
        }
        let value: i64 = token.parse().map_err(|_| BraidError::NotAnInteger {
            index,
            offset,
            token: token.to_string(),
        })?;
        if value == 0 {
            return Err(BraidError::ZeroLetter { index, offset });
        }
        match strands {
            Some(n) if value.unsigned_abs() >= n as u64 => {
                return Err(BraidError::GeneratorOutOfRange {
                    index,
                    offset,
                    letter: value,
                    strands: n,
                });
            }
            None if value.unsigned_abs() >= limits.max_strands as u64 => {
                return Err(BraidError::TooManyStrands {
                    strands: value.unsigned_abs().saturating_add(1) as usize,
                    max: limits.max_strands,
                });
            }
            _ => {}
        }
        max_abs = max_abs.max(value.unsigned_abs());
        let letter = i32::try_from(value).map_err(|_| BraidError::TooManyStrands {
            strands: value.unsigned_abs().saturating_add(1) as usize,
            max: i32::MAX as usize,
        })?;
        letters.push(letter);
    }

    let strands = strands.unwrap_or(max_abs as usize + 1);
    Ok(BraidWord { strands, letters })
}

/// Whitespace-separated tokens paired with their byte offsets.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

/// Braid word `(σ₁σ₂⋯σ_{p−1})^q` on `p` strands, whose closure is the torus link `T(p, q)`.
pub fn torus_braid(p: u32, q: u32) -> Result<BraidWord, BraidError> {
    if p == 0 || q == 0 {
        return Err(BraidError::NonPositiveTorusParameter { p, q });
    }
    let length = (p as usize - 1) * q as usize;
    if length > DEFAULT_MAX_LETTERS {
        return Err(BraidError::TooLong {
            max: DEFAULT_MAX_LETTERS,
        });
    }
    let strands = p as usize;
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    BraidWord::new(strands, letters)
}

/// A permutation of `{1, …, n}` stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images, returning `None` unless they form a
    /// bijection on `{1, …, n}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &image in &images {
            if image == 0 || image > n || seen[image - 1] {
                return None;
            }
            seen[image - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 1..=self.images.len() {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i - 1] {
                visited[i - 1] = true;
                cycle.push(i);
                i = self.images[i - 1];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}
