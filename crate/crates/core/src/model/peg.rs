use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ModelError;

/// One of the three pegs, numbered 1..=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Peg(u8);

impl Peg {
    pub const ONE: Peg = Peg(1);
    pub const TWO: Peg = Peg(2);
    pub const THREE: Peg = Peg(3);
    pub const ALL: [Peg; 3] = [Peg::ONE, Peg::TWO, Peg::THREE];

    pub fn new(number: u8) -> Result<Peg, ModelError> {
        match number {
            1..=3 => Ok(Peg(number)),
            _ => Err(ModelError::InvalidPeg(number as i64)),
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    /// Zero-based index into per-peg arrays.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn from_index(index: usize) -> Peg {
        assert!(index < 3, "peg index out of range: {index}");
        Peg(index as u8 + 1)
    }

    /// The remaining peg, `6 - a - b`. Panics when `a == b`.
    pub fn third(a: Peg, b: Peg) -> Peg {
        assert_ne!(a, b, "third peg of identical pegs");
        Peg(6 - a.0 - b.0)
    }
}

impl TryFrom<u8> for Peg {
    type Error = ModelError;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        Peg::new(value)
    }
}

impl From<Peg> for u8 {
    fn from(peg: Peg) -> u8 {
        peg.0
    }
}

impl fmt::Display for Peg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Peg {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value: i64 = s
            .trim()
            .parse()
            .map_err(|_| ModelError::Parse(format!("not a peg number: {s:?}")))?;
        if (1..=3).contains(&value) {
            Ok(Peg(value as u8))
        } else {
            Err(ModelError::InvalidPeg(value))
        }
    }
}

/// Move of the topmost disc of `from` onto `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Move {
    pub from: Peg,
    pub to: Peg,
}

impl Move {
    pub fn new(from: Peg, to: Peg) -> Result<Move, ModelError> {
        if from == to {
            return Err(ModelError::SelfMove(from));
        }
        Ok(Move { from, to })
    }

    /// Builds a move from peg numbers. Panics on invalid pegs; intended for literals.
    pub fn of(from: u8, to: u8) -> Move {
        Move::new(Peg::new(from).unwrap(), Peg::new(to).unwrap()).unwrap()
    }

    pub fn reversed(self) -> Move {
        Move {
            from: self.to,
            to: self.from,
        }
    }
}

impl TryFrom<[u8; 2]> for Move {
    type Error = ModelError;

    fn try_from([from, to]: [u8; 2]) -> Result<Self, Self::Error> {
        Move::new(Peg::new(from)?, Peg::new(to)?)
    }
}

impl From<Move> for [u8; 2] {
    fn from(mv: Move) -> [u8; 2] {
        [mv.from.number(), mv.to.number()]
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.from, self.to)
    }
}

impl FromStr for Move {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (from, to) = s
            .split_once('>')
            .ok_or_else(|| ModelError::Parse(format!("expected `i>j`, got {s:?}")))?;
        Move::new(from.parse()?, to.parse()?)
    }
}

/// Ordered list of moves. Legality depends on the state it is replayed from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSequence(Vec<Move>);

impl MoveSequence {
    pub fn new() -> Self {
        MoveSequence(Vec::new())
    }

    pub fn with_capacity(capacity: usize) -> Self {
        MoveSequence(Vec::with_capacity(capacity))
    }

    pub fn push(&mut self, mv: Move) {
        self.0.push(mv);
    }

    pub fn extend_from(&mut self, other: &MoveSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn into_vec(self) -> Vec<Move> {
        self.0
    }

    /// One move per line, `i>j`.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.0.len() * 4);
        for mv in &self.0 {
            out.push_str(&mv.to_string());
            out.push('\n');
        }
        out
    }

    /// JSON array of `[from, to]` pairs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("move sequences always serialize")
    }

    /// Parses the line format; blank lines and surrounding whitespace are ignored.
    pub fn parse_lines(text: &str) -> Result<Self, ModelError> {
        text.lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl Deref for MoveSequence {
    type Target = [Move];

    fn deref(&self) -> &[Move] {
        &self.0
    }
}

impl From<Vec<Move>> for MoveSequence {
    fn from(moves: Vec<Move>) -> Self {
        MoveSequence(moves)
    }
}

impl FromIterator<Move> for MoveSequence {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a MoveSequence {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for MoveSequence {
    type Item = Move;
    type IntoIter = std::vec::IntoIter<Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}
