use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ModelError, Peg};

/// Disc size; discs of an `n`-disc state are exactly `1..=n`.
pub type Disc = u8;

/// Largest supported disc count.
pub const MAX_DISCS: usize = 250;

/// Three per-peg stacks, each listed bottom-to-top.
///
/// Construction checks that every disc `1..=n` appears exactly once, so a
/// `State` is always well formed. Rule legality depends on a model and is
/// checked separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Vec<Disc>; 3]", into = "[Vec<Disc>; 3]")]
pub struct State {
    stacks: [Vec<Disc>; 3],
}

impl State {
    pub fn from_stacks(stacks: [Vec<Disc>; 3]) -> Result<State, ModelError> {
        let n: usize = stacks.iter().map(Vec::len).sum();
        if n > MAX_DISCS {
            return Err(ModelError::TooManyDiscs(n));
        }
        let mut seen = vec![false; n + 1];
        for &disc in stacks.iter().flatten() {
            let d = disc as usize;
            if d == 0 || d > n {
                return Err(ModelError::Malformed(format!(
                    "disc {disc} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[d], true) {
                return Err(ModelError::Malformed(format!("disc {disc} appears twice")));
            }
        }
        Ok(State { stacks })
    }

    /// All `n` discs on `peg`, largest at the bottom.
    pub fn standard(n: usize, peg: Peg) -> State {
        assert!(n <= MAX_DISCS, "at most {MAX_DISCS} discs supported");
        let mut stacks: [Vec<Disc>; 3] = Default::default();
        stacks[peg.index()] = (1..=n as Disc).rev().collect();
        State { stacks }
    }

    pub(crate) fn from_stacks_unchecked(stacks: [Vec<Disc>; 3]) -> State {
        State { stacks }
    }

    pub fn disc_count(&self) -> usize {
        self.stacks.iter().map(Vec::len).sum()
    }

    pub fn stack(&self, peg: Peg) -> &[Disc] {
        &self.stacks[peg.index()]
    }

    pub fn stacks(&self) -> &[Vec<Disc>; 3] {
        &self.stacks
    }

    pub fn top(&self, peg: Peg) -> Option<Disc> {
        self.stacks[peg.index()].last().copied()
    }

    pub fn peg_of(&self, disc: Disc) -> Option<Peg> {
        self.stacks
            .iter()
            .position(|stack| stack.contains(&disc))
            .map(Peg::from_index)
    }

    pub fn is_standard_on(&self, peg: Peg) -> bool {
        let n = self.disc_count();
        let stack = self.stack(peg);
        stack.len() == n
            && stack
                .iter()
                .rev()
                .enumerate()
                .all(|(i, &d)| d as usize == i + 1)
    }

    pub fn all_on(&self, peg: Peg) -> bool {
        self.stack(peg).len() == self.disc_count()
    }

    /// The state with disc `n` deleted and every other disc left in place.
    pub fn without_largest(&self) -> State {
        let n = self.disc_count() as Disc;
        let mut stacks = self.stacks.clone();
        for stack in &mut stacks {
            stack.retain(|&d| d != n);
        }
        State { stacks }
    }

    /// Moves the top of `from` to `to` without any rule check.
    pub(crate) fn shift(&mut self, from: Peg, to: Peg) -> Disc {
        let disc = self.stacks[from.index()]
            .pop()
            .expect("shift from an empty peg");
        self.stacks[to.index()].push(disc);
        disc
    }

    pub(crate) fn stacks_mut(&mut self) -> &mut [Vec<Disc>; 3] {
        &mut self.stacks
    }

    /// Canonical text key, e.g. `3,2|1|` for disc 3 under 2 on peg 1 and disc 1 on peg 2.
    pub fn canonical_key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, stack) in self.stacks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, disc) in stack.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{disc}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for State {
    type Err = ModelError;

    /// Parses the canonical key format, `3,2|1|`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split('|').collect();
        if parts.len() != 3 {
            return Err(ModelError::Parse(format!(
                "state needs three `|`-separated stacks: {s:?}"
            )));
        }
        let mut stacks: [Vec<Disc>; 3] = Default::default();
        for (stack, part) in stacks.iter_mut().zip(parts) {
            for item in part.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let disc = item
                    .parse::<Disc>()
                    .map_err(|_| ModelError::Parse(format!("bad disc {item:?}")))?;
                stack.push(disc);
            }
        }
        State::from_stacks(stacks)
    }
}

impl TryFrom<[Vec<Disc>; 3]> for State {
    type Error = ModelError;

    fn try_from(stacks: [Vec<Disc>; 3]) -> Result<Self, Self::Error> {
        State::from_stacks(stacks)
    }
}

impl From<State> for [Vec<Disc>; 3] {
    fn from(state: State) -> Self {
        state.stacks
    }
}
