use crate::model::{Disc, Model, State};

use super::OracleError;

/// Packs states of a fixed disc count into `u128` keys.
///
/// Classical placement (`C = 0`) forces every stack to be descending, so a
/// disc-to-peg assignment in base 3 is enough. Otherwise the full stack
/// sequence is stored, five bits per symbol with `0` separating pegs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codec {
    Base3 { n: usize },
    Stacks { n: usize },
}

const SYMBOL_BITS: u32 = 5;
/// Largest disc count the stack codec can pack: `(n + 2) * 5 <= 128`.
pub const MAX_STACK_DISCS: usize = 23;
/// Largest disc count the base-3 codec can pack: `3^n < 2^128`.
pub const MAX_BASE3_DISCS: usize = 80;

impl Codec {
    pub fn for_model(model: &Model, n: usize) -> Result<Codec, OracleError> {
        if model.distance == 0 {
            if n > MAX_BASE3_DISCS {
                return Err(OracleError::TooManyDiscs {
                    n,
                    max: MAX_BASE3_DISCS,
                });
            }
            Ok(Codec::Base3 { n })
        } else {
            if n > MAX_STACK_DISCS {
                return Err(OracleError::TooManyDiscs {
                    n,
                    max: MAX_STACK_DISCS,
                });
            }
            Ok(Codec::Stacks { n })
        }
    }

    pub fn disc_count(self) -> usize {
        match self {
            Codec::Base3 { n } | Codec::Stacks { n } => n,
        }
    }

    pub fn encode(self, state: &State) -> u128 {
        match self {
            Codec::Base3 { .. } => {
                let mut code = 0u128;
                // most significant digit is disc n
                let mut pegs = vec![0u8; state.disc_count() + 1];
                for (p, stack) in state.stacks().iter().enumerate() {
                    for &d in stack {
                        pegs[d as usize] = p as u8;
                    }
                }
                for &p in pegs[1..].iter().rev() {
                    code = code * 3 + p as u128;
                }
                code
            }
            Codec::Stacks { .. } => {
                let mut code = 0u128;
                for (p, stack) in state.stacks().iter().enumerate() {
                    if p > 0 {
                        code <<= SYMBOL_BITS;
                    }
                    for &d in stack {
                        code = code << SYMBOL_BITS | d as u128;
                    }
                }
                code
            }
        }
    }

    pub fn decode(self, mut code: u128) -> State {
        let mut stacks: [Vec<Disc>; 3] = Default::default();
        match self {
            Codec::Base3 { n } => {
                let mut pegs = vec![0usize; n + 1];
                for slot in pegs[1..].iter_mut() {
                    *slot = (code % 3) as usize;
                    code /= 3;
                }
                for d in (1..=n).rev() {
                    stacks[pegs[d]].push(d as Disc);
                }
            }
            Codec::Stacks { n } => {
                let mask = (1u128 << SYMBOL_BITS) - 1;
                let symbols = n + 2;
                let mut peg = 0;
                for i in (0..symbols).rev() {
                    let sym = (code >> (i as u32 * SYMBOL_BITS)) & mask;
                    if sym == 0 {
                        peg += 1;
                    } else {
                        stacks[peg].push(sym as Disc);
                    }
                }
            }
        }
        State::from_stacks_unchecked(stacks)
    }
}
