//! Braid groups: words, the word problem, permutations, cabling and mirroring.

mod cable;
mod free_group;
mod handle;
mod perm;
mod word;

pub use cable::{cable, WreathElement};
pub use free_group::{artin_action, artin_action_bounded, FreeGroupEndo, FreeWord};
pub use handle::handle_reduce;
pub use perm::{underlying_permutation, Permutation};
pub use word::{BraidWord, Letter};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("wrong number of braids: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("parse error at byte {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },
    #[error("word problem paths disagree on {word}: handle reduction says {fast}, free group action says {oracle}")]
    Inconsistent {
        word: String,
        fast: bool,
        oracle: bool,
    },
}

/// Summed image length beyond which [`is_trivial`] skips the free group cross-check.
pub const ORACLE_BUDGET: usize = 200_000;

/// Decides triviality by handle reduction alone.
pub fn is_trivial_fast(w: &BraidWord) -> bool {
    handle_reduce(&w.signed_letters()).is_empty()
}

/// Decides triviality through the faithful action on the free group, or
/// `None` if the images outgrow `budget`.
pub fn is_trivial_oracle(w: &BraidWord, budget: usize) -> Option<bool> {
    artin_action_bounded(&w.free_reduce(), budget).map(|e| e.is_identity())
}

/// True iff `w` is the identity braid.
///
/// The verdict comes from handle reduction and is cross-checked against the
/// free group action whenever that stays within [`ORACLE_BUDGET`].
pub fn is_trivial(w: &BraidWord) -> Result<bool, BraidError> {
    let fast = is_trivial_fast(w);
    match is_trivial_oracle(w, ORACLE_BUDGET) {
        Some(oracle) if oracle != fast => Err(BraidError::Inconsistent {
            word: w.to_string(),
            fast,
            oracle,
        }),
        _ => Ok(fast),
    }
}

/// True iff the two words represent the same braid.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    is_trivial(&a.then(&b.inverse())?)
}
