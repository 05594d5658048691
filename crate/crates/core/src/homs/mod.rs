//! Homomorphisms out of braid groups and tile Artin groups: symplectic
//! twists, half twists along edges, edge transvections, wreath block maps,
//! and a generic harness for checking relators.

mod harness;
mod phi_tile;
mod pullback;
mod symplectic;
mod theta;
mod wreath;

pub use harness::{
    check_relations, BraidTarget, Check, CheckStatus, GroupTarget, IntegerMatrices, RationalMatrices, Report,
    Summary,
};
pub use phi_tile::{phi_tile, EdgeTransvectionRep};
pub use pullback::{mirrored_pair, MirroredPair};
pub use symplectic::{chain_classes, gram_matrix, phi, transvection, CurveClass};
pub use theta::{band_generator, theta, theta_graph, theta_images};
pub use wreath::{block_swap, discrepancy, omega_gamma, phi1, Discrepancy};

use thiserror::Error;

use crate::braid::BraidError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("expected a braid on {expected} strands, found {found}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("expected genus {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },
    #[error("letter {letter} refers to an edge outside 1..={edges}")]
    EdgeOutOfRange { letter: i32, edges: usize },
    #[error("no arc between points {i} and {j} on {strands} strands")]
    BadArc { i: usize, j: usize, strands: usize },
    #[error("expected {expected} blocks, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("no image given for generator {generator}")]
    MissingImage { generator: String },
    #[error("permutations differ: {first} vs {second}")]
    NotInPullback { first: String, second: String },
    #[error("invalid pairing: {0}")]
    BadPairing(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
