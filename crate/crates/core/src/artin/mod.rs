//! Artin groups of graphs, their abelianizations, and nontriviality
//! certificates through the Coxeter quotient.

mod abelian;
mod coxeter;
mod presentation;

pub use abelian::{abelianization, relation_matrix, AbelianGroup};
pub use coxeter::{certify_nontrivial, coxeter_image, Certificate, CoxeterSystem};
pub use presentation::{
    braid_relator, commutation_relator, commutator, invert, presentation_from_graph, GroupWord,
    Presentation,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("letter {letter} refers to a generator outside 1..={generators}")]
    GeneratorOutOfRange { letter: i32, generators: usize },
    #[error("invalid Coxeter matrix: {0}")]
    BadCoxeterMatrix(String),
}
