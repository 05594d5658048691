//! Exact computational group theory for braid groups, tree Artin groups,
//! tile categories and their homology-level representations.

pub mod artin;
pub mod braid;
pub mod homs;
pub mod linalg;
pub mod tiles;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use braid::{BraidWord, Letter, Permutation};
pub use linalg::{Matrix, SymplecticForm};

/// Arbitrary-precision integer scalar.
pub type Integer = BigInt;
/// Arbitrary-precision rational scalar, always reduced.
pub type Rational = BigRational;
/// Integer matrix; images in `Sp(2g, Z)` and edge transvections live here.
pub type IntMatrix = Matrix<Integer>;
/// Rational matrix; Tits reflection images live here.
pub type RatMatrix = Matrix<Rational>;
