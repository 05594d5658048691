//! The tile category: expressions over the atoms `D`, `P`, `F`, their normal
//! forms, the marked graphs `Σ_T`, and the 2-endomorphism groups.
//!
//! The half-edge layout of the atoms is a reconstruction: `F` carries an
//! internal edge between its two points, with the first point facing the
//! incoming interval and the second the outgoing one; `P` has a single point
//! facing all three intervals; `D` has nothing. With this layout `Σ_{F^k}`
//! is a path on `2k` points.

mod enumerate;
mod expr;
mod graph;
mod normal;

pub use enumerate::{forests_up_to, trees_with_atoms};
pub use expr::{Atom, TileExpr};
pub use graph::{tree_of, Anchor, HalfEdge, MarkedGraph, Vertex};
pub use normal::{equal_tiles, normal_form, Node, TileNormalForm};

use thiserror::Error;

use crate::artin::{presentation_from_graph, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    #[error("arity mismatch: {expected} outputs glued to {found} inputs")]
    Arity { expected: usize, found: usize },
    #[error("parse error at byte {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },
}

/// `first ; second`; fails unless the outputs of `first` match the inputs of `second`.
pub fn compose(first: &TileExpr, second: &TileExpr) -> Result<TileExpr, TileError> {
    TileExpr::compose(first.clone(), second.clone())
}

/// `left + right`, with the intervals of `left` first.
pub fn disjoint_union(left: &TileExpr, right: &TileExpr) -> TileExpr {
    TileExpr::union(left.clone(), right.clone())
}

/// `𝒯(T, T)`: the Artin group of `Σ_T`.
pub fn endo_group(expr: &TileExpr) -> Presentation {
    presentation_from_graph(&tree_of(expr))
}

/// Number of marked points `k`; the 2-endomorphisms of `T` in the
/// homeomorphism version of the category form the braid group on `k` strands.
pub fn endo_group_hat(expr: &TileExpr) -> usize {
    normal_form(expr).marked_points()
}

/// Tile whose graph is the tree with edges (1,2), (2,4), (3,4), (4,5).
pub fn star_tile() -> TileExpr {
    "(F + ((D + D) ; P)) ; P ; ((1_1 + D) ; P)"
        .parse()
        .expect("fixed tile expression parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_f_give_braid_presentations() {
        for k in 1..5 {
            let p = endo_group(&TileExpr::f_power(k));
            assert_eq!(p.generator_count(), 2 * k - 1);
            assert_eq!(p.relators(), Presentation::braid_group(2 * k).relators());
        }
    }

    #[test]
    fn single_pants_has_trivial_group() {
        assert_eq!(endo_group(&TileExpr::atom(Atom::P)).generator_count(), 0);
    }

    #[test]
    fn star_tile_layout() {
        let t = star_tile();
        assert_eq!((t.source(), t.target()), (1, 1));
        let g = tree_of(&t);
        assert_eq!(g.labelled_edges(), vec![(1, 2), (2, 4), (3, 4), (4, 5)]);
        let p = endo_group(&t);
        assert_eq!(p.generator_count(), 4);
    }

    #[test]
    fn gluing_checks_arity() {
        let f = TileExpr::atom(Atom::F);
        let p = TileExpr::atom(Atom::P);
        assert_eq!(compose(&f, &p), Err(TileError::Arity { expected: 1, found: 2 }));
        let ff = compose(&disjoint_union(&f, &f), &p).unwrap();
        assert_eq!((ff.source(), ff.target()), (2, 1));
        assert_ne!(normal_form(&disjoint_union(&f, &p)), normal_form(&disjoint_union(&p, &f)));
        assert_eq!(normal_form(&disjoint_union(&f, &TileExpr::identity(0))), normal_form(&f));
    }

    #[test]
    fn marked_point_counts() {
        assert_eq!(endo_group_hat(&TileExpr::f_power(3)), 6);
        assert_eq!(endo_group_hat(&TileExpr::atom(Atom::P)), 1);
        assert_eq!(endo_group_hat(&TileExpr::atom(Atom::D)), 0);
    }
}
