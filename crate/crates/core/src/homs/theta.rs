//! Half twists along the edges of `Σ_T`.

use super::HomError;
use crate::braid::{BraidWord, Letter};
use crate::tiles::{tree_of, MarkedGraph, TileExpr};

/// Band generator for the arc between marked points `i < j` (1-based):
/// `(σ_{j-1} ... σ_{i+1}) σ_i (σ_{i+1}^-1 ... σ_{j-1}^-1)`.
pub fn band_generator(strands: usize, i: usize, j: usize) -> Result<BraidWord, HomError> {
    let (i, j) = (i.min(j), i.max(j));
    if i == 0 || i == j || j > strands {
        return Err(HomError::BadArc { i, j, strands });
    }
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(Letter::pos).collect();
    letters.push(Letter::pos(i));
    letters.extend((i + 1..j).map(Letter::neg));
    Ok(BraidWord::new(strands, letters)?)
}

/// Images of the edge generators of `graph` as braids on its marked points.
pub fn theta_images(graph: &MarkedGraph) -> Vec<BraidWord> {
    let strands = graph.vertex_count().max(1);
    graph
        .labelled_edges()
        .into_iter()
        .map(|(i, j)| band_generator(strands, i, j).expect("edge endpoints are marked points"))
        .collect()
}

/// Maps a word over the edges of `Σ_T` (signed, 1-based edge indices) to a braid.
pub fn theta_graph(graph: &MarkedGraph, word: &[i32]) -> Result<BraidWord, HomError> {
    let images = theta_images(graph);
    let mut out = BraidWord::identity(graph.vertex_count().max(1));
    for &l in word {
        let e = l.unsigned_abs() as usize;
        if e == 0 || e > images.len() {
            return Err(HomError::EdgeOutOfRange {
                letter: l,
                edges: images.len(),
            });
        }
        let img = if l > 0 {
            images[e - 1].clone()
        } else {
            images[e - 1].inverse()
        };
        out = out.then(&img)?;
    }
    Ok(out)
}

pub fn theta(tile: &TileExpr, word: &[i32]) -> Result<BraidWord, HomError> {
    theta_graph(&tree_of(tile), word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{equal, is_trivial};
    use crate::tiles::star_tile;

    #[test]
    fn adjacent_points_give_standard_generators() {
        for i in 1..5 {
            assert_eq!(
                band_generator(5, i, i + 1).unwrap(),
                BraidWord::from_signed(5, &[i as i32]).unwrap()
            );
        }
    }

    #[test]
    fn star_tile_edge_two_four() {
        let t = star_tile();
        let img = theta(&t, &[2]).unwrap();
        assert_eq!(img, BraidWord::from_signed(5, &[3, 2, -3]).unwrap());
    }

    #[test]
    fn displayed_relation() {
        // τ σ3 τ = σ3 τ σ3 with τ = σ3 σ2 σ3^-1
        let tau = BraidWord::from_signed(5, &[3, 2, -3]).unwrap();
        let s3 = BraidWord::from_signed(5, &[3]).unwrap();
        let lhs = tau.then(&s3).unwrap().then(&tau).unwrap();
        let rhs = s3.then(&tau).unwrap().then(&s3).unwrap();
        assert!(equal(&lhs, &rhs).unwrap());
        let img = theta(&star_tile(), &[2, 3, 2, -3, -2, -3]).unwrap();
        assert!(is_trivial(&img).unwrap());
    }

    #[test]
    fn bad_edges() {
        assert!(matches!(
            theta(&star_tile(), &[5]),
            Err(HomError::EdgeOutOfRange { letter: 5, edges: 4 })
        ));
        assert!(band_generator(3, 2, 4).is_err());
    }
}
