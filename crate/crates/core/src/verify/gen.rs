//! Seeded generators for braids and tiles.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Letter};
use crate::tiles::{Atom, TileExpr};

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform letters, length uniform in `0..=max_len`. Empty on one strand.
pub fn random_braid(rng: &mut Rng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands.max(1));
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            if rng.gen_bool(0.5) {
                Letter::pos(i)
            } else {
                Letter::neg(i)
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Product of up to `factors` conjugates `w σ_i^{±2} w^-1`, which is pure.
pub fn random_pure_braid(rng: &mut Rng, strands: usize, factors: usize, conj_len: usize) -> BraidWord {
    let mut out = BraidWord::identity(strands);
    if strands < 2 {
        return out;
    }
    for _ in 0..rng.gen_range(0..=factors) {
        let w = random_braid(rng, strands, conj_len);
        let i = rng.gen_range(1..strands);
        let e = if rng.gen_bool(0.5) { 2 } else { -2 };
        let core = BraidWord::generator(strands, i).expect("in range").pow(e);
        out = out
            .then(&w)
            .and_then(|x| x.then(&core))
            .and_then(|x| x.then(&w.inverse()))
            .expect("same strands");
    }
    out
}

/// A random tile with `source` inputs: `layers` unions of atoms and identity
/// strands stacked by composition, with occasional discs.
pub fn random_tile_from(rng: &mut Rng, source: usize, layers: usize) -> TileExpr {
    let mut tile = TileExpr::identity(source);
    for _ in 0..layers {
        let layer = random_layer(rng, tile.target());
        tile = TileExpr::compose(tile, layer).expect("layer matches target");
    }
    tile
}

fn random_layer(rng: &mut Rng, width: usize) -> TileExpr {
    let mut pieces = Vec::new();
    let mut left = width;
    loop {
        if rng.gen_bool(0.15) {
            pieces.push(TileExpr::atom(Atom::D));
        }
        if left == 0 {
            break;
        }
        let piece = match rng.gen_range(0..3) {
            0 => TileExpr::atom(Atom::F),
            1 if left >= 2 => TileExpr::atom(Atom::P),
            _ => TileExpr::identity(1),
        };
        left -= piece.source();
        pieces.push(piece);
    }
    pieces
        .into_iter()
        .reduce(TileExpr::union)
        .unwrap_or(TileExpr::identity(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::underlying_permutation;

    #[test]
    fn generators_are_deterministic() {
        let a = random_braid(&mut rng(7, 0), 5, 16);
        let b = random_braid(&mut rng(7, 0), 5, 16);
        assert_eq!(a, b);
    }

    #[test]
    fn pure_braids_are_pure() {
        let mut r = rng(1, 0);
        for _ in 0..20 {
            assert!(underlying_permutation(&random_pure_braid(&mut r, 4, 3, 4)).is_identity());
        }
    }

    #[test]
    fn tiles_have_requested_source() {
        let mut r = rng(2, 0);
        for s in 0..4 {
            assert_eq!(random_tile_from(&mut r, s, 3).source(), s);
        }
    }
}
