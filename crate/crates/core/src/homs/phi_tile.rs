//! Edge transvection representations of the Artin group of `Σ_T`.
//!
//! Generators act on `Z^E`, one coordinate per edge, through a skew form
//! `M` supported on pairs of meeting edges: edge `e` acts by
//! `x ↦ x ± M(x, e) e`. When `|M(e, f)| = 1` on meeting edges this satisfies
//! every braid and commutation relator of the presentation.

use super::HomError;
use crate::linalg::{Matrix, Scalar};
use crate::tiles::{tree_of, MarkedGraph, TileExpr};

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeTransvectionRep<T> {
    graph: MarkedGraph,
    pairing: Matrix<T>,
}

impl<T: Scalar> EdgeTransvectionRep<T> {
    /// Sign `+1` on `M(e, f)` for meeting edges `e < f`.
    pub fn standard(graph: &MarkedGraph) -> Self {
        let n = graph.edges().len();
        Self::with_signs(graph, &vec![true; n * n]).expect("enough signs")
    }

    /// One sign per meeting pair `e < f`, in lexicographic order; `true` is `+1`.
    /// Extra signs are ignored.
    pub fn with_signs(graph: &MarkedGraph, signs: &[bool]) -> Result<Self, HomError> {
        let n = graph.edges().len();
        let mut m = Matrix::zeros(n, n);
        let mut used = 0;
        for e in 0..n {
            for f in e + 1..n {
                if !graph.edges_meet(e, f) {
                    continue;
                }
                let s = *signs
                    .get(used)
                    .ok_or_else(|| HomError::BadPairing(format!("need more than {} signs", signs.len())))?;
                used += 1;
                let one = T::one();
                let (a, b) = if s { (one.clone(), -one) } else { (-one.clone(), one) };
                m[(e, f)] = a;
                m[(f, e)] = b;
            }
        }
        Ok(Self {
            graph: graph.clone(),
            pairing: m,
        })
    }

    /// Arbitrary skew form; its support must match the meeting pattern.
    pub fn from_pairing(graph: &MarkedGraph, pairing: Matrix<T>) -> Result<Self, HomError> {
        let n = graph.edges().len();
        if pairing.shape() != (n, n) {
            return Err(HomError::BadPairing(format!(
                "expected {n}x{n}, found {}x{}",
                pairing.rows(),
                pairing.cols()
            )));
        }
        if !pairing.is_skew_symmetric() {
            return Err(HomError::BadPairing("not skew-symmetric".into()));
        }
        for e in 0..n {
            for f in 0..n {
                if e != f && graph.edges_meet(e, f) == pairing[(e, f)].is_zero() {
                    return Err(HomError::BadPairing(format!(
                        "support differs from the meeting pattern at edges {} and {}",
                        e + 1,
                        f + 1
                    )));
                }
            }
        }
        Ok(Self {
            graph: graph.clone(),
            pairing,
        })
    }

    /// Number of distinct sign choices for [`Self::with_signs`].
    pub fn meeting_pairs(graph: &MarkedGraph) -> usize {
        let n = graph.edges().len();
        (0..n)
            .flat_map(|e| (e + 1..n).map(move |f| (e, f)))
            .filter(|&(e, f)| graph.edges_meet(e, f))
            .count()
    }

    pub fn graph(&self) -> &MarkedGraph {
        &self.graph
    }

    pub fn pairing(&self) -> &Matrix<T> {
        &self.pairing
    }

    pub fn dim(&self) -> usize {
        self.pairing.rows()
    }

    /// Image of generator `e` (0-based), or of its inverse.
    pub fn generator(&self, e: usize, inverse: bool) -> Matrix<T> {
        let n = self.dim();
        let mut m: Matrix<T> = Matrix::identity(n);
        for f in 0..n {
            let v = self.pairing[(f, e)].clone();
            if v.is_zero() {
                continue;
            }
            let v = if inverse { -v } else { v };
            m[(e, f)] = m[(e, f)].clone() + v;
        }
        m
    }

    /// Image of a signed word in the edge generators (1-based), in word order.
    pub fn image(&self, word: &[i32]) -> Result<Matrix<T>, HomError> {
        let n = self.dim();
        let mut acc = Matrix::identity(n);
        for &l in word {
            let e = l.unsigned_abs() as usize;
            if e == 0 || e > n {
                return Err(HomError::EdgeOutOfRange { letter: l, edges: n });
            }
            acc = &acc * &self.generator(e - 1, l < 0);
        }
        Ok(acc)
    }
}

/// `Φ_T` with the standard signs.
pub fn phi_tile<T: Scalar>(tile: &TileExpr, word: &[i32]) -> Result<Matrix<T>, HomError> {
    EdgeTransvectionRep::standard(&tree_of(tile)).image(word)
}
