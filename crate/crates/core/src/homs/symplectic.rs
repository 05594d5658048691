//! Dehn twists on the first homology of a genus `g` surface with one
//! boundary component, and the map from `β_{2g}` they define.
//!
//! Mapping classes are seen only through their action on `H_1 = Z^{2g}`.
//! That representation is not faithful, so relations verified here are
//! necessary conditions only; inequalities are conclusive.

use serde::Serialize;

use super::HomError;
use crate::braid::BraidWord;
use crate::linalg::{Matrix, Scalar, SymplecticForm};

/// Homology class of a curve in the basis `(x1, y1, ..., xg, yg)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveClass<T> {
    genus: usize,
    coords: Vec<T>,
}

impl<T: Scalar> CurveClass<T> {
    pub fn new(genus: usize, coords: Vec<T>) -> Result<Self, HomError> {
        if coords.len() != 2 * genus {
            return Err(HomError::GenusMismatch {
                expected: genus,
                found: coords.len() / 2,
            });
        }
        Ok(Self { genus, coords })
    }

    pub fn zero(genus: usize) -> Self {
        Self {
            genus,
            coords: vec![T::zero(); 2 * genus],
        }
    }

    /// `x_i` (1-based).
    pub fn x(genus: usize, i: usize) -> Self {
        let mut c = Self::zero(genus);
        c.coords[2 * (i - 1)] = T::one();
        c
    }

    /// `y_i` (1-based).
    pub fn y(genus: usize, i: usize) -> Self {
        let mut c = Self::zero(genus);
        c.coords[2 * (i - 1) + 1] = T::one();
        c
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            genus: self.genus,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn pairing(&self, other: &Self) -> T {
        SymplecticForm::new(self.genus).pairing(&self.coords, &other.coords)
    }
}

/// Classes of the chain curves: `c_{2i-1} = y_i`, `c_{2i} = x_i - x_{i+1}`.
///
/// Consecutive classes pair to ±1 and all other pairs to 0.
pub fn chain_classes<T: Scalar>(genus: usize) -> Vec<CurveClass<T>> {
    let mut out = Vec::with_capacity(2 * genus);
    for i in 1..=genus {
        out.push(CurveClass::y(genus, i));
        if i < genus {
            out.push(CurveClass::x(genus, i).sub(&CurveClass::x(genus, i + 1)));
        }
    }
    out
}

/// Pairing matrix `<c_i, c_j>` of a list of classes.
pub fn gram_matrix<T: Scalar>(classes: &[CurveClass<T>]) -> Matrix<T> {
    let n = classes.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = classes[i].pairing(&classes[j]);
        }
    }
    m
}

/// Matrix of `x ↦ x + <x, c> c` (`inverse = false`) or `x ↦ x - <x, c> c`.
pub fn transvection<T: Scalar>(c: &CurveClass<T>, inverse: bool) -> Matrix<T> {
    let n = 2 * c.genus;
    // row vector of <e_s, c>
    let mut p = vec![T::zero(); n];
    for b in 0..c.genus {
        p[2 * b] = c.coords[2 * b + 1].clone();
        p[2 * b + 1] = -c.coords[2 * b].clone();
    }
    let mut m: Matrix<T> = Matrix::identity(n);
    for r in 0..n {
        if c.coords[r].is_zero() {
            continue;
        }
        for s in 0..n {
            let delta = c.coords[r].clone() * p[s].clone();
            let v = if inverse {
                m[(r, s)].clone() - delta
            } else {
                m[(r, s)].clone() + delta
            };
            m[(r, s)] = v;
        }
    }
    m
}

/// The homomorphism `β_{2g} → Sp(2g, Z)` sending `σ_i` to the twist along
/// the `i`-th chain curve; products are taken in word order.
pub fn phi<T: Scalar>(genus: usize, w: &BraidWord) -> Result<Matrix<T>, HomError> {
    if w.strands() != 2 * genus {
        return Err(HomError::StrandMismatch {
            expected: 2 * genus,
            found: w.strands(),
        });
    }
    let chain = chain_classes::<T>(genus);
    let pos: Vec<Matrix<T>> = chain.iter().map(|c| transvection(c, false)).collect();
    let neg: Vec<Matrix<T>> = chain.iter().map(|c| transvection(c, true)).collect();
    let mut acc = Matrix::identity(2 * genus);
    for l in w.letters() {
        let t = if l.inverse { &neg } else { &pos };
        acc = &acc * &t[l.index - 1];
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_symplectic;
    use crate::IntMatrix;
    use num_bigint::BigInt;

    fn int(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    #[test]
    fn genus_one_chain() {
        let c = chain_classes::<i64>(1);
        assert_eq!(c, vec![CurveClass::y(1, 1)]);
    }

    #[test]
    fn genus_two_chain_pairings() {
        let c = chain_classes::<i64>(2);
        assert_eq!(c.len(), 3);
        assert_eq!(c[1].coords(), &[1, 0, -1, 0]);
        assert_eq!(c[0].pairing(&c[1]).abs(), 1);
        assert_eq!(c[1].pairing(&c[2]).abs(), 1);
        assert_eq!(c[0].pairing(&c[2]), 0);
    }

    #[test]
    fn transvection_examples() {
        assert!(transvection(&CurveClass::<BigInt>::zero(2), false).is_identity());
        // x1 -> x1, y1 -> y1 - x1; columns are images
        let t: IntMatrix = transvection(&CurveClass::x(1, 1), false);
        assert_eq!(t, int(vec![vec![1, -1], vec![0, 1]]));
    }

    #[test]
    fn transvections_are_symplectic() {
        let form = SymplecticForm::new(2);
        let c = CurveClass::<BigInt>::new(2, [3, -1, 2, 5].map(BigInt::from).to_vec()).unwrap();
        let t = transvection(&c, false);
        assert!(is_symplectic(&t, &form).unwrap());
        assert_eq!(t.determinant().unwrap(), BigInt::from(1));
        assert!((&t * &transvection(&c, true)).is_identity());
    }

    #[test]
    fn phi_basics() {
        let e: IntMatrix = phi(2, &BraidWord::identity(4)).unwrap();
        assert!(e.is_identity());
        let s1: IntMatrix = phi(1, &BraidWord::from_signed(2, &[1]).unwrap()).unwrap();
        assert_eq!(s1, transvection(&CurveClass::y(1, 1), false));
        assert!(phi::<BigInt>(2, &BraidWord::identity(3)).is_err());
    }
}
