use super::matrix::{Matrix, Scalar};
use super::LinalgError;

/// Standard intersection form on `Z^{2g}` in the basis `(x1, y1, ..., xg, yg)`,
/// with `<x_i, y_i> = 1` and all other basis pairings zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticForm {
    genus: usize,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Self {
        Self { genus }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    /// Block-diagonal `J` with blocks `[[0, 1], [-1, 0]]`.
    pub fn matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut j = Matrix::zeros(self.dim(), self.dim());
        for b in 0..self.genus {
            j[(2 * b, 2 * b + 1)] = T::one();
            j[(2 * b + 1, 2 * b)] = -T::one();
        }
        j
    }

    /// `<u, v> = u^T J v`.
    pub fn pairing<T: Scalar>(&self, u: &[T], v: &[T]) -> T {
        assert_eq!(u.len(), self.dim(), "vector length does not match the form");
        assert_eq!(v.len(), self.dim(), "vector length does not match the form");
        let mut acc = T::zero();
        for b in 0..self.genus {
            let (x, y) = (2 * b, 2 * b + 1);
            acc = acc + u[x].clone() * v[y].clone() - u[y].clone() * v[x].clone();
        }
        acc
    }
}

/// True iff `M^T J M == J`.
pub fn is_symplectic<T: Scalar>(m: &Matrix<T>, form: &SymplecticForm) -> Result<bool, LinalgError> {
    let n = form.dim();
    if m.shape() != (n, n) {
        return Err(LinalgError::DimensionMismatch {
            expected: (n, n),
            found: m.shape(),
        });
    }
    let j = form.matrix::<T>();
    let lhs = &(&m.transpose() * &j) * m;
    Ok(lhs == j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn form_is_skew_and_unimodular() {
        for g in 1..5 {
            let j = SymplecticForm::new(g).matrix::<BigInt>();
            assert!(j.is_skew_symmetric());
            assert_eq!(j.determinant().unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn identity_is_symplectic() {
        let f = SymplecticForm::new(3);
        assert!(is_symplectic(&Matrix::<i64>::identity(6), &f).unwrap());
    }

    #[test]
    fn scaling_a_coordinate_is_not() {
        let f = SymplecticForm::new(2);
        let m = Matrix::<i64>::from_diagonal(&[2, 1, 1, 1]);
        assert!(!is_symplectic(&m, &f).unwrap());
    }

    #[test]
    fn wrong_size_is_an_error() {
        let f = SymplecticForm::new(2);
        assert!(is_symplectic(&Matrix::<i64>::identity(3), &f).is_err());
    }
}
