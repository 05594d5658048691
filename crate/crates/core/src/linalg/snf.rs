use num_integer::Integer;
use num_traits::Signed;

use super::matrix::{Matrix, Scalar};

/// Result of a Smith normal form computation: `left * input * right == diagonal`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm<T: Scalar> {
    pub diagonal: Matrix<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: Scalar + Integer + Signed> SmithForm<T> {
    /// Nonzero diagonal entries, in order; each divides the next.
    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.diagonal.rows().min(self.diagonal.cols());
        (0..n)
            .map(|i| self.diagonal[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form over a Euclidean domain of integers.
///
/// Pivot is the entry of smallest nonzero absolute value in the active
/// block, ties broken by row-major position.
pub fn smith_normal_form<T>(m: &Matrix<T>) -> SmithForm<T>
where
    T: Scalar + Integer + Signed,
{
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = find_pivot(&d, t) else {
                return SmithForm {
                    diagonal: d,
                    left,
                    right,
                };
            };
            d.swap_rows(t, pr);
            left.swap_rows(t, pr);
            d.swap_cols(t, pc);
            right.swap_cols(t, pc);

            let mut dirty = false;
            for r in t + 1..rows {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = d[(r, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(r, t, &-q.clone());
                left.add_row_multiple(r, t, &-q);
                dirty |= !d[(r, t)].is_zero();
            }
            for c in t + 1..cols {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = d[(t, c)].div_floor(&d[(t, t)]);
                d.add_col_multiple(c, t, &-q.clone());
                right.add_col_multiple(c, t, &-q);
                dirty |= !d[(t, c)].is_zero();
            }
            if dirty {
                continue;
            }

            // Row and column are clear; enforce divisibility on the rest.
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !d[(r, c)].is_multiple_of(&d[(t, t)]));
            match offender {
                Some((r, _)) => {
                    let one = T::one();
                    d.add_row_multiple(t, r, &one);
                    left.add_row_multiple(t, r, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithForm {
        diagonal: d,
        left,
        right,
    }
}

fn find_pivot<T: Scalar + Integer + Signed>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let v = &d[(r, c)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            // strict comparison keeps the first row-major minimum
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((r, c, a));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    fn check(m: &Matrix<BigInt>) -> SmithForm<BigInt> {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.left * m) * &s.right, s.diagonal);
        assert!(s.diagonal.is_diagonal());
        assert_eq!(s.left.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(s.right.determinant().unwrap().abs(), BigInt::from(1));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&int(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal, int(vec![vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn zero_matrix_is_untouched() {
        let z = Matrix::<BigInt>::zeros(3, 2);
        let s = check(&z);
        assert!(s.diagonal.is_zero());
        assert!(s.left.is_identity());
        assert!(s.right.is_identity());
    }

    #[test]
    fn identity_stays_identity() {
        let s = check(&Matrix::<BigInt>::identity(4));
        assert!(s.diagonal.is_identity());
    }

    #[test]
    fn rectangular_and_negative() {
        let s = check(&int(vec![vec![-4, 6, 2], vec![2, -2, 8]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(2)]
        );
    }

    #[test]
    fn works_for_machine_integers() {
        let m = Matrix::<i64>::from_rows(vec![vec![6, 4], vec![4, 6]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors(), vec![2, 10]);
    }
}
