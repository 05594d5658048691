use num_traits::{One, Zero};
use serde::Serialize;

use super::ArtinError;
use crate::tiles::MarkedGraph;
use crate::{RatMatrix, Rational};

/// Coxeter system with labels 2 (commuting) and 3 (braid) only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<Vec<u8>>,
}

impl CoxeterSystem {
    pub fn new(labels: Vec<Vec<u8>>) -> Result<Self, ArtinError> {
        let r = labels.len();
        for (i, row) in labels.iter().enumerate() {
            if row.len() != r {
                return Err(ArtinError::BadCoxeterMatrix(format!("row {i} has length {}", row.len())));
            }
            for (j, &m) in row.iter().enumerate() {
                let ok = if i == j { m == 1 } else { m == 2 || m == 3 };
                if !ok || labels[j][i] != m {
                    return Err(ArtinError::BadCoxeterMatrix(format!("entry ({i}, {j}) = {m}")));
                }
            }
        }
        Ok(Self { labels })
    }

    /// Quotient of the Artin group of `graph`: label 3 for edges sharing a vertex, 2 otherwise.
    pub fn from_graph(graph: &MarkedGraph) -> Self {
        let r = graph.edges().len();
        let labels = (0..r)
            .map(|e| {
                (0..r)
                    .map(|f| match (e == f, graph.edges_meet(e, f)) {
                        (true, _) => 1,
                        (false, true) => 3,
                        (false, false) => 2,
                    })
                    .collect()
            })
            .collect();
        Self { labels }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, s: usize, t: usize) -> u8 {
        self.labels[s][t]
    }

    /// `B(s, t) = -cos(π / m_st)`: 1, 0 or -1/2.
    pub fn bilinear_form(&self) -> RatMatrix {
        let r = self.rank();
        let mut b = RatMatrix::zeros(r, r);
        for s in 0..r {
            for t in 0..r {
                b[(s, t)] = match self.labels[s][t] {
                    1 => Rational::one(),
                    2 => Rational::zero(),
                    _ => Rational::new((-1).into(), 2.into()),
                };
            }
        }
        b
    }

    /// Matrix of the reflection `x ↦ x - 2 B(x, e_s) e_s` (0-based `s`).
    pub fn reflection(&self, s: usize) -> RatMatrix {
        let b = self.bilinear_form();
        let two = Rational::from_integer(2.into());
        let mut m = RatMatrix::identity(self.rank());
        for t in 0..self.rank() {
            let v = m[(s, t)].clone() - two.clone() * b[(t, s)].clone();
            m[(s, t)] = v;
        }
        m
    }
}

/// Tits representation image of a word, multiplied in word order. A
/// generator and its inverse have the same image.
pub fn coxeter_image(system: &CoxeterSystem, word: &[i32]) -> Result<RatMatrix, ArtinError> {
    let r = system.rank();
    let reflections: Vec<RatMatrix> = (0..r).map(|s| system.reflection(s)).collect();
    let mut acc = RatMatrix::identity(r);
    for &l in word {
        let s = l.unsigned_abs() as usize;
        if s == 0 || s > r {
            return Err(ArtinError::GeneratorOutOfRange {
                letter: l,
                generators: r,
            });
        }
        acc = &acc * &reflections[s - 1];
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// The image in the Coxeter quotient is not the identity, so the word is
    /// nontrivial in the Artin group.
    Nontrivial,
    /// The Coxeter quotient cannot tell; no claim is made.
    Inconclusive,
}

/// Certifies that a word in the Artin group of `graph` is nontrivial, via its
/// image in the Coxeter quotient. Never claims triviality.
pub fn certify_nontrivial(graph: &MarkedGraph, word: &[i32]) -> Result<Certificate, ArtinError> {
    let image = coxeter_image(&CoxeterSystem::from_graph(graph), word)?;
    Ok(if image.is_identity() {
        Certificate::Inconclusive
    } else {
        Certificate::Nontrivial
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::presentation::{braid_relator, commutation_relator, commutator};

    fn path(n: usize) -> MarkedGraph {
        MarkedGraph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn single_edge_is_a_reflection() {
        let c = CoxeterSystem::from_graph(&path(2));
        let m = coxeter_image(&c, &[1]).unwrap();
        assert_eq!(m, RatMatrix::from_rows(vec![vec![Rational::from_integer((-1).into())]]).unwrap());
    }

    #[test]
    fn adjacent_pair_has_order_three() {
        let c = CoxeterSystem::from_graph(&path(3));
        let st = coxeter_image(&c, &[1, 2]).unwrap();
        assert!(!st.is_identity());
        assert!(!st.pow(2).is_identity());
        assert!(st.pow(3).is_identity());
    }

    #[test]
    fn disjoint_pair_has_order_two() {
        let c = CoxeterSystem::from_graph(&MarkedGraph::from_edges(4, &[(0, 1), (2, 3)]));
        let st = coxeter_image(&c, &[1, 2]).unwrap();
        assert!(!st.is_identity());
        assert!(st.pow(2).is_identity());
    }

    #[test]
    fn generators_are_involutions_of_determinant_minus_one() {
        let c = CoxeterSystem::from_graph(&MarkedGraph::from_edges(5, &[(0, 1), (1, 3), (2, 3), (3, 4)]));
        for s in 0..c.rank() {
            let r = c.reflection(s);
            assert!(r.pow(2).is_identity());
            assert_eq!(r.determinant().unwrap(), Rational::from_integer((-1).into()));
        }
    }

    #[test]
    fn certificates() {
        let g = path(3);
        assert_eq!(certify_nontrivial(&g, &[1]).unwrap(), Certificate::Nontrivial);
        assert_eq!(
            certify_nontrivial(&g, &braid_relator(1, 2)).unwrap(),
            Certificate::Inconclusive
        );
        let conj = commutator(&[2], &braid_relator(1, 2));
        assert_eq!(certify_nontrivial(&g, &conj).unwrap(), Certificate::Inconclusive);
        let d = MarkedGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            certify_nontrivial(&d, &commutation_relator(1, 2)).unwrap(),
            Certificate::Inconclusive
        );
        assert!(certify_nontrivial(&g, &[3]).is_err());
    }

    #[test]
    fn label_validation() {
        assert!(CoxeterSystem::new(vec![vec![1, 3], vec![3, 1]]).is_ok());
        assert!(CoxeterSystem::new(vec![vec![1, 4], vec![4, 1]]).is_err());
        assert!(CoxeterSystem::new(vec![vec![1, 2], vec![3, 1]]).is_err());
    }
}
