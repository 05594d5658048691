use std::fmt;

use serde::{Deserialize, Serialize};

use super::ArtinError;
use crate::tiles::MarkedGraph;

/// A word over the generators of a presentation: `±i` is generator `i` (1-based) or its inverse.
pub type GroupWord = Vec<i32>;

pub fn invert(w: &[i32]) -> GroupWord {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn commutator(a: &[i32], b: &[i32]) -> GroupWord {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w.extend(invert(a));
    w.extend(invert(b));
    w
}

/// `e f e f^-1 e^-1 f^-1`
pub fn braid_relator(e: i32, f: i32) -> GroupWord {
    vec![e, f, e, -f, -e, -f]
}

/// `e f e^-1 f^-1`
pub fn commutation_relator(e: i32, f: i32) -> GroupWord {
    vec![e, f, -e, -f]
}

/// A finite group presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GroupWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<GroupWord>) -> Result<Self, ArtinError> {
        let n = generators.len();
        for r in &relators {
            if let Some(&l) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > n) {
                return Err(ArtinError::GeneratorOutOfRange {
                    letter: l,
                    generators: n,
                });
            }
        }
        Ok(Self {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Standard presentation of the braid group on `strands` strands.
    pub fn braid_group(strands: usize) -> Self {
        let n = strands.saturating_sub(1);
        let generators = (1..=n).map(|i| format!("s{i}")).collect();
        let mut relators = Vec::new();
        for i in 1..=n as i32 {
            for j in i + 1..=n as i32 {
                relators.push(if j == i + 1 {
                    braid_relator(i, j)
                } else {
                    commutation_relator(i, j)
                });
            }
        }
        Self {
            generators,
            relators,
        }
    }

    pub fn word_to_string(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter()
            .map(|&l| {
                let name = &self.generators[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

/// The Artin group of a graph: one generator per full edge, a braid relator
/// for every pair of edges sharing a vertex and a commutator for every
/// disjoint pair.
pub fn presentation_from_graph(graph: &MarkedGraph) -> Presentation {
    let edges = graph.labelled_edges();
    let generators = edges.iter().map(|(a, b)| format!("e{a}_{b}")).collect();
    let mut relators = Vec::new();
    for e in 0..edges.len() {
        for f in e + 1..edges.len() {
            let (ge, gf) = (e as i32 + 1, f as i32 + 1);
            relators.push(if graph.edges_meet(e, f) {
                braid_relator(ge, gf)
            } else {
                commutation_relator(ge, gf)
            });
        }
    }
    Presentation {
        generators,
        relators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_of_three_vertices() {
        let p = presentation_from_graph(&MarkedGraph::from_edges(3, &[(0, 1), (1, 2)]));
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators(), &[braid_relator(1, 2)]);
    }

    #[test]
    fn two_disjoint_edges() {
        let p = presentation_from_graph(&MarkedGraph::from_edges(4, &[(0, 1), (2, 3)]));
        assert_eq!(p.relators(), &[vec![1, 2, -1, -2]]);
    }

    #[test]
    fn star_tree() {
        // edges (1,2), (2,4), (3,4), (4,5)
        let g = MarkedGraph::from_edges(5, &[(0, 1), (1, 3), (2, 3), (3, 4)]);
        let p = presentation_from_graph(&g);
        assert_eq!(p.generator_count(), 4);
        let braids = p.relators().iter().filter(|r| r.len() == 6).count();
        let comms = p.relators().iter().filter(|r| r.len() == 4).count();
        assert_eq!((braids, comms), (4, 2));
        assert!(p.relators().contains(&braid_relator(1, 2)));
        assert!(p.relators().contains(&commutation_relator(1, 3)));
        assert!(p.relators().contains(&commutation_relator(1, 4)));
    }

    #[test]
    fn relators_are_validated() {
        assert!(Presentation::new(vec!["a".into()], vec![vec![1, 2]]).is_err());
        assert!(Presentation::new(vec!["a".into()], vec![vec![1, -1]]).is_ok());
    }

    #[test]
    fn json_shape() {
        let p = Presentation::braid_group(3);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["generators"], serde_json::json!(["s1", "s2"]));
        assert_eq!(v["relators"], serde_json::json!([[1, 2, 1, -2, -1, -2]]));
    }
}
