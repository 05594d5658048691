use std::fmt;

use num_traits::{One, Signed};
use serde::Serialize;

use super::Presentation;
use crate::linalg::{smith_normal_form, Matrix};
use crate::Integer;

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s`, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<Integer>,
}

fn as_strings<S: serde::Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Relators as rows of exponent sums.
pub fn relation_matrix(p: &Presentation) -> Matrix<Integer> {
    let mut m = Matrix::zeros(p.relators().len(), p.generator_count());
    for (r, word) in p.relators().iter().enumerate() {
        for &l in word {
            let c = l.unsigned_abs() as usize - 1;
            m[(r, c)] = &m[(r, c)] + Integer::from(l.signum());
        }
    }
    m
}

pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let snf = smith_normal_form(&relation_matrix(p));
    let factors = snf.invariant_factors();
    AbelianGroup {
        free_rank: p.generator_count() - factors.len(),
        torsion: factors
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect(),
    }
}
