use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidWord;

/// A permutation of `{1, ..., n}` stored 0-based.
///
/// For braids, `image(i)` is the final position of the strand that starts at
/// position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; `None` unless the images form a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    /// Transposition of 0-based positions `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Self {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Image of a braid in the symmetric group; `σ_i` goes to the transposition `(i i+1)`.
pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    let n = w.strands();
    // strand_at[p] = strand currently at position p
    let mut strand_at: Vec<usize> = (0..n).collect();
    for l in w.letters() {
        strand_at.swap(l.index - 1, l.index);
    }
    let mut images = vec![0; n];
    for (pos, &strand) in strand_at.iter().enumerate() {
        images[strand] = pos;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, l).unwrap()
    }

    #[test]
    fn generator_is_adjacent_transposition() {
        assert_eq!(underlying_permutation(&w(3, &[1])).to_string(), "(1 2)");
        assert_eq!(underlying_permutation(&w(3, &[-2])).to_string(), "(2 3)");
    }

    #[test]
    fn half_twist_on_three_strands() {
        assert_eq!(underlying_permutation(&w(3, &[1, 2, 1])).to_string(), "(1 3)");
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(underlying_permutation(&BraidWord::identity(4)).is_identity());
    }

    #[test]
    fn product_convention() {
        let a = w(4, &[1, 2]);
        let b = w(4, &[3, -1]);
        let ab = a.then(&b).unwrap();
        assert_eq!(
            underlying_permutation(&ab),
            underlying_permutation(&a).then(&underlying_permutation(&b))
        );
    }

    #[test]
    fn from_images_checks_bijectivity() {
        assert!(Permutation::from_images(vec![1, 0, 2]).is_some());
        assert!(Permutation::from_images(vec![1, 1, 2]).is_none());
        assert!(Permutation::from_images(vec![0, 3]).is_none());
    }
}
