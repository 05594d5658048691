//! Pairs of braids with equal underlying permutations.

use super::HomError;
use crate::braid::{underlying_permutation, BraidWord};

/// Element of the pullback `β_n ×_{S_n} β_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirroredPair {
    first: BraidWord,
    second: BraidWord,
}

impl MirroredPair {
    pub fn new(first: BraidWord, second: BraidWord) -> Result<Self, HomError> {
        if first.strands() != second.strands() {
            return Err(HomError::StrandMismatch {
                expected: first.strands(),
                found: second.strands(),
            });
        }
        let (p, q) = (underlying_permutation(&first), underlying_permutation(&second));
        if p != q {
            return Err(HomError::NotInPullback {
                first: p.to_string(),
                second: q.to_string(),
            });
        }
        Ok(Self { first, second })
    }

    pub fn first(&self) -> &BraidWord {
        &self.first
    }

    pub fn second(&self) -> &BraidWord {
        &self.second
    }

    pub fn then(&self, other: &Self) -> Result<Self, HomError> {
        Self::new(self.first.then(&other.first)?, self.second.then(&other.second)?)
    }

    pub fn inverse(&self) -> Self {
        Self {
            first: self.first.inverse(),
            second: self.second.inverse(),
        }
    }
}

/// `b ↦ (b, mirror(b))`.
pub fn mirrored_pair(b: &BraidWord) -> MirroredPair {
    MirroredPair::new(b.clone(), b.mirror()).expect("mirror preserves the permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatched_permutations_are_rejected() {
        let a = BraidWord::from_signed(3, &[1]).unwrap();
        let b = BraidWord::from_signed(3, &[2]).unwrap();
        assert!(matches!(MirroredPair::new(a, b), Err(HomError::NotInPullback { .. })));
    }

    #[test]
    fn mirror_pairs_compose() {
        let a = BraidWord::from_signed(4, &[1, 2, -3]).unwrap();
        let b = BraidWord::from_signed(4, &[3, 3, -1]).unwrap();
        let ab = mirrored_pair(&a).then(&mirrored_pair(&b)).unwrap();
        assert_eq!(ab, mirrored_pair(&a.then(&b).unwrap()));
        assert_eq!(mirrored_pair(&a).inverse(), mirrored_pair(&a.inverse()));
    }
}
