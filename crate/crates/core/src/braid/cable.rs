//! Cabling: the wreath product map from `β_q ≀ β_k` to `β_{qk}`.
//!
//! `cable(q, k, σ; μ_1, ..., μ_q)` splits `qk` strands into `q` consecutive
//! cables of width `k`. The braid `μ_i` runs first, on the cable that starts
//! at position `i`; afterwards every crossing of `σ` becomes a crossing of
//! whole cables. With this placement the wreath product multiplication is
//!
//! ```text
//! (σ; μ) · (σ'; μ') = (σσ'; ν),   ν_i = μ_i · μ'_{π_σ(i)}
//! ```
//!
//! where `π_σ(i)` is the end position of the strand of `σ` starting at `i`.

use super::{underlying_permutation, BraidError, BraidWord, Letter};

/// The positive crossing of the width-`k` cables at 1-based cable positions
/// `c` and `c + 1`: `k²` positive letters, each moving one strand of the right
/// cable leftwards across the left cable.
fn block_crossing(c: usize, k: usize) -> Vec<Letter> {
    let base = (c - 1) * k;
    let mut out = Vec::with_capacity(k * k);
    for a in 1..=k {
        for b in 1..=k {
            out.push(Letter::pos(base + k + a - b));
        }
    }
    out
}

pub fn cable(q: usize, k: usize, sigma: &BraidWord, mus: &[BraidWord]) -> Result<BraidWord, BraidError> {
    if q == 0 || k == 0 {
        return Err(BraidError::NoStrands);
    }
    if sigma.strands() != q {
        return Err(BraidError::StrandMismatch {
            expected: q,
            found: sigma.strands(),
        });
    }
    if mus.len() != q {
        return Err(BraidError::Arity {
            expected: q,
            found: mus.len(),
        });
    }
    if let Some(m) = mus.iter().find(|m| m.strands() != k) {
        return Err(BraidError::StrandMismatch {
            expected: k,
            found: m.strands(),
        });
    }

    let mut letters = Vec::new();
    for (i, mu) in mus.iter().enumerate() {
        letters.extend(mu.letters().iter().map(|l| Letter {
            index: l.index + i * k,
            inverse: l.inverse,
        }));
    }
    for l in sigma.letters() {
        let block = block_crossing(l.index, k);
        if l.inverse {
            letters.extend(block.iter().rev().map(|b| b.inv()));
        } else {
            letters.extend(block);
        }
    }
    BraidWord::new(q * k, letters)
}

/// An element `(σ; μ_1, ..., μ_q)` of the wreath product `β_q ≀ β_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    pub sigma: BraidWord,
    pub mus: Vec<BraidWord>,
}

impl WreathElement {
    pub fn new(sigma: BraidWord, mus: Vec<BraidWord>) -> Result<Self, BraidError> {
        if mus.len() != sigma.strands() {
            return Err(BraidError::Arity {
                expected: sigma.strands(),
                found: mus.len(),
            });
        }
        if let Some(w) = mus.windows(2).find(|w| w[0].strands() != w[1].strands()) {
            return Err(BraidError::StrandMismatch {
                expected: w[0].strands(),
                found: w[1].strands(),
            });
        }
        Ok(Self { sigma, mus })
    }

    pub fn cable_width(&self) -> usize {
        self.mus.first().map_or(0, BraidWord::strands)
    }

    /// Product under the convention documented at module level.
    pub fn then(&self, other: &Self) -> Result<Self, BraidError> {
        let sigma = self.sigma.then(&other.sigma)?;
        let perm = underlying_permutation(&self.sigma);
        let mus = self
            .mus
            .iter()
            .enumerate()
            .map(|(i, mu)| mu.then(&other.mus[perm.image(i)]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(sigma, mus)
    }

    pub fn cable(&self) -> Result<BraidWord, BraidError> {
        cable(self.sigma.strands(), self.cable_width(), &self.sigma, &self.mus)
    }
}
