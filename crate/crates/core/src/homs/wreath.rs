//! Block matrices for wreath products, and the comparison between twisting a
//! cabled braid and permuting the twisted blocks.

use super::{phi, HomError};
use crate::braid::{cable, BraidWord};
use crate::linalg::{Matrix, Scalar};

/// Permutation matrix exchanging blocks `i` and `i + 1` (1-based) of size `block`.
pub fn block_swap<T: Scalar>(blocks: usize, block: usize, i: usize) -> Matrix<T> {
    let n = blocks * block;
    let mut m = Matrix::identity(n);
    let a = (i - 1) * block;
    for r in 0..block {
        m.swap_rows(a + r, a + block + r);
    }
    m
}

/// `ω_Γ(σ; f_1, ..., f_q) = diag(f_1, ..., f_q) · S(σ)`, where `S(σ)` is the
/// word-order product of block swaps along the letters of `σ`.
///
/// Multiplicative for the wreath product `(σ; f)(σ'; f') = (σσ'; ν)` with
/// `ν_i = f_i f'_{π_σ(i)}`.
pub fn omega_gamma<T: Scalar>(sigma: &BraidWord, blocks: &[Matrix<T>]) -> Result<Matrix<T>, HomError> {
    let q = sigma.strands();
    if blocks.len() != q {
        return Err(HomError::Arity {
            expected: q,
            found: blocks.len(),
        });
    }
    let size = blocks[0].rows();
    if blocks.iter().any(|b| b.shape() != (size, size)) {
        return Err(HomError::BadPairing("blocks must be square of equal size".into()));
    }
    let mut acc = Matrix::block_diagonal(blocks);
    for l in sigma.letters() {
        acc = &acc * &block_swap(q, size, l.index);
    }
    Ok(acc)
}

/// `φ_1`: the block permutation of `β_q` on `(Z^{2g})^q`.
pub fn phi1<T: Scalar>(genus: usize, sigma: &BraidWord) -> Matrix<T> {
    let blocks = vec![Matrix::identity(2 * genus); sigma.strands()];
    omega_gamma(sigma, &blocks).expect("blocks match strands")
}

/// Both sides of the square relating cabling and twisting.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy<T> {
    /// `φ(qg, cable(σ; μ))`.
    pub twisted_cable: Matrix<T>,
    /// `ω_Γ(σ; φ(g, μ_1), ..., φ(g, μ_q))`.
    pub permuted_blocks: Matrix<T>,
    pub commutes: bool,
}

impl<T: Scalar> Discrepancy<T> {
    /// `twisted_cable - permuted_blocks`.
    pub fn difference(&self) -> Matrix<T> {
        self.twisted_cable
            .checked_add(&self.permuted_blocks.scale(&-T::one()))
            .expect("same shape")
    }
}

pub fn discrepancy<T: Scalar>(genus: usize, sigma: &BraidWord, mus: &[BraidWord]) -> Result<Discrepancy<T>, HomError> {
    let q = sigma.strands();
    let cabled = cable(q, 2 * genus, sigma, mus)?;
    let twisted_cable = phi(q * genus, &cabled)?;
    let fs = mus
        .iter()
        .map(|m| phi(genus, m))
        .collect::<Result<Vec<_>, _>>()?;
    let permuted_blocks = omega_gamma(sigma, &fs)?;
    let commutes = twisted_cable == permuted_blocks;
    Ok(Discrepancy {
        twisted_cable,
        permuted_blocks,
        commutes,
    })
}
