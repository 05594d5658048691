//! Checking that an assignment of generator images respects every relator.

use serde::Serialize;

use super::HomError;
use crate::artin::Presentation;
use crate::braid::{is_trivial, BraidWord};
use crate::linalg::{Matrix, Scalar};
use num_integer::Integer;
use num_rational::Ratio;
use std::marker::PhantomData;

/// A group in which relators can be evaluated.
pub trait GroupTarget {
    type Element: Clone;
    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element, HomError>;
    fn inverse(&self, a: &Self::Element) -> Result<Self::Element, HomError>;
    fn is_identity(&self, a: &Self::Element) -> Result<bool, HomError>;
}

/// `β_n`, with equality decided by [`is_trivial`].
#[derive(Clone, Copy, Debug)]
pub struct BraidTarget {
    pub strands: usize,
}

impl GroupTarget for BraidTarget {
    type Element = BraidWord;

    fn identity(&self) -> BraidWord {
        BraidWord::identity(self.strands)
    }

    fn multiply(&self, a: &BraidWord, b: &BraidWord) -> Result<BraidWord, HomError> {
        Ok(a.then(b)?)
    }

    fn inverse(&self, a: &BraidWord) -> Result<BraidWord, HomError> {
        Ok(a.inverse())
    }

    fn is_identity(&self, a: &BraidWord) -> Result<bool, HomError> {
        Ok(is_trivial(a)?)
    }
}

/// `GL(n)` over an integer type; inverses must be unimodular.
#[derive(Clone, Copy, Debug)]
pub struct IntegerMatrices<T> {
    pub dim: usize,
    _scalar: PhantomData<T>,
}

impl<T> IntegerMatrices<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, _scalar: PhantomData }
    }
}

impl<T: Scalar + Integer + num_traits::Signed> GroupTarget for IntegerMatrices<T> {
    type Element = Matrix<T>;

    fn identity(&self) -> Matrix<T> {
        Matrix::identity(self.dim)
    }

    fn multiply(&self, a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, HomError> {
        Ok(a.checked_mul(b)?)
    }

    fn inverse(&self, a: &Matrix<T>) -> Result<Matrix<T>, HomError> {
        Ok(a.inverse_unimodular()?)
    }

    fn is_identity(&self, a: &Matrix<T>) -> Result<bool, HomError> {
        Ok(a.is_identity())
    }
}

/// `GL(n)` over the rationals of an integer type.
#[derive(Clone, Copy, Debug)]
pub struct RationalMatrices<T> {
    pub dim: usize,
    _scalar: PhantomData<T>,
}

impl<T> RationalMatrices<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, _scalar: PhantomData }
    }
}

impl<T> GroupTarget for RationalMatrices<T>
where
    T: Clone + Integer + std::fmt::Debug + num_traits::Signed,
    Ratio<T>: Scalar,
{
    type Element = Matrix<Ratio<T>>;

    fn identity(&self) -> Self::Element {
        Matrix::identity(self.dim)
    }

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element, HomError> {
        Ok(a.checked_mul(b)?)
    }

    fn inverse(&self, a: &Self::Element) -> Result<Self::Element, HomError> {
        Ok(a.inverse()?)
    }

    fn is_identity(&self, a: &Self::Element) -> Result<bool, HomError> {
        Ok(a.is_identity())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, status: CheckStatus, details: impl Into<String>) {
        self.summary.total += 1;
        match status {
            CheckStatus::Pass => self.summary.passed += 1,
            CheckStatus::Fail => self.summary.failed += 1,
            CheckStatus::Inconclusive => self.summary.inconclusive += 1,
        }
        self.checks.push(Check {
            name: name.into(),
            status,
            details: details.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.inconclusive == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Evaluates every relator of `p` on `images` (one per generator).
///
/// A relator whose evaluation errors (for example an oracle disagreement)
/// is reported as inconclusive rather than aborting the run.
pub fn check_relations<G: GroupTarget>(p: &Presentation, images: &[G::Element], target: &G) -> Result<Report, HomError> {
    if images.len() < p.generator_count() {
        return Err(HomError::MissingImage {
            generator: p.generators()[images.len()].clone(),
        });
    }
    let inverses = images
        .iter()
        .map(|x| target.inverse(x))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::default();
    for r in p.relators() {
        let name = p.word_to_string(r);
        let outcome = r.iter().try_fold(target.identity(), |acc, &l| {
            let i = l.unsigned_abs() as usize - 1;
            let x = if l > 0 { &images[i] } else { &inverses[i] };
            target.multiply(&acc, x)
        });
        match outcome.and_then(|v| target.is_identity(&v)) {
            Ok(true) => report.push(name, CheckStatus::Pass, "maps to the identity"),
            Ok(false) => report.push(name, CheckStatus::Fail, "image is not the identity"),
            Err(e) => report.push(name, CheckStatus::Inconclusive, e.to_string()),
        }
    }
    Ok(report)
}
