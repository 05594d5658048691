use std::fmt;
use std::str::FromStr;

use super::BraidError;

/// A braid generator `σ_i` or its inverse; `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self {
            index,
            inverse: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Self {
            index,
            inverse: true,
        }
    }

    /// `+i` for `σ_i`, `-i` for `σ_i^-1`.
    pub fn from_signed(s: i32) -> Self {
        assert!(s != 0, "generator index 0 does not exist");
        Self {
            index: s.unsigned_abs() as usize,
            inverse: s < 0,
        }
    }

    pub fn signed(self) -> i32 {
        let i = self.index as i32;
        if self.inverse {
            -i
        } else {
            i
        }
    }

    pub fn inv(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the standard generators of the braid group on `strands` strands.
///
/// Products are read left to right: in `w1 * w2` the letters of `w1` act first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self, BraidError> {
        if letters.contains(&0) {
            return Err(BraidError::GeneratorOutOfRange { index: 0, strands });
        }
        Self::new(strands, letters.iter().map(|&s| Letter::from_signed(s)).collect())
    }

    pub fn generator(strands: usize, index: usize) -> Result<Self, BraidError> {
        Self::new(strands, vec![Letter::pos(index)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                expected: self.strands,
                found: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn push(&mut self, letter: Letter) -> Result<(), BraidError> {
        if letter.index == 0 || letter.index >= self.strands {
            return Err(BraidError::GeneratorOutOfRange {
                index: letter.index,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn pow(&self, exp: i32) -> Self {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Re-index onto `strands` strands, moving every generator up by `offset`.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<Self, BraidError> {
        Self::new(
            strands,
            self.letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    inverse: l.inverse,
                })
                .collect(),
        )
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// Image under the automorphism `σ_i ↦ σ_i^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inv()).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}:", self.strands)?;
        if self.letters.is_empty() {
            return write!(f, " e");
        }
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `b<n>: s1 s2^-1 s1`; the identity is `b<n>: e`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |position: usize, token: &str, message: &str| BraidError::Parse {
            position,
            token: token.to_string(),
            message: message.to_string(),
        };
        let lead = s.len() - s.trim_start().len();
        let Some(colon) = s.find(':') else {
            return Err(parse_err(lead, s.trim(), "expected `b<n>:` header"));
        };
        let header = s[..colon].trim();
        let strands = header
            .strip_prefix('b')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err(lead, header, "expected `b<n>` with n >= 1"))?;

        let body = &s[colon + 1..];
        let mut letters = Vec::new();
        let mut saw_identity = false;
        for (offset, token) in tokens(body) {
            let position = colon + 1 + offset;
            if token == "e" {
                if saw_identity || !letters.is_empty() {
                    return Err(parse_err(position, token, "`e` must be the only letter"));
                }
                saw_identity = true;
                continue;
            }
            if saw_identity {
                return Err(parse_err(position, token, "`e` must be the only letter"));
            }
            let (gen, inverse) = match token.strip_suffix("^-1") {
                Some(g) => (g, true),
                None => (token, false),
            };
            let index = gen
                .strip_prefix('s')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| parse_err(position, token, "expected `s<i>` or `s<i>^-1`"))?;
            if index == 0 || index >= strands {
                return Err(parse_err(
                    position,
                    token,
                    &format!("generator out of range for {strands} strands"),
                ));
            }
            letters.push(Letter { index, inverse });
        }
        if letters.is_empty() && !saw_identity {
            return Err(parse_err(s.len(), "", "empty word must be written `e`"));
        }
        Ok(Self { strands, letters })
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize, t))
}
