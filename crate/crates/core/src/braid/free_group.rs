use std::fmt;

use super::{BraidWord, Letter};

/// Freely reduced word over `x_1^{±1}, ..., x_n^{±1}`; letter `±j` is `x_j^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generator(j: usize) -> Self {
        Self(vec![j as i32])
    }

    /// Reduces on construction.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    fn extend_inverse(&mut self, w: &FreeWord) {
        for &l in w.0.iter().rev() {
            self.push(-l);
        }
    }

    fn extend(&mut self, w: &FreeWord) {
        for &l in &w.0 {
            self.push(l);
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Endomorphism of the free group `F_n` given by the images of its generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeGroupEndo {
    images: Vec<FreeWord>,
}

impl FreeGroupEndo {
    pub fn identity(rank: usize) -> Self {
        Self {
            images: (1..=rank).map(FreeWord::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        Self { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, w)| w.0.len() == 1 && w.0[0] == j as i32 + 1)
    }

    /// Substitutes the generator images into `w`.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for &l in &w.0 {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend(img);
            } else {
                out.extend_inverse(img);
            }
        }
        out
    }

    /// `self` acts first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|w| other.apply(w)).collect(),
        }
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

impl fmt::Display for FreeGroupEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, w) in self.images.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {}", j + 1, w)?;
        }
        Ok(())
    }
}

/// Pushes the substitution for a single braid letter onto every current image.
fn act(images: &mut [FreeWord], letter: Letter) {
    let i = letter.index as i32;
    let j = i + 1;
    for w in images.iter_mut() {
        if !w.0.iter().any(|&l| l.abs() == i || l.abs() == j) {
            continue;
        }
        let mut out = FreeWord::empty();
        for &l in &w.0 {
            let a = l.abs();
            let piece: &[i32] = match (a == i, a == j, letter.inverse) {
                // σ_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
                (true, _, false) => &[i, j, -i],
                (_, true, false) => &[i],
                // σ_i^-1: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
                (true, _, true) => &[j],
                (_, true, true) => &[-j, i, j],
                _ => {
                    out.push(l);
                    continue;
                }
            };
            if l > 0 {
                for &p in piece {
                    out.push(p);
                }
            } else {
                for &p in piece.iter().rev() {
                    out.push(-p);
                }
            }
        }
        *w = out;
    }
}

/// Right action of a braid on the free group of rank `strands`; the leftmost
/// letter acts first.
pub fn artin_action(w: &BraidWord) -> FreeGroupEndo {
    let mut images: Vec<FreeWord> = (1..=w.strands()).map(FreeWord::generator).collect();
    for &l in w.letters() {
        act(&mut images, l);
    }
    FreeGroupEndo { images }
}

/// Like [`artin_action`], but gives up once the summed length of the images
/// over all steps exceeds `budget`.
pub fn artin_action_bounded(w: &BraidWord, budget: usize) -> Option<FreeGroupEndo> {
    let mut images: Vec<FreeWord> = (1..=w.strands()).map(FreeWord::generator).collect();
    let mut spent = 0usize;
    for &l in w.letters() {
        act(&mut images, l);
        spent += images.iter().map(FreeWord::len).sum::<usize>();
        if spent > budget {
            return None;
        }
    }
    Some(FreeGroupEndo { images })
}
