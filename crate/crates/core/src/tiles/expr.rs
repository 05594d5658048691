use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TileError;

/// The three generating tiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    /// Disc `0 -> 1`, no marked points.
    D,
    /// Pants `2 -> 1`, one marked point joined to all three intervals.
    P,
    /// `1 -> 1`, two marked points joined by an edge; the first faces the
    /// incoming interval, the second the outgoing one.
    F,
}

impl Atom {
    pub fn source(self) -> usize {
        match self {
            Atom::D => 0,
            Atom::P => 2,
            Atom::F => 1,
        }
    }

    pub fn target(self) -> usize {
        1
    }

    pub fn marked_points(self) -> usize {
        match self {
            Atom::D => 0,
            Atom::P => 1,
            Atom::F => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Atom::D => 'D',
            Atom::P => 'P',
            Atom::F => 'F',
        }
    }
}

/// A formal tile term. Construct through [`TileExpr::compose`] and
/// [`TileExpr::union`], or parse, so that arities always match.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TileExpr {
    Atom(Atom),
    Identity(usize),
    /// Left operand first: its outputs feed the right operand's inputs.
    Compose(Box<TileExpr>, Box<TileExpr>),
    /// Disjoint union; the left operand's intervals come first.
    Union(Box<TileExpr>, Box<TileExpr>),
}

impl TileExpr {
    pub fn atom(a: Atom) -> Self {
        TileExpr::Atom(a)
    }

    pub fn identity(n: usize) -> Self {
        TileExpr::Identity(n)
    }

    /// `first ; second`, gluing the outputs of `first` to the inputs of `second`.
    pub fn compose(first: TileExpr, second: TileExpr) -> Result<Self, TileError> {
        if first.target() != second.source() {
            return Err(TileError::Arity {
                expected: first.target(),
                found: second.source(),
            });
        }
        Ok(TileExpr::Compose(Box::new(first), Box::new(second)))
    }

    pub fn union(left: TileExpr, right: TileExpr) -> Self {
        TileExpr::Union(Box::new(left), Box::new(right))
    }

    /// `F ; F ; ... ; F` (`k` times); `1_1` for `k = 0`.
    pub fn f_power(k: usize) -> Self {
        (1..k).fold(
            if k == 0 {
                TileExpr::Identity(1)
            } else {
                TileExpr::Atom(Atom::F)
            },
            |acc, _| TileExpr::Compose(Box::new(acc), Box::new(TileExpr::Atom(Atom::F))),
        )
    }

    pub fn source(&self) -> usize {
        match self {
            TileExpr::Atom(a) => a.source(),
            TileExpr::Identity(n) => *n,
            TileExpr::Compose(a, _) => a.source(),
            TileExpr::Union(a, b) => a.source() + b.source(),
        }
    }

    pub fn target(&self) -> usize {
        match self {
            TileExpr::Atom(a) => a.target(),
            TileExpr::Identity(n) => *n,
            TileExpr::Compose(_, b) => b.target(),
            TileExpr::Union(a, b) => a.target() + b.target(),
        }
    }

    pub fn atom_count(&self) -> usize {
        match self {
            TileExpr::Atom(_) => 1,
            TileExpr::Identity(_) => 0,
            TileExpr::Compose(a, b) | TileExpr::Union(a, b) => a.atom_count() + b.atom_count(),
        }
    }
}

impl fmt::Display for TileExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileExpr::Atom(a) => write!(f, "{}", a.symbol()),
            TileExpr::Identity(n) => write!(f, "1_{n}"),
            TileExpr::Compose(a, b) => {
                write_operand(f, a, matches!(**a, TileExpr::Union(..)))?;
                write!(f, " ; ")?;
                write_operand(f, b, matches!(**b, TileExpr::Union(..) | TileExpr::Compose(..)))
            }
            TileExpr::Union(a, b) => {
                write_operand(f, a, matches!(**a, TileExpr::Compose(..)))?;
                write!(f, " + ")?;
                write_operand(f, b, matches!(**b, TileExpr::Union(..) | TileExpr::Compose(..)))
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &TileExpr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Atom(Atom),
    Identity(usize),
    Semi,
    Plus,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok, String)>, TileError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            'D' => Tok::Atom(Atom::D),
            'P' => Tok::Atom(Atom::P),
            'F' => Tok::Atom(Atom::F),
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '1' if bytes.get(i + 1) == Some(&b'_') => {
                let mut j = i + 2;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n = s[i + 2..j].parse::<usize>().map_err(|_| TileError::Parse {
                    position: start,
                    token: s[start..j].to_string(),
                    message: "expected `1_<n>`".into(),
                })?;
                out.push((start, Tok::Identity(n), s[start..j].to_string()));
                i = j;
                continue;
            }
            _ => {
                let end = s[i..].chars().next().map_or(i + 1, |ch| i + ch.len_utf8());
                return Err(TileError::Parse {
                    position: start,
                    token: s[start..end].to_string(),
                    message: "unexpected character".into(),
                });
            }
        };
        i += 1;
        out.push((start, tok, s[start..i].to_string()));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok, String)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn error(&self, message: &str) -> TileError {
        match self.toks.get(self.pos) {
            Some((p, _, text)) => TileError::Parse {
                position: *p,
                token: text.clone(),
                message: message.into(),
            },
            None => TileError::Parse {
                position: self.len,
                token: String::new(),
                message: message.into(),
            },
        }
    }

    // seq := union (';' union)*
    fn seq(&mut self) -> Result<TileExpr, TileError> {
        let mut acc = self.union()?;
        while self.peek() == Some(&Tok::Semi) {
            let at = self.toks[self.pos].0;
            self.pos += 1;
            let rhs = self.union()?;
            acc = TileExpr::compose(acc, rhs).map_err(|e| match e {
                TileError::Arity { expected, found } => TileError::Parse {
                    position: at,
                    token: ";".into(),
                    message: format!("arity mismatch: left side has {expected} outputs, right side has {found} inputs"),
                },
                other => other,
            })?;
        }
        Ok(acc)
    }

    // union := primary ('+' primary)*
    fn union(&mut self) -> Result<TileExpr, TileError> {
        let mut acc = self.primary()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            let rhs = self.primary()?;
            acc = TileExpr::union(acc, rhs);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<TileExpr, TileError> {
        match self.peek().cloned() {
            Some(Tok::Atom(a)) => {
                self.pos += 1;
                Ok(TileExpr::Atom(a))
            }
            Some(Tok::Identity(n)) => {
                self.pos += 1;
                Ok(TileExpr::Identity(n))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.seq()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error("expected a tile, `1_<n>` or `(`")),
        }
    }
}

impl FromStr for TileExpr {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            toks: lex(s)?,
            pos: 0,
            len: s.len(),
        };
        let e = p.seq()?;
        if p.pos != p.toks.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }
}
