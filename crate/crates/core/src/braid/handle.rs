//! Handle reduction for the braid word problem.
//!
//! A `σ_i`-handle is a subword `σ_i^e u σ_i^-e` where `u` only uses
//! generators `σ_j` with `j > i`. Reducing it deletes the outer letters and
//! rewrites every `σ_{i+1}^d` in `u` as `σ_{i+1}^-e σ_i^d σ_{i+1}^e`. Always
//! reducing the handle whose closing letter comes first terminates, and the
//! result is empty iff the braid is trivial: a handle-free nonempty word has a
//! generator of minimal index that occurs with a single sign.

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Position `(open, close)` of the handle with the leftmost closing letter.
fn first_handle(word: &[i32]) -> Option<(usize, usize)> {
    for close in 1..word.len() {
        let i = word[close].abs();
        for open in (0..close).rev() {
            let a = word[open].abs();
            if a > i {
                continue;
            }
            if a == i && word[open] == -word[close] {
                return Some((open, close));
            }
            break;
        }
    }
    None
}

/// Fully handle-reduces a word given as signed generator indices.
pub fn handle_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = free_reduce(word);
    while let Some((open, close)) = first_handle(&w) {
        let i = w[open].abs();
        let e = w[open].signum();
        let mut next = Vec::with_capacity(w.len() + 2 * (close - open));
        next.extend_from_slice(&w[..open]);
        for &l in &w[open + 1..close] {
            if l.abs() == i + 1 {
                next.extend_from_slice(&[-e * (i + 1), l.signum() * i, e * (i + 1)]);
            } else {
                next.push(l);
            }
        }
        next.extend_from_slice(&w[close + 1..]);
        w = free_reduce(&next);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_inverses_vanish() {
        assert!(handle_reduce(&[1, -1]).is_empty());
        assert!(handle_reduce(&[2, -1, 1, -2]).is_empty());
    }

    #[test]
    fn braid_relations_reduce_to_empty() {
        assert!(handle_reduce(&[1, 2, 1, -2, -1, -2]).is_empty());
        assert!(handle_reduce(&[1, 3, -1, -3]).is_empty());
    }

    #[test]
    fn nontrivial_words_survive() {
        assert!(!handle_reduce(&[1]).is_empty());
        assert!(!handle_reduce(&[1, 2, -1, -2]).is_empty());
        assert!(!handle_reduce(&[1, 1, 2, -1, -1, -2]).is_empty());
    }

    #[test]
    fn result_is_handle_free() {
        let r = handle_reduce(&[1, 2, -1, 3, -2, 1, -3, -1, 2]);
        assert!(first_handle(&r).is_none());
    }
}
