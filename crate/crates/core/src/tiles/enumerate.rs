//! Exhaustive enumeration of small tiles.
//!
//! Tiles are listed up to bare identity strands, which add no marked points.

use super::expr::Atom;
use super::normal::{Node, TileNormalForm};

/// Every planar tree with exactly `n` atoms, in a fixed order.
pub fn trees_with_atoms(n: usize) -> Vec<Node> {
    let mut memo: Vec<Vec<Node>> = vec![Vec::new()];
    for k in 1..=n {
        let next = build(k, &memo);
        memo.push(next);
    }
    memo.swap_remove(n)
}

fn slot_options(k: usize, memo: &[Vec<Node>]) -> Vec<Node> {
    if k == 0 {
        vec![Node::Input]
    } else {
        memo[k].clone()
    }
}

fn build(k: usize, memo: &[Vec<Node>]) -> Vec<Node> {
    let mut out = Vec::new();
    let rest = k - 1;
    if rest == 0 {
        out.push(Node::Atom {
            atom: Atom::D,
            tag: (),
            children: vec![],
        });
    }
    for child in slot_options(rest, memo) {
        out.push(Node::Atom {
            atom: Atom::F,
            tag: (),
            children: vec![child],
        });
    }
    for left in 0..=rest {
        for l in slot_options(left, memo) {
            for r in slot_options(rest - left, memo) {
                out.push(Node::Atom {
                    atom: Atom::P,
                    tag: (),
                    children: vec![l.clone(), r],
                });
            }
        }
    }
    out
}

/// Every forest of nonempty trees with between 1 and `max_atoms` atoms in total.
pub fn forests_up_to(max_atoms: usize) -> Vec<TileNormalForm> {
    let trees: Vec<Vec<Node>> = (0..=max_atoms)
        .map(|k| if k == 0 { Vec::new() } else { trees_with_atoms(k) })
        .collect();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_forests(max_atoms, &trees, &mut prefix, &mut out);
    out
}

fn extend_forests(budget: usize, trees: &[Vec<Node>], prefix: &mut Vec<Node>, out: &mut Vec<TileNormalForm>) {
    for k in 1..=budget {
        for t in &trees[k] {
            prefix.push(t.clone());
            out.push(TileNormalForm::from_roots(prefix.clone()));
            extend_forests(budget - k, trees, prefix, out);
            prefix.pop();
        }
    }
}
