//! Normal forms of tiles.
//!
//! Every generator has exactly one outgoing interval and no symmetries are
//! available, so a tile `n -> m` is the same thing as an ordered list of `m`
//! planar rooted trees whose leaves, read left to right, are the `n`
//! incoming intervals (atoms without inputs are leaves too). Two expressions
//! agree modulo associativity, units and the interchange law exactly when
//! these forests coincide.

use std::fmt;

use super::expr::{Atom, TileExpr};

/// A node of a planar tree; `tag` is `()` in normal forms and carries
/// provenance when tracing marked points back to an expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node<A = ()> {
    /// An incoming interval of the whole tile.
    Input,
    Atom {
        atom: Atom,
        tag: A,
        children: Vec<Node<A>>,
    },
}

impl<A> Node<A> {
    pub fn atom_count(&self) -> usize {
        match self {
            Node::Input => 0,
            Node::Atom { children, .. } => 1 + children.iter().map(Node::atom_count).sum::<usize>(),
        }
    }

    pub fn input_count(&self) -> usize {
        match self {
            Node::Input => 1,
            Node::Atom { children, .. } => children.iter().map(Node::input_count).sum(),
        }
    }

    pub fn marked_points(&self) -> usize {
        match self {
            Node::Input => 0,
            Node::Atom { atom, children, .. } => {
                atom.marked_points() + children.iter().map(Node::marked_points).sum::<usize>()
            }
        }
    }

    fn untagged(&self) -> Node {
        match self {
            Node::Input => Node::Input,
            Node::Atom { atom, children, .. } => Node::Atom {
                atom: *atom,
                tag: (),
                children: children.iter().map(Node::untagged).collect(),
            },
        }
    }
}

/// Canonical form of a tile: source arity plus one planar tree per output.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileNormalForm {
    source: usize,
    roots: Vec<Node>,
}

impl TileNormalForm {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Node] {
        &self.roots
    }

    pub fn atom_count(&self) -> usize {
        self.roots.iter().map(Node::atom_count).sum()
    }

    pub fn marked_points(&self) -> usize {
        self.roots.iter().map(Node::marked_points).sum()
    }

    /// Builds a normal form from trees; the source is the number of input leaves.
    pub fn from_roots(roots: Vec<Node>) -> Self {
        let source = roots.iter().map(Node::input_count).sum();
        Self { source, roots }
    }

    /// A canonical expression with this normal form.
    pub fn to_expr(&self) -> TileExpr {
        let parts = group_inputs(&self.roots);
        join_union(parts).unwrap_or(TileExpr::Identity(0))
    }
}

impl fmt::Display for TileNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn tree_expr(node: &Node) -> TileExpr {
    match node {
        Node::Input => TileExpr::Identity(1),
        Node::Atom { atom, children, .. } => {
            if children.iter().all(|c| matches!(c, Node::Input)) {
                return TileExpr::Atom(*atom);
            }
            let feed = join_union(group_inputs(children)).expect("atom with inputs has children");
            TileExpr::Compose(Box::new(feed), Box::new(TileExpr::Atom(*atom)))
        }
    }
}

/// Expressions for consecutive siblings, with runs of bare inputs merged into `1_n`.
fn group_inputs(nodes: &[Node]) -> Vec<TileExpr> {
    let mut out = Vec::new();
    let mut run = 0;
    for n in nodes {
        if matches!(n, Node::Input) {
            run += 1;
            continue;
        }
        if run > 0 {
            out.push(TileExpr::Identity(run));
            run = 0;
        }
        out.push(tree_expr(n));
    }
    if run > 0 {
        out.push(TileExpr::Identity(run));
    }
    out
}

fn join_union(parts: Vec<TileExpr>) -> Option<TileExpr> {
    parts.into_iter().reduce(TileExpr::union)
}

/// Evaluates an expression on the given input nodes, numbering atoms in
/// their left-to-right order of appearance in the expression.
pub(crate) fn eval(expr: &TileExpr, inputs: Vec<Node<usize>>, next: &mut usize) -> Vec<Node<usize>> {
    match expr {
        TileExpr::Atom(atom) => {
            debug_assert_eq!(inputs.len(), atom.source());
            let tag = *next;
            *next += 1;
            vec![Node::Atom {
                atom: *atom,
                tag,
                children: inputs,
            }]
        }
        TileExpr::Identity(_) => inputs,
        TileExpr::Compose(a, b) => {
            let mid = eval(a, inputs, next);
            eval(b, mid, next)
        }
        TileExpr::Union(a, b) => {
            let mut left = inputs;
            let right = left.split_off(a.source());
            let mut out = eval(a, left, next);
            out.extend(eval(b, right, next));
            out
        }
    }
}

/// The forest of an expression with atoms tagged by their position in the expression.
pub(crate) fn tagged_forest(expr: &TileExpr) -> Vec<Node<usize>> {
    let mut next = 0;
    eval(expr, vec![Node::Input; expr.source()], &mut next)
}

pub fn normal_form(expr: &TileExpr) -> TileNormalForm {
    TileNormalForm {
        source: expr.source(),
        roots: tagged_forest(expr).iter().map(Node::untagged).collect(),
    }
}

/// True iff the two expressions denote the same tile.
pub fn equal_tiles(a: &TileExpr, b: &TileExpr) -> bool {
    normal_form(a) == normal_form(b)
}
