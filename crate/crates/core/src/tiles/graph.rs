use serde::Serialize;

use super::expr::{Atom, TileExpr};
use super::normal::{tagged_forest, Node};

/// Where an incomplete half-edge ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    /// Incoming interval of the tile (0-based).
    Input(usize),
    /// Outgoing interval of the tile (0-based).
    Output(usize),
    /// An interval capped by a disc, which carries no half-edge to meet it.
    Disc,
}

/// A marked point of a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    /// 1-based position in the planar order.
    pub label: usize,
    pub atom: Atom,
    /// Index of the owning atom among the atoms of the expression, left to right.
    pub origin: usize,
    /// Which point of the atom: 0 for `P` and the first point of `F`, 1 for the second point of `F`.
    pub slot: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfEdge {
    /// 0-based vertex index.
    pub vertex: usize,
    pub anchor: Anchor,
}

/// The graph `Σ_T` joining the marked points of a tile.
///
/// Vertices are listed in planar order. The order is the post-order of the
/// tile's trees: the points of every input subtree come before the points of
/// the atom they feed, siblings left to right, and within `F` the incoming
/// point before the outgoing one. Every subtree occupies a contiguous block
/// of labels, so edges drawn as arcs on one side of the line never cross.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedGraph {
    vertices: Vec<Vertex>,
    /// Full edges as 0-based `(smaller, larger)` vertex pairs, sorted.
    edges: Vec<(usize, usize)>,
    half_edges: Vec<HalfEdge>,
}

impl MarkedGraph {
    /// A graph on `n` unlabelled points with the given full edges (0-based).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let vertices = (0..n)
            .map(|i| Vertex {
                label: i + 1,
                atom: Atom::P,
                origin: i,
                slot: 0,
            })
            .collect();
        let mut edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        assert!(edges.iter().all(|&(a, b)| a != b && b < n), "edge out of range");
        Self {
            vertices,
            edges,
            half_edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as 1-based label pairs.
    pub fn labelled_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect()
    }

    /// Half-edges not completed by gluing; they are not part of the graph proper.
    pub fn incomplete_half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn edges_meet(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// A forest has exactly `vertices - components` edges.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertex_count()
    }

    /// Vertex index for an `(origin, slot)` pair.
    pub fn find_vertex(&self, origin: usize, slot: usize) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.origin == origin && v.slot == slot)
    }

    /// True iff no two edges interleave as `a < c < b < d` in the planar order.
    pub fn is_noncrossing(&self) -> bool {
        self.edges.iter().all(|&(a, b)| {
            self.edges
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        })
    }
}

struct Builder {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    half_edges: Vec<HalfEdge>,
    inputs_seen: usize,
}

/// What a subtree offers to the interval above it.
enum Upward {
    Point(usize),
    Input(usize),
    Disc,
}

impl Builder {
    fn add_vertex(&mut self, atom: Atom, origin: usize, slot: usize) -> usize {
        let id = self.vertices.len();
        self.vertices.push(Vertex {
            label: id + 1,
            atom,
            origin,
            slot,
        });
        id
    }

    fn visit(&mut self, node: &Node<usize>) -> Upward {
        match node {
            Node::Input => {
                let j = self.inputs_seen;
                self.inputs_seen += 1;
                Upward::Input(j)
            }
            Node::Atom {
                atom,
                tag,
                children,
            } => {
                let below: Vec<Upward> = children.iter().map(|c| self.visit(c)).collect();
                let (incoming, outgoing) = match atom {
                    Atom::D => return Upward::Disc,
                    Atom::P => {
                        let c = self.add_vertex(*atom, *tag, 0);
                        (c, c)
                    }
                    Atom::F => {
                        let a = self.add_vertex(*atom, *tag, 0);
                        let b = self.add_vertex(*atom, *tag, 1);
                        self.edges.push((a, b));
                        (a, b)
                    }
                };
                for up in below {
                    match up {
                        Upward::Point(p) => self.edges.push((p.min(incoming), p.max(incoming))),
                        Upward::Input(j) => self.half_edges.push(HalfEdge {
                            vertex: incoming,
                            anchor: Anchor::Input(j),
                        }),
                        Upward::Disc => self.half_edges.push(HalfEdge {
                            vertex: incoming,
                            anchor: Anchor::Disc,
                        }),
                    }
                }
                Upward::Point(outgoing)
            }
        }
    }
}

/// Builds `Σ_T`: atoms contribute their layouts, and half-edges meeting
/// across a glued interval fuse into a full edge.
pub fn tree_of(expr: &TileExpr) -> MarkedGraph {
    let mut b = Builder {
        vertices: Vec::new(),
        edges: Vec::new(),
        half_edges: Vec::new(),
        inputs_seen: 0,
    };
    for (out, root) in tagged_forest(expr).iter().enumerate() {
        if let Upward::Point(p) = b.visit(root) {
            b.half_edges.push(HalfEdge {
                vertex: p,
                anchor: Anchor::Output(out),
            });
        }
    }
    b.edges.sort_unstable();
    b.half_edges.sort_unstable();
    MarkedGraph {
        vertices: b.vertices,
        edges: b.edges,
        half_edges: b.half_edges,
    }
}
