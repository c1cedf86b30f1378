//! Simple undirected labeled graphs and vertex relabeling maps.
//!
//! Vertices are dense integer labels `0..n`. Graphs are immutable after
//! construction; every operation that "changes" a graph builds a new value.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an endpoint pair into canonical `(min, max)` order.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A generator was asked for a graph with no vertices.
    EmptyOrder,
    /// A bipartite generator was given a zero part size.
    EmptyPart,
    /// Hypercube dimension beyond the size guard.
    DimensionTooLarge { dimension: usize, max: usize },
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    DuplicateEdge { u: usize, v: usize },
    MissingEdge { u: usize, v: usize },
    /// A relabeling map does not cover every vertex of its operand.
    MapDomainMismatch { expected: usize, actual: usize },
    /// Two vertices map to the same target label.
    MapNotInjective { target: usize },
    MapTargetOutOfRange { target: usize, order: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyOrder => write!(f, "graph must have at least one vertex"),
            GraphError::EmptyPart => write!(f, "bipartite part sizes must be positive"),
            GraphError::DimensionTooLarge { dimension, max } => {
                write!(f, "hypercube dimension {dimension} exceeds guard {max}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            GraphError::MissingEdge { u, v } => write!(f, "edge {{{u},{v}}} not present"),
            GraphError::MapDomainMismatch { expected, actual } => {
                write!(f, "map covers {actual} vertices, operand has {expected}")
            }
            GraphError::MapNotInjective { target } => {
                write!(f, "two vertices map to label {target}")
            }
            GraphError::MapTargetOutOfRange { target, order } => {
                write!(f, "map target {target} out of range for order {order}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph: `n` vertices labeled `0..n` and a set of
/// unordered edges with distinct in-range endpoints.
///
/// Equality is label-sensitive: two graphs are equal iff they have the same
/// order and the same edge set, not merely isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates,
    /// and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if !set.insert(edge(u, v)) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Edges in canonical `(min, max)` order, ascending.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbor lists for all vertices, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// A copy of this graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let e = edge(u, v);
        if !self.edges.contains(&e) {
            return Err(GraphError::MissingEdge { u: e.0, v: e.1 });
        }
        let mut edges = self.edges.clone();
        edges.remove(&e);
        Ok(Graph { n: self.n, edges })
    }

    /// A copy of this graph with one edge added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        let mut edges = self.edges.clone();
        if !edges.insert(edge(u, v)) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        Ok(Graph { n: self.n, edges })
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member. Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        crate::connectivity::components(self.n, &self.adjacency())
    }
}

/// Which operand of a two-graph operation a map or flag refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

/// A total injective relabeling of one operand's vertices into the vertex
/// set of a result graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    operand: Operand,
    target_order: usize,
    map: Vec<usize>,
}

impl VertexMap {
    /// Validates injectivity and range; `map[v]` is the target label of
    /// operand vertex `v`.
    pub fn new(
        operand: Operand,
        target_order: usize,
        map: Vec<usize>,
    ) -> Result<VertexMap, GraphError> {
        let mut seen = BTreeSet::new();
        for &t in &map {
            if t >= target_order {
                return Err(GraphError::MapTargetOutOfRange {
                    target: t,
                    order: target_order,
                });
            }
            if !seen.insert(t) {
                return Err(GraphError::MapNotInjective { target: t });
            }
        }
        Ok(VertexMap {
            operand,
            target_order,
            map,
        })
    }

    pub fn operand(&self) -> Operand {
        self.operand
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn apply(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied()
    }

    pub fn apply_edge(&self, (u, v): Edge) -> Option<Edge> {
        Some(edge(self.apply(u)?, self.apply(v)?))
    }

    /// Image labels, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }
}

/// The complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyOrder);
    }
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// The complete bipartite graph `K_{m,n}`; parts are `0..m` and `m..m+n`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::EmptyPart);
    }
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::from_edges(m + n, edges)
}

/// Largest hypercube dimension the generator accepts.
pub const MAX_HYPERCUBE_DIMENSION: usize = 10;

/// The hypercube `Q_d`: vertices are `d`-bit labels, adjacent iff the labels
/// differ in exactly one bit.
pub fn make_hypercube(d: usize) -> Result<Graph, GraphError> {
    if d > MAX_HYPERCUBE_DIMENSION {
        return Err(GraphError::DimensionTooLarge {
            dimension: d,
            max: MAX_HYPERCUBE_DIMENSION,
        });
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v));
    Graph::from_edges(n, edges)
}

/// Disjoint union: the second operand's vertices are relabeled by offset
/// `g1.vertex_count()`. Returns the union and both embedding maps.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> (Graph, VertexMap, VertexMap) {
    let n1 = g1.vertex_count();
    let n = n1 + g2.vertex_count();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    let g = Graph::from_edges(n, edges).expect("operand invariants carry over");
    let map1 = VertexMap::new(Operand::First, n, (0..n1).collect()).expect("identity is injective");
    let map2 = VertexMap::new(Operand::Second, n, (n1..n).collect()).expect("offset is injective");
    (g, map1, map2)
}

/// The isomorphic copy of `g` under a total injective relabeling.
pub fn induced_relabel(g: &Graph, map: &VertexMap) -> Result<Graph, GraphError> {
    if map.domain_order() != g.vertex_count() {
        return Err(GraphError::MapDomainMismatch {
            expected: g.vertex_count(),
            actual: map.domain_order(),
        });
    }
    let edges = g.edges().map(|(u, v)| {
        let u = map.apply(u).expect("domain checked");
        let v = map.apply(v).expect("domain checked");
        (u, v)
    });
    Graph::from_edges(map.target_order(), edges.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        let k1 = make_complete(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let k4 = make_complete(4).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let k9 = make_complete(9).unwrap();
        assert_eq!((k9.vertex_count(), k9.edge_count()), (9, 36));
    }

    #[test]
    fn complete_graph_rejects_zero() {
        assert_eq!(make_complete(0), Err(GraphError::EmptyOrder));
    }

    #[test]
    fn bipartite_counts_and_parts() {
        let k11 = make_complete_bipartite(1, 1).unwrap();
        assert_eq!((k11.vertex_count(), k11.edge_count()), (2, 1));
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        let k44 = make_complete_bipartite(4, 4).unwrap();
        assert_eq!((k44.vertex_count(), k44.edge_count()), (8, 16));
        // no edges inside a part
        assert!(!k33.has_edge(0, 1));
        assert!(!k33.has_edge(3, 4));
        assert!(k33.has_edge(0, 3));
    }

    #[test]
    fn bipartite_rejects_empty_part() {
        assert_eq!(make_complete_bipartite(0, 3), Err(GraphError::EmptyPart));
        assert_eq!(make_complete_bipartite(3, 0), Err(GraphError::EmptyPart));
    }

    #[test]
    fn hypercube_counts() {
        let q0 = make_hypercube(0).unwrap();
        assert_eq!((q0.vertex_count(), q0.edge_count()), (1, 0));
        let q3 = make_hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let q4 = make_hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
    }

    #[test]
    fn hypercube_guard() {
        assert!(make_hypercube(10).is_ok());
        assert_eq!(
            make_hypercube(11),
            Err(GraphError::DimensionTooLarge {
                dimension: 11,
                max: 10
            })
        );
    }

    #[test]
    fn from_edges_validation() {
        assert_eq!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn disjoint_union_counts_and_maps() {
        let k1 = make_complete(1).unwrap();
        let (u, _, _) = disjoint_union(&k1, &k1);
        assert_eq!((u.vertex_count(), u.edge_count()), (2, 0));

        let k3 = make_complete(3).unwrap();
        let (u, m1, m2) = disjoint_union(&k3, &k3);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));
        let mut image: Vec<usize> = m1.image();
        image.extend(m2.image());
        image.sort_unstable();
        assert_eq!(image, (0..6).collect::<Vec<_>>());

        let k5 = make_complete(5).unwrap();
        let k4 = make_complete(4).unwrap();
        let (u, _, _) = disjoint_union(&k5, &k4);
        assert_eq!((u.vertex_count(), u.edge_count()), (9, 16));
    }

    #[test]
    fn relabel_identity_and_swap() {
        let k4 = make_complete(4).unwrap();
        let id = VertexMap::new(Operand::First, 4, (0..4).collect()).unwrap();
        assert_eq!(induced_relabel(&k4, &id).unwrap(), k4);

        // path 0-1-2 with endpoints swapped is the path 2-1-0, same value
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let swap = VertexMap::new(Operand::First, 3, alloc::vec![2, 1, 0]).unwrap();
        let relabeled = induced_relabel(&p3, &swap).unwrap();
        assert_eq!(relabeled.edge_count(), 2);
        assert_eq!(relabeled, p3);

        // swapping a leaf with the middle changes the labeled value
        let swap_mid = VertexMap::new(Operand::First, 3, alloc::vec![1, 0, 2]).unwrap();
        let star = induced_relabel(&p3, &swap_mid).unwrap();
        assert!(star.has_edge(0, 1) && star.has_edge(0, 2));
    }

    #[test]
    fn relabel_rejects_bad_maps() {
        let k4 = make_complete(4).unwrap();
        let short = VertexMap::new(Operand::First, 4, alloc::vec![0, 1, 2]).unwrap();
        assert_eq!(
            induced_relabel(&k4, &short),
            Err(GraphError::MapDomainMismatch {
                expected: 4,
                actual: 3
            })
        );
        assert_eq!(
            VertexMap::new(Operand::First, 4, alloc::vec![0, 1, 1, 2]),
            Err(GraphError::MapNotInjective { target: 1 })
        );
        assert_eq!(
            VertexMap::new(Operand::First, 3, alloc::vec![0, 1, 3]),
            Err(GraphError::MapTargetOutOfRange { target: 3, order: 3 })
        );
    }

    #[test]
    fn components_split_isolated_vertices() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, alloc::vec![alloc::vec![0, 1, 2], alloc::vec![3], alloc::vec![4]]);
    }
}
