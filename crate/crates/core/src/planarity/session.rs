//! Incremental planarity sessions.
//!
//! A session owns a planar edge set and answers "does it stay planar with
//! this edge?" queries; a positive answer commits the edge, a negative one
//! leaves the session untouched. Cheap edge-count rejection over the
//! non-isolated vertices runs before the full test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{edge, Edge, Graph};
use crate::planarity::lr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SessionError {
    /// The initial graph is not planar.
    BaseNotPlanar,
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    EdgeExists { u: usize, v: usize },
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SessionError::BaseNotPlanar => write!(f, "session base graph is not planar"),
            SessionError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            SessionError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            SessionError::EdgeExists { u, v } => write!(f, "edge {{{u},{v}}} already present"),
        }
    }
}

impl core::error::Error for SessionError {}

#[derive(Debug, Clone)]
pub struct PlanaritySession {
    n: usize,
    edges: Vec<Edge>,
    degree: Vec<usize>,
    non_isolated: usize,
}

impl PlanaritySession {
    /// Starts a session over an edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> PlanaritySession {
        PlanaritySession {
            n,
            edges: Vec::new(),
            degree: vec![0; n],
            non_isolated: 0,
        }
    }

    /// Starts a session from an existing planar graph.
    pub fn new(g: &Graph) -> Result<PlanaritySession, SessionError> {
        if !crate::planarity::is_planar(g) {
            return Err(SessionError::BaseNotPlanar);
        }
        let mut s = PlanaritySession::empty(g.vertex_count());
        for (u, v) in g.edges() {
            s.commit(u, v);
        }
        Ok(s)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied())
            .expect("session maintains graph invariants")
    }

    /// Tests whether the tracked graph stays planar with `{u,v}` added, and
    /// commits the edge exactly when the answer is `true`.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool, SessionError> {
        if u == v {
            return Err(SessionError::SelfLoop { vertex: u });
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(SessionError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if self.contains_edge(u, v) {
            return Err(SessionError::EdgeExists {
                u: u.min(v),
                v: u.max(v),
            });
        }
        // edge-count rejection on the non-isolated subgraph
        let grown = self.non_isolated
            + usize::from(self.degree[u] == 0)
            + usize::from(self.degree[v] == 0);
        let m = self.edges.len() + 1;
        if grown >= 3 && m > 3 * grown - 6 {
            return Ok(false);
        }
        self.edges.push(edge(u, v));
        if lr::planar(self.n, &self.edges) {
            self.edges.pop();
            self.commit(u, v);
            Ok(true)
        } else {
            self.edges.pop();
            Ok(false)
        }
    }

    /// Removes and returns the most recently added edge.
    pub fn pop_edge(&mut self) -> Option<Edge> {
        let (u, v) = self.edges.pop()?;
        for w in [u, v] {
            self.degree[w] -= 1;
            if self.degree[w] == 0 {
                self.non_isolated -= 1;
            }
        }
        Some((u, v))
    }

    fn commit(&mut self, u: usize, v: usize) {
        for w in [u, v] {
            if self.degree[w] == 0 {
                self.non_isolated += 1;
            }
            self.degree[w] += 1;
        }
        self.edges.push(edge(u, v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;

    #[test]
    fn empty_session_accepts_any_edge() {
        let mut s = PlanaritySession::empty(4);
        assert_eq!(s.try_add_edge(0, 3), Ok(true));
        assert_eq!(s.edge_count(), 1);
    }

    #[test]
    fn completing_k5_is_rejected_and_state_kept() {
        let base = make_complete(5).unwrap().without_edge(0, 1).unwrap();
        let mut s = PlanaritySession::new(&base).unwrap();
        assert_eq!(s.try_add_edge(0, 1), Ok(false));
        assert_eq!(s.edge_count(), 9);
        assert_eq!(s.to_graph(), base);
    }

    #[test]
    fn saturated_planar_graph_rejects_by_edge_count() {
        // K5 minus an edge has 3n-6 = 9 edges: nothing more fits
        let base = make_complete(5).unwrap().without_edge(0, 1).unwrap();
        let mut s = PlanaritySession::new(&base).unwrap();
        assert_eq!(s.try_add_edge(0, 1), Ok(false));
    }

    #[test]
    fn session_rejects_bad_input() {
        let mut s = PlanaritySession::empty(3);
        assert_eq!(s.try_add_edge(1, 1), Err(SessionError::SelfLoop { vertex: 1 }));
        assert_eq!(
            s.try_add_edge(0, 3),
            Err(SessionError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(s.try_add_edge(0, 1), Ok(true));
        assert_eq!(s.try_add_edge(1, 0), Err(SessionError::EdgeExists { u: 0, v: 1 }));
    }

    #[test]
    fn non_planar_base_is_rejected() {
        let k5 = make_complete(5).unwrap();
        assert_eq!(
            PlanaritySession::new(&k5).err(),
            Some(SessionError::BaseNotPlanar)
        );
    }

    #[test]
    fn pop_undoes_the_last_edge() {
        let mut s = PlanaritySession::empty(3);
        s.try_add_edge(0, 1).unwrap();
        s.try_add_edge(1, 2).unwrap();
        assert_eq!(s.pop_edge(), Some((1, 2)));
        assert_eq!(s.edge_count(), 1);
    }
}
