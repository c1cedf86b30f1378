//! Planarity: the ground-truth predicate for every decomposition check.
//!
//! [`is_planar`] is the contract; witnesses (a rotation system for planar
//! graphs, a minimal non-planar edge subset otherwise) are produced on
//! demand by [`check_planarity_with_witness`].

mod embed;
mod lr;
mod session;

use alloc::vec::Vec;

use crate::graph::{Edge, Graph};

pub use embed::Embedding;
pub use session::{PlanaritySession, SessionError};

/// Whether `g` can be drawn in the plane without edge crossings.
pub fn is_planar(g: &Graph) -> bool {
    lr::planar(g.vertex_count(), &g.edges().collect::<Vec<_>>())
}

/// Boolean planarity verdict with optional witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// Rotation system, present for planar graphs when a witness was requested.
    pub embedding: Option<Embedding>,
    /// Edge subset that is itself non-planar (a subdivision of one of the two
    /// minimal obstructions), present for non-planar graphs when requested.
    pub obstruction: Option<Vec<Edge>>,
}

/// Verdict without witnesses.
pub fn check_planarity(g: &Graph) -> PlanarityVerdict {
    PlanarityVerdict {
        planar: is_planar(g),
        embedding: None,
        obstruction: None,
    }
}

/// Verdict with the matching witness computed.
pub fn check_planarity_with_witness(g: &Graph) -> PlanarityVerdict {
    let planar = is_planar(g);
    let edges: Vec<Edge> = g.edges().collect();
    if planar {
        let embedding = embed::embedding(g.vertex_count(), &edges);
        debug_assert!(embedding.is_some(), "embedding exists for planar graphs");
        PlanarityVerdict {
            planar,
            embedding,
            obstruction: None,
        }
    } else {
        PlanarityVerdict {
            planar,
            embedding: None,
            obstruction: Some(obstruction(g.vertex_count(), edges)),
        }
    }
}

/// Shrinks a non-planar edge list to an inclusion-minimal non-planar subset
/// by deleting every edge whose removal keeps the rest non-planar.
fn obstruction(n: usize, mut edges: Vec<Edge>) -> Vec<Edge> {
    debug_assert!(!lr::planar(n, &edges));
    let mut i = 0;
    while i < edges.len() {
        let e = edges.remove(i);
        if lr::planar(n, &edges) {
            edges.insert(i, e);
            i += 1;
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_hypercube};

    #[test]
    fn verdicts_on_fixture_graphs() {
        assert!(is_planar(&make_complete(4).unwrap()));
        assert!(!is_planar(&make_complete(5).unwrap()));
        assert!(!is_planar(&make_complete_bipartite(3, 3).unwrap()));
        assert!(is_planar(&make_hypercube(3).unwrap()));
        assert!(!is_planar(&make_hypercube(4).unwrap()));
    }

    #[test]
    fn k5_obstruction_is_all_of_k5() {
        let k5 = make_complete(5).unwrap();
        let verdict = check_planarity_with_witness(&k5);
        assert!(!verdict.planar);
        assert_eq!(verdict.obstruction.unwrap().len(), 10);
    }

    #[test]
    fn obstruction_inside_a_larger_graph() {
        // K{3,3} plus pendant decorations: obstruction must shrink to 9 edges
        let k33 = make_complete_bipartite(3, 3).unwrap();
        let mut edges: Vec<Edge> = k33.edges().collect();
        edges.push((0, 6));
        edges.push((6, 7));
        let g = Graph::from_edges(8, edges).unwrap();
        let verdict = check_planarity_with_witness(&g);
        let obs = verdict.obstruction.unwrap();
        assert_eq!(obs.len(), 9);
        let sub = Graph::from_edges(8, obs.iter().copied()).unwrap();
        assert!(!is_planar(&sub));
        // every proper subset is planar
        for skip in 0..obs.len() {
            let pruned = obs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &e)| e);
            let h = Graph::from_edges(8, pruned).unwrap();
            assert!(is_planar(&h));
        }
    }

    #[test]
    fn planar_witness_passes_euler() {
        let q3 = make_hypercube(3).unwrap();
        let verdict = check_planarity_with_witness(&q3);
        assert!(verdict.planar);
        assert!(verdict.embedding.unwrap().satisfies_euler(&q3));
    }
}
