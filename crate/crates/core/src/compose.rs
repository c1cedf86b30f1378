//! Composing planar decompositions across amalgamations.
//!
//! Given validating decompositions of the two operands, each composer builds
//! a decomposition of the amalgamated graph whose part count realizes the
//! kind's upper bound:
//!
//! - vertex and bar: `max(k1, k2)` parts, gluing the i-th parts pairwise
//!   (the bar edge joins the first part);
//! - edge: `k1 + k2 - 1` parts — the two parts carrying the identified edge
//!   fuse into one, the next `min-1` index pairs split into two parts each,
//!   and the longer operand's tail passes through;
//! - two-vertex: at most `k1 + k2` parts — concatenation, then a greedy pass
//!   merges operand parts whose union stays planar.
//!
//! Minimality is not claimed: the amalgam's exact thickness may be smaller
//! for the edge and two-vertex kinds.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::amalgamation::{
    amalgamate, AmalgamationError, AmalgamationKind, AmalgamationResult, AmalgamationSpec,
};
use crate::graph::{Edge, Graph, Operand, VertexMap};
use crate::planarity::is_planar;
use crate::thickness::{validate_decomposition, PlanarDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComposeError {
    /// An operand decomposition failed validation.
    InvalidOperand { operand: Operand },
    /// The spec kind does not match the composer that was called.
    KindMismatch {
        expected: AmalgamationKind,
        actual: AmalgamationKind,
    },
    Amalgamation(AmalgamationError),
    /// The composed decomposition failed validation. This cannot happen for
    /// valid inputs; it indicates a defect worth reporting.
    InvariantViolated { kind: AmalgamationKind },
}

impl fmt::Display for ComposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComposeError::InvalidOperand { operand } => {
                let name = match operand {
                    Operand::First => "first",
                    Operand::Second => "second",
                };
                write!(f, "{name} operand decomposition does not validate")
            }
            ComposeError::KindMismatch { expected, actual } => {
                write!(f, "composer for {expected} got a {actual} spec")
            }
            ComposeError::Amalgamation(e) => write!(f, "{e}"),
            ComposeError::InvariantViolated { kind } => {
                write!(f, "composed {kind} decomposition failed validation")
            }
        }
    }
}

impl core::error::Error for ComposeError {}

impl From<AmalgamationError> for ComposeError {
    fn from(e: AmalgamationError) -> ComposeError {
        ComposeError::Amalgamation(e)
    }
}

/// A composed decomposition together with the bound it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionOutcome {
    pub decomposition: PlanarDecomposition,
    /// The kind's upper-bound part count (the output's total part count for
    /// the vertex, bar, and edge kinds; an upper limit for two-vertex).
    pub claimed_size: usize,
    pub kind: AmalgamationKind,
}

fn check_operands(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
) -> Result<(), ComposeError> {
    if !validate_decomposition(d1).passes() {
        return Err(ComposeError::InvalidOperand {
            operand: Operand::First,
        });
    }
    if !validate_decomposition(d2).passes() {
        return Err(ComposeError::InvalidOperand {
            operand: Operand::Second,
        });
    }
    Ok(())
}

fn mapped_part(part: &[Edge], map: &VertexMap) -> BTreeSet<Edge> {
    part.iter()
        .map(|&e| map.apply_edge(e).expect("operand vertices are mapped"))
        .collect()
}

fn finish(
    amalgam: &AmalgamationResult,
    parts: Vec<BTreeSet<Edge>>,
    claimed_size: usize,
    kind: AmalgamationKind,
) -> Result<CompositionOutcome, ComposeError> {
    let parts: Vec<Vec<(usize, usize)>> = parts
        .into_iter()
        .map(|p| p.into_iter().collect())
        .collect();
    let decomposition = PlanarDecomposition::new(amalgam.graph.clone(), parts);
    if !validate_decomposition(&decomposition).passes()
        || decomposition.nonempty_part_count() > claimed_size
    {
        return Err(ComposeError::InvariantViolated { kind });
    }
    Ok(CompositionOutcome {
        decomposition,
        claimed_size,
        kind,
    })
}

/// Pairwise union of the i-th parts across a vertex or bar amalgamation,
/// padding the shorter decomposition with empty parts; for the bar kind the
/// new edge joins part 0.
fn compose_pairwise(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    check_operands(d1, d2)?;
    let amalgam = amalgamate(d1.base(), d2.base(), spec)?;
    let (k1, k2) = (d1.part_count(), d2.part_count());
    let mut k = k1.max(k2);
    if amalgam.bar_edge.is_some() {
        // the bar edge needs a home even if both operands are edgeless
        k = k.max(1);
    }
    let mut parts: Vec<BTreeSet<Edge>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut part = BTreeSet::new();
        if let Some(p) = d1.parts().get(i) {
            part.extend(mapped_part(p, &amalgam.map1));
        }
        if let Some(p) = d2.parts().get(i) {
            part.extend(mapped_part(p, &amalgam.map2));
        }
        parts.push(part);
    }
    if let Some(bar) = amalgam.bar_edge {
        parts[0].insert(bar);
    }
    let claimed = k;
    finish(&amalgam, parts, claimed, spec.kind())
}

/// Composer for vertex amalgamations: exactly `max(k1, k2)` parts, each the
/// shared-vertex union of the operands' i-th parts.
pub fn compose_vertex(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    if spec.kind() != AmalgamationKind::Vertex {
        return Err(ComposeError::KindMismatch {
            expected: AmalgamationKind::Vertex,
            actual: spec.kind(),
        });
    }
    compose_pairwise(d1, d2, spec)
}

/// Composer for bar amalgamations: exactly `max(k1, k2)` parts with the bar
/// edge added to part 0.
pub fn compose_bar(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    if spec.kind() != AmalgamationKind::Bar {
        return Err(ComposeError::KindMismatch {
            expected: AmalgamationKind::Bar,
            actual: spec.kind(),
        });
    }
    compose_pairwise(d1, d2, spec)
}

/// Composer for edge amalgamations: exactly `k1 + k2 - 1` parts.
///
/// The parts holding the identified edge are brought to the front of each
/// operand (a valid decomposition carries it in exactly one part) and fuse
/// into the output's first part. Each further index present in both operands
/// contributes its two parts separately — the direct two-part split of their
/// two-vertex union — and the longer operand's remaining parts pass through.
pub fn compose_edge(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    let (e1, e2) = match *spec {
        AmalgamationSpec::Edge { e1, e2 } => (e1, e2),
        _ => {
            return Err(ComposeError::KindMismatch {
                expected: AmalgamationKind::Edge,
                actual: spec.kind(),
            })
        }
    };
    check_operands(d1, d2)?;
    let amalgam = amalgamate(d1.base(), d2.base(), spec)?;

    let locate = |d: &PlanarDecomposition, e: (usize, usize)| -> usize {
        let e = crate::graph::edge(e.0, e.1);
        d.parts()
            .iter()
            .position(|p| p.contains(&e))
            .expect("a validated decomposition covers the identified edge")
    };
    let mut parts1: Vec<Vec<Edge>> = d1.parts().to_vec();
    parts1.swap(0, locate(d1, e1));
    let mut parts2: Vec<Vec<Edge>> = d2.parts().to_vec();
    parts2.swap(0, locate(d2, e2));

    // longer operand first: by non-empty part count, ties by operand order
    let first_is_longer = d1.nonempty_part_count() >= d2.nonempty_part_count();
    let (pa, ma, pb, mb) = if first_is_longer {
        (&parts1, &amalgam.map1, &parts2, &amalgam.map2)
    } else {
        (&parts2, &amalgam.map2, &parts1, &amalgam.map1)
    };
    let (ka, kb) = (pa.len(), pb.len());
    debug_assert!(kb >= 1, "both operands contain the identified edge");

    let mut parts: Vec<BTreeSet<Edge>> = Vec::with_capacity(ka + kb - 1);
    let mut fused = mapped_part(&pa[0], ma);
    fused.extend(mapped_part(&pb[0], mb));
    parts.push(fused);
    for i in 1..ka.max(kb) {
        if let Some(p) = pa.get(i) {
            parts.push(mapped_part(p, ma));
        }
        if let Some(p) = pb.get(i) {
            parts.push(mapped_part(p, mb));
        }
    }
    debug_assert_eq!(parts.len(), ka + kb - 1);
    finish(&amalgam, parts, ka + kb - 1, AmalgamationKind::Edge)
}

/// Composer for two-vertex amalgamations: at most `k1 + k2` parts.
///
/// Baseline is the concatenation of both operands' relabeled parts; a greedy
/// pass then merges each first-operand part with the first unused
/// second-operand part whose union stays planar.
pub fn compose_two_vertex(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    if spec.kind() != AmalgamationKind::TwoVertex {
        return Err(ComposeError::KindMismatch {
            expected: AmalgamationKind::TwoVertex,
            actual: spec.kind(),
        });
    }
    check_operands(d1, d2)?;
    let amalgam = amalgamate(d1.base(), d2.base(), spec)?;
    let n = amalgam.graph.vertex_count();
    let parts1: Vec<BTreeSet<Edge>> = d1
        .parts()
        .iter()
        .map(|p| mapped_part(p, &amalgam.map1))
        .collect();
    let parts2: Vec<BTreeSet<Edge>> = d2
        .parts()
        .iter()
        .map(|p| mapped_part(p, &amalgam.map2))
        .collect();

    let mut used = alloc::vec![false; parts2.len()];
    let mut parts: Vec<BTreeSet<Edge>> = Vec::new();
    for part in &parts1 {
        let mut merged = part.clone();
        for (j, candidate) in parts2.iter().enumerate() {
            if used[j] {
                continue;
            }
            let mut union = merged.clone();
            union.extend(candidate.iter().copied());
            let g = Graph::from_edges(n, union.iter().copied())
                .expect("parts of the amalgam are simple");
            if is_planar(&g) {
                merged = union;
                used[j] = true;
                break;
            }
        }
        parts.push(merged);
    }
    for (j, part) in parts2.into_iter().enumerate() {
        if !used[j] {
            parts.push(part);
        }
    }
    let claimed = d1.part_count() + d2.part_count();
    finish(&amalgam, parts, claimed, AmalgamationKind::TwoVertex)
}

/// Dispatches to the composer matching the spec's kind.
pub fn compose(
    d1: &PlanarDecomposition,
    d2: &PlanarDecomposition,
    spec: &AmalgamationSpec,
) -> Result<CompositionOutcome, ComposeError> {
    match spec.kind() {
        AmalgamationKind::Vertex => compose_vertex(d1, d2, spec),
        AmalgamationKind::TwoVertex => compose_two_vertex(d1, d2, spec),
        AmalgamationKind::Edge => compose_edge(d1, d2, spec),
        AmalgamationKind::Bar => compose_bar(d1, d2, spec),
    }
}
