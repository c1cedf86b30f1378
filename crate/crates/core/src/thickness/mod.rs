//! Planar decompositions and graph thickness.
//!
//! The thickness of a graph is the least number of planar spanning subgraphs
//! whose edge sets partition its edge set. An edgeless graph has thickness 0,
//! a planar graph with edges has thickness 1.

mod solver;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{edge, Edge, Graph};
use crate::planarity::{is_planar, PlanaritySession};

pub use solver::{exact_thickness, Budget, SolveOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThicknessError {
    /// The solver budget allows no work at all.
    InvalidBudget,
    ZeroFamilyParameter { family: &'static str },
    FamilyOutOfRange { family: &'static str, limit: usize },
}

impl fmt::Display for ThicknessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThicknessError::InvalidBudget => write!(f, "budget must be positive"),
            ThicknessError::ZeroFamilyParameter { family } => {
                write!(f, "{family} family requires positive parameters")
            }
            ThicknessError::FamilyOutOfRange { family, limit } => {
                write!(f, "{family} parameters beyond supported bound {limit}")
            }
        }
    }
}

impl core::error::Error for ThicknessError {}

/// An ordered partition of a base graph's edges; each part is meant to induce
/// a planar spanning subgraph. Empty parts are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDecomposition {
    base: Graph,
    parts: Vec<Vec<Edge>>,
}

impl PlanarDecomposition {
    /// Wraps the given parts; endpoint pairs are normalized and each part is
    /// sorted. No validity checking happens here — see
    /// [`validate_decomposition`].
    pub fn new(base: Graph, parts: Vec<Vec<(usize, usize)>>) -> PlanarDecomposition {
        let parts = parts
            .into_iter()
            .map(|p| {
                let mut p: Vec<Edge> = p.into_iter().map(|(u, v)| edge(u, v)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        PlanarDecomposition { base, parts }
    }

    /// Zero parts over an edgeless-or-not base.
    pub fn empty(base: Graph) -> PlanarDecomposition {
        PlanarDecomposition {
            base,
            parts: Vec::new(),
        }
    }

    /// All edges in one part.
    pub fn single_part(base: Graph) -> PlanarDecomposition {
        let part: Vec<Edge> = base.edges().collect();
        PlanarDecomposition {
            base,
            parts: alloc::vec![part],
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[Vec<Edge>] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn nonempty_part_count(&self) -> usize {
        self.parts.iter().filter(|p| !p.is_empty()).count()
    }

    /// The spanning subgraph induced by part `i` (all base vertices, that
    /// part's edges, duplicates collapsed).
    pub fn part_graph(&self, i: usize) -> Graph {
        let set: alloc::collections::BTreeSet<Edge> = self.parts[i].iter().copied().collect();
        Graph::from_edges(self.base.vertex_count(), set)
            .expect("normalized part edges are simple")
    }
}

/// Outcome of checking a decomposition against its base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Every base edge appears in some part.
    pub complete: bool,
    /// No edge appears more than once across (or within) parts.
    pub disjoint: bool,
    /// Every part edge is an edge of the base graph.
    pub edges_in_base: bool,
    pub parts_planar: Vec<bool>,
    pub missing_edges: usize,
    pub duplicated_edges: usize,
    pub foreign_edges: usize,
    pub empty_parts: usize,
    pub nonempty_parts: usize,
}

impl DecompositionReport {
    pub fn passes(&self) -> bool {
        self.complete && self.disjoint && self.edges_in_base && self.parts_planar.iter().all(|&p| p)
    }
}

/// Checks partition completeness, pairwise disjointness, and per-part
/// planarity. Failures are report entries, not errors; parts may contain
/// arbitrary junk (self-loops, out-of-range labels), which counts as
/// foreign and is excluded from the planarity check.
pub fn validate_decomposition(d: &PlanarDecomposition) -> DecompositionReport {
    let n = d.base().vertex_count();
    let mut counts: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut foreign = 0usize;
    for part in d.parts() {
        for &e in part {
            *counts.entry(e).or_insert(0) += 1;
            if !(e.0 < n && e.1 < n && e.0 != e.1) || !d.base().has_edge(e.0, e.1) {
                foreign += 1;
            }
        }
    }
    let missing = d
        .base()
        .edges()
        .filter(|e| !counts.contains_key(e))
        .count();
    let duplicated = counts.values().filter(|&&c| c > 1).count();
    let parts_planar: Vec<bool> = d
        .parts()
        .iter()
        .map(|part| {
            let kept: alloc::collections::BTreeSet<Edge> = part
                .iter()
                .copied()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .collect();
            is_planar(&Graph::from_edges(n, kept).expect("filtered edges are simple"))
        })
        .collect();
    let empty_parts = d.part_count() - d.nonempty_part_count();
    DecompositionReport {
        complete: missing == 0,
        disjoint: duplicated == 0,
        edges_in_base: foreign == 0,
        parts_planar,
        missing_edges: missing,
        duplicated_edges: duplicated,
        foreign_edges: foreign,
        empty_parts,
        nonempty_parts: d.nonempty_part_count(),
    }
}

/// Counting lower bound: a planar simple graph on `n >= 3` vertices has at
/// most `3n - 6` edges, so at least `ceil(m / (3n - 6))` parts are needed.
pub fn euler_lower_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    let n = g.vertex_count();
    if m == 0 {
        0
    } else if n < 3 {
        1
    } else {
        m.div_ceil(3 * n - 6)
    }
}

/// How a certificate's lower bound was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBoundKind {
    /// Value settled by a planarity check (thickness 0, 1, or "at least 2").
    PlanarCheck,
    /// The edge-count bound forced the value.
    Euler,
    /// Search proved that one part fewer is impossible.
    Exhaustion,
}

impl LowerBoundKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LowerBoundKind::PlanarCheck => "planar-check",
            LowerBoundKind::Euler => "euler",
            LowerBoundKind::Exhaustion => "exhaustion",
        }
    }
}

impl fmt::Display for LowerBoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateStatus {
    Exact,
    Bounded,
}

impl CertificateStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateStatus::Exact => "exact",
            CertificateStatus::Bounded => "bounded",
        }
    }
}

impl fmt::Display for CertificateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A thickness value together with a validating witness decomposition and
/// the evidence for the matching lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessCertificate {
    pub value: usize,
    pub lower_bound: usize,
    pub lower_bound_kind: LowerBoundKind,
    pub status: CertificateStatus,
    /// Upper-bound witness with exactly `value` non-empty parts.
    pub witness: PlanarDecomposition,
}

impl ThicknessCertificate {
    pub fn is_exact(&self) -> bool {
        self.status == CertificateStatus::Exact
    }
}

/// Deterministic solver edge order: descending endpoint-degree sum, ties by
/// label. Fixed as part of the certificate contract.
pub(crate) fn edge_order(g: &Graph) -> Vec<Edge> {
    let mut deg = alloc::vec![0usize; g.vertex_count()];
    for (u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (core::cmp::Reverse(deg[u] + deg[v]), u, v));
    edges
}

/// Upper-bound decomposition: repeatedly strip a maximal planar subgraph
/// (greedy edge addition in the solver order) from the remaining edges.
/// Every part is non-empty; an edgeless graph yields zero parts.
pub fn heuristic_thickness(g: &Graph) -> PlanarDecomposition {
    let mut remaining = edge_order(g);
    let mut parts: Vec<Vec<(usize, usize)>> = Vec::new();
    while !remaining.is_empty() {
        let mut session = PlanaritySession::empty(g.vertex_count());
        let mut part = Vec::new();
        let mut rest = Vec::new();
        for (u, v) in remaining {
            if session.try_add_edge(u, v).expect("edges come from a valid graph") {
                part.push((u, v));
            } else {
                rest.push((u, v));
            }
        }
        parts.push(part);
        remaining = rest;
    }
    PlanarDecomposition::new(g.clone(), parts)
}

/// Graph families with closed-form thickness values from the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Hypercube { d: usize },
}

/// Largest smaller-side size accepted for the complete bipartite closed form.
pub const MAX_BIPARTITE_MIN_SIDE: usize = 6;

/// Literature closed-form thickness for the supported families:
/// `floor((n+7)/6)` for complete graphs except n in {9,10} where it is 3;
/// `ceil(mn / (2(m+n-2)))` for complete bipartite graphs (smaller side at
/// most 6); `ceil((d+1)/4)` for hypercubes. Edgeless degenerate members
/// (`K_1`, `Q_0`) report 0, consistent with the solver's convention.
pub fn thickness_oracle(family: GraphFamily) -> Result<usize, ThicknessError> {
    match family {
        GraphFamily::Complete { n } => {
            if n == 0 {
                return Err(ThicknessError::ZeroFamilyParameter { family: "complete" });
            }
            Ok(match n {
                1 => 0,
                9 | 10 => 3,
                _ => (n + 7) / 6,
            })
        }
        GraphFamily::CompleteBipartite { m, n } => {
            if m == 0 || n == 0 {
                return Err(ThicknessError::ZeroFamilyParameter {
                    family: "complete-bipartite",
                });
            }
            if m.min(n) > MAX_BIPARTITE_MIN_SIDE {
                return Err(ThicknessError::FamilyOutOfRange {
                    family: "complete-bipartite",
                    limit: MAX_BIPARTITE_MIN_SIDE,
                });
            }
            if m == 1 && n == 1 {
                return Ok(1);
            }
            Ok((m * n).div_ceil(2 * (m + n - 2)))
        }
        GraphFamily::Hypercube { d } => {
            if d > crate::graph::MAX_HYPERCUBE_DIMENSION {
                return Err(ThicknessError::FamilyOutOfRange {
                    family: "hypercube",
                    limit: crate::graph::MAX_HYPERCUBE_DIMENSION,
                });
            }
            Ok(if d == 0 { 0 } else { (d + 1).div_ceil(4) })
        }
    }
}
