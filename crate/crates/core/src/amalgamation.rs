//! The four graph amalgamations.
//!
//! Two operand graphs are glued along identification data: a single vertex,
//! two vertices, an edge, or nothing at all plus one new connecting edge
//! (bar). Labeling convention: the first operand keeps its labels `0..n1`,
//! identified vertices keep the first operand's labels, and the second
//! operand's remaining vertices follow from `n1` upward in label order.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{edge, Edge, Graph, Operand, VertexMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AmalgamationKind {
    Vertex,
    TwoVertex,
    Edge,
    Bar,
}

impl AmalgamationKind {
    pub const ALL: [AmalgamationKind; 4] = [
        AmalgamationKind::Vertex,
        AmalgamationKind::TwoVertex,
        AmalgamationKind::Edge,
        AmalgamationKind::Bar,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            AmalgamationKind::Vertex => "vertex",
            AmalgamationKind::TwoVertex => "2vertex",
            AmalgamationKind::Edge => "edge",
            AmalgamationKind::Bar => "bar",
        }
    }
}

impl fmt::Display for AmalgamationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AmalgamationKind {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, SpecParseError> {
        match s {
            "vertex" => Ok(AmalgamationKind::Vertex),
            "2vertex" => Ok(AmalgamationKind::TwoVertex),
            "edge" => Ok(AmalgamationKind::Edge),
            "bar" => Ok(AmalgamationKind::Bar),
            _ => Err(SpecParseError::UnknownKind),
        }
    }
}

/// Identification data for one amalgamation.
///
/// The textual form is `vertex v1 v2`, `2vertex v1 u1 v2 u2`,
/// `edge v1 u1 v2 u2`, or `bar v1 v2`, with first-operand labels first.
/// For the edge and two-vertex kinds the correspondence is
/// orientation-explicit: `v1` is identified with `v2` and `u1` with `u2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmalgamationSpec {
    Vertex { v1: usize, v2: usize },
    TwoVertex { pair1: (usize, usize), pair2: (usize, usize) },
    Edge { e1: (usize, usize), e2: (usize, usize) },
    Bar { v1: usize, v2: usize },
}

impl AmalgamationSpec {
    pub fn kind(&self) -> AmalgamationKind {
        match self {
            AmalgamationSpec::Vertex { .. } => AmalgamationKind::Vertex,
            AmalgamationSpec::TwoVertex { .. } => AmalgamationKind::TwoVertex,
            AmalgamationSpec::Edge { .. } => AmalgamationKind::Edge,
            AmalgamationSpec::Bar { .. } => AmalgamationKind::Bar,
        }
    }
}

impl fmt::Display for AmalgamationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AmalgamationSpec::Vertex { v1, v2 } => write!(f, "vertex {v1} {v2}"),
            AmalgamationSpec::TwoVertex { pair1, pair2 } => {
                write!(f, "2vertex {} {} {} {}", pair1.0, pair1.1, pair2.0, pair2.1)
            }
            AmalgamationSpec::Edge { e1, e2 } => {
                write!(f, "edge {} {} {} {}", e1.0, e1.1, e2.0, e2.1)
            }
            AmalgamationSpec::Bar { v1, v2 } => write!(f, "bar {v1} {v2}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecParseError {
    UnknownKind,
    WrongArity { kind: AmalgamationKind, expected: usize },
    BadNumber,
    Empty,
}

impl fmt::Display for SpecParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecParseError::UnknownKind => write!(
                f,
                "unknown amalgamation kind (expected vertex, 2vertex, edge, or bar)"
            ),
            SpecParseError::WrongArity { kind, expected } => {
                write!(f, "{kind} spec takes {expected} vertex arguments")
            }
            SpecParseError::BadNumber => write!(f, "vertex labels must be non-negative integers"),
            SpecParseError::Empty => write!(f, "empty amalgamation spec"),
        }
    }
}

impl core::error::Error for SpecParseError {}

impl FromStr for AmalgamationSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, SpecParseError> {
        let mut tokens = s.split_whitespace();
        let kind: AmalgamationKind = tokens.next().ok_or(SpecParseError::Empty)?.parse()?;
        let args: Vec<usize> = tokens
            .map(|t| t.parse::<usize>().map_err(|_| SpecParseError::BadNumber))
            .collect::<Result<_, _>>()?;
        let expected = match kind {
            AmalgamationKind::Vertex | AmalgamationKind::Bar => 2,
            AmalgamationKind::TwoVertex | AmalgamationKind::Edge => 4,
        };
        if args.len() != expected {
            return Err(SpecParseError::WrongArity { kind, expected });
        }
        Ok(match kind {
            AmalgamationKind::Vertex => AmalgamationSpec::Vertex {
                v1: args[0],
                v2: args[1],
            },
            AmalgamationKind::Bar => AmalgamationSpec::Bar {
                v1: args[0],
                v2: args[1],
            },
            AmalgamationKind::TwoVertex => AmalgamationSpec::TwoVertex {
                pair1: (args[0], args[1]),
                pair2: (args[2], args[3]),
            },
            AmalgamationKind::Edge => AmalgamationSpec::Edge {
                e1: (args[0], args[1]),
                e2: (args[2], args[3]),
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmalgamationError {
    VertexOutOfRange {
        operand: Operand,
        vertex: usize,
        order: usize,
    },
    /// Two-vertex identification needs two distinct vertices per operand.
    CoincidentPair { operand: Operand },
    MissingEdge {
        operand: Operand,
        u: usize,
        v: usize,
    },
    /// Both operands carry the identified pair's edge: use the edge kind.
    BothContainPairEdge,
}

impl fmt::Display for AmalgamationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |op: &Operand| match op {
            Operand::First => "first",
            Operand::Second => "second",
        };
        match self {
            AmalgamationError::VertexOutOfRange {
                operand,
                vertex,
                order,
            } => write!(
                f,
                "vertex {vertex} out of range for {} operand of order {order}",
                name(operand)
            ),
            AmalgamationError::CoincidentPair { operand } => write!(
                f,
                "{} operand's identified pair must be two distinct vertices",
                name(operand)
            ),
            AmalgamationError::MissingEdge { operand, u, v } => write!(
                f,
                "edge {{{u},{v}}} not present in {} operand",
                name(operand)
            ),
            AmalgamationError::BothContainPairEdge => write!(
                f,
                "both operands contain the identified pair's edge: use edge_amalgamate"
            ),
        }
    }
}

impl core::error::Error for AmalgamationError {}

/// The amalgamated graph plus how each operand embeds into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamationResult {
    pub graph: Graph,
    pub map1: VertexMap,
    pub map2: VertexMap,
    /// Result labels identified between the operands (empty for bar).
    pub shared: Vec<usize>,
    /// The new connecting edge (bar kind only).
    pub bar_edge: Option<Edge>,
    /// Two-vertex kind: set when exactly one operand carries an edge between
    /// the identified pair (permitted, but worth auditing).
    pub pair_edge_owner: Option<Operand>,
}

fn check_vertex(g: &Graph, operand: Operand, v: usize) -> Result<(), AmalgamationError> {
    if g.has_vertex(v) {
        Ok(())
    } else {
        Err(AmalgamationError::VertexOutOfRange {
            operand,
            vertex: v,
            order: g.vertex_count(),
        })
    }
}

/// Builds the second operand's map: `identified` lists `(g2 vertex, result
/// label)` pairs; all other vertices continue from `n1` in label order.
fn second_map(
    n2: usize,
    target_order: usize,
    n1: usize,
    identified: &[(usize, usize)],
) -> VertexMap {
    let mut map = alloc::vec![usize::MAX; n2];
    for &(v2, target) in identified {
        map[v2] = target;
    }
    let mut next = n1;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    VertexMap::new(Operand::Second, target_order, map).expect("construction is injective")
}

fn glue(
    g1: &Graph,
    g2: &Graph,
    identified: &[(usize, usize)],
    extra_edge: Option<(usize, usize)>,
) -> (Graph, VertexMap, VertexMap) {
    let n1 = g1.vertex_count();
    let n = n1 + g2.vertex_count() - identified.len();
    let map1 = VertexMap::new(Operand::First, n, (0..n1).collect()).expect("identity");
    let map2 = second_map(g2.vertex_count(), n, n1, identified);
    let mut edges: alloc::collections::BTreeSet<Edge> = g1.edges().collect();
    for e in g2.edges() {
        edges.insert(map2.apply_edge(e).expect("total map"));
    }
    if let Some((u, v)) = extra_edge {
        edges.insert(edge(u, v));
    }
    let graph = Graph::from_edges(n, edges).expect("amalgamation preserves simplicity");
    (graph, map1, map2)
}

/// Glues the operands at one vertex: `v1` and `v2` become a single vertex.
pub fn vertex_amalgamate(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
) -> Result<AmalgamationResult, AmalgamationError> {
    check_vertex(g1, Operand::First, v1)?;
    check_vertex(g2, Operand::Second, v2)?;
    let (graph, map1, map2) = glue(g1, g2, &[(v2, v1)], None);
    Ok(AmalgamationResult {
        graph,
        map1,
        map2,
        shared: alloc::vec![v1],
        bar_edge: None,
        pair_edge_owner: None,
    })
}

/// Glues the operands at two vertices: `pair1.0` with `pair2.0` and `pair1.1`
/// with `pair2.1`. Rejected when both operands carry the identified pair's
/// edge (that situation is an edge amalgamation).
pub fn two_vertex_amalgamate(
    g1: &Graph,
    pair1: (usize, usize),
    g2: &Graph,
    pair2: (usize, usize),
) -> Result<AmalgamationResult, AmalgamationError> {
    let (v1, u1) = pair1;
    let (v2, u2) = pair2;
    check_vertex(g1, Operand::First, v1)?;
    check_vertex(g1, Operand::First, u1)?;
    check_vertex(g2, Operand::Second, v2)?;
    check_vertex(g2, Operand::Second, u2)?;
    if v1 == u1 {
        return Err(AmalgamationError::CoincidentPair {
            operand: Operand::First,
        });
    }
    if v2 == u2 {
        return Err(AmalgamationError::CoincidentPair {
            operand: Operand::Second,
        });
    }
    let in1 = g1.has_edge(v1, u1);
    let in2 = g2.has_edge(v2, u2);
    if in1 && in2 {
        return Err(AmalgamationError::BothContainPairEdge);
    }
    let pair_edge_owner = match (in1, in2) {
        (true, false) => Some(Operand::First),
        (false, true) => Some(Operand::Second),
        _ => None,
    };
    let (graph, map1, map2) = glue(g1, g2, &[(v2, v1), (u2, u1)], None);
    Ok(AmalgamationResult {
        graph,
        map1,
        map2,
        shared: alloc::vec![v1, u1],
        bar_edge: None,
        pair_edge_owner,
    })
}

/// Glues the operands along an edge present in both: `e1.0` with `e2.0` and
/// `e1.1` with `e2.1`; the identified edge appears once in the result.
pub fn edge_amalgamate(
    g1: &Graph,
    e1: (usize, usize),
    g2: &Graph,
    e2: (usize, usize),
) -> Result<AmalgamationResult, AmalgamationError> {
    for (g, op, (a, b)) in [(g1, Operand::First, e1), (g2, Operand::Second, e2)] {
        check_vertex(g, op, a)?;
        check_vertex(g, op, b)?;
        if !g.has_edge(a, b) {
            return Err(AmalgamationError::MissingEdge {
                operand: op,
                u: a.min(b),
                v: a.max(b),
            });
        }
    }
    let (graph, map1, map2) = glue(g1, g2, &[(e2.0, e1.0), (e2.1, e1.1)], None);
    Ok(AmalgamationResult {
        graph,
        map1,
        map2,
        shared: alloc::vec![e1.0, e1.1],
        bar_edge: None,
        pair_edge_owner: None,
    })
}

/// Disjoint union plus one new edge from `v1` in the first operand to `v2`
/// in the second.
pub fn bar_amalgamate(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
) -> Result<AmalgamationResult, AmalgamationError> {
    check_vertex(g1, Operand::First, v1)?;
    check_vertex(g2, Operand::Second, v2)?;
    let bar = (v1, g1.vertex_count() + v2);
    let (graph, map1, map2) = glue(g1, g2, &[], Some(bar));
    Ok(AmalgamationResult {
        graph,
        map1,
        map2,
        shared: Vec::new(),
        bar_edge: Some(edge(bar.0, bar.1)),
        pair_edge_owner: None,
    })
}

/// Dispatches on the spec's kind.
pub fn amalgamate(
    g1: &Graph,
    g2: &Graph,
    spec: &AmalgamationSpec,
) -> Result<AmalgamationResult, AmalgamationError> {
    match *spec {
        AmalgamationSpec::Vertex { v1, v2 } => vertex_amalgamate(g1, v1, g2, v2),
        AmalgamationSpec::TwoVertex { pair1, pair2 } => {
            two_vertex_amalgamate(g1, pair1, g2, pair2)
        }
        AmalgamationSpec::Edge { e1, e2 } => edge_amalgamate(g1, e1, g2, e2),
        AmalgamationSpec::Bar { v1, v2 } => bar_amalgamate(g1, v1, g2, v2),
    }
}
