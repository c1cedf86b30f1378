//! Combinatorial embeddings via path addition.
//!
//! Each biconnected component is embedded by the quadratic
//! Demoucron-Malgrange-Pertuiset scheme: start from a cycle, then repeatedly
//! pick a bridge with the fewest admissible faces and route one of its paths
//! through an admissible face, splitting it. Component embeddings are merged
//! at cut vertices by concatenating rotation blocks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::connectivity::biconnected_edge_components;
use crate::graph::{Edge, Graph};

/// A rotation system: for every vertex, the cyclic order of its neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Number of faces of the plane drawing described by the rotation
    /// system, counting the unbounded face once across all components.
    pub fn face_count(&self) -> usize {
        let n = self.rotation.len();
        // neighbor -> position index, per vertex
        let pos: Vec<BTreeMap<usize, usize>> = self
            .rotation
            .iter()
            .map(|rot| rot.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut orbits = 0usize;
        let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
        for v in 0..n {
            for &w in &self.rotation[v] {
                if visited.contains(&(v, w)) {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b) = (v, w);
                loop {
                    visited.insert((a, b));
                    // after arriving at b from a, leave along a's successor
                    let rot = &self.rotation[b];
                    let i = pos[b][&a];
                    let next = rot[(i + 1) % rot.len()];
                    a = b;
                    b = next;
                    if (a, b) == (v, w) {
                        break;
                    }
                }
            }
        }
        let comps = crate::connectivity::components(n, &self.rotation);
        let edgy = comps
            .iter()
            .filter(|c| c.iter().any(|&v| !self.rotation[v].is_empty()))
            .count();
        1 + orbits - edgy
    }

    /// Checks that the rotation system matches the graph's adjacency and
    /// that its face count satisfies the planar Euler relation
    /// `faces - edges + vertices = 1 + components`.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.vertex_count() {
            return false;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut listed: Vec<usize> = rot.clone();
            listed.sort_unstable();
            listed.dedup();
            if listed.len() != rot.len() {
                return false;
            }
            let mut actual: Vec<usize> = g
                .edges()
                .filter_map(|(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            actual.sort_unstable();
            if listed != actual {
                return false;
            }
        }
        let faces = self.face_count() as isize;
        let v = g.vertex_count() as isize;
        let e = g.edge_count() as isize;
        let c = g.connected_components().len() as isize;
        faces - e + v == 1 + c
    }
}

/// Builds a planar rotation system, or `None` if the graph is not planar.
pub(crate) fn embedding(n: usize, edges: &[Edge]) -> Option<Embedding> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for comp in biconnected_edge_components(n, edges) {
        if comp.len() == 1 {
            let (u, v) = comp[0];
            rotation[u].push(v);
            rotation[v].push(u);
        } else {
            embed_bicomp(&comp, &mut rotation)?;
        }
    }
    Some(Embedding { rotation })
}

/// Embeds one biconnected component (at least two edges) and appends each
/// vertex's local rotation block to the global rotation.
fn embed_bicomp(comp_edges: &[Edge], rotation: &mut [Vec<usize>]) -> Option<()> {
    // compact labels
    let mut labels: Vec<usize> = comp_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let index: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let k = labels.len();
    let target: BTreeSet<Edge> = comp_edges
        .iter()
        .map(|&(u, v)| crate::graph::edge(index[&u], index[&v]))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(u, v) in &target {
        adj[u].push(v);
        adj[v].push(u);
    }

    let cycle = find_cycle(k, &adj);
    let mut faces: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut fwd: Vec<(usize, usize)> = Vec::new();
    let mut rev: Vec<(usize, usize)> = Vec::new();
    for i in 0..cycle.len() {
        fwd.push((cycle[i], cycle[(i + 1) % cycle.len()]));
        rev.push((cycle[(i + 1) % cycle.len()], cycle[i]));
    }
    rev.reverse();
    faces.push(fwd);
    faces.push(rev);

    let mut embedded_edges: BTreeSet<Edge> = Vec::from_iter(0..cycle.len())
        .iter()
        .map(|&i| crate::graph::edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    let mut embedded_vertex = vec![false; k];
    for &v in &cycle {
        embedded_vertex[v] = true;
    }

    while embedded_edges.len() < target.len() {
        let bridges = find_bridges(k, &adj, &target, &embedded_edges, &embedded_vertex);
        debug_assert!(!bridges.is_empty());
        let face_vertices: Vec<BTreeSet<usize>> = faces
            .iter()
            .map(|f| f.iter().map(|d| d.0).collect())
            .collect();
        // bridge with the fewest admissible faces embeds first
        let mut best: Option<(usize, usize)> = None; // (admissible count, bridge index)
        let mut best_face = 0usize;
        for (bi, bridge) in bridges.iter().enumerate() {
            let mut count = 0usize;
            let mut first = usize::MAX;
            for (fi, verts) in face_vertices.iter().enumerate() {
                if bridge.attachments.iter().all(|a| verts.contains(a)) {
                    count += 1;
                    if first == usize::MAX {
                        first = fi;
                    }
                }
            }
            if best.map_or(true, |(c, _)| count < c) {
                best = Some((count, bi));
                best_face = first;
            }
        }
        let (count, bi) = best.expect("at least one bridge");
        if count == 0 {
            return None;
        }
        let path = bridge_path(&bridges[bi], &adj, &embedded_vertex);
        debug_assert!(path.len() >= 2);

        let face = faces[best_face].clone();
        let (f1, f2) = split_face(&face, &path);
        faces[best_face] = f1;
        faces.push(f2);
        for w in path.windows(2) {
            embedded_edges.insert(crate::graph::edge(w[0], w[1]));
        }
        for &p in &path[1..path.len() - 1] {
            embedded_vertex[p] = true;
        }
    }

    // derive local rotations from the face walks
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); k];
    for face in &faces {
        let len = face.len();
        for i in 0..len {
            let (u, v) = face[i];
            let (_, w) = face[(i + 1) % len];
            let prev = succ[v].insert(u, w);
            debug_assert!(prev.is_none(), "each directed edge lies on one face");
        }
    }
    for v in 0..k {
        let deg = adj[v].len();
        let start = *succ[v].keys().next().expect("bicomp vertex has neighbors");
        let mut order = Vec::with_capacity(deg);
        let mut cur = start;
        loop {
            order.push(cur);
            cur = succ[v][&cur];
            if cur == start {
                break;
            }
        }
        debug_assert_eq!(order.len(), deg, "rotation covers every neighbor");
        rotation[labels[v]].extend(order.into_iter().map(|w| labels[w]));
    }
    Some(())
}

/// Any cycle of a graph with minimum degree two, found by DFS.
fn find_cycle(k: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut parent = vec![usize::MAX; k];
    let mut disc = vec![usize::MAX; k];
    let mut stack = vec![(0usize, 0usize)];
    disc[0] = 0;
    let mut time = 1usize;
    while let Some(&(v, i)) = stack.last() {
        if i >= adj[v].len() {
            stack.pop();
            continue;
        }
        stack.last_mut().expect("just checked").1 += 1;
        let w = adj[v][i];
        if disc[w] == usize::MAX {
            parent[w] = v;
            disc[w] = time;
            time += 1;
            stack.push((w, 0));
        } else if w != parent[v] && disc[w] < disc[v] {
            // back edge closes the cycle w .. v
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            return cycle;
        }
    }
    unreachable!("biconnected component with two or more edges contains a cycle")
}

struct Bridge {
    attachments: Vec<usize>,
    kind: BridgeKind,
}

enum BridgeKind {
    Chord(Edge),
    Component(Vec<usize>),
}

fn find_bridges(
    k: usize,
    adj: &[Vec<usize>],
    target: &BTreeSet<Edge>,
    embedded_edges: &BTreeSet<Edge>,
    embedded_vertex: &[bool],
) -> Vec<Bridge> {
    let mut bridges = Vec::new();
    for &(u, v) in target.difference(embedded_edges) {
        if embedded_vertex[u] && embedded_vertex[v] {
            bridges.push(Bridge {
                attachments: vec![u, v],
                kind: BridgeKind::Chord((u, v)),
            });
        }
    }
    let mut seen = vec![false; k];
    for start in 0..k {
        if embedded_vertex[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = vec![start];
        let mut attachments = BTreeSet::new();
        while let Some(x) = queue.pop() {
            for &y in &adj[x] {
                if embedded_vertex[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    queue.push(y);
                }
            }
        }
        comp.sort_unstable();
        bridges.push(Bridge {
            attachments: attachments.into_iter().collect(),
            kind: BridgeKind::Component(comp),
        });
    }
    bridges
}

/// A path through the bridge between two distinct attachment vertices; the
/// interior is disjoint from the embedded subgraph.
fn bridge_path(bridge: &Bridge, adj: &[Vec<usize>], embedded_vertex: &[bool]) -> Vec<usize> {
    match &bridge.kind {
        BridgeKind::Chord((u, v)) => vec![*u, *v],
        BridgeKind::Component(comp) => {
            let a = bridge.attachments[0];
            let inside: BTreeSet<usize> = comp.iter().copied().collect();
            let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue: Vec<usize> = Vec::new();
            for &w in adj[a].iter() {
                if inside.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, a);
                    queue.push(w);
                }
            }
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &y in &adj[x] {
                    if embedded_vertex[y] {
                        if y != a {
                            // reached another attachment: reconstruct
                            let mut path = vec![y, x];
                            let mut cur = x;
                            while cur != a {
                                cur = parent[&cur];
                                path.push(cur);
                            }
                            path.reverse();
                            return path;
                        }
                    } else if !parent.contains_key(&y) {
                        parent.insert(y, x);
                        queue.push(y);
                    }
                }
            }
            unreachable!("a bridge of a biconnected graph has two attachments")
        }
    }
}

/// Splits a face walk along a path whose endpoints lie on the face.
fn split_face(face: &[(usize, usize)], path: &[usize]) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let a = path[0];
    let b = path[path.len() - 1];
    let i = face.iter().position(|d| d.0 == a).expect("a on face");
    let j = face.iter().position(|d| d.0 == b).expect("b on face");
    let len = face.len();
    let mut f1 = Vec::new();
    let mut p = i;
    while p != j {
        f1.push(face[p]);
        p = (p + 1) % len;
    }
    for w in path.windows(2).rev() {
        f1.push((w[1], w[0]));
    }
    let mut f2 = Vec::new();
    let mut p = j;
    while p != i {
        f2.push(face[p]);
        p = (p + 1) % len;
    }
    for w in path.windows(2) {
        f2.push((w[0], w[1]));
    }
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_hypercube};

    fn embed(g: &Graph) -> Option<Embedding> {
        embedding(g.vertex_count(), &g.edges().collect::<Vec<_>>())
    }

    #[test]
    fn k4_embedding_has_four_faces() {
        let k4 = make_complete(4).unwrap();
        let emb = embed(&k4).unwrap();
        assert_eq!(emb.face_count(), 4);
        assert!(emb.satisfies_euler(&k4));
    }

    #[test]
    fn k5_has_no_embedding() {
        assert!(embed(&make_complete(5).unwrap()).is_none());
        assert!(embed(&make_complete_bipartite(3, 3).unwrap()).is_none());
    }

    #[test]
    fn bowtie_embedding_satisfies_euler() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let emb = embed(&g).unwrap();
        assert!(emb.satisfies_euler(&g));
        assert_eq!(emb.face_count(), 3);
    }

    #[test]
    fn tree_and_isolated_vertices() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let emb = embed(&g).unwrap();
        assert!(emb.satisfies_euler(&g));
        assert_eq!(emb.face_count(), 1);
    }

    #[test]
    fn cube_embedding() {
        let q3 = make_hypercube(3).unwrap();
        let emb = embed(&q3).unwrap();
        assert!(emb.satisfies_euler(&q3));
        assert_eq!(emb.face_count(), 6);
    }
}
