//! Shared oracles and generators for the integration and acceptance suites.
//!
//! The oracles here deliberately avoid the library's planarity and solver
//! code paths: planarity is decided by brute-force minor search (a graph is
//! planar iff it has no 5-clique minor and no 3,3-biclique minor), and
//! thickness by exhaustive enumeration of edge assignments.

// not every test binary uses every helper
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thickness_core::{is_planar, AmalgamationKind, AmalgamationSpec, Edge, Graph};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn block_connected(adj: &[Vec<bool>], block: &[usize]) -> bool {
    if block.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; block.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for j in 0..block.len() {
            if !seen[j] && adj[block[i]][block[j]] {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == block.len()
}

fn blocks_adjacent(adj: &[Vec<bool>], a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.iter().any(|&v| adj[u][v]))
}

/// Enumerates all ways to choose `k` disjoint non-empty vertex blocks
/// (vertices may stay unused) and reports whether any satisfies `check`.
fn any_block_family(
    n: usize,
    k: usize,
    adj: &[Vec<bool>],
    check: &mut dyn FnMut(&[Vec<bool>], &[Vec<usize>]) -> bool,
) -> bool {
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        adj: &[Vec<bool>],
        blocks: &mut Vec<Vec<usize>>,
        check: &mut dyn FnMut(&[Vec<bool>], &[Vec<usize>]) -> bool,
    ) -> bool {
        if blocks.len() + (n - v) < k {
            return false;
        }
        if v == n {
            return blocks.len() == k && check(adj, blocks);
        }
        // leave v unused
        if rec(v + 1, n, k, adj, blocks, check) {
            return true;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            if rec(v + 1, n, k, adj, blocks, check) {
                return true;
            }
            blocks[i].pop();
        }
        if blocks.len() < k {
            blocks.push(vec![v]);
            if rec(v + 1, n, k, adj, blocks, check) {
                return true;
            }
            blocks.pop();
        }
        false
    }
    rec(0, n, k, adj, &mut Vec::new(), check)
}

fn has_k5_minor(g: &Graph) -> bool {
    let adj = adjacency_matrix(g);
    any_block_family(g.vertex_count(), 5, &adj, &mut |adj, blocks| {
        blocks.iter().all(|b| block_connected(adj, b))
            && (0..5).all(|i| (i + 1..5).all(|j| blocks_adjacent(adj, &blocks[i], &blocks[j])))
    })
}

fn has_k33_minor(g: &Graph) -> bool {
    let adj = adjacency_matrix(g);
    any_block_family(g.vertex_count(), 6, &adj, &mut |adj, blocks| {
        if !blocks.iter().all(|b| block_connected(adj, b)) {
            return false;
        }
        // some 3/3 split of the blocks with all nine cross adjacencies
        for mask in 0u32..64 {
            if mask.count_ones() != 3 {
                continue;
            }
            let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
            for (i, block) in blocks.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    side_a.push(block);
                } else {
                    side_b.push(block);
                }
            }
            if side_a
                .iter()
                .all(|a| side_b.iter().all(|b| blocks_adjacent(adj, a, b)))
            {
                return true;
            }
        }
        false
    })
}

/// Independent planarity oracle: no 5-clique minor and no 3,3-biclique minor.
pub fn planar_by_minors(g: &Graph) -> bool {
    !has_k5_minor(g) && !has_k33_minor(g)
}

/// Exhaustive thickness by enumerating all assignments of edges to at most
/// `kmax` classes (classes opened in first-use order); planarity of the
/// parts is only checked on complete assignments.
pub fn brute_force_thickness(g: &Graph, kmax: usize) -> Option<usize> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return Some(0);
    }
    fn assignment_works(n: usize, edges: &[Edge], assign: &mut Vec<usize>, k: usize) -> bool {
        if assign.len() == edges.len() {
            return (0..k).all(|class| {
                let part = edges
                    .iter()
                    .zip(assign.iter())
                    .filter(|&(_, &a)| a == class)
                    .map(|(&e, _)| e);
                is_planar(&Graph::from_edges(n, part).expect("edge subset"))
            });
        }
        let used = assign.iter().copied().max().map_or(0, |m| m + 1);
        for class in 0..=used.min(k - 1) {
            assign.push(class);
            if assignment_works(n, edges, assign, k) {
                return true;
            }
            assign.pop();
        }
        false
    }
    (1..=kmax).find(|&k| assignment_works(g.vertex_count(), &edges, &mut Vec::new(), k))
}

/// All labeled graphs on `n` vertices, ordered by edge-set bitmask.
pub fn all_graphs_on(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are simple")
    })
}

/// Uniform random graph with `n` vertices and `m` edges.
pub fn random_graph_nm(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    use rand::seq::SliceRandom;
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    pool.shuffle(rng);
    pool.truncate(m);
    Graph::from_edges(n, pool).expect("pool edges are simple")
}

/// Random graph with order in `4..=max_n` and size in `min_m..=max_m`
/// (clamped to the complete graph).
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, min_m: usize, max_m: usize) -> Graph {
    let n = rng.random_range(4..=max_n);
    let cap = (n * (n - 1) / 2).min(max_m);
    let lo = min_m.min(cap);
    let m = rng.random_range(lo..=cap);
    random_graph_nm(rng, n, m)
}

/// Operand pair plus spec satisfying the kind's preconditions.
pub fn random_kind_instance(
    rng: &mut ChaCha8Rng,
    kind: AmalgamationKind,
) -> (Graph, Graph, AmalgamationSpec) {
    loop {
        let min_m = if kind == AmalgamationKind::Edge { 1 } else { 0 };
        let g1 = random_graph(rng, 8, min_m, 16);
        let g2 = random_graph(rng, 8, min_m, 16);
        let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
        match kind {
            AmalgamationKind::Vertex => {
                let spec = AmalgamationSpec::Vertex {
                    v1: rng.random_range(0..n1),
                    v2: rng.random_range(0..n2),
                };
                return (g1, g2, spec);
            }
            AmalgamationKind::Bar => {
                let spec = AmalgamationSpec::Bar {
                    v1: rng.random_range(0..n1),
                    v2: rng.random_range(0..n2),
                };
                return (g1, g2, spec);
            }
            AmalgamationKind::Edge => {
                let edges1: Vec<_> = g1.edges().collect();
                let edges2: Vec<_> = g2.edges().collect();
                let e1 = edges1[rng.random_range(0..edges1.len())];
                let e2 = edges2[rng.random_range(0..edges2.len())];
                return (g1, g2, AmalgamationSpec::Edge { e1, e2 });
            }
            AmalgamationKind::TwoVertex => {
                let mut found = None;
                for _ in 0..32 {
                    let v1 = rng.random_range(0..n1);
                    let u1 = rng.random_range(0..n1);
                    let v2 = rng.random_range(0..n2);
                    let u2 = rng.random_range(0..n2);
                    if v1 == u1 || v2 == u2 {
                        continue;
                    }
                    if g1.has_edge(v1, u1) && g2.has_edge(v2, u2) {
                        continue;
                    }
                    found = Some(AmalgamationSpec::TwoVertex {
                        pair1: (v1, u1),
                        pair2: (v2, u2),
                    });
                    break;
                }
                if let Some(spec) = found {
                    return (g1, g2, spec);
                }
            }
        }
    }
}

/// Random planar graph: greedy planar subgraph of a random graph.
pub fn random_planar_graph(rng: &mut ChaCha8Rng) -> Graph {
    let g = random_graph(rng, 8, 0, 20);
    let mut session = thickness_core::PlanaritySession::empty(g.vertex_count());
    for (u, v) in g.edges() {
        let _ = session.try_add_edge(u, v).unwrap();
    }
    session.to_graph()
}
