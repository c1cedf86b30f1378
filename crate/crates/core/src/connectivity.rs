//! Connected and biconnected component helpers used by the planarity code.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Edge;

const UNSET: usize = usize::MAX;

/// Connected components as sorted vertex lists, ordered by smallest member.
pub(crate) fn components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Partitions the edge set into biconnected components (cut edges appear as
/// single-edge components). Isolated vertices contribute nothing.
pub(crate) fn biconnected_edge_components(n: usize, edges: &[Edge]) -> Vec<Vec<Edge>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut state = BicompState {
        adj: &adj,
        disc: vec![UNSET; n],
        low: vec![UNSET; n],
        time: 0,
        edge_stack: Vec::new(),
        out: Vec::new(),
    };
    for root in 0..n {
        if state.disc[root] == UNSET {
            state.dfs(root, UNSET);
            // any leftovers belong to one final component of this root
            if !state.edge_stack.is_empty() {
                let comp: Vec<Edge> = state.edge_stack.drain(..).collect();
                state.out.push(comp);
            }
        }
    }
    state.out
}

struct BicompState<'a> {
    adj: &'a [Vec<(usize, usize)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<Edge>,
    out: Vec<Vec<Edge>>,
}

impl BicompState<'_> {
    fn dfs(&mut self, u: usize, parent_edge: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &(w, id) in &self.adj[u] {
            if id == parent_edge {
                continue;
            }
            if self.disc[w] == UNSET {
                self.edge_stack.push(crate::graph::edge(u, w));
                self.dfs(w, id);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    // u separates the subtree at w: pop one component
                    let marker = crate::graph::edge(u, w);
                    let mut comp = Vec::new();
                    while let Some(e) = self.edge_stack.pop() {
                        comp.push(e);
                        if e == marker {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    self.out.push(comp);
                }
            } else if self.disc[w] < self.disc[u] {
                self.edge_stack.push(crate::graph::edge(u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_two_bicomps() {
        // two triangles sharing vertex 2
        let edges = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)];
        let comps = biconnected_edge_components(5, &edges);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn path_splits_into_single_edges() {
        let edges = [(0, 1), (1, 2), (2, 3)];
        let comps = biconnected_edge_components(4, &edges);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn cycle_is_one_bicomp() {
        let edges = [(0, 1), (1, 2), (2, 3), (0, 3)];
        let comps = biconnected_edge_components(4, &edges);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 4);
    }
}
