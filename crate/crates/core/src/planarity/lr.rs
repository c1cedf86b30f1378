//! Boolean planarity test via the left-right criterion.
//!
//! Two DFS passes: the first orients the graph and computes low-points and
//! nesting depths, the second processes outgoing edges in nesting order while
//! maintaining a stack of conflict pairs of back-edge intervals. The graph is
//! planar iff no same-side conflict between intervals is forced.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Edge;

const NONE: usize = usize::MAX;

/// Planarity of the graph on `n` vertices with the given duplicate-free
/// edge list.
pub(crate) fn planar(n: usize, edges: &[Edge]) -> bool {
    let m = edges.len();
    if m == 0 || n < 3 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    Lr::new(n, edges).run()
}

#[derive(Clone, Copy)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    const EMPTY: ConflictPair = ConflictPair {
        l: Interval::EMPTY,
        r: Interval::EMPTY,
    };

    fn swap(&mut self) {
        core::mem::swap(&mut self.l, &mut self.r);
    }
}

struct Lr {
    adj: Vec<Vec<(usize, usize)>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    ordered: Vec<Vec<usize>>,
    oriented: Vec<bool>,
    etail: Vec<usize>,
    ehead: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    ref_edge: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl Lr {
    fn new(n: usize, edges: &[Edge]) -> Lr {
        let m = edges.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Lr {
            adj,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            ordered: vec![Vec::new(); n],
            oriented: vec![false; m],
            etail: vec![NONE; m],
            ehead: vec![NONE; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ref_edge: vec![NONE; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let n = self.height.len();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for id in 0..self.oriented.len() {
            debug_assert!(self.oriented[id]);
            self.ordered[self.etail[id]].push(id);
        }
        let nesting = core::mem::take(&mut self.nesting);
        for list in &mut self.ordered {
            list.sort_by_key(|&id| nesting[id]);
        }
        for root in roots {
            if !self.test(root) {
                return false;
            }
        }
        true
    }

    /// First pass: orientation DFS computing heights, low-points, and
    /// nesting depths.
    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for k in 0..self.adj[v].len() {
            let (w, id) = self.adj[v][k];
            if self.oriented[id] {
                continue;
            }
            self.oriented[id] = true;
            self.etail[id] = v;
            self.ehead[id] = w;
            self.lowpt[id] = self.height[v];
            self.lowpt2[id] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = id;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[id] = self.height[w];
            }
            self.nesting[id] = 2 * self.lowpt[id];
            if self.lowpt2[id] < self.height[v] {
                // chordal: tighter nesting
                self.nesting[id] += 1;
            }
            if e != NONE {
                if self.lowpt[id] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[id]);
                    self.lowpt[e] = self.lowpt[id];
                } else if self.lowpt[id] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[id]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[id]);
                }
            }
        }
    }

    /// Second pass: constraint DFS over the nesting-ordered adjacency.
    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.ordered[v].clone();
        for (k, &id) in out.iter().enumerate() {
            self.stack_bottom[id] = self.stack.len();
            let w = self.ehead[id];
            if self.parent_edge[w] == id {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[id] = id;
                self.stack.push(ConflictPair {
                    l: Interval::EMPTY,
                    r: Interval { low: id, high: id },
                });
            }
            if self.lowpt[id] < self.height[v] {
                // id has a return edge above v
                if k == 0 {
                    if e != NONE {
                        self.lowpt_edge[e] = self.lowpt_edge[id];
                    }
                } else if !self.add_constraints(id, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            let u = self.etail[e];
            self.trim_back_edges(u);
            if self.lowpt[e] < self.height[u] {
                if let Some(top) = self.stack.last() {
                    let hl = top.l.high;
                    let hr = top.r.high;
                    self.ref_edge[e] =
                        if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                            hl
                        } else {
                            hr
                        };
                }
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        i.high != NONE && self.lowpt[i.high] > self.lowpt[b]
    }

    fn pair_lowest(&self, p: &ConflictPair) -> usize {
        match (p.l.low, p.r.low) {
            (NONE, NONE) => NONE,
            (NONE, r) => self.lowpt[r],
            (l, NONE) => self.lowpt[l],
            (l, r) => self.lowpt[l].min(self.lowpt[r]),
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        debug_assert!(e != NONE, "constraints only arise below a tree edge");
        let mut p = ConflictPair::EMPTY;
        // merge return edges of ei into p.r
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.l.is_empty() {
                q.swap();
            }
            if !q.l.is_empty() {
                return false;
            }
            if self.lowpt[q.r.low] > self.lowpt[e] {
                if p.r.is_empty() {
                    p.r.high = q.r.high;
                } else {
                    self.ref_edge[p.r.low] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // returns at or below lowpt(e): align under e
                self.ref_edge[q.r.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.l
        loop {
            let conflict = match self.stack.last() {
                Some(top) => self.conflicting(&top.l, ei) || self.conflicting(&top.r, ei),
                None => false,
            };
            if !conflict {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.r, ei) {
                q.swap();
            }
            if self.conflicting(&q.r, ei) {
                return false;
            }
            if p.r.low != NONE {
                self.ref_edge[p.r.low] = q.r.high;
            }
            if q.r.low != NONE {
                p.r.low = q.r.low;
            }
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.ref_edge[p.l.low] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    /// Drops or trims intervals whose back edges end at `u` once the subtree
    /// below `u` has been processed.
    fn trim_back_edges(&mut self, u: usize) {
        let hu = self.height[u];
        while let Some(top) = self.stack.last() {
            if self.pair_lowest(top) == hu {
                self.stack.pop();
            } else {
                break;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.l.high != NONE && self.ehead[p.l.high] == u {
                p.l.high = self.ref_edge[p.l.high];
            }
            if p.l.high == NONE && p.l.low != NONE {
                self.ref_edge[p.l.low] = p.r.low;
                p.l.low = NONE;
            }
            while p.r.high != NONE && self.ehead[p.r.high] == u {
                p.r.high = self.ref_edge[p.r.high];
            }
            if p.r.high == NONE && p.r.low != NONE {
                self.ref_edge[p.r.low] = p.l.low;
                p.r.low = NONE;
            }
            self.stack.push(p);
        }
    }
}
