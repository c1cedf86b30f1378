//! Exact thickness by branch-and-bound edge partitioning.
//!
//! For ascending part counts `k`, edges are assigned in a fixed order to
//! classes kept planar by incremental checks. An edge may open a new class
//! only if every earlier class is occupied, which removes permuted duplicates
//! of the same partition. The search either finds a witness at the smallest
//! feasible `k` or proves `k` infeasible and moves on; the greedy heuristic
//! supplies the upper end so the loop always terminates.

use alloc::vec::Vec;
use core::time::Duration;

use crate::graph::{Edge, Graph};
use crate::planarity::{is_planar, PlanaritySession};
use crate::thickness::{
    edge_order, euler_lower_bound, heuristic_thickness, CertificateStatus, LowerBoundKind,
    PlanarDecomposition, ThicknessCertificate, ThicknessError,
};

/// Search budget: node count (attempted edge placements) and, with the `std`
/// feature, wall-clock time. The node limit is the portable, reproducible
/// half; identical inputs and node limits give identical certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

    pub fn nodes(limit: u64) -> Budget {
        Budget {
            max_nodes: Some(limit),
            max_time: None,
        }
    }

    pub fn unlimited() -> Budget {
        Budget {
            max_nodes: None,
            max_time: None,
        }
    }

    fn validate(&self) -> Result<(), ThicknessError> {
        if self.max_nodes == Some(0) || self.max_time.is_some_and(|t| t.is_zero()) {
            return Err(ThicknessError::InvalidBudget);
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_nodes: Some(Budget::DEFAULT_NODE_LIMIT),
            max_time: None,
        }
    }
}

/// Certificate plus the search effort it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub certificate: ThicknessCertificate,
    pub nodes_used: u64,
}

/// Computes the thickness of `g`.
///
/// Completes exactly when the budget suffices: the certificate is `Exact`
/// with a witness of exactly `value` non-empty parts and lower-bound evidence
/// matching the value. On budget exhaustion the certificate is `Bounded` with
/// the best-known witness (upper bound) and best-proved lower bound.
pub fn exact_thickness(g: &Graph, budget: &Budget) -> Result<SolveOutcome, ThicknessError> {
    budget.validate()?;
    if g.edge_count() == 0 {
        return Ok(SolveOutcome {
            certificate: ThicknessCertificate {
                value: 0,
                lower_bound: 0,
                lower_bound_kind: LowerBoundKind::PlanarCheck,
                status: CertificateStatus::Exact,
                witness: PlanarDecomposition::empty(g.clone()),
            },
            nodes_used: 0,
        });
    }
    if is_planar(g) {
        return Ok(SolveOutcome {
            certificate: ThicknessCertificate {
                value: 1,
                lower_bound: 1,
                lower_bound_kind: LowerBoundKind::PlanarCheck,
                status: CertificateStatus::Exact,
                witness: PlanarDecomposition::single_part(g.clone()),
            },
            nodes_used: 0,
        });
    }

    let euler = euler_lower_bound(g);
    let (initial_lower, initial_kind) = if euler >= 2 {
        (euler, LowerBoundKind::Euler)
    } else {
        (2, LowerBoundKind::PlanarCheck)
    };
    let upper_witness = heuristic_thickness(g);
    let upper = upper_witness.part_count();

    let order = edge_order(g);
    let mut search = Search::new(g.vertex_count(), &order, budget);
    let mut lower = initial_lower;
    let mut kind = initial_kind;
    loop {
        if lower >= upper {
            return Ok(SolveOutcome {
                certificate: ThicknessCertificate {
                    value: upper,
                    lower_bound: lower,
                    lower_bound_kind: kind,
                    status: CertificateStatus::Exact,
                    witness: upper_witness,
                },
                nodes_used: search.nodes,
            });
        }
        match search.run(lower) {
            SearchResult::Found => {
                let witness = search.witness(g);
                return Ok(SolveOutcome {
                    certificate: ThicknessCertificate {
                        value: lower,
                        lower_bound: lower,
                        lower_bound_kind: kind,
                        status: CertificateStatus::Exact,
                        witness,
                    },
                    nodes_used: search.nodes,
                });
            }
            SearchResult::Infeasible => {
                lower += 1;
                kind = LowerBoundKind::Exhaustion;
            }
            SearchResult::OutOfBudget => {
                return Ok(SolveOutcome {
                    certificate: ThicknessCertificate {
                        value: upper,
                        lower_bound: lower,
                        lower_bound_kind: kind,
                        status: CertificateStatus::Bounded,
                        witness: upper_witness,
                    },
                    nodes_used: search.nodes,
                });
            }
        }
    }
}

enum SearchResult {
    Found,
    Infeasible,
    OutOfBudget,
}

struct Search<'a> {
    n: usize,
    edges: &'a [Edge],
    classes: Vec<PlanaritySession>,
    assignment: Vec<usize>,
    used: usize,
    nodes: u64,
    node_limit: u64,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
    #[cfg(not(feature = "std"))]
    deadline: Option<()>,
}

impl<'a> Search<'a> {
    fn new(n: usize, edges: &'a [Edge], budget: &Budget) -> Search<'a> {
        #[cfg(feature = "std")]
        let deadline = budget.max_time.map(|t| std::time::Instant::now() + t);
        #[cfg(not(feature = "std"))]
        let deadline = {
            let _ = budget.max_time;
            None
        };
        Search {
            n,
            edges,
            classes: Vec::new(),
            assignment: alloc::vec![0; edges.len()],
            used: 0,
            nodes: 0,
            node_limit: budget.max_nodes.unwrap_or(u64::MAX),
            deadline,
        }
    }

    fn run(&mut self, k: usize) -> SearchResult {
        self.classes = (0..k).map(|_| PlanaritySession::empty(self.n)).collect();
        self.used = 0;
        self.assign(0, k)
    }

    fn assign(&mut self, idx: usize, k: usize) -> SearchResult {
        if idx == self.edges.len() {
            return SearchResult::Found;
        }
        let (u, v) = self.edges[idx];
        // occupied classes plus at most the first empty one
        let tryable = (self.used + 1).min(k);
        for j in 0..tryable {
            self.nodes += 1;
            if self.nodes > self.node_limit || self.deadline_hit() {
                return SearchResult::OutOfBudget;
            }
            if self.classes[j]
                .try_add_edge(u, v)
                .expect("solver feeds simple in-range edges")
            {
                let opened = j == self.used;
                if opened {
                    self.used += 1;
                }
                self.assignment[idx] = j;
                match self.assign(idx + 1, k) {
                    SearchResult::Infeasible => {}
                    done => return done,
                }
                self.classes[j].pop_edge();
                if opened {
                    self.used -= 1;
                }
            }
        }
        SearchResult::Infeasible
    }

    #[cfg(feature = "std")]
    fn deadline_hit(&self) -> bool {
        match self.deadline {
            // amortize the clock read
            Some(deadline) => self.nodes % 4096 == 0 && std::time::Instant::now() > deadline,
            None => false,
        }
    }

    #[cfg(not(feature = "std"))]
    fn deadline_hit(&self) -> bool {
        false
    }

    fn witness(&self, g: &Graph) -> PlanarDecomposition {
        let k = self.classes.len();
        let mut parts: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); k];
        for (i, &e) in self.edges.iter().enumerate() {
            parts[self.assignment[i]].push(e);
        }
        PlanarDecomposition::new(g.clone(), parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite};
    use crate::thickness::validate_decomposition;

    #[test]
    fn planar_graph_solves_to_one() {
        let out = exact_thickness(&make_complete(4).unwrap(), &Budget::default()).unwrap();
        let cert = out.certificate;
        assert_eq!(cert.value, 1);
        assert!(cert.is_exact());
        assert_eq!(cert.lower_bound_kind, LowerBoundKind::PlanarCheck);
        assert!(validate_decomposition(&cert.witness).passes());
    }

    #[test]
    fn edgeless_graph_has_thickness_zero() {
        let out = exact_thickness(&Graph::empty(6), &Budget::default()).unwrap();
        assert_eq!(out.certificate.value, 0);
        assert!(out.certificate.is_exact());
        assert_eq!(out.certificate.witness.part_count(), 0);
    }

    #[test]
    fn k5_solves_to_two_via_euler() {
        let out = exact_thickness(&make_complete(5).unwrap(), &Budget::default()).unwrap();
        let cert = out.certificate;
        assert_eq!(cert.value, 2);
        assert!(cert.is_exact());
        // ceil(10/9) = 2 already forces the bound
        assert_eq!(cert.lower_bound_kind, LowerBoundKind::Euler);
        assert_eq!(cert.witness.nonempty_part_count(), 2);
        assert!(validate_decomposition(&cert.witness).passes());
    }

    #[test]
    fn k33_solves_to_two_via_planarity() {
        let out =
            exact_thickness(&make_complete_bipartite(3, 3).unwrap(), &Budget::default()).unwrap();
        let cert = out.certificate;
        assert_eq!(cert.value, 2);
        assert_eq!(cert.lower_bound_kind, LowerBoundKind::PlanarCheck);
        assert!(validate_decomposition(&cert.witness).passes());
    }

    #[test]
    fn k8_solves_to_two() {
        let out = exact_thickness(&make_complete(8).unwrap(), &Budget::default()).unwrap();
        let cert = out.certificate;
        assert_eq!(cert.value, 2);
        assert!(cert.is_exact());
        assert_eq!(cert.witness.nonempty_part_count(), 2);
        assert!(validate_decomposition(&cert.witness).passes());
    }

    #[test]
    fn zero_budget_is_an_error() {
        let g = make_complete(5).unwrap();
        assert_eq!(
            exact_thickness(&g, &Budget::nodes(0)),
            Err(ThicknessError::InvalidBudget)
        );
        let zero_time = Budget {
            max_nodes: None,
            max_time: Some(Duration::ZERO),
        };
        assert_eq!(
            exact_thickness(&g, &zero_time),
            Err(ThicknessError::InvalidBudget)
        );
    }

    #[test]
    fn tiny_budget_reports_bounds() {
        // K9: the heuristic needs 3 parts but proving 2 impossible takes work
        let g = make_complete(9).unwrap();
        let out = exact_thickness(&g, &Budget::nodes(10)).unwrap();
        let cert = out.certificate;
        assert_eq!(cert.status, CertificateStatus::Bounded);
        assert!(cert.lower_bound <= cert.value);
        assert_eq!(cert.lower_bound, 2);
        assert!(validate_decomposition(&cert.witness).passes());
        assert!(out.nodes_used >= 10);
    }

    #[test]
    fn deterministic_certificates() {
        let g = make_complete(7).unwrap();
        let a = exact_thickness(&g, &Budget::default()).unwrap();
        let b = exact_thickness(&g, &Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    use crate::graph::Graph;
}
