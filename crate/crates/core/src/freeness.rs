//! Membership in the forbidden classes `K_{ω+1}`-free and
//! `K_u ∨ I_{Δ+1}`-free.
//!
//! `G` is `K_u ∨ I_{Δ+1}`-free exactly when every `u`-clique has at most `Δ`
//! common neighbours, so that is how the check runs; the generic subgraph
//! search is kept as a cross-check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::counting::{for_each_clique, for_each_embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Forbidden family `{K_u ∨ I_{Δ+1}, K_{ω+1}}`; `None` drops that member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstraintSet {
    pub u: usize,
    pub delta: Option<usize>,
    pub omega: Option<usize>,
}

impl ConstraintSet {
    pub fn new(u: usize, delta: Option<usize>, omega: Option<usize>) -> ConstraintSet {
        ConstraintSet { u, delta, omega }
    }

    pub fn unconstrained() -> ConstraintSet {
        ConstraintSet { u: 1, delta: None, omega: None }
    }

    /// `{K_{ω+1}}` only.
    pub fn clique_free(omega: usize) -> ConstraintSet {
        ConstraintSet { u: 1, delta: None, omega: Some(omega) }
    }

    /// `{K_{1,Δ+1}}` only.
    pub fn max_degree(delta: usize) -> ConstraintSet {
        ConstraintSet { u: 1, delta: Some(delta), omega: None }
    }

    /// Checks the standing hypothesis `Δ ≥ ω ≥ u + 1 ≥ 2`.
    pub fn check_standing(&self) -> Result<()> {
        match (self.delta, self.omega) {
            (Some(d), Some(w)) if self.u >= 1 && w > self.u && d >= w => Ok(()),
            _ => Err(Error::InvalidParameters(alloc::format!(
                "need Δ ≥ ω ≥ u+1 ≥ 2, got u={}, Δ={:?}, ω={:?}",
                self.u,
                self.delta,
                self.omega
            ))),
        }
    }

    /// Fast yes/no membership test.
    pub fn admits(&self, g: &Graph) -> bool {
        if let Some(w) = self.omega {
            if clique_number(g) > w {
                return false;
            }
        }
        if let Some(d) = self.delta {
            if self.u == 1 {
                return g.max_degree() <= d;
            }
            let mut ok = true;
            for_each_clique(g, self.u, &mut |c| {
                ok = common_size(g, &c) <= d;
                ok
            });
            return ok;
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A clique on `ω + 1` vertices.
    Clique { size: usize },
    /// A `u`-clique with more than `Δ` common neighbours.
    CommonNeighborhood { clique: VertexSet, size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Vertex set of a forbidden subgraph.
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub clique_number: usize,
    pub max_degree: usize,
    pub max_common_neighborhood_by_u: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
}

impl FreenessReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

fn common_size(g: &Graph, c: &VertexSet) -> usize {
    g.common_neighborhood(c).map(|s| s.len()).unwrap_or(g.order())
}

/// Full report: invariants plus the lexicographically least witness for
/// each violated constraint.
pub fn check_constraints(g: &Graph, cs: &ConstraintSet) -> FreenessReport {
    let omega = clique_number(g);
    let mut by_u = BTreeMap::new();
    for k in 1..=cs.u.max(1) {
        let mut best = 0;
        for_each_clique(g, k, &mut |c| {
            best = best.max(common_size(g, &c));
            true
        });
        by_u.insert(k, best);
    }
    let mut violations = Vec::new();
    if let Some(w) = cs.omega {
        if omega > w {
            let mut witness = None;
            for_each_clique(g, w + 1, &mut |c| {
                witness = Some(c);
                false
            });
            let witness = witness.expect("clique number exceeds the cap");
            violations.push(Violation { kind: ViolationKind::Clique { size: w + 1 }, witness });
        }
    }
    if let Some(d) = cs.delta {
        if cs.u >= 1 {
            let mut found = None;
            for_each_clique(g, cs.u, &mut |c| {
                let nc = g.common_neighborhood(&c).unwrap();
                if nc.len() > d {
                    found = Some((c, nc));
                    return false;
                }
                true
            });
            if let Some((c, nc)) = found {
                violations.push(Violation {
                    kind: ViolationKind::CommonNeighborhood { clique: c, size: nc.len() },
                    witness: c | nc.take(d + 1),
                });
            }
        }
    }
    FreenessReport { clique_number: omega, max_degree: g.max_degree(), max_common_neighborhood_by_u: by_u, violations }
}

/// An embedding `phi` of `f` into `g` (`phi[f_vertex] = g_vertex`) if `f` is
/// a subgraph of `g`.
pub fn contains_subgraph(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    let mut witness = None;
    for_each_embedding(f, g, &mut |phi| {
        witness = Some(phi.to_vec());
        false
    });
    witness
}

/// Clique number by branch and bound with greedy-colouring bounds.
pub fn clique_number(g: &Graph) -> usize {
    max_clique_in(g, g.vertices())
}

/// Size of a largest clique of `g` inside `within`.
pub fn max_clique_in(g: &Graph, within: VertexSet) -> usize {
    let mut best = 0;
    expand(g, 0, within, &mut best);
    best
}

/// Greedy sequential colouring; returns vertices with non-decreasing colour.
fn colour_sort(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut colours = Vec::with_capacity(p.len());
    let mut uncoloured = p;
    let mut k = 0;
    while !uncoloured.is_empty() {
        k += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q = q - g.neighbors(v);
            q.remove(v);
            uncoloured.remove(v);
            order.push(v);
            colours.push(k);
        }
    }
    (order, colours)
}

fn expand(g: &Graph, size: usize, mut p: VertexSet, best: &mut usize) {
    if p.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colours) = colour_sort(g, p);
    for idx in (0..order.len()).rev() {
        if size + colours[idx] <= *best {
            return;
        }
        let v = order[idx];
        expand(g, size + 1, p & g.neighbors(v), best);
        p.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::ParamTriple;
    use crate::constructions::{capped_colex_turan, complete_split, lower_bound_graph, turan};

    #[test]
    fn subgraph_containment() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(contains_subgraph(&c4, &Graph::path(3).unwrap()).is_some());
        assert!(contains_subgraph(&c4, &Graph::complete(3).unwrap()).is_none());
        assert!(contains_subgraph(&turan(4, 8).unwrap(), &Graph::complete(5).unwrap()).is_none());
        let phi = contains_subgraph(&c4, &Graph::path(3).unwrap()).unwrap();
        assert!(c4.has_edge(phi[0], phi[1]) && c4.has_edge(phi[1], phi[2]));
    }

    #[test]
    fn constraint_examples() {
        let cs = ConstraintSet::new(1, Some(5), Some(4));
        let l = lower_bound_graph(&ParamTriple::new(1, 5, 4).unwrap()).unwrap();
        assert!(check_constraints(&l, &cs).passes());
        let r = check_constraints(&Graph::complete(5).unwrap(), &cs);
        assert!(!r.passes());
        assert_eq!(r.violations[0].witness, VertexSet::full(5));
        assert!(check_constraints(&capped_colex_turan(4, 17, 5).unwrap(), &cs).passes());
    }

    #[test]
    fn split_witness_is_a_split_graph() {
        let g = complete_split(2, 4).unwrap();
        let cs = ConstraintSet::new(2, Some(3), None);
        let r = check_constraints(&g, &cs);
        assert_eq!(r.violations.len(), 1);
        let w = g.induced_subgraph(&r.violations[0].witness).unwrap();
        assert!(contains_subgraph(&w, &complete_split(2, 4).unwrap()).is_some());
        assert_eq!(r.max_common_neighborhood_by_u[&2], 4);
        assert!(!cs.admits(&g));
    }

    #[test]
    fn clique_numbers() {
        for r in 1..=6 {
            assert_eq!(clique_number(&turan(r, 3 * r).unwrap()), r);
        }
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
    }
}
