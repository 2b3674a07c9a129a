//! Per-copy weights and the localized inequality
//! `Σ_J x(J) ≤ k^u(G) / C(dom(H), u)`.
//!
//! For a `u`-clique `c`, `ω(c)` is the largest clique containing it and
//! `Δ(c) = |N(c)|`. A copy `J` takes the maxima of both over the `u`-subsets
//! of its own dominating vertices, and `x(J) = 1/𝒩(H^{↓u}, T_{ω(J)−u}(Δ(J)))`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::bounds::Density;
use crate::canon::is_isomorphic;
use crate::constructions::turan;
use crate::counting::{
    automorphisms, count_cliques, count_subgraph_copies, for_each_clique, for_each_embedding, for_each_subset,
    turan_clique_closed_form, PatternSpec,
};
use crate::error::{Error, Result};
use crate::freeness::max_clique_in;
use crate::graph::Graph;
use crate::num::binomial;

/// A subgraph of the host: vertex set plus edge set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgraphCopy {
    pub vertices: VertexSet,
    /// Edges `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphCopy {
    /// Dominating vertices computed on the copy's own edges.
    pub fn dominating(&self) -> VertexSet {
        let k = self.vertices.len();
        let mut deg = BTreeMap::new();
        for &(i, j) in &self.edges {
            *deg.entry(i).or_insert(0usize) += 1;
            *deg.entry(j).or_insert(0usize) += 1;
        }
        self.vertices.iter().filter(|v| deg.get(v).copied().unwrap_or(0) + 1 == k).collect()
    }

    /// The copy as a graph on `0..k`, vertices in increasing order.
    pub fn as_graph(&self) -> Result<Graph> {
        let index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let edges = self.edges.iter().map(|(i, j)| (index[i], index[j]));
        Graph::from_edge_list(self.vertices.len(), edges)
    }

    fn from_clique(c: VertexSet) -> SubgraphCopy {
        let list: Vec<usize> = c.iter().collect();
        let mut edges = Vec::new();
        for (a, &x) in list.iter().enumerate() {
            edges.extend(list[a + 1..].iter().map(|&y| (x, y)));
        }
        SubgraphCopy { vertices: c, edges }
    }
}

/// Every copy of `H` in `G`, sorted by vertex set then edge set.
pub fn enumerate_copies(h: &PatternSpec, g: &Graph) -> Vec<SubgraphCopy> {
    let pattern = h.pattern();
    if h.is_complete() {
        let mut out = Vec::new();
        for_each_clique(g, pattern.order(), &mut |c| {
            out.push(SubgraphCopy::from_clique(c));
            true
        });
        return out;
    }
    let autos = automorphisms(pattern);
    let mut out = Vec::new();
    for_each_embedding(pattern, g, &mut |phi| {
        // keep the lexicographically least map in each Aut(H)-class
        let least = autos.iter().all(|sigma| {
            let other = sigma.iter().map(|&s| phi[s]);
            phi.iter().copied().le(other)
        });
        if least {
            let mut edges: Vec<(usize, usize)> =
                pattern.edges().map(|(i, j)| (phi[i].min(phi[j]), phi[i].max(phi[j]))).collect();
            edges.sort_unstable();
            out.push(SubgraphCopy { vertices: phi.iter().copied().collect(), edges });
        }
        true
    });
    out.sort();
    out
}

fn check_clique(g: &Graph, c: &VertexSet, u: usize) -> Result<()> {
    if c.len() != u {
        return Err(Error::WrongCliqueSize { expected: u, actual: c.len() });
    }
    if u == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = c.last() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
    }
    if !g.is_clique(c) {
        return Err(Error::NotAClique);
    }
    Ok(())
}

/// `(ω(c), Δ(c))` for a `u`-clique `c`.
pub fn clique_weights(g: &Graph, c: &VertexSet, u: usize) -> Result<(usize, usize)> {
    check_clique(g, c, u)?;
    let nc = g.common_neighborhood(c)?;
    Ok((u + max_clique_in(g, nc), nc.len()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyWeights {
    pub copy: SubgraphCopy,
    pub omega_j: usize,
    pub delta_j: usize,
    /// `1/𝒩(H^{↓u}, T_{ω(J)−u}(Δ(J)))`.
    pub x: Density,
    /// A `u`-subset of `Dom(J)` attaining `ω(J)`.
    pub omega_witness: VertexSet,
    /// A `u`-subset of `Dom(J)` attaining `Δ(J)`.
    pub delta_witness: VertexSet,
    /// Smallest `ω(c)` over the `u`-subsets of `Dom(J)`.
    pub min_omega_c: usize,
}

/// Memoized `ω(c), Δ(c)` and denominators for one host graph.
struct Weigher<'a> {
    g: &'a Graph,
    u: usize,
    cliques: BTreeMap<VertexSet, (usize, usize)>,
    denominators: BTreeMap<(usize, usize), BigUint>,
}

impl<'a> Weigher<'a> {
    fn new(g: &'a Graph, u: usize) -> Weigher<'a> {
        Weigher { g, u, cliques: BTreeMap::new(), denominators: BTreeMap::new() }
    }

    fn clique(&mut self, c: VertexSet) -> Result<(usize, usize)> {
        if let Some(&w) = self.cliques.get(&c) {
            return Ok(w);
        }
        let w = clique_weights(self.g, &c, self.u)?;
        self.cliques.insert(c, w);
        Ok(w)
    }

    fn weights(
        &mut self,
        copy: SubgraphCopy,
        dom: usize,
        denominator: &mut dyn FnMut(usize, usize) -> Result<BigUint>,
    ) -> Result<CopyWeights> {
        let dom_j = copy.dominating();
        if dom_j.len() != dom {
            return Err(Error::NotACopy);
        }
        let mut subsets = Vec::new();
        for_each_subset(dom_j, self.u, &mut |c| {
            subsets.push(c);
            true
        });
        let mut best_omega: Option<(usize, VertexSet)> = None;
        let mut best_delta: Option<(usize, VertexSet)> = None;
        let mut min_omega = usize::MAX;
        for c in subsets {
            let (w, d) = self.clique(c)?;
            if best_omega.is_none_or(|(b, _)| w > b) {
                best_omega = Some((w, c));
            }
            if best_delta.is_none_or(|(b, _)| d > b) {
                best_delta = Some((d, c));
            }
            min_omega = min_omega.min(w);
        }
        let (Some(best_omega), Some(best_delta)) = (best_omega, best_delta) else {
            return Err(Error::TooFewDominating { need: self.u, have: dom });
        };
        let (omega_j, delta_j) = (best_omega.0, best_delta.0);
        let r = omega_j - self.u;
        let den = match self.denominators.get(&(r, delta_j)) {
            Some(d) => d.clone(),
            None => {
                let d = denominator(r, delta_j)?;
                self.denominators.insert((r, delta_j), d.clone());
                d
            }
        };
        if den.is_zero() {
            return Err(Error::WeightUndefined { r, n: delta_j });
        }
        Ok(CopyWeights {
            copy,
            omega_j,
            delta_j,
            x: Density::new(BigUint::from(1u32), den)?,
            omega_witness: best_omega.1,
            delta_witness: best_delta.1,
            min_omega_c: min_omega,
        })
    }
}

/// `T_r(d)`, with `T_0(0)` read as the empty graph.
fn turan_or_empty(r: usize, d: usize) -> Result<Graph> {
    if r == 0 {
        if d == 0 {
            return Graph::empty(0);
        }
        return Err(Error::WeightUndefined { r, n: d });
    }
    turan(r, d)
}

/// Weights of one copy `J` of `H` in `G`.
pub fn copy_weights(g: &Graph, j: &SubgraphCopy, h: &PatternSpec, u: usize) -> Result<CopyWeights> {
    if h.dom_count() < u {
        return Err(Error::TooFewDominating { need: u, have: h.dom_count() });
    }
    if !j.edges.iter().all(|&(a, b)| a < g.order() && b < g.order() && g.has_edge(a, b))
        || !is_isomorphic(&j.as_graph()?, h.pattern())
    {
        return Err(Error::NotACopy);
    }
    let reduced = h.reduced_spec(u)?;
    let mut weigher = Weigher::new(g, u);
    weigher.weights(j.clone(), h.dom_count(), &mut |r, d| Ok(count_subgraph_copies(&reduced, &turan_or_empty(r, d)?)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalReport {
    pub per_copy: Vec<CopyWeights>,
    pub weighted_sum: Density,
    /// `k^u(G) / C(dom(H), u)`.
    pub bound: Density,
    pub holds: bool,
    pub equality: bool,
    /// Every `u`-clique of dominating vertices of a copy has
    /// `ω(c) ≥ omega0_param + u`.
    pub hypothesis_ok: bool,
    pub omega0_param: u128,
    /// `u`-cliques of dominating vertices of some copy that fail the
    /// hypothesis.
    pub violating_cliques: Vec<VertexSet>,
    /// `u`-cliques of `G` that are not dominating in any copy; the
    /// hypothesis says nothing about them.
    pub exempt_cliques: Vec<VertexSet>,
}

fn assemble(
    g: &Graph,
    u: usize,
    dom: usize,
    omega0_param: u128,
    per_copy: Vec<CopyWeights>,
    weigher: &Weigher<'_>,
) -> Result<LocalReport> {
    let weighted_sum = per_copy.iter().fold(Density::zero(), |acc, w| Density(acc.0 + &w.x.0));
    let bound = Density::new(count_cliques(g, u), binomial(dom, u))?;
    let threshold = omega0_param.saturating_add(u as u128);
    let violating_cliques: Vec<VertexSet> =
        weigher.cliques.iter().filter(|(_, &(w, _))| (w as u128) < threshold).map(|(c, _)| *c).collect();
    let mut exempt_cliques = Vec::new();
    for_each_clique(g, u, &mut |c| {
        if !weigher.cliques.contains_key(&c) {
            exempt_cliques.push(c);
        }
        true
    });
    Ok(LocalReport {
        holds: weighted_sum <= bound,
        equality: weighted_sum == bound,
        hypothesis_ok: violating_cliques.is_empty(),
        weighted_sum,
        bound,
        per_copy,
        omega0_param,
        violating_cliques,
        exempt_cliques,
    })
}

/// Enumerates all copies of `H`, weighs them and evaluates the inequality.
/// The report is produced even when the hypothesis fails; a copy whose
/// weight is undefined aborts with [`Error::WeightUndefined`].
pub fn localized_report(g: &Graph, h: &PatternSpec, u: usize, omega0_param: u128) -> Result<LocalReport> {
    if u == 0 || h.dom_count() < u {
        return Err(Error::TooFewDominating { need: u.max(1), have: h.dom_count() });
    }
    let reduced = h.reduced_spec(u)?;
    let mut weigher = Weigher::new(g, u);
    let mut per_copy = Vec::new();
    for copy in enumerate_copies(h, g) {
        per_copy.push(
            weigher.weights(copy, h.dom_count(), &mut |r, d| {
                Ok(count_subgraph_copies(&reduced, &turan_or_empty(r, d)?))
            })?,
        );
    }
    assemble(g, u, h.dom_count(), omega0_param, per_copy, &weigher)
}

/// [`localized_report`] for `H = K_t` with `ω₀ = 1` and the denominators
/// from the closed form for clique counts in Turán graphs.
pub fn localized_clique_sum(g: &Graph, t: usize, u: usize) -> Result<LocalReport> {
    if u == 0 || t < u + 1 {
        return Err(Error::InvalidParameters(alloc::format!("need t ≥ u+1 ≥ 2, got t={t}, u={u}")));
    }
    let mut weigher = Weigher::new(g, u);
    let mut per_copy = Vec::new();
    let mut cliques = Vec::new();
    for_each_clique(g, t, &mut |c| {
        cliques.push(c);
        true
    });
    for c in cliques {
        per_copy.push(
            weigher.weights(SubgraphCopy::from_clique(c), t, &mut |r, d| Ok(turan_clique_closed_form(r, d, t - u)))?,
        );
    }
    assemble(g, u, t, 1, per_copy, &weigher)
}

/// `Σ x(J)` as a plain rational, for callers that only need the sum.
pub fn weighted_sum(report: &LocalReport) -> &BigRational {
    &report.weighted_sum.0
}
