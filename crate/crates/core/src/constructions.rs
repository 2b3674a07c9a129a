//! Builders for the named graph families.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bitset::VertexSet;
use crate::bounds::ParamTriple;
use crate::counting::turan_clique_closed_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part structure of `T_r(n)`: `n mod r` parts of size `⌈n/r⌉` first, then
/// parts of size `⌊n/r⌋`. Vertices are numbered part by part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranSpec {
    pub r: usize,
    pub n: usize,
    pub part_sizes: Vec<usize>,
}

impl TuranSpec {
    pub fn new(r: usize, n: usize) -> Result<TuranSpec> {
        if r == 0 {
            return Err(Error::InvalidParameters("Turán graph needs r >= 1".into()));
        }
        let (q, rem) = (n / r, n % r);
        let part_sizes = (0..r).map(|i| q + (i < rem) as usize).collect();
        Ok(TuranSpec { r, n, part_sizes })
    }

    /// Vertex sets of the parts, largest first.
    pub fn parts(&self) -> Vec<VertexSet> {
        let mut start = 0;
        self.part_sizes
            .iter()
            .map(|&s| {
                let p = VertexSet::full(start + s) - VertexSet::full(start);
                start += s;
                p
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        let sq: usize = self.part_sizes.iter().map(|s| s * s).sum();
        (self.n * self.n - sq) / 2
    }
}

/// The Turán graph `T_r(n)`.
pub fn turan(r: usize, n: usize) -> Result<Graph> {
    let spec = TuranSpec::new(r, n)?;
    crate::graph::check_cap(n)?;
    let all = VertexSet::full(n);
    let rows = spec.parts().iter().flat_map(|p| p.iter().map(move |_| all - *p)).collect();
    Ok(Graph::from_rows(rows))
}

/// Edges of the infinite `r`-partite Turán graph on `0, 1, 2, …` (vertex `i`
/// in part `i mod r`) in colexicographic order.
fn colex_edges(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (1usize..).flat_map(move |j| (0..j).filter(move |i| i % r != j % r).map(move |i| (i, j)))
}

fn graph_from_edges_trimmed(edges: &[(usize, usize)]) -> Result<Graph> {
    let n = edges.iter().map(|&(_, j)| j + 1).max().unwrap_or(0);
    let g = Graph::from_edge_list(n, edges.iter().copied())?;
    let used: VertexSet = (0..n).filter(|&v| g.degree(v) > 0).collect();
    g.induced_subgraph(&used)
}

/// The colex Turán graph `CT_r(m)`: the first `m` edges, in colex order, of
/// the infinite `r`-partite Turán graph, isolated vertices removed.
pub fn colex_turan(r: usize, m: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::InvalidParameters("colex Turán graph needs r >= 2".into()));
    }
    let edges: Vec<_> = colex_edges(r).take(m).collect();
    graph_from_edges_trimmed(&edges)
}

/// Colex Turán graph under a degree cap: walks the same colex edge order but
/// skips every edge that would give an endpoint degree above `max_degree`,
/// stopping after `m` accepted edges.
///
/// With `max_degree = Δ` this is the `{K_{1,Δ+1}, K_{r+1}}`-free member of the
/// colex family; `capped_colex_turan(4, 17, 5)` is `T_4(7)` minus one edge at
/// its singleton part.
pub fn capped_colex_turan(r: usize, m: usize, max_degree: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::InvalidParameters("colex Turán graph needs r >= 2".into()));
    }
    if m > 0 && max_degree == 0 {
        return Err(Error::InvalidParameters("no edges fit under a zero degree cap".into()));
    }
    let mut degree: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(m);
    for (i, j) in colex_edges(r) {
        if edges.len() == m {
            break;
        }
        if degree.len() <= j {
            degree.resize(j + 1, 0);
        }
        if degree[i] < max_degree && degree[j] < max_degree {
            degree[i] += 1;
            degree[j] += 1;
            edges.push((i, j));
        }
    }
    graph_from_edges_trimmed(&edges)
}

/// The complete split graph `K_u ∨ I_s`; the clique is on `0..u`.
pub fn complete_split(u: usize, s: usize) -> Result<Graph> {
    Graph::complete(u)?.join(&Graph::empty(s)?)
}

/// The lower bound graph `L_u(Δ, ω) = T_ω(aω + b)`.
pub fn lower_bound_graph(params: &ParamTriple) -> Result<Graph> {
    turan(params.omega, params.lb_order())
}

/// The decomposition `p = q·k^u(L) + r` used by [`lb_family`].
pub fn lb_family_split(params: &ParamTriple, p: usize) -> (usize, usize) {
    let l = TuranSpec::new(params.omega, params.lb_order()).expect("omega >= 2");
    let per: BigUint = turan_clique_closed_form(l.r, l.n, params.u);
    match per.to_usize() {
        Some(k) if k > 0 => (p / k, p % k),
        _ => (0, p),
    }
}

/// `qL ∪ rK_u`, which has exactly `p` cliques of size `u`.
pub fn lb_family(params: &ParamTriple, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidParameters("lb_family needs p >= 1".into()));
    }
    let (q, r) = lb_family_split(params, p);
    let l = lower_bound_graph(params)?;
    let ku = Graph::complete(params.u)?;
    Graph::disjoint_union(&[(&l, q), (&ku, r)])
}

/// `K_u ∨ J`, whose first `u` vertices form the added clique; deleting `u`
/// dominating vertices gives back `J`.
pub fn join_with_clique(j: &Graph, u: usize) -> Result<Graph> {
    Graph::complete(u)?.join(j)
}

/// Candidate extremal graphs suggested for the exact problem when `(ω−u) | Δ`.
///
/// `u = 1`: `a·T_ω(Δω/(ω−1)) ∪ T_ω(b)` with `size = n = a·Δω/(ω−1) + b`.
/// `u = 2`: `a·T_ω(Δω/(ω−2)) ∪ CT_ω(b)` with `size = m = a·e(T_ω(Δω/(ω−2))) + b`.
///
/// These are conjectural and only built for inspection.
pub fn open_problem_candidate(params: &ParamTriple, size: usize) -> Result<Graph> {
    if params.b != 0 {
        return Err(Error::InvalidParameters("candidate needs (ω−u) | Δ".into()));
    }
    let block = turan(params.omega, params.lb_order())?;
    match params.u {
        1 => {
            let per = block.order();
            let (a, b) = (size / per, size % per);
            let tail = turan(params.omega, b)?;
            Graph::disjoint_union(&[(&block, a), (&tail, 1)])
        }
        2 => {
            let per = block.size();
            let (a, b) = (size / per, size % per);
            let tail = colex_turan(params.omega, b)?;
            Graph::disjoint_union(&[(&block, a), (&tail, 1)])
        }
        _ => Err(Error::InvalidParameters("candidates are only suggested for u = 1, 2".into())),
    }
}
