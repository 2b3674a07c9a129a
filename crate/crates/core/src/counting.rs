//! Clique counts, subgraph-copy counts and rooted counts.
//!
//! A copy of `H` in `G` is a subgraph (vertex set plus edge set) isomorphic to
//! `H`, never an induced one. Copies are counted as injective edge-preserving
//! maps divided by `|Aut(H)|`. Isolated pattern vertices are factored out
//! as a binomial, and complete patterns go through the clique counter.

use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitset::VertexSet;
use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::binomial;

pub type CountValue = BigUint;

/// Order in which pattern vertices are placed, and for each position the
/// earlier positions it must be adjacent to.
#[derive(Clone, Debug)]
struct EmbedPlan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl EmbedPlan {
    fn new(h: &Graph) -> EmbedPlan {
        let k = h.order();
        let mut placed = VertexSet::new();
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            let v = (0..k)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| ((h.neighbors(v) & placed).len(), h.degree(v), Reverse(v)))
                .unwrap();
            placed.insert(v);
            order.push(v);
        }
        let back = (0..k).map(|i| (0..i).filter(|&j| h.has_edge(order[i], order[j])).collect()).collect();
        EmbedPlan { order, back }
    }

    fn candidates(&self, g: &Graph, depth: usize, mapped: &[usize], used: VertexSet) -> VertexSet {
        let mut cand = g.vertices();
        for &p in &self.back[depth] {
            cand &= g.neighbors(mapped[p]);
        }
        cand - used
    }

    /// Embeddings extending `mapped[..depth]`.
    fn count_from(&self, g: &Graph, depth: usize, mapped: &mut [usize], used: VertexSet) -> u128 {
        let cand = self.candidates(g, depth, mapped, used);
        if depth + 1 == self.order.len() {
            return cand.len() as u128;
        }
        let mut total = 0;
        for v in cand.iter() {
            mapped[depth] = v;
            let mut next = used;
            next.insert(v);
            total += self.count_from(g, depth + 1, mapped, next);
        }
        total
    }

    fn visit(
        &self,
        g: &Graph,
        depth: usize,
        mapped: &mut [usize],
        used: VertexSet,
        phi: &mut [usize],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            for (pos, &hv) in self.order.iter().enumerate() {
                phi[hv] = mapped[pos];
            }
            return f(phi);
        }
        for v in self.candidates(g, depth, mapped, used).iter() {
            mapped[depth] = v;
            let mut next = used;
            next.insert(v);
            if !self.visit(g, depth + 1, mapped, next, phi, f) {
                return false;
            }
        }
        true
    }
}

/// A pattern graph `H` with its dominating-vertex structure and the data the
/// counters need.
#[derive(Clone, Debug)]
pub struct PatternSpec {
    pattern: Graph,
    dom_set: VertexSet,
    aut_count: BigUint,
    derived: Vec<Graph>,
    core: Graph,
    isolated: usize,
    core_complete: bool,
    core_aut: BigUint,
    plan: EmbedPlan,
}

impl PatternSpec {
    pub fn new(h: Graph) -> PatternSpec {
        let dom_set = dominating_vertices(&h);
        let non_isolated: VertexSet = (0..h.order()).filter(|&v| h.degree(v) > 0).collect();
        let core = h.induced_subgraph(&non_isolated).expect("subset of the pattern");
        let isolated = h.order() - core.order();
        let core_complete = core.is_clique(&core.vertices());
        let plan = EmbedPlan::new(&core);
        let core_aut = if core_complete {
            factorial(core.order())
        } else {
            let mut mapped = alloc::vec![0; core.order()];
            BigUint::from(plan.count_from(&core, 0, &mut mapped, VertexSet::new()))
        };
        let aut_count = &core_aut * factorial(isolated);
        let derived =
            (0..=dom_set.len()).map(|u| h.remove_vertices(&dom_set.take(u)).expect("subset of the pattern")).collect();
        let spec =
            PatternSpec { pattern: h, dom_set, aut_count, derived, core, isolated, core_complete, core_aut, plan };
        if cfg!(debug_assertions) && !spec.core_complete && spec.dom_count() <= 6 {
            for u in 0..=spec.dom_count() {
                assert!(spec.reduction_is_choice_independent(u));
            }
        }
        spec
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn order(&self) -> usize {
        self.pattern.order()
    }

    pub fn dom_set(&self) -> VertexSet {
        self.dom_set
    }

    pub fn dom_count(&self) -> usize {
        self.dom_set.len()
    }

    pub fn aut_count(&self) -> &BigUint {
        &self.aut_count
    }

    pub fn is_complete(&self) -> bool {
        self.isolated == 0 && self.core_complete || self.pattern.order() <= 1
    }

    /// `H^{↓u}`: `H` minus its `u` lexicographically least dominating
    /// vertices.
    pub fn reduced(&self, u: usize) -> Result<&Graph> {
        self.derived.get(u).ok_or(Error::TooFewDominating { need: u, have: self.dom_count() })
    }

    pub fn reduced_spec(&self, u: usize) -> Result<PatternSpec> {
        self.reduced(u).map(|g| PatternSpec::new(g.clone()))
    }

    /// Whether every choice of `u` dominating vertices leaves an isomorphic
    /// graph; false when `u > dom(H)`.
    pub fn reduction_is_choice_independent(&self, u: usize) -> bool {
        let Ok(reference) = self.reduced(u) else {
            return false;
        };
        let want = canonical_code(reference);
        let mut ok = true;
        for_each_subset(self.dom_set, u, &mut |s| {
            ok &= canonical_code(&self.pattern.remove_vertices(&s).unwrap()) == want;
            ok
        });
        ok
    }

    /// Contribution of host vertex `v` to the count of `self` in `g`:
    /// cliques whose least vertex is `v` for complete patterns, embeddings
    /// sending the first placed pattern vertex to `v` otherwise. Summing over
    /// all `v` and passing the total to [`PatternSpec::combine`] gives
    /// [`count_subgraph_copies`]; units are independent.
    pub fn partial_count(&self, g: &Graph, v: usize) -> BigUint {
        let k = self.core.order();
        if k == 0 || k > g.order() {
            return BigUint::zero();
        }
        if self.core_complete {
            return BigUint::from(cliques_with_least(g, k, v));
        }
        if k == 1 {
            return BigUint::one();
        }
        let mut mapped = alloc::vec![0; k];
        mapped[0] = v;
        BigUint::from(self.plan.count_from(g, 1, &mut mapped, VertexSet::singleton(v)))
    }

    /// Turns the sum of all [`PatternSpec::partial_count`] values into the
    /// copy count.
    pub fn combine(&self, g: &Graph, total: BigUint) -> BigUint {
        let k = self.core.order();
        if self.pattern.order() > g.order() {
            return BigUint::zero();
        }
        let core_count = if k == 0 {
            BigUint::one()
        } else if self.core_complete {
            total
        } else {
            total / &self.core_aut
        };
        core_count * binomial(g.order() - k, self.isolated)
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Calls `f` on every `k`-subset of `s` in lexicographic order until it
/// returns false.
pub(crate) fn for_each_subset(s: VertexSet, k: usize, f: &mut dyn FnMut(VertexSet) -> bool) {
    fn rec(rest: VertexSet, k: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        for v in rest.iter() {
            let after = rest.above(v);
            if after.len() + 1 < k {
                break;
            }
            let mut next = acc;
            next.insert(v);
            if !rec(after, k - 1, next, f) {
                return false;
            }
        }
        true
    }
    rec(s, k, VertexSet::new(), f);
}

fn clique_rec(g: &Graph, cand: VertexSet, left: usize) -> u128 {
    match left {
        0 => 1,
        1 => cand.len() as u128,
        _ if cand.len() < left => 0,
        _ => cand.iter().map(|w| clique_rec(g, cand & g.neighbors(w).above(w), left - 1)).sum(),
    }
}

/// Number of `t`-cliques of `g` whose least vertex is `v`.
fn cliques_with_least(g: &Graph, t: usize, v: usize) -> u128 {
    if t == 0 {
        return 0;
    }
    clique_rec(g, g.neighbors(v).above(v), t - 1)
}

/// `k^t(G)`; `k^0 = 1`.
pub fn count_cliques(g: &Graph, t: usize) -> CountValue {
    if t == 0 {
        return BigUint::one();
    }
    BigUint::from((0..g.order()).map(|v| cliques_with_least(g, t, v)).sum::<u128>())
}

/// Visits every `t`-clique once, in lexicographic order of the sorted vertex
/// lists, until `f` returns false. `t = 0` visits the empty set once.
pub fn for_each_clique(g: &Graph, t: usize, f: &mut dyn FnMut(VertexSet) -> bool) {
    fn rec(g: &Graph, cand: VertexSet, left: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        for w in cand.iter() {
            let mut next = acc;
            next.insert(w);
            if !rec(g, cand & g.neighbors(w).above(w), left - 1, next, f) {
                return false;
            }
        }
        true
    }
    rec(g, g.vertices(), t, VertexSet::new(), f);
}

pub fn enumerate_cliques(g: &Graph, t: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_clique(g, t, &mut |c| {
        out.push(c);
        true
    });
    out
}

/// `𝒩(H, G)`.
pub fn count_subgraph_copies(h: &PatternSpec, g: &Graph) -> CountValue {
    let total = (0..g.order()).map(|v| h.partial_count(g, v)).sum();
    h.combine(g, total)
}

/// Number of injective edge-preserving maps `H → G`.
pub fn count_embeddings(h: &Graph, g: &Graph) -> CountValue {
    if h.order() > g.order() {
        return BigUint::zero();
    }
    if h.order() == 0 {
        return BigUint::one();
    }
    let plan = EmbedPlan::new(h);
    let mut mapped = alloc::vec![0; h.order()];
    BigUint::from(plan.count_from(g, 0, &mut mapped, VertexSet::new()))
}

/// Visits every injective edge-preserving map `phi: H → G` (as
/// `phi[h_vertex] = g_vertex`) in a fixed order until `f` returns false.
pub fn for_each_embedding(h: &Graph, g: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) {
    if h.order() > g.order() {
        return;
    }
    let plan = EmbedPlan::new(h);
    let mut mapped = alloc::vec![0; h.order()];
    let mut phi = alloc::vec![0; h.order()];
    plan.visit(g, 0, &mut mapped, VertexSet::new(), &mut phi, f);
}

/// All automorphisms of `h` as vertex maps.
pub fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding(h, h, &mut |phi| {
        out.push(phi.to_vec());
        true
    });
    out
}

pub fn automorphism_count(h: &Graph) -> CountValue {
    PatternSpec::new(h.clone()).aut_count
}

/// `Dom(H)`: vertices adjacent to every other vertex.
pub fn dominating_vertices(h: &Graph) -> VertexSet {
    let n = h.order();
    (0..n).filter(|&v| h.degree(v) + 1 == n).collect()
}

/// `H^{↓u}`, deleting the `u` lexicographically least dominating vertices.
pub fn delete_dominating(h: &Graph, u: usize) -> Result<Graph> {
    let dom = dominating_vertices(h);
    if dom.len() < u {
        return Err(Error::TooFewDominating { need: u, have: dom.len() });
    }
    h.remove_vertices(&dom.take(u))
}

fn check_rooted(h: &PatternSpec, g: &Graph, c: &VertexSet, u: usize) -> Result<()> {
    if c.len() != u {
        return Err(Error::WrongCliqueSize { expected: u, actual: c.len() });
    }
    if u > h.dom_count() {
        return Err(Error::TooFewDominating { need: u, have: h.dom_count() });
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

/// `𝒩_c(H, G) = 𝒩(H^{↓u}, G[N(c)])`: copies of `H` in which every vertex of
/// the `u`-clique `c` is dominating. `u = 0` counts all copies.
pub fn count_copies_rooted(h: &PatternSpec, g: &Graph, c: &VertexSet, u: usize) -> Result<CountValue> {
    check_rooted(h, g, c, u)?;
    if u == 0 {
        return Ok(count_subgraph_copies(h, g));
    }
    let reduced = h.reduced_spec(u)?;
    let nc = g.common_neighborhood(c)?;
    Ok(count_subgraph_copies(&reduced, &g.induced_subgraph(&nc)?))
}

/// `(c, 𝒩_c(H, G))` for every `u`-clique `c` of `g`, in clique order.
pub fn rooted_counts(h: &PatternSpec, g: &Graph, u: usize) -> Result<Vec<(VertexSet, CountValue)>> {
    if u > h.dom_count() {
        return Err(Error::TooFewDominating { need: u, have: h.dom_count() });
    }
    if u == 0 {
        return Ok(alloc::vec![(VertexSet::new(), count_subgraph_copies(h, g))]);
    }
    let reduced = h.reduced_spec(u)?;
    let mut out = Vec::new();
    let mut err = None;
    for_each_clique(g, u, &mut |c| {
        match g.common_neighborhood(&c).and_then(|nc| g.induced_subgraph(&nc)) {
            Ok(sub) => out.push((c, count_subgraph_copies(&reduced, &sub))),
            Err(e) => err = Some(e),
        }
        err.is_none()
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `k^s(T_r(n))` from the part sizes: with `n = ar + b`,
/// `Σ_i C(b,i) C(r−b, s−i) (a+1)^i a^(s−i)`. `r = 0` is treated as the
/// empty product (only `s = 0` counts).
pub fn turan_clique_closed_form(r: usize, n: usize, s: usize) -> CountValue {
    if r == 0 {
        return if s == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let (a, b) = (n / r, n % r);
    let big_a = BigUint::from(a);
    let big_a1 = BigUint::from(a + 1);
    (0..=b.min(s))
        .map(|i| binomial(b, i) * binomial(r - b, s - i) * big_a1.pow(i as u32) * big_a.pow((s - i) as u32))
        .sum()
}

/// Copies of `H` meeting `S`: `𝒩(H, G) − 𝒩(H, G − S)`.
pub fn copies_through(h: &PatternSpec, g: &Graph, s: &VertexSet) -> Result<CountValue> {
    let rest = g.remove_vertices(s)?;
    Ok(count_subgraph_copies(h, g) - count_subgraph_copies(h, &rest))
}
