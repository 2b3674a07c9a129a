//! Exhaustive generation of small graphs and brute-force extremal values.
//!
//! Generation is by canonical augmentation: a graph on `n` vertices is
//! produced from its canonical parent (itself minus a canonically chosen
//! vertex) by adding a vertex, so each isomorphism class is emitted once.
//! Any predicate that is closed under deleting a vertex can prune the tree.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, canonicalize, canonicalize_colored, CanonicalCode};
use crate::counting::{count_cliques, count_subgraph_copies, PatternSpec};
use crate::error::{Error, Result};
use crate::freeness::{check_constraints, ConstraintSet};
use crate::graph::Graph;
use crate::graph6;

/// Largest order exhaustive search will run at without opting in.
pub const DEFAULT_CAP: usize = 8;
/// Hard ceiling; orders above the default cap are slow.
pub const HARD_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub cap: usize,
}

impl Default for SearchLimits {
    fn default() -> SearchLimits {
        SearchLimits { cap: DEFAULT_CAP }
    }
}

impl SearchLimits {
    /// Raises the cap, at most to [`HARD_CAP`].
    pub fn with_cap(cap: usize) -> Result<SearchLimits> {
        if cap > HARD_CAP {
            return Err(Error::SearchCap(alloc::format!("cap {cap} is above the ceiling {HARD_CAP}")));
        }
        Ok(SearchLimits { cap })
    }

    /// A warning to surface when the cap is above the default.
    pub fn warning(&self) -> Option<String> {
        (self.cap > DEFAULT_CAP)
            .then(|| alloc::format!("search cap raised to {} (default {DEFAULT_CAP}); expect long runs", self.cap))
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::SearchCap(alloc::format!("order {n} is above the cap {}", self.cap)));
        }
        Ok(())
    }
}

/// Vertex invariant used to pick the canonical deletion vertex.
fn invariant(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).iter().map(|w| g.degree(w)).sum())
}

/// Whether the last vertex of `child` is in the orbit of its canonical
/// deletion vertex, plus the child's canonical code.
fn accept(child: &Graph) -> Option<CanonicalCode> {
    let v = child.order() - 1;
    let inv: Vec<_> = (0..child.order()).map(|x| invariant(child, x)).collect();
    let best = *inv.iter().max().unwrap();
    if inv[v] != best {
        return None;
    }
    let candidates: VertexSet = (0..child.order()).filter(|&x| inv[x] == best).collect();
    let canon = canonicalize(child);
    if candidates.len() == 1 {
        return Some(canon.code);
    }
    let w = *canon.labeling.iter().rev().find(|&&x| candidates.contains(x)).unwrap();
    if w == v {
        return Some(canon.code);
    }
    let marked = |x: usize| -> Vec<u32> { (0..child.order()).map(|y| (y == x) as u32).collect() };
    let same = canonicalize_colored(child, &marked(v)).code == canonicalize_colored(child, &marked(w)).code;
    same.then_some(canon.code)
}

/// Canonical children of `parent` (one vertex larger) that satisfy `keep`,
/// one per isomorphism class, in a fixed order.
pub fn children(parent: &Graph, keep: &dyn Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let k = parent.order();
    if k >= 63 {
        return Err(Error::SearchCap("augmentation enumerates all neighbour subsets".into()));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let nbrs: VertexSet = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        let child = parent.with_vertex(nbrs)?;
        if !keep(&child) {
            continue;
        }
        if let Some(code) = accept(&child) {
            if seen.insert(code) {
                out.push(child);
            }
        }
    }
    Ok(out)
}

/// Depth-first visit of `root` and its canonical descendants up to order
/// `n`, restricted to graphs satisfying `keep`.
pub fn for_each_graph_from(
    root: &Graph,
    n: usize,
    keep: &dyn Fn(&Graph) -> bool,
    visit: &mut dyn FnMut(&Graph),
) -> Result<()> {
    visit(root);
    if root.order() < n {
        for c in children(root, keep)? {
            for_each_graph_from(&c, n, keep, visit)?;
        }
    }
    Ok(())
}

/// Depth-first visit of one representative per isomorphism class for every
/// order `0..=n` among graphs all of whose generation ancestors satisfy
/// `keep`. For a predicate closed under vertex deletion that is exactly the
/// graphs satisfying it.
pub fn for_each_graph_upto(
    n: usize,
    limits: &SearchLimits,
    keep: &dyn Fn(&Graph) -> bool,
    visit: &mut dyn FnMut(&Graph),
) -> Result<()> {
    limits.check(n)?;
    let root = Graph::empty(0)?;
    if keep(&root) {
        for_each_graph_from(&root, n, keep, visit)?;
    }
    Ok(())
}

/// Splits the generation tree at order `depth`: every kept graph of order
/// below `depth` (in level order), and the kept graphs of order exactly
/// `depth`, whose subtrees together cover the rest. Visiting the shallow
/// graphs and then the subtrees of the frontier reaches the same graphs as
/// [`for_each_graph_upto`].
pub fn split_tree(
    n: usize,
    depth: usize,
    limits: &SearchLimits,
    keep: &dyn Fn(&Graph) -> bool,
) -> Result<(Vec<Graph>, Vec<Graph>)> {
    limits.check(n)?;
    let root = Graph::empty(0)?;
    if !keep(&root) {
        return Ok((Vec::new(), Vec::new()));
    }
    let depth = depth.min(n);
    let mut shallow = Vec::new();
    let mut level = alloc::vec![root];
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in &level {
            next.extend(children(g, keep)?);
        }
        shallow.append(&mut level);
        level = next;
    }
    Ok((shallow, level))
}

/// One graph per isomorphism class on exactly `n` vertices, optionally
/// restricted to graphs satisfying `prune`.
pub fn enumerate_graphs(n: usize, prune: Option<&ConstraintSet>, limits: &SearchLimits) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let keep = |g: &Graph| prune.is_none_or(|cs| cs.admits(g));
    for_each_graph_upto(n, limits, &keep, &mut |g| {
        if g.order() == n {
            out.push(g.clone());
        }
    })?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Maximum of `𝒩(H, G)` over the admissible graphs.
    pub objective: BigUint,
    /// graph6 of the canonical form of every optimum, sorted.
    pub argmax: Vec<String>,
    /// Number of admissible graphs examined (one per isomorphism class).
    pub search_space_size: u64,
    pub constraints: ConstraintSet,
    /// `(u, p)`: the clique size held fixed and its count.
    pub fixed: (usize, usize),
    pub notes: Vec<String>,
}

/// Running maximum with all maximizers. Collectors over disjoint parts of
/// the search merge into the same result in any order.
#[derive(Clone, Debug, Default)]
pub struct ExtremalCollector {
    best: Option<BigUint>,
    argmax: Vec<Graph>,
    examined: u64,
    skipped: u64,
}

impl ExtremalCollector {
    pub fn new() -> ExtremalCollector {
        ExtremalCollector::default()
    }

    fn offer(&mut self, g: &Graph, value: BigUint) {
        self.examined += 1;
        match &self.best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => self.argmax.push(g.clone()),
            _ => {
                self.best = Some(value);
                self.argmax.clear();
                self.argmax.push(g.clone());
            }
        }
    }

    pub fn merge(&mut self, other: ExtremalCollector) {
        self.examined += other.examined;
        self.skipped += other.skipped;
        let Some(value) = other.best else { return };
        match &self.best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => self.argmax.extend(other.argmax),
            _ => {
                self.best = Some(value);
                self.argmax = other.argmax;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fixed {
    Order(usize),
    Cliques { u: usize, p: usize, n_cap: usize },
}

/// An exhaustive extremal search: which graphs are admissible and how they
/// are scored. [`ExtremalJob::run`] is the serial driver; parallel drivers
/// split the tree with [`split_tree`] and merge collectors.
#[derive(Clone, Debug)]
pub struct ExtremalJob<'a> {
    h: &'a PatternSpec,
    cs: ConstraintSet,
    fixed: Fixed,
    h_isolated: bool,
}

impl<'a> ExtremalJob<'a> {
    /// `ex(n, H, 𝓕)`.
    pub fn order(n: usize, h: &'a PatternSpec, cs: &ConstraintSet) -> ExtremalJob<'a> {
        ExtremalJob { h, cs: *cs, fixed: Fixed::Order(n), h_isolated: false }
    }

    /// `ex_u(p, H, 𝓕)` on at most `n_cap` vertices (default
    /// [`default_n_cap`]). `u = 1` is the same search as [`ExtremalJob::order`]
    /// with `n = p`.
    pub fn cliques(
        p: usize,
        u: usize,
        h: &'a PatternSpec,
        cs: &ConstraintSet,
        n_cap: Option<usize>,
    ) -> Result<ExtremalJob<'a>> {
        if u == 0 {
            return Err(Error::InvalidParameters("u must be at least 1".into()));
        }
        if u == 1 {
            if n_cap.is_some_and(|c| c < p) {
                return Err(Error::InvalidParameters("for u = 1 the order is p; n_cap must be at least p".into()));
            }
            return Ok(ExtremalJob::order(p, h, cs));
        }
        let n_cap = n_cap.unwrap_or_else(|| default_n_cap(p, u));
        let h_isolated = (0..h.order()).any(|v| h.pattern().degree(v) == 0);
        Ok(ExtremalJob { h, cs: *cs, fixed: Fixed::Cliques { u, p, n_cap }, h_isolated })
    }

    pub fn max_order(&self) -> usize {
        match self.fixed {
            Fixed::Order(n) => n,
            Fixed::Cliques { n_cap, .. } => n_cap,
        }
    }

    /// Hereditary pruning predicate.
    pub fn keep(&self, g: &Graph) -> bool {
        if !self.cs.admits(g) {
            return false;
        }
        match self.fixed {
            Fixed::Order(_) => true,
            Fixed::Cliques { u, p, .. } => count_cliques(g, u) <= BigUint::from(p),
        }
    }

    /// Scores `g` if it is one of the graphs the maximum ranges over.
    pub fn examine(&self, g: &Graph, into: &mut ExtremalCollector) {
        match self.fixed {
            Fixed::Order(n) => {
                if g.order() == n {
                    into.offer(g, count_subgraph_copies(self.h, g));
                }
            }
            Fixed::Cliques { u, p, .. } => {
                if count_cliques(g, u) != BigUint::from(p) {
                    return;
                }
                if !self.h_isolated && (0..g.order()).any(|v| g.degree(v) == 0) {
                    into.skipped += 1;
                    return;
                }
                into.offer(g, count_subgraph_copies(self.h, g));
            }
        }
    }

    /// Re-verifies every optimum and builds the outcome.
    pub fn finish(&self, collector: ExtremalCollector, limits: &SearchLimits) -> Result<SearchOutcome> {
        let mut notes: Vec<String> = limits.warning().into_iter().collect();
        let fixed = match self.fixed {
            Fixed::Order(n) => (1, n),
            Fixed::Cliques { u, p, n_cap } => {
                notes.push(alloc::format!(
                    "vertex cap {n_cap}: a graph with p = {p} cliques of size {u} and no isolated vertex has at most {} \
                     vertices, and isolated vertices change neither k^{u} nor the count of a pattern containing K_{u}; \
                     this is an engineering bound, not a theorem about ex_u",
                    u * p
                ));
                if collector.skipped > 0 {
                    notes.push(alloc::format!(
                        "{} graphs with isolated vertices skipped as padded duplicates",
                        collector.skipped
                    ));
                }
                (u, p)
            }
        };
        let objective = collector.best.unwrap_or_default();
        let mut argmax = Vec::with_capacity(collector.argmax.len());
        for g in &collector.argmax {
            if !check_constraints(g, &self.cs).passes() || count_subgraph_copies(self.h, g) != objective {
                return Err(Error::SearchCap("optimum failed re-verification".into()));
            }
            argmax.push(graph6::encode(&canonical_form(g)));
        }
        argmax.sort();
        Ok(SearchOutcome {
            objective,
            argmax,
            search_space_size: collector.examined + collector.skipped,
            constraints: self.cs,
            fixed,
            notes,
        })
    }

    /// Collector for the subtree rooted at `root`.
    pub fn collect_from(&self, root: &Graph) -> Result<ExtremalCollector> {
        let mut c = ExtremalCollector::new();
        for_each_graph_from(root, self.max_order(), &|g| self.keep(g), &mut |g| self.examine(g, &mut c))?;
        Ok(c)
    }

    pub fn run(&self, limits: &SearchLimits) -> Result<SearchOutcome> {
        let mut c = ExtremalCollector::new();
        for_each_graph_upto(self.max_order(), limits, &|g| self.keep(g), &mut |g| self.examine(g, &mut c))?;
        self.finish(c, limits)
    }
}

/// `ex(n, H, 𝓕)` with all extremal graphs, `𝓕` encoded by `cs`.
pub fn brute_extremal(n: usize, h: &PatternSpec, cs: &ConstraintSet, limits: &SearchLimits) -> Result<SearchOutcome> {
    ExtremalJob::order(n, h, cs).run(limits)
}

/// Default vertex cap for [`brute_extremal_u`]: `p` for `u = 1`, otherwise
/// `min(2p, 8)`.
pub fn default_n_cap(p: usize, u: usize) -> usize {
    if u == 1 {
        p
    } else {
        (2 * p).min(DEFAULT_CAP)
    }
}

/// `ex_u(p, H, 𝓕)` over graphs on at most `n_cap` vertices.
///
/// For `u ≥ 2` graphs with isolated vertices are left out: when `H` has no
/// isolated vertex they only repeat an optimum already found without them.
pub fn brute_extremal_u(
    p: usize,
    u: usize,
    h: &PatternSpec,
    cs: &ConstraintSet,
    n_cap: Option<usize>,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    ExtremalJob::cliques(p, u, h, cs, n_cap)?.run(limits)
}

/// Result of [`best_composition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    /// Copies of each input component, in input order.
    pub multiplicities: Vec<usize>,
    pub objective: BigUint,
}

/// Disjoint union of copies of the components with exactly `p` cliques of
/// size `u` and the most copies of `H`, by dynamic programming over `p`.
/// Components are assumed connected. Ties go to the earliest component.
pub fn best_composition(components: &[Graph], h: &PatternSpec, p: usize, u: usize) -> Result<Composition> {
    let weights: Vec<Option<usize>> = components
        .iter()
        .map(|c| {
            let w = count_cliques(c, u);
            (!w.is_zero()).then(|| w.try_into().ok()).flatten()
        })
        .collect();
    let values: Vec<BigUint> = components.iter().map(|c| count_subgraph_copies(h, c)).collect();
    let mut best: Vec<Option<(BigUint, usize)>> = alloc::vec![None; p + 1];
    best[0] = Some((BigUint::zero(), usize::MAX));
    for j in 1..=p {
        for (i, w) in weights.iter().enumerate() {
            let Some(w) = *w else { continue };
            if w > j {
                continue;
            }
            if let Some((prev, _)) = &best[j - w] {
                let cand = prev + &values[i];
                if best[j].as_ref().is_none_or(|(b, _)| cand > *b) {
                    best[j] = Some((cand, i));
                }
            }
        }
    }
    let Some((objective, _)) = best[p].clone() else {
        return Err(Error::Unreachable(p));
    };
    let mut multiplicities = alloc::vec![0; components.len()];
    let mut j = p;
    while j > 0 {
        let i = best[j].as_ref().unwrap().1;
        multiplicities[i] += 1;
        j -= weights[i].unwrap();
    }
    let parts: Vec<(&Graph, usize)> = components.iter().zip(multiplicities.iter().copied()).collect();
    Ok(Composition { graph: Graph::disjoint_union(&parts)?, multiplicities, objective })
}
