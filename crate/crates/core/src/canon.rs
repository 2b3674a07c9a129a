//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell
//! in turn, recurse. Every leaf is a vertex ordering; the canonical ordering
//! is the leaf whose upper-triangle adjacency string is lexicographically
//! greatest. Two leaves with equal strings differ by an automorphism, and the
//! automorphisms found this way prune sibling subtrees in the same orbit of
//! the pointwise stabilizer of the current path.
//!
//! Exact for every input; cost grows with the size of the automorphism group
//! that refinement cannot see, so it is meant for the small graphs the search
//! and pattern machinery produce.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Isomorphism-invariant encoding of a (vertex-coloured) graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    colors: Vec<u32>,
    bits: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n
    }
}

/// Result of canonicalization: the code and a labelling `labeling[k] = v`
/// placing original vertex `v` at canonical position `k`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub code: CanonicalCode,
    pub labeling: Vec<usize>,
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonicalize(g).code
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permute(&canonicalize(g).labeling)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

pub fn canonicalize(g: &Graph) -> Canonical {
    canonicalize_colored(g, &alloc::vec![0; g.order()])
}

/// Canonicalizes a vertex-coloured graph. Isomorphisms must preserve colour;
/// colour classes are ordered by colour value.
pub fn canonicalize_colored(g: &Graph, colors: &[u32]) -> Canonical {
    let n = g.order();
    assert_eq!(colors.len(), n, "one colour per vertex");
    let mut sorted_colors = colors.to_vec();
    sorted_colors.sort_unstable();
    let mut distinct = sorted_colors.clone();
    distinct.dedup();

    let cells: Vec<Vec<usize>> = distinct.iter().map(|&c| (0..n).filter(|&v| colors[v] == c).collect()).collect();

    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    if n > 0 {
        search.explore(Partition::new(cells), &mut Vec::new());
    }
    let (bits, labeling) = search.best.unwrap_or_default();
    Canonical { code: CanonicalCode { n, colors: sorted_colors, bits }, labeling }
}

#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
    masks: Vec<VertexSet>,
}

impl Partition {
    fn new(cells: Vec<Vec<usize>>) -> Partition {
        let masks = cells.iter().map(|c| c.iter().copied().collect()).collect();
        Partition { cells, masks }
    }

    fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Refines to the coarsest equitable partition finer than `self`.
    fn refine(&mut self, g: &Graph) {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        'restart: loop {
            for s in 0..self.cells.len() {
                let splitter = self.masks[s];
                for c in 0..self.cells.len() {
                    if self.cells[c].len() == 1 {
                        continue;
                    }
                    counts.clear();
                    counts.extend(self.cells[c].iter().map(|&v| ((g.neighbors(v) & splitter).len(), v)));
                    let k0 = counts[0].0;
                    if counts.iter().all(|&(k, _)| k == k0) {
                        continue;
                    }
                    counts.sort_unstable();
                    let mut pieces: Vec<Vec<usize>> = Vec::new();
                    let mut last = usize::MAX;
                    for &(k, v) in &counts {
                        if k != last {
                            pieces.push(Vec::new());
                            last = k;
                        }
                        pieces.last_mut().unwrap().push(v);
                    }
                    let masks: Vec<VertexSet> = pieces.iter().map(|p| p.iter().copied().collect()).collect();
                    self.cells.splice(c..=c, pieces);
                    self.masks.splice(c..=c, masks);
                    continue 'restart;
                }
            }
            break;
        }
    }

    fn individualize(&self, cell: usize, v: usize) -> Partition {
        let mut next = self.clone();
        let rest: Vec<usize> = self.cells[cell].iter().copied().filter(|&w| w != v).collect();
        let rest_mask = self.masks[cell] - VertexSet::singleton(v);
        next.cells.splice(cell..=cell, [alloc::vec![v], rest]);
        next.masks.splice(cell..=cell, [VertexSet::singleton(v), rest_mask]);
        next
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as vertex maps `v -> gamma[v]`.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, mut part: Partition, path: &mut Vec<usize>) {
        part.refine(self.g);
        if part.is_discrete() {
            let order: Vec<usize> = part.cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let target = part.cells.iter().position(|c| c.len() > 1).unwrap();
        let candidates = part.cells[target].clone();
        let mut done: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !done.is_empty() && self.same_orbit_as_done(path, &done, v) {
                continue;
            }
            path.push(v);
            let child = part.individualize(target, v);
            self.explore(child, path);
            path.pop();
            done.push(v);
        }
    }

    /// Whether `v` is in the orbit of an explored sibling under the known
    /// automorphisms that fix `path` pointwise.
    fn same_orbit_as_done(&self, path: &[usize], done: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &gx) in gamma.iter().enumerate().take(n) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        done.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = encode_bits(self.g, &order);
        for (b, o) in [&self.first, &self.best].into_iter().flatten() {
            if *b == bits {
                let mut gamma = alloc::vec![0usize; order.len()];
                for (k, &v) in o.iter().enumerate() {
                    gamma[v] = order[k];
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((bits.clone(), order.clone()));
        }
        match &self.best {
            Some((b, _)) if *b >= bits => {}
            _ => self.best = Some((bits, order)),
        }
    }
}

/// Upper-triangle adjacency string of `g` under `order`, column by column,
/// most significant bit first.
fn encode_bits(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = alloc::vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(order[j]);
        for &oi in &order[..j] {
            if row.contains(oi) {
                bits[k >> 6] |= 1u64 << (63 - (k & 63));
            }
            k += 1;
        }
    }
    bits
}
