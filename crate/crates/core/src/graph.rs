//! The immutable simple-graph value type.
//!
//! Vertices are `0..n` internally. Every constructor re-establishes the
//! three representation invariants: rows are symmetric, no vertex is its own
//! neighbour, and no bit at a position `>= n` is set.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::CapacityExceeded { n, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_cap(n)?;
        Ok(Graph { n, rows: alloc::vec![VertexSet::new(); n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        check_cap(n)?;
        let full = VertexSet::full(n);
        let rows = (0..n)
            .map(|v| {
                let mut r = full;
                r.remove(v);
                r
            })
            .collect();
        Ok(Graph { n, rows })
    }

    /// The cycle `C_n` with edges `i ~ i+1 (mod n)`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameters(alloc::format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::LoopEdge(i));
            }
            g.rows[i].insert(j);
            g.rows[j].insert(i);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows. Used by in-crate code that already holds
    /// valid rows; symmetry is only debug-checked.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let g = Graph { n: rows.len(), rows };
        debug_assert!(g.is_well_formed());
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.rows[i].above(i).iter().map(move |j| (i, j)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| (*s - VertexSet::singleton(v)).is_subset(&self.rows[v]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Checks the representation invariants (symmetry, irreflexivity, no
    /// stray bits).
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        self.rows.len() == self.n
            && (0..self.n).all(|i| {
                let r = self.rows[i];
                !r.contains(i) && r.is_subset(&all) && r.iter().all(|j| self.rows[j].contains(i))
            })
    }

    /// Vertex-disjoint union of `mult` copies of each graph, in order.
    pub fn disjoint_union(parts: &[(&Graph, usize)]) -> Result<Graph> {
        let total: usize = parts.iter().map(|(g, m)| g.n * m).sum();
        check_cap(total)?;
        let mut rows = Vec::with_capacity(total);
        for &(g, m) in parts {
            for _ in 0..m {
                let offset = rows.len();
                for r in &g.rows {
                    rows.push(r.iter().map(|j| j + offset).collect());
                }
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// Disjoint union of two graphs.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        Graph::disjoint_union(&[(self, 1), (other, 1)])
    }

    /// The join `self ∨ other`; vertices of `other` are shifted by
    /// `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_cap(n)?;
        let first = VertexSet::full(self.n);
        let second = VertexSet::full(n) - first;
        let mut rows = Vec::with_capacity(n);
        for r in &self.rows {
            rows.push(*r | second);
        }
        for r in &other.rows {
            rows.push(r.iter().map(|j| j + self.n).collect::<VertexSet>() | first);
        }
        Ok(Graph::from_rows(rows))
    }

    /// `G[S]`, relabelled so that the elements of `S` keep their relative
    /// order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(v) = s.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let map: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (k, &v) in map.iter().enumerate() {
            index[v] = k;
        }
        let rows = map.iter().map(|&v| (self.rows[v] & *s).iter().map(|j| index[j]).collect()).collect();
        Ok(Graph::from_rows(rows))
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.induced_subgraph(&(self.vertices() - *s))
    }

    /// `N(c)`: the vertices adjacent to every vertex of `c`.
    pub fn common_neighborhood(&self, c: &VertexSet) -> Result<VertexSet> {
        let mut it = c.iter();
        let first = it.next().ok_or(Error::EmptyVertexSet)?;
        if let Some(v) = c.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut acc = self.rows[first];
        for v in it {
            acc &= self.rows[v];
        }
        Ok(acc)
    }

    /// Relabels so that old vertex `perm[k]` becomes vertex `k`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut inv = alloc::vec![0usize; self.n];
        for (k, &v) in perm.iter().enumerate() {
            inv[v] = k;
        }
        let rows = perm.iter().map(|&v| self.rows[v].iter().map(|j| inv[j]).collect()).collect();
        Graph::from_rows(rows)
    }

    /// Adds a new vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        check_cap(self.n + 1)?;
        debug_assert!(nbrs.is_subset(&self.vertices()));
        let v = self.n;
        let mut rows = self.rows.clone();
        for j in nbrs.iter() {
            rows[j].insert(v);
        }
        rows.push(nbrs);
        Ok(Graph { n: v + 1, rows })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let rows = (0..self.n).map(|v| all - self.rows[v] - VertexSet::singleton(v)).collect();
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}
