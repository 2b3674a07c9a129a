//! The 42-vertex crossover: among `{K_{1,6}, K_5}`-free graphs on 42
//! vertices, six copies of the 17-edge colex graph have the most triangles
//! while seven copies of `T_4(6)` have the most `K_4`s.

use serde::{Deserialize, Serialize};
use turan_core::constructions::{capped_colex_turan, colex_turan, TuranSpec};
use turan_core::counting::count_cliques;
use turan_core::freeness::{check_constraints, ConstraintSet};
use turan_core::search::{enumerate_graphs, SearchLimits};
use turan_core::{canon, Graph};

use crate::error::{Error, Result};
use crate::report::{ConstraintJson, GraphSummary, Render};

/// A Turán graph constructor; swappable so the checks can be exercised
/// against a broken one.
pub type TuranFn = fn(usize, usize) -> turan_core::Result<Graph>;

const U: usize = 1;
const DELTA: usize = 5;
const OMEGA: usize = 4;

/// `k^t(G)` by testing every `t`-subset.
pub fn subset_clique_count(g: &Graph, t: usize) -> u64 {
    fn go(g: &Graph, start: usize, left: usize, chosen: &mut Vec<usize>) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for v in start..g.order() {
            if chosen.iter().all(|&w| g.has_edge(v, w)) {
                chosen.push(v);
                total += go(g, v + 1, left - 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    go(g, 0, t, &mut Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleGraph {
    pub graph: GraphSummary,
    pub free: bool,
    pub k3: String,
    pub k4: String,
    pub k3_subsets: String,
    pub k4_subsets: String,
}

impl ExampleGraph {
    fn new(name: &str, g: &Graph) -> ExampleGraph {
        let cs = ConstraintSet::new(U, Some(DELTA), Some(OMEGA));
        ExampleGraph {
            graph: GraphSummary::new(name, g),
            free: check_constraints(g, &cs).passes(),
            k3: count_cliques(g, 3).to_string(),
            k4: count_cliques(g, 4).to_string(),
            k3_subsets: subset_clique_count(g, 3).to_string(),
            k4_subsets: subset_clique_count(g, 4).to_string(),
        }
    }

    fn k(&self, t: usize) -> u64 {
        let s = if t == 3 { &self.k3 } else { &self.k4 };
        s.parse().expect("counts fit in u64")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExamplesReport {
    pub constraints: ConstraintJson,
    pub colex: ExampleGraph,
    pub turan: ExampleGraph,
    /// `k^3(6·CT) > k^3(7·T_4(6))`.
    pub crossover_k3: bool,
    /// `k^4(7·T_4(6)) > k^4(6·CT)`.
    pub crossover_k4: bool,
    /// `7 · Π |parts of T_4(6)|`.
    pub turan_k4_part_product: String,
    /// Isomorphism classes of 7-vertex, 17-edge `{K_{1,6}, K_5}`-free graphs.
    pub seventeen_edge_classes: usize,
    /// The degree-capped colex graph is that unique class.
    pub colex_is_the_unique_class: bool,
    /// Six copies of the uncapped colex graph on 17 edges, for comparison.
    pub uncapped_colex: ExampleGraph,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn reproduce_examples() -> Result<ExamplesReport> {
    reproduce_examples_with(turan_core::constructions::turan)
}

pub fn reproduce_examples_with(turan: TuranFn) -> Result<ExamplesReport> {
    let ct = capped_colex_turan(4, 17, DELTA)?;
    let six_ct = Graph::disjoint_union(&[(&ct, 6)])?;
    let t46 = turan(4, 6)?;
    let seven_t = Graph::disjoint_union(&[(&t46, 7)])?;
    let raw = colex_turan(4, 17)?;
    let six_raw = Graph::disjoint_union(&[(&raw, 6)])?;

    let colex = ExampleGraph::new("6·CT_4(17), degree cap 5", &six_ct);
    let turan_ex = ExampleGraph::new("7·T_4(6)", &seven_t);
    let uncapped = ExampleGraph::new("6·CT_4(17), no degree cap", &six_raw);
    let part_product: usize = 7 * TuranSpec::new(4, 6)?.part_sizes.iter().product::<usize>();

    let cs = ConstraintSet::new(U, Some(DELTA), Some(OMEGA));
    let classes: Vec<Graph> =
        enumerate_graphs(7, Some(&cs), &SearchLimits::default())?.into_iter().filter(|g| g.size() == 17).collect();
    let unique = classes.len() == 1 && canon::is_isomorphic(&classes[0], &ct);

    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };
    for e in [&colex, &turan_ex] {
        let name = &e.graph.description;
        expect(e.graph.order == 42, format!("{name}: expected 42 vertices, got {}", e.graph.order));
        expect(e.free, format!("{name}: expected {{K_1,6, K_5}}-free, a forbidden subgraph was found"));
        expect(e.k3 == e.k3_subsets, format!("{name}: k^3 counter {} vs subset oracle {}", e.k3, e.k3_subsets));
        expect(e.k4 == e.k4_subsets, format!("{name}: k^4 counter {} vs subset oracle {}", e.k4, e.k4_subsets));
    }
    let crossover_k3 = colex.k(3) > turan_ex.k(3);
    let crossover_k4 = turan_ex.k(4) > colex.k(4);
    expect(crossover_k3, format!("expected k^3 {} > {}", colex.k3, turan_ex.k3));
    expect(crossover_k4, format!("expected k^4 {} > {}", turan_ex.k4, colex.k4));
    expect(
        turan_ex.k4 == part_product.to_string(),
        format!("k^4(7·T_4(6)) = {} but the part product gives {part_product}", turan_ex.k4),
    );
    expect(unique, format!("expected one 17-edge class on 7 vertices equal to CT_4(17), found {}", classes.len()));

    let notes = vec![format!(
        "the colex edge order alone gives a 17-edge graph with max degree {} and {} K_4s; six copies are not \
         K_1,6-free, so the example uses the colex order under a degree cap of 5",
        raw.max_degree(),
        count_cliques(&raw, 4)
    )];
    Ok(ExamplesReport {
        constraints: ConstraintJson { u: U, delta: Some(DELTA), omega: Some(OMEGA) },
        crossover_k3,
        crossover_k4,
        turan_k4_part_product: part_product.to_string(),
        seventeen_edge_classes: classes.len(),
        colex_is_the_unique_class: unique,
        passed: failures.is_empty(),
        colex,
        turan: turan_ex,
        uncapped_colex: uncapped,
        notes,
        failures,
    })
}

impl ExamplesReport {
    /// `Err` with a diff-style listing when any check failed.
    pub fn check(&self) -> Result<()> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::Check(self.failures.join("; ")))
        }
    }
}

impl Render for ExamplesReport {
    fn render(&self) -> String {
        let mut out = String::from("{K_1,6, K_5}-free graphs on 42 vertices\n\n");
        out.push_str(&format!("{:<28}  {:>5}  {:>6}  {:>6}  {}\n", "graph", "free", "k^3", "k^4", "graph6"));
        for e in [&self.colex, &self.turan, &self.uncapped_colex] {
            out.push_str(&format!(
                "{:<28}  {:>5}  {:>6}  {:>6}  {}\n",
                e.graph.description, e.free, e.k3, e.k4, e.graph.graph6
            ));
        }
        out.push_str(&format!(
            "\nk^3 crossover: {}\nk^4 crossover: {}\n17-edge classes on 7 vertices: {}\n",
            self.crossover_k3, self.crossover_k4, self.seventeen_edge_classes
        ));
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for f in &self.failures {
            out.push_str(&format!("FAILED: {f}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossover_holds() {
        let r = reproduce_examples().unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!((r.colex.k3.as_str(), r.turan.k3.as_str()), ("96", "84"));
        assert_eq!((r.colex.k4.as_str(), r.turan.k4.as_str()), ("24", "28"));
        assert!(!r.uncapped_colex.free);
    }

    fn broken_turan(r: usize, n: usize) -> turan_core::Result<Graph> {
        turan_core::constructions::turan(r, n + 1)
    }

    #[test]
    fn broken_constructor_is_reported() {
        let r = reproduce_examples_with(broken_turan).unwrap();
        assert!(!r.passed);
        assert!(r.check().is_err());
    }
}
