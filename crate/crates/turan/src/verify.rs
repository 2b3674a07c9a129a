//! The verification suite: ten numbered criteria, each an exact comparison
//! between library results and an independent computation.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use turan_core::bounds::{bounds_report, ratio_diagnostic, ratio_floors, ratio_trend, ParamTriple};
use turan_core::constructions::{colex_turan, TuranSpec};
use turan_core::counting::{copies_through, count_cliques, count_subgraph_copies, turan_clique_closed_form};
use turan_core::freeness::ConstraintSet;
use turan_core::localization::{localized_clique_sum, localized_report};
use turan_core::num::binomial;
use turan_core::search::{for_each_graph_upto, ExtremalJob, SearchLimits};
use turan_core::{Density, Graph, PatternSpec, VertexSet};

use crate::corpus::corpus;
use crate::error::Result;
use crate::examples::{reproduce_examples_with, TuranFn};
use crate::parallel::par_search;
use crate::report::Render;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Crossover and closed-form checks.
    Quick,
    /// Everything, including the exhaustive oracles.
    Full,
}

/// What the suite runs against.
#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub level: Level,
    pub turan: TuranFn,
    /// Seed for the random corpora.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

impl Suite {
    pub fn new(level: Level) -> Suite {
        Suite { level, turan: turan_core::constructions::turan, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checks: u64,
    /// At most [`MAX_FAILURES`] failing comparisons.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub level: Level,
    pub seed: String,
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

impl Render for VerifyReport {
    fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {:>2}. {} ({} checks)\n", c.id, c.title, c.checks));
            for f in &c.failures {
                out.push_str(&format!("         {f}\n"));
            }
        }
        out.push_str(if self.passed { "all criteria passed\n" } else { "some criteria FAILED\n" });
        out
    }
}

pub const MAX_FAILURES: usize = 5;

/// Accumulates comparisons for one criterion.
struct Tally {
    checks: u64,
    failures: Vec<String>,
    failed: bool,
}

impl Tally {
    fn new() -> Tally {
        Tally { checks: 0, failures: Vec::new(), failed: false }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed = true;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn error(&mut self, e: impl std::fmt::Display) {
        self.check(false, || format!("error: {e}"));
    }

    fn finish(self, id: u8, title: &str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            title: title.to_string(),
            passed: !self.failed,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

type Criterion = fn(&Suite, &mut Tally) -> Result<()>;

const CRITERIA: [(u8, &str, Criterion, bool); 10] = [
    (1, "42-vertex crossover between 6·CT_4(17) and 7·T_4(6)", crossover, true),
    (2, "clique-free extremal search matches Turán graphs", zykov, false),
    (3, "degree-bounded extremal search matches disjoint cliques", chase, false),
    (4, "K_4-free triangle maximum with m edges matches colex graphs", colex, false),
    (5, "lower and upper density bounds meet under divisibility", divisibility, false),
    (6, "closed-form clique counts of Turán graphs", closed_form, true),
    (7, "double counting of copies over rooted cliques", handshake, false),
    (8, "localized weight inequality and its equality cases", localization, false),
    (9, "finite ratio and copies-through inequalities for Turán graphs", finite_inequalities, false),
    (10, "lower/upper trend stays above the product floor", trend, false),
];

pub fn criterion_title(id: u8) -> Option<&'static str> {
    CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1)
}

/// Runs the criteria selected by the level; parallel parts use the current
/// rayon pool.
pub fn verify_suite(suite: &Suite) -> VerifyReport {
    let criteria: Vec<CriterionOutcome> = CRITERIA
        .iter()
        .filter(|c| c.3 || suite.level == Level::Full)
        .map(|&(id, title, run, _)| run_one(suite, id, title, run))
        .collect();
    VerifyReport {
        level: suite.level,
        seed: suite.seed.to_string(),
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

/// Runs a single criterion by number.
pub fn verify_criterion(suite: &Suite, id: u8) -> Option<CriterionOutcome> {
    CRITERIA.iter().find(|c| c.0 == id).map(|&(id, title, run, _)| run_one(suite, id, title, run))
}

fn run_one(suite: &Suite, id: u8, title: &str, run: Criterion) -> CriterionOutcome {
    let mut t = Tally::new();
    if let Err(e) = run(suite, &mut t) {
        t.error(e);
    }
    t.finish(id, title)
}

fn k(t: usize) -> PatternSpec {
    PatternSpec::new(Graph::complete(t).expect("small clique"))
}

/// The four patterns of the bounds grid: `K_3`, `K_4`, `K_2 ∨ I_2`,
/// `K_1 ∨ P_3`.
pub fn bounds_patterns() -> Vec<(&'static str, PatternSpec)> {
    let diamond = Graph::complete(2).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
    let fan = Graph::complete(1).unwrap().join(&Graph::path(3).unwrap()).unwrap();
    vec![("K_3", k(3)), ("K_4", k(4)), ("K_2∨I_2", PatternSpec::new(diamond)), ("K_1∨P_3", PatternSpec::new(fan))]
}

fn crossover(suite: &Suite, t: &mut Tally) -> Result<()> {
    let r = reproduce_examples_with(suite.turan)?;
    t.check(r.colex.graph.order == 42 && r.turan.graph.order == 42, || "orders differ from 42".into());
    t.check(r.colex.free && r.turan.free, || "a graph is not {K_1,6, K_5}-free".into());
    t.check(r.crossover_k3, || format!("k^3: {} vs {}", r.colex.k3, r.turan.k3));
    t.check(r.crossover_k4, || format!("k^4: {} vs {}", r.turan.k4, r.colex.k4));
    for e in [&r.colex, &r.turan] {
        t.check(e.k3 == e.k3_subsets && e.k4 == e.k4_subsets, || {
            format!(
                "{}: counter ({}, {}) vs subsets ({}, {})",
                e.graph.description, e.k3, e.k4, e.k3_subsets, e.k4_subsets
            )
        });
    }
    t.check(r.colex_is_the_unique_class, || format!("{} classes with 17 edges", r.seventeen_edge_classes));
    Ok(())
}

fn extremal_order(n: usize, h: &PatternSpec, cs: &ConstraintSet) -> Result<BigUint> {
    Ok(par_search(&ExtremalJob::order(n, h, cs), &SearchLimits::default())?.objective)
}

fn zykov(suite: &Suite, t: &mut Tally) -> Result<()> {
    for omega in 2..=4 {
        for s in 3..=4 {
            let h = k(s);
            for n in 1..=7 {
                let found = extremal_order(n, &h, &ConstraintSet::clique_free(omega))?;
                let want = count_cliques(&(suite.turan)(omega, n)?, s);
                t.check(found == want, || format!("n={n} ω={omega} t={s}: search {found}, Turán {want}"));
            }
        }
    }
    Ok(())
}

fn chase(_: &Suite, t: &mut Tally) -> Result<()> {
    for delta in 2..=4 {
        for s in 3..=4 {
            let h = k(s);
            for n in 1..=7 {
                let found = extremal_order(n, &h, &ConstraintSet::max_degree(delta))?;
                let (a, b) = (n / (delta + 1), n % (delta + 1));
                let g = Graph::disjoint_union(&[(&Graph::complete(delta + 1)?, a), (&Graph::complete(b)?, 1)])?;
                let want = count_cliques(&g, s);
                t.check(found == want, || format!("n={n} Δ={delta} t={s}: search {found}, cliques {want}"));
            }
        }
    }
    Ok(())
}

fn colex(_: &Suite, t: &mut Tally) -> Result<()> {
    let h = k(3);
    let cs = ConstraintSet::clique_free(3);
    for m in 1..=12 {
        let job = ExtremalJob::cliques(m, 2, &h, &cs, Some(8))?;
        let found = par_search(&job, &SearchLimits::default())?.objective;
        let want = count_cliques(&colex_turan(3, m)?, 3);
        t.check(found == want, || format!("m={m}: search {found}, colex {want}"));
    }
    Ok(())
}

fn divisibility(_: &Suite, t: &mut Tally) -> Result<()> {
    for (name, h) in bounds_patterns() {
        for u in 1..=h.dom_count() {
            for omega in u + 1..=6 {
                for delta in omega..=14 {
                    let r = bounds_report(&h, &ParamTriple::new(u, delta, omega)?)?;
                    let what = || format!("{name} u={u} Δ={delta} ω={omega}: lower {} upper {}", r.lower, r.upper);
                    if r.divisible {
                        t.check(r.lower == r.upper, what);
                    } else {
                        t.check(r.lower <= r.upper, what);
                    }
                }
            }
        }
    }
    Ok(())
}

fn closed_form(suite: &Suite, t: &mut Tally) -> Result<()> {
    for r in 1..=6 {
        for n in 0..=14 {
            let g = (suite.turan)(r, n)?;
            for s in 0..=5 {
                let a = turan_clique_closed_form(r, n, s);
                let b = count_cliques(&g, s);
                t.check(a == b, || format!("k^{s}(T_{r}({n})): closed form {a}, counted {b}"));
            }
        }
    }
    Ok(())
}

fn handshake(suite: &Suite, t: &mut Tally) -> Result<()> {
    let graphs = corpus(suite.seed, 200, 1..=12)?;
    for (name, h) in bounds_patterns() {
        for u in 1..=h.dom_count() {
            let reduced = h.reduced_spec(u)?;
            let rows: Vec<(BigUint, BigUint)> = graphs
                .par_iter()
                .map(|g| {
                    let left = binomial(h.dom_count(), u) * count_subgraph_copies(&h, g);
                    let mut right = BigUint::default();
                    for c in turan_core::counting::enumerate_cliques(g, u) {
                        let nc = g.common_neighborhood(&c).expect("c is a clique");
                        right += count_subgraph_copies(&reduced, &g.induced_subgraph(&nc).expect("subset"));
                    }
                    (left, right)
                })
                .collect();
            for (i, (left, right)) in rows.iter().enumerate() {
                t.check(left == right, || format!("{name} u={u} graph #{i}: {left} vs {right}"));
            }
        }
    }
    Ok(())
}

/// Disjoint unions of balanced Turán graphs `T_ω(aω)` with `ω ≥ max(t, u+1)`,
/// plus a `K_u`-free tail: nothing for `u = 1`, isolated vertices for `u = 2`.
pub fn equality_family(seed: u64, count: usize) -> Result<Vec<(usize, usize, Graph)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let t = 3 + i % 2;
        let u = 1 + (i / 2) % 2;
        let parts = rng.gen_range(1..=3);
        let mut pieces = Vec::new();
        for _ in 0..parts {
            let omega = rng.gen_range(t.max(u + 1)..=t + 2);
            let a = rng.gen_range(1..=2);
            pieces.push(turan_core::constructions::turan(omega, a * omega)?);
        }
        if u == 2 {
            pieces.push(Graph::empty(rng.gen_range(0..=4))?);
        }
        let refs: Vec<(&Graph, usize)> = pieces.iter().map(|g| (g, 1)).collect();
        out.push((t, u, Graph::disjoint_union(&refs)?));
    }
    Ok(out)
}

fn localization(suite: &Suite, t: &mut Tally) -> Result<()> {
    let mut graphs = Vec::new();
    for_each_graph_upto(7, &SearchLimits::default(), &|_| true, &mut |g| graphs.push(g.clone()))?;
    graphs.extend(corpus(suite.seed ^ 0x10ca1, 500, 1..=16)?);
    let cases: Vec<(usize, usize)> = vec![(3, 1), (3, 2), (4, 1), (4, 2)];
    for &(s, u) in &cases {
        let h = k(s);
        let rows: Vec<std::result::Result<(bool, bool), String>> = graphs
            .par_iter()
            .map(|g| {
                let r = localized_report(g, &h, u, 1).map_err(|e| e.to_string())?;
                let c = localized_clique_sum(g, s, u).map_err(|e| e.to_string())?;
                Ok((r.holds, r.weighted_sum == c.weighted_sum))
            })
            .collect();
        for (i, row) in rows.into_iter().enumerate() {
            match row {
                Ok((holds, same)) => {
                    t.check(holds, || format!("K_{s} u={u} graph #{i}: inequality fails"));
                    t.check(same, || format!("K_{s} u={u} graph #{i}: closed-form sum differs"));
                }
                Err(e) => t.check(false, || format!("K_{s} u={u} graph #{i}: {e}")),
            }
        }
    }
    for (i, (s, u, g)) in equality_family(suite.seed ^ 0xe9, 50)?.into_iter().enumerate() {
        let r = localized_report(&g, &k(s), u, 1)?;
        t.check(r.equality && r.hypothesis_ok, || {
            format!("equality graph #{i} (K_{s}, u={u}): sum {} bound {}", r.weighted_sum, r.bound)
        });
    }
    Ok(())
}

fn finite_inequalities(suite: &Suite, t: &mut Tally) -> Result<()> {
    for s in 1..=4 {
        let h = k(s);
        for r in s..=6 {
            for n in s..=14 {
                for u in 1..=2usize.min(n) {
                    let (ratio, product) = ratio_diagnostic(&h, r, n, u)?;
                    t.check(ratio <= Density::one() && ratio >= product, || {
                        format!("K_{s} r={r} n={n} u={u}: ratio {ratio}, product {product}")
                    });
                }
                let g = (suite.turan)(r, n)?;
                let parts = TuranSpec::new(r, n)?.parts();
                let small = parts.iter().map(|p| p.len()).min().unwrap_or(0);
                let large = parts.iter().map(|p| p.len()).max().unwrap_or(0);
                if small == 0 {
                    continue;
                }
                let through = |p: &VertexSet| copies_through(&h, &g, &VertexSet::singleton(p.first().unwrap()));
                let small_part = parts.iter().find(|p| p.len() == small).unwrap();
                let large_part = parts.iter().find(|p| p.len() == large).unwrap();
                let (cs, cl) = (through(small_part)?, through(large_part)?);
                let drop = count_subgraph_copies(&h, &g) - count_subgraph_copies(&h, &(suite.turan)(r, n - 1)?);
                t.check(cs >= cl && cl == drop, || {
                    format!("K_{s} in T_{r}({n}): small-part {cs}, large-part {cl}, difference {drop}")
                });
            }
        }
    }
    Ok(())
}

fn trend(_: &Suite, t: &mut Tally) -> Result<()> {
    for s in 3..=4 {
        let h = k(s);
        for u in 1..=2 {
            // below ω = s the lower bound graph has no copy of K_s and both bounds vanish
            for omega in s..=6 {
                for p in ratio_trend(&h, u, omega, 30)? {
                    let d = p.params.delta;
                    let (exact, product) = ratio_floors(&h, &p.params)?;
                    t.check(exact == p.exact_floor && product == p.product_floor, || format!("floors at Δ={d}"));
                    let what = || format!("K_{s} u={u} ω={omega} Δ={d}");
                    match (&p.ratio, &p.exact_floor) {
                        (Some(ratio), Some(floor)) => t.check(*ratio >= *floor && *floor >= p.product_floor, || {
                            format!("{}: ratio {ratio}, floors {floor} ≥ {}", what(), p.product_floor)
                        }),
                        _ => t.check(false, || format!("{}: upper bound is zero", what())),
                    }
                }
            }
        }
    }
    Ok(())
}
