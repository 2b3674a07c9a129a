//! JSON report types and the aligned-text rendering of each.
//!
//! Every report is wrapped in an envelope
//! `{"schema": "turan-report/v1", "command", "parameters", "result"}`.
//! Big integers are decimal strings; exact rationals are
//! `{"num": "...", "den": "..."}` in lowest terms with positive denominator.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use turan_core::bounds::{BoundsReport, Omega0, Omega0Source, TrendPoint};
use turan_core::freeness::{clique_number, ViolationKind};
use turan_core::{graph6, Density, FreenessReport, Graph, LocalReport, SearchOutcome, VertexSet};

use crate::error::Result;

pub const SCHEMA_ID: &str = "turan-report/v1";

/// The schema every report validates against.
pub const SCHEMA_JSON: &str = include_str!("../../../schema/report-v1.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl From<&Density> for Rational {
    fn from(d: &Density) -> Rational {
        Rational { num: d.numer().to_string(), den: d.denom().to_string() }
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == "1" {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema: &'static str,
    command: &'a str,
    parameters: &'a Value,
    result: &'a T,
}

/// Pretty JSON of the envelope, newline-terminated. Field order is fixed by
/// the struct definitions, so equal inputs give equal bytes.
pub fn to_json<T: Serialize>(command: &str, parameters: &Value, result: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { schema: SCHEMA_ID, command, parameters, result })?;
    s.push('\n');
    Ok(s)
}

/// Aligned plain-text rendering.
pub trait Render {
    fn render(&self) -> String;
}

fn set(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub description: String,
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub clique_number: usize,
    pub graph6: String,
}

impl GraphSummary {
    pub fn new(description: &str, g: &Graph) -> GraphSummary {
        GraphSummary {
            description: description.to_string(),
            order: g.order(),
            size: g.size(),
            max_degree: g.max_degree(),
            clique_number: clique_number(g),
            graph6: graph6::encode(g),
        }
    }

    fn line(&self) -> String {
        format!(
            "{} (n={}, e={}, Δ={}, ω={}, g6 {})",
            self.description, self.order, self.size, self.max_degree, self.clique_number, self.graph6
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub graph: GraphSummary,
    pub degree_sequence: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

impl ConstructReport {
    pub fn new(description: &str, g: &Graph) -> ConstructReport {
        ConstructReport {
            graph: GraphSummary::new(description, g),
            degree_sequence: g.degree_sequence(),
            edges: g.edges().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl Render for ConstructReport {
    fn render(&self) -> String {
        let g = &self.graph;
        table(&[
            ("graph", g.description.clone()),
            ("order", g.order.to_string()),
            ("edges", g.size.to_string()),
            ("max degree", g.max_degree.to_string()),
            ("clique number", g.clique_number.to_string()),
            ("graph6", g.graph6.clone()),
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCount {
    pub size: usize,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub host: GraphSummary,
    pub pattern: Option<GraphSummary>,
    /// `𝒩(H, G)` when a pattern was given.
    pub copies: Option<String>,
    /// `k^t(G)` for `t = 0..=ω(G)`.
    pub cliques: Vec<CliqueCount>,
}

impl Render for CountReport {
    fn render(&self) -> String {
        let mut rows = vec![("host", self.host.line())];
        if let (Some(p), Some(c)) = (&self.pattern, &self.copies) {
            rows.push(("pattern", p.line()));
            rows.push(("copies", c.clone()));
        }
        let labels: Vec<String> = self.cliques.iter().map(|c| format!("k^{}", c.size)).collect();
        for (c, l) in self.cliques.iter().zip(&labels) {
            rows.push((l.as_str(), c.count.clone()));
        }
        table(&rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonNeighborhood {
    pub u: usize,
    pub max_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    /// `"clique"` or `"common_neighborhood"`.
    pub kind: String,
    /// The `u`-clique whose common neighbourhood is too large.
    pub clique: Option<Vec<usize>>,
    /// Clique size or common neighbourhood size.
    pub size: usize,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeReport {
    pub graph: GraphSummary,
    pub u: usize,
    pub delta: Option<usize>,
    pub omega: Option<usize>,
    pub passes: bool,
    pub clique_number: usize,
    pub max_degree: usize,
    pub max_common_neighborhood: Vec<CommonNeighborhood>,
    pub violations: Vec<ViolationJson>,
}

impl FreeReport {
    pub fn new(
        graph: GraphSummary,
        u: usize,
        delta: Option<usize>,
        omega: Option<usize>,
        r: &FreenessReport,
    ) -> FreeReport {
        FreeReport {
            graph,
            u,
            delta,
            omega,
            passes: r.passes(),
            clique_number: r.clique_number,
            max_degree: r.max_degree,
            max_common_neighborhood: r
                .max_common_neighborhood_by_u
                .iter()
                .map(|(&u, &max_size)| CommonNeighborhood { u, max_size })
                .collect(),
            violations: r
                .violations
                .iter()
                .map(|v| match &v.kind {
                    ViolationKind::Clique { size } => {
                        ViolationJson { kind: "clique".into(), clique: None, size: *size, witness: set(&v.witness) }
                    }
                    ViolationKind::CommonNeighborhood { clique, size } => ViolationJson {
                        kind: "common_neighborhood".into(),
                        clique: Some(set(clique)),
                        size: *size,
                        witness: set(&v.witness),
                    },
                })
                .collect(),
        }
    }
}

impl Render for FreeReport {
    fn render(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let mut rows = vec![
            ("graph", self.graph.line()),
            ("constraints", format!("u={} Δ={} ω={}", self.u, opt(self.delta), opt(self.omega))),
            ("verdict", if self.passes { "free".into() } else { "NOT free".into() }),
            ("clique number", self.clique_number.to_string()),
            ("max degree", self.max_degree.to_string()),
        ];
        let cn: Vec<String> =
            self.max_common_neighborhood.iter().map(|c| format!("u={}: {}", c.u, c.max_size)).collect();
        rows.push(("max |N(c)|", cn.join(", ")));
        for v in &self.violations {
            let what = match &v.clique {
                None => format!("K_{} on {:?}", v.size, v.witness),
                Some(c) => format!("clique {:?} has {} common neighbours; witness {:?}", c, v.size, v.witness),
            };
            rows.push(("violation", what));
        }
        table(&rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Omega0Json {
    pub value: String,
    /// `"zykov"`, `"edgeless"`, `"certified"` or `"user"`.
    pub source: String,
}

impl Omega0Json {
    pub fn from_default(o: &Omega0) -> Omega0Json {
        let source = match o.source {
            Omega0Source::Zykov => "zykov",
            Omega0Source::Edgeless => "edgeless",
            Omega0Source::Certified => "certified",
        };
        Omega0Json { value: o.value.to_string(), source: source.into() }
    }

    pub fn user(value: u128) -> Omega0Json {
        Omega0Json { value: value.to_string(), source: "user".into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrendJson {
    pub delta: usize,
    pub ratio: Option<Rational>,
    pub exact_floor: Option<Rational>,
    pub product_floor: Rational,
}

impl From<&TrendPoint> for TrendJson {
    fn from(p: &TrendPoint) -> TrendJson {
        TrendJson {
            delta: p.params.delta,
            ratio: p.ratio.as_ref().map(Rational::from),
            exact_floor: p.exact_floor.as_ref().map(Rational::from),
            product_floor: (&p.product_floor).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub pattern: GraphSummary,
    pub u: usize,
    pub delta: usize,
    pub omega: usize,
    pub a: usize,
    pub b: usize,
    pub lower: Rational,
    pub upper: Rational,
    pub divisible: bool,
    pub equal: bool,
    pub ratio: Option<Rational>,
    pub exact_floor: Option<Rational>,
    pub product_floor: Rational,
    pub lower_bound_graph: GraphSummary,
    pub omega0: Omega0Json,
    pub trend: Vec<TrendJson>,
}

impl BoundsJson {
    pub fn new(
        pattern: GraphSummary,
        r: &BoundsReport,
        floors: (Option<&Density>, &Density),
        omega0: Omega0Json,
        trend: &[TrendPoint],
    ) -> BoundsJson {
        let p = &r.params;
        BoundsJson {
            pattern,
            u: p.u,
            delta: p.delta,
            omega: p.omega,
            a: p.a,
            b: p.b,
            lower: (&r.lower).into(),
            upper: (&r.upper).into(),
            divisible: r.divisible,
            equal: r.equal,
            ratio: r.ratio.as_ref().map(Rational::from),
            exact_floor: floors.0.map(Rational::from),
            product_floor: floors.1.into(),
            lower_bound_graph: GraphSummary::new("L", &r.l),
            omega0,
            trend: trend.iter().map(TrendJson::from).collect(),
        }
    }
}

impl Render for BoundsJson {
    fn render(&self) -> String {
        let opt = |r: &Option<Rational>| r.as_ref().map_or("-".to_string(), |r| r.to_string());
        let mut out = table(&[
            ("pattern", self.pattern.line()),
            ("(u, Δ, ω)", format!("({}, {}, {})", self.u, self.delta, self.omega)),
            ("Δ = a(ω−u)+b", format!("a={}, b={}", self.a, self.b)),
            ("L", self.lower_bound_graph.line()),
            ("lower", self.lower.to_string()),
            ("upper", self.upper.to_string()),
            ("divisible", self.divisible.to_string()),
            ("equal", self.equal.to_string()),
            ("lower/upper", opt(&self.ratio)),
            ("exact floor", opt(&self.exact_floor)),
            ("product floor", self.product_floor.to_string()),
            ("ω₀", format!("{} ({})", self.omega0.value, self.omega0.source)),
        ]);
        if !self.trend.is_empty() {
            let _ =
                writeln!(out, "\n{:>4}  {:>24}  {:>24}  {:>24}", "Δ", "lower/upper", "exact floor", "product floor");
            for t in &self.trend {
                let _ = writeln!(
                    out,
                    "{:>4}  {:>24}  {:>24}  {:>24}",
                    t.delta,
                    opt(&t.ratio),
                    opt(&t.exact_floor),
                    t.product_floor.to_string()
                );
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub omega_j: usize,
    pub delta_j: usize,
    pub x: Rational,
    pub min_omega_c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalJson {
    pub graph: GraphSummary,
    pub pattern: GraphSummary,
    pub u: usize,
    pub omega0_param: String,
    pub copies: Vec<CopyJson>,
    pub weighted_sum: Rational,
    pub bound: Rational,
    pub holds: bool,
    pub equality: bool,
    pub hypothesis_ok: bool,
    pub violating_cliques: Vec<Vec<usize>>,
    pub exempt_cliques: Vec<Vec<usize>>,
}

impl LocalJson {
    pub fn new(graph: GraphSummary, pattern: GraphSummary, u: usize, r: &LocalReport) -> LocalJson {
        LocalJson {
            graph,
            pattern,
            u,
            omega0_param: r.omega0_param.to_string(),
            copies: r
                .per_copy
                .iter()
                .map(|w| CopyJson {
                    vertices: set(&w.copy.vertices),
                    edges: w.copy.edges.iter().map(|&(i, j)| [i, j]).collect(),
                    omega_j: w.omega_j,
                    delta_j: w.delta_j,
                    x: (&w.x).into(),
                    min_omega_c: w.min_omega_c,
                })
                .collect(),
            weighted_sum: (&r.weighted_sum).into(),
            bound: (&r.bound).into(),
            holds: r.holds,
            equality: r.equality,
            hypothesis_ok: r.hypothesis_ok,
            violating_cliques: r.violating_cliques.iter().map(set).collect(),
            exempt_cliques: r.exempt_cliques.iter().map(set).collect(),
        }
    }
}

impl Render for LocalJson {
    fn render(&self) -> String {
        let mut out = table(&[
            ("graph", self.graph.line()),
            ("pattern", self.pattern.line()),
            ("u", self.u.to_string()),
            ("ω₀", self.omega0_param.clone()),
            ("copies", self.copies.len().to_string()),
            ("Σ x(J)", self.weighted_sum.to_string()),
            ("k^u(G)/C(dom,u)", self.bound.to_string()),
            ("holds", self.holds.to_string()),
            ("equality", self.equality.to_string()),
            ("hypothesis", if self.hypothesis_ok { "ok".into() } else { "fails".into() }),
            ("violating cliques", format!("{:?}", self.violating_cliques)),
            ("exempt cliques", self.exempt_cliques.len().to_string()),
        ]);
        if !self.copies.is_empty() {
            let _ = writeln!(out, "\n{:<24}  {:>5}  {:>5}  {:>16}", "copy", "ω(J)", "Δ(J)", "x(J)");
            for c in &self.copies {
                let _ = writeln!(
                    out,
                    "{:<24}  {:>5}  {:>5}  {:>16}",
                    format!("{:?}", c.vertices),
                    c.omega_j,
                    c.delta_j,
                    c.x.to_string()
                );
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintJson {
    pub u: usize,
    pub delta: Option<usize>,
    pub omega: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJson {
    pub pattern: GraphSummary,
    pub constraints: ConstraintJson,
    /// Size of the fixed cliques; `1` when the order is fixed.
    pub u: usize,
    /// Number of fixed cliques (the order when `u = 1`).
    pub p: usize,
    pub objective: String,
    pub argmax: Vec<String>,
    pub search_space_size: u64,
    pub notes: Vec<String>,
}

impl SearchJson {
    pub fn new(pattern: GraphSummary, o: &SearchOutcome) -> SearchJson {
        SearchJson {
            pattern,
            constraints: ConstraintJson { u: o.constraints.u, delta: o.constraints.delta, omega: o.constraints.omega },
            u: o.fixed.0,
            p: o.fixed.1,
            objective: o.objective.to_string(),
            argmax: o.argmax.clone(),
            search_space_size: o.search_space_size,
            notes: o.notes.clone(),
        }
    }
}

impl Render for SearchJson {
    fn render(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let c = &self.constraints;
        let mut rows = vec![
            ("pattern", self.pattern.line()),
            ("constraints", format!("u={} Δ={} ω={}", c.u, opt(c.delta), opt(c.omega))),
            ("fixed", if self.u == 1 { format!("n = {}", self.p) } else { format!("k^{} = {}", self.u, self.p) }),
            ("maximum", self.objective.clone()),
            ("classes examined", self.search_space_size.to_string()),
        ];
        for g in &self.argmax {
            rows.push(("extremal", g.clone()));
        }
        for n in &self.notes {
            rows.push(("note", n.clone()));
        }
        table(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn rationals_are_reduced_strings() {
        let d = Density::new(BigUint::from(6u32), BigUint::from(4u32)).unwrap();
        let r = Rational::from(&d);
        assert_eq!(r, Rational { num: "3".into(), den: "2".into() });
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":"3","den":"2"}"#);
        assert_eq!(Rational::from(&Density::one()).to_string(), "1");
    }

    #[test]
    fn envelope_shape() {
        let g = Graph::complete(3).unwrap();
        let s = to_json("construct", &serde_json::json!({"graph": "K3"}), &ConstructReport::new("K3", &g)).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], SCHEMA_ID);
        assert_eq!(v["result"]["graph"]["size"], 3);
        assert!(s.ends_with('\n'));
    }
}
