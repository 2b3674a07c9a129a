//! Exact densities and the lower/upper sandwich on the limiting density
//! `P_u(H, Δ, ω) = lim ex_u(p, H, {K_u ∨ I_{Δ+1}, K_{ω+1}}) / p`.
//!
//! Nothing here uses floating point; equality flags compare rationals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::constructions::{lower_bound_graph, turan};
use crate::counting::{count_cliques, count_subgraph_copies, PatternSpec};
use crate::error::{Error, Result};
use crate::freeness::ConstraintSet;
use crate::graph::Graph;
use crate::graph6;
use crate::num::binomial;
use crate::search::{brute_extremal, SearchLimits};

/// `(u, Δ, ω)` with `Δ = a(ω−u) + b`, `0 ≤ b < ω−u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriple {
    pub u: usize,
    pub delta: usize,
    pub omega: usize,
    pub a: usize,
    pub b: usize,
}

impl ParamTriple {
    /// Requires `Δ ≥ ω ≥ u + 1 ≥ 2`.
    pub fn new(u: usize, delta: usize, omega: usize) -> Result<ParamTriple> {
        if u < 1 || omega < u + 1 || delta < omega {
            return Err(Error::InvalidParameters(alloc::format!(
                "need Δ ≥ ω ≥ u+1 ≥ 2, got u={u}, Δ={delta}, ω={omega}"
            )));
        }
        Ok(ParamTriple::split(u, delta, omega))
    }

    /// Like [`ParamTriple::new`] but only requires `ω ≥ u + 1 ≥ 2`, allowing
    /// `Δ < ω`. The lower-bound construction is still defined there; the
    /// density bounds are not meant for such triples.
    pub fn relaxed(u: usize, delta: usize, omega: usize) -> Result<ParamTriple> {
        if u < 1 || omega < u + 1 {
            return Err(Error::InvalidParameters(alloc::format!("need ω ≥ u+1 ≥ 2, got u={u}, ω={omega}")));
        }
        Ok(ParamTriple::split(u, delta, omega))
    }

    fn split(u: usize, delta: usize, omega: usize) -> ParamTriple {
        let w = omega - u;
        ParamTriple { u, delta, omega, a: delta / w, b: delta % w }
    }

    /// Whether `Δ ≥ ω` holds, i.e. the triple came from (or would pass)
    /// [`ParamTriple::new`].
    pub fn is_standard(&self) -> bool {
        self.delta >= self.omega
    }

    /// `|V(L)| = aω + b`.
    pub fn lb_order(&self) -> usize {
        self.a * self.omega + self.b
    }

    pub fn divisible(&self) -> bool {
        self.b == 0
    }

    pub fn constraints(&self) -> ConstraintSet {
        ConstraintSet::new(self.u, Some(self.delta), Some(self.omega))
    }
}

/// A nonnegative exact rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Density(pub BigRational);

impl Density {
    pub fn new(num: BigUint, den: BigUint) -> Result<Density> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator("density"));
        }
        Ok(Density(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_integer(x: BigUint) -> Density {
        Density(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn zero() -> Density {
        Density(BigRational::zero())
    }

    pub fn one() -> Density {
        Density(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// `self / other`; `None` when `other` is zero.
    pub fn checked_div(&self, other: &Density) -> Option<Density> {
        (!other.0.is_zero()).then(|| Density(&self.0 / &other.0))
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// `ρ_u(H, G) = 𝒩(H, G) / k^u(G)`.
pub fn rho(h: &PatternSpec, g: &Graph, u: usize) -> Result<Density> {
    let ku = count_cliques(g, u);
    if ku.is_zero() {
        return Err(Error::ZeroDenominator("k^u(G) = 0"));
    }
    Density::new(count_subgraph_copies(h, g), ku)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: ParamTriple,
    /// `ρ_u(H, L)`.
    pub lower: Density,
    /// `𝒩(H^{↓u}, T_{ω−u}(Δ)) / C(dom(H), u)`.
    pub upper: Density,
    pub divisible: bool,
    pub equal: bool,
    /// `lower / upper`; `None` when the upper bound is zero.
    pub ratio: Option<Density>,
    pub l: Graph,
}

fn check_dom(h: &PatternSpec, u: usize) -> Result<()> {
    if h.dom_count() < u {
        return Err(Error::TooFewDominating { need: u, have: h.dom_count() });
    }
    Ok(())
}

fn check_standard(params: &ParamTriple) -> Result<()> {
    if !params.is_standard() {
        return Err(Error::InvalidParameters(alloc::format!(
            "bounds need Δ ≥ ω, got Δ={}, ω={}",
            params.delta,
            params.omega
        )));
    }
    Ok(())
}

/// `𝒩(H^{↓u}, T_{ω−u}(d)) / C(dom(H), u)`.
fn upper_at(h: &PatternSpec, u: usize, omega: usize, d: usize) -> Result<Density> {
    let reduced = h.reduced_spec(u)?;
    let t = turan(omega - u, d)?;
    Density::new(count_subgraph_copies(&reduced, &t), binomial(h.dom_count(), u))
}

pub fn bounds_report(h: &PatternSpec, params: &ParamTriple) -> Result<BoundsReport> {
    check_dom(h, params.u)?;
    check_standard(params)?;
    let l = lower_bound_graph(params)?;
    let lower = rho(h, &l, params.u)?;
    let upper = upper_at(h, params.u, params.omega, params.delta)?;
    Ok(BoundsReport {
        params: *params,
        equal: lower == upper,
        ratio: lower.checked_div(&upper),
        divisible: params.divisible(),
        lower,
        upper,
        l,
    })
}

/// Floors for `lower / upper`: the exact ratio
/// `𝒩(H^{↓u}, T_{ω−u}(Δ−u)) / 𝒩(H^{↓u}, T_{ω−u}(Δ))` (every `u`-clique of `L`
/// has at least `Δ − u` common neighbours) and the product
/// `Π_{i<u} (1 − v(H^{↓u})/(Δ−i))`, which is below it once `ω − u ≥ ω₀(H^{↓u})`.
/// The exact floor is `None` when the upper bound is zero.
pub fn ratio_floors(h: &PatternSpec, params: &ParamTriple) -> Result<(Option<Density>, Density)> {
    check_dom(h, params.u)?;
    check_standard(params)?;
    let reduced = h.reduced_spec(params.u)?;
    let r = params.omega - params.u;
    let top = count_subgraph_copies(&reduced, &turan(r, params.delta)?);
    let bottom = count_subgraph_copies(&reduced, &turan(r, params.delta.saturating_sub(params.u))?);
    let exact = (!top.is_zero()).then(|| Density::new(bottom, top)).transpose()?;
    let product = product_floor(reduced.order(), params.delta, params.u)?;
    Ok((exact, product))
}

/// `Π_{i=0}^{u−1} (1 − v/(n−i))`.
pub fn product_floor(v: usize, n: usize, u: usize) -> Result<Density> {
    let mut acc = BigRational::one();
    for i in 0..u {
        if n <= i {
            return Err(Error::ZeroDenominator("n − i"));
        }
        let d = BigInt::from(n - i);
        acc *= BigRational::new(&d - BigInt::from(v), d.clone());
    }
    Ok(Density(acc))
}

/// `(𝒩(H, T_r(n−u)) / 𝒩(H, T_r(n)), Π_{i<u}(1 − v(H)/(n−i)))`.
pub fn ratio_diagnostic(h: &PatternSpec, r: usize, n: usize, u: usize) -> Result<(Density, Density)> {
    if n < u {
        return Err(Error::InvalidParameters(alloc::format!("need n ≥ u, got n={n}, u={u}")));
    }
    let top = count_subgraph_copies(h, &turan(r, n)?);
    if top.is_zero() {
        return Err(Error::ZeroDenominator("𝒩(H, T_r(n)) = 0"));
    }
    let bottom = count_subgraph_copies(h, &turan(r, n - u)?);
    Ok((Density::new(bottom, top)?, product_floor(h.order(), n, u)?))
}

/// Where a value of `ω₀(H)` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega0Source {
    /// `H` is complete: Turán graphs maximize clique counts for every `ω`.
    Zykov,
    /// `H` is edgeless: every graph on `n` vertices has `C(n, v(H))` copies.
    Edgeless,
    /// The general certified bound `300 v(H)^9`.
    Certified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Omega0 {
    pub value: u128,
    pub source: Omega0Source,
}

/// `300 · v(H)^9`.
pub fn omega0_bound(h: &Graph) -> u128 {
    300 * (h.order() as u128).pow(9)
}

/// The value used when a caller does not supply `ω₀(H)`.
pub fn default_omega0(h: &Graph) -> Omega0 {
    if h.is_clique(&h.vertices()) {
        Omega0 { value: 1, source: Omega0Source::Zykov }
    } else if h.size() == 0 {
        Omega0 { value: 1, source: Omega0Source::Edgeless }
    } else {
        Omega0 { value: omega0_bound(h), source: Omega0Source::Certified }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessRow {
    pub n: usize,
    pub oracle: BigUint,
    pub turan: BigUint,
}

/// Exhaustive check that `T_ω(n)` maximizes `𝒩(H, ·)` among `K_{ω+1}`-free
/// graphs for every `n ≤ n_max`. A pass is evidence that `ω ≥ ω₀(H)` at
/// this scale, not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub omega: usize,
    pub n_max: usize,
    pub rows: Vec<GoodnessRow>,
    pub passes: bool,
    /// First `n` where some graph beats the Turán graph, with that graph.
    pub witness: Option<(usize, String)>,
}

pub fn empirical_turan_goodness(
    h: &PatternSpec,
    omega: usize,
    n_max: usize,
    limits: &SearchLimits,
) -> Result<GoodnessReport> {
    if omega == 0 {
        return Err(Error::InvalidParameters("ω must be at least 1".into()));
    }
    let cs = ConstraintSet::clique_free(omega);
    let mut rows = Vec::new();
    let mut witness = None;
    for n in 0..=n_max {
        let out = brute_extremal(n, h, &cs, limits)?;
        let t = count_subgraph_copies(h, &turan(omega, n)?);
        if witness.is_none() && out.objective > t {
            witness = Some((n, out.argmax[0].clone()));
        }
        rows.push(GoodnessRow { n, oracle: out.objective, turan: t });
    }
    Ok(GoodnessReport { omega, n_max, passes: witness.is_none(), rows, witness })
}

/// Both sides of the sandwich for the variant with a plain star forbidden,
/// `ρ_u(H, T_ω(Δ + ⌊Δ/(ω−1)⌋)) ≤ c ≤ 𝒩(H^{↓u}, T_{ω−u}(Δ−u+1)) / C(dom(H), u)`.
/// The two sides are not expected to meet; nothing is claimed about `c`.
pub fn star_sandwich(h: &PatternSpec, params: &ParamTriple) -> Result<(Density, Density)> {
    check_dom(h, params.u)?;
    check_standard(params)?;
    let (u, d, w) = (params.u, params.delta, params.omega);
    let g = turan(w, d + d / (w - 1))?;
    let lower = rho(h, &g, u)?;
    let upper = upper_at(h, u, w, d + 1 - u)?;
    Ok((lower, upper))
}

/// Finite sandwich `𝒩(H, ⌊p/k^u(L)⌋ L) ≤ ex_u(p) ≤ 𝒩(H^{↓u}, T_{ω−u}(Δ))·p / C(dom(H), u)`.
pub fn ex_u_sandwich(h: &PatternSpec, params: &ParamTriple, p: usize) -> Result<(BigUint, Density)> {
    check_dom(h, params.u)?;
    check_standard(params)?;
    let l = lower_bound_graph(params)?;
    let per = count_cliques(&l, params.u);
    let q = BigUint::from(p) / per;
    let lower = q * count_subgraph_copies(h, &l);
    let upper = upper_at(h, params.u, params.omega, params.delta)?;
    let scaled = Density(upper.0 * BigRational::from_integer(BigInt::from(p)));
    Ok((lower, scaled))
}

/// One point of the lower/upper trend over `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrendPoint {
    pub params: ParamTriple,
    pub ratio: Option<Density>,
    pub exact_floor: Option<Density>,
    pub product_floor: Density,
}

/// `lower / upper` for `Δ = ω..=delta_max`, with both floors.
pub fn ratio_trend(h: &PatternSpec, u: usize, omega: usize, delta_max: usize) -> Result<Vec<TrendPoint>> {
    (omega..=delta_max)
        .map(|d| {
            let params = ParamTriple::new(u, d, omega)?;
            let report = bounds_report(h, &params)?;
            let (exact_floor, product_floor) = ratio_floors(h, &params)?;
            Ok(TrendPoint { params, ratio: report.ratio, exact_floor, product_floor })
        })
        .collect()
}

/// graph6 of the lower bound graph, for reports.
pub fn lower_bound_graph6(params: &ParamTriple) -> Result<String> {
    Ok(graph6::encode(&lower_bound_graph(params)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete_split;

    fn k(t: usize) -> PatternSpec {
        PatternSpec::new(Graph::complete(t).unwrap())
    }

    fn q(n: i64, d: i64) -> Density {
        Density(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn param_triples() {
        let p = ParamTriple::new(1, 5, 4).unwrap();
        assert_eq!((p.a, p.b, p.lb_order()), (1, 2, 6));
        assert!(ParamTriple::new(1, 3, 4).is_err());
        assert!(ParamTriple::new(0, 3, 2).is_err());
        assert!(ParamTriple::new(2, 5, 2).is_err());
        let r = ParamTriple::relaxed(1, 2, 3).unwrap();
        assert_eq!((r.a, r.b, r.lb_order()), (1, 0, 3));
        assert!(!r.is_standard());
        assert!(ParamTriple::relaxed(2, 2, 2).is_err());
    }

    #[test]
    fn rho_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(rho(&k(3), &k3, 1).unwrap(), q(1, 3));
        assert_eq!(rho(&k(3), &turan(4, 6).unwrap(), 1).unwrap(), q(2, 1));
        // one triangle over three edges
        assert_eq!(rho(&k(3), &k3, 2).unwrap(), q(1, 3));
        assert!(rho(&k(3), &Graph::empty(3).unwrap(), 2).is_err());
    }

    #[test]
    fn bounds_examples() {
        let r = bounds_report(&k(3), &ParamTriple::new(1, 6, 4).unwrap()).unwrap();
        assert_eq!(r.l, turan(4, 8).unwrap());
        assert_eq!((r.lower.clone(), r.upper.clone()), (q(4, 1), q(4, 1)));
        assert!(r.equal && r.divisible);

        let r = bounds_report(&k(3), &ParamTriple::new(1, 5, 4).unwrap()).unwrap();
        assert_eq!((r.lower.clone(), r.upper.clone()), (q(2, 1), q(8, 3)));
        assert!(!r.equal && !r.divisible);
        assert_eq!(r.ratio, Some(q(3, 4)));

        let r = bounds_report(&k(2), &ParamTriple::new(1, 4, 2).unwrap()).unwrap();
        assert_eq!((r.lower.clone(), r.upper.clone()), (q(2, 1), q(2, 1)));

        let star = PatternSpec::new(complete_split(1, 3).unwrap());
        assert!(bounds_report(&star, &ParamTriple::new(2, 4, 3).unwrap()).is_err());
    }

    #[test]
    fn omega0_values() {
        assert_eq!(omega0_bound(&Graph::complete(1).unwrap()), 300);
        assert_eq!(omega0_bound(&Graph::complete(2).unwrap()), 153_600);
        assert_eq!(omega0_bound(&Graph::cycle(4).unwrap()), 78_643_200);
        assert_eq!(default_omega0(&Graph::complete(4).unwrap()).source, Omega0Source::Zykov);
        assert_eq!(default_omega0(&Graph::cycle(4).unwrap()).source, Omega0Source::Certified);
    }

    #[test]
    fn ratio_diagnostic_examples() {
        assert_eq!(ratio_diagnostic(&k(3), 3, 6, 1).unwrap(), (q(1, 2), q(1, 2)));
        assert_eq!(ratio_diagnostic(&k(2), 2, 4, 1).unwrap(), (q(1, 2), q(1, 2)));
        assert_eq!(ratio_diagnostic(&k(3), 3, 9, 2).unwrap(), (q(4, 9), q(5, 12)));
        assert!(ratio_diagnostic(&k(3), 2, 5, 1).is_err());
    }

    #[test]
    fn goodness_examples() {
        let limits = SearchLimits::default();
        assert!(empirical_turan_goodness(&k(3), 2, 6, &limits).unwrap().passes);
        assert!(empirical_turan_goodness(&k(3), 3, 6, &limits).unwrap().passes);
        // K_2-free graphs are edgeless, so neither side has a P_3
        let p3 = PatternSpec::new(Graph::path(3).unwrap());
        let r = empirical_turan_goodness(&p3, 1, 4, &limits).unwrap();
        assert!(r.passes);
        assert!(r.rows.iter().all(|row| row.oracle.is_zero()));
    }

    #[test]
    fn sandwiches() {
        let p = ParamTriple::new(1, 6, 4).unwrap();
        let (lo, hi) = ex_u_sandwich(&k(3), &p, 16).unwrap();
        // two copies of T_4(8), each with 32 triangles; upper 4 · 16
        assert_eq!(lo, BigUint::from(64u32));
        assert_eq!(hi, q(64, 1));
        let (slo, shi) = star_sandwich(&k(3), &ParamTriple::new(2, 6, 4).unwrap()).unwrap();
        assert!(slo <= shi);
    }
}
