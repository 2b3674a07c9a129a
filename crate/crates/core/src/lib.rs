//! Exact computation for generalized Turán problems under bounded clique
//! number and bounded common neighbourhoods.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs: graphs are immutable values, counts are
//! arbitrary-precision integers and densities are exact rationals.
//!
//! Module map:
//!
//! * [`graph`], [`bitset`], [`canon`], [`graph6`]: the graph value type,
//!   vertex bitsets, canonical forms and the graph6 interchange format.
//! * [`constructions`]: Turán, colex Turán, complete split and lower-bound
//!   graphs.
//! * [`counting`]: clique, subgraph-copy and rooted-copy counts.
//! * [`freeness`]: membership in the forbidden-subgraph classes.
//! * [`bounds`]: exact lower/upper sandwiches on the limiting density.
//! * [`localization`]: per-copy weights and the localized inequality.
//! * [`search`]: orderly generation of small graphs and brute-force
//!   extremal oracles.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod counting;
mod error;
pub mod freeness;
pub mod graph;
pub mod graph6;
pub mod localization;
pub mod num;
pub mod search;

pub use bitset::VertexSet;
pub use bounds::{BoundsReport, Density, ParamTriple};
pub use canon::CanonicalCode;
pub use counting::{CountValue, PatternSpec};
pub use error::{Error, Result};
pub use freeness::{ConstraintSet, FreenessReport};
pub use graph::Graph;
pub use localization::{CopyWeights, LocalReport, SubgraphCopy};
pub use search::SearchOutcome;
