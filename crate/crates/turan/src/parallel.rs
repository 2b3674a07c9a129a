//! Parallel drivers with results independent of the thread count.
//!
//! Work is split into units fixed by the input alone (one host vertex per
//! counting unit, one generation subtree per search unit) and unit results
//! are combined in unit order.

use num_bigint::BigUint;
use rayon::prelude::*;
use rayon::ThreadPool;
use turan_core::search::{split_tree, ExtremalCollector, ExtremalJob, SearchLimits};
use turan_core::{Graph, PatternSpec, SearchOutcome};

use crate::error::{Error, Result};

/// Orders at which the generation tree is cut into subtrees.
const SPLIT_DEPTH: usize = 5;

/// A pool with `threads` workers; `None` or `0` picks the machine default.
pub fn pool(threads: Option<usize>) -> Result<ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Usage(format!("cannot start thread pool: {e}")))
}

/// `𝒩(H, G)` summed over host vertices in parallel.
pub fn par_count(h: &PatternSpec, g: &Graph) -> BigUint {
    let parts: Vec<BigUint> = (0..g.order()).into_par_iter().map(|v| h.partial_count(g, v)).collect();
    let total = parts.into_iter().fold(BigUint::default(), |acc, x| acc + x);
    h.combine(g, total)
}

/// Runs `job` with the subtrees below order [`SPLIT_DEPTH`] searched in
/// parallel.
pub fn par_search(job: &ExtremalJob<'_>, limits: &SearchLimits) -> Result<SearchOutcome> {
    let keep = |g: &Graph| job.keep(g);
    let (shallow, frontier) = split_tree(job.max_order(), SPLIT_DEPTH, limits, &keep)?;
    let mut collector = ExtremalCollector::new();
    for g in &shallow {
        job.examine(g, &mut collector);
    }
    let parts: Vec<turan_core::Result<ExtremalCollector>> =
        frontier.par_iter().map(|root| job.collect_from(root)).collect();
    for part in parts {
        collector.merge(part?);
    }
    Ok(job.finish(collector, limits)?)
}
