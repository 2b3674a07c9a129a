//! Seeded random graph corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::Graph;

use crate::error::Result;

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edge_list(n, edges)?)
}

/// `count` graphs with order drawn uniformly from `orders` and edge
/// probability drawn uniformly from `[0.2, 0.8]`. The same seed always gives
/// the same corpus.
pub fn corpus(seed: u64, count: usize, orders: std::ops::RangeInclusive<usize>) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = rng.gen_range(0.2..=0.8);
            random_graph(&mut rng, n, p)
        })
        .collect()
}
