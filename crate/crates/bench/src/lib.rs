//! Shared inputs for the benchmarks.

use layerq::graph::families;
use layerq::oracle::random_triangulation;
use layerq::Graph;

/// Random triangulation on `n >= 3` vertices.
pub fn triangulation(n: usize, seed: u64) -> Graph {
    random_triangulation(n, seed).expect("n >= 3").graph().clone()
}

pub fn grid(k: usize) -> Graph {
    families::grid(k, k)
}
