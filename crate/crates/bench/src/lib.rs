//! Seeded inputs shared by the benchmarks.

use matchcover::corpus::{
    random_matchable_bipartite, random_matching_covered, random_regular_bipartite,
};
use matchcover::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 7;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// A connected `d`-regular bipartite graph with `h` vertices per side.
pub fn regular_bipartite(h: usize, d: usize) -> Graph {
    random_regular_bipartite(&mut rng(h as u64), h, d)
}

/// A union of three random perfect matchings on `n` vertices.
pub fn covered(n: usize) -> Graph {
    random_matching_covered(&mut rng(n as u64 + 1000), n, 3)
}

/// A sparse matchable bipartite graph, usually with several parts.
pub fn sparse_bipartite(h: usize) -> Graph {
    random_matchable_bipartite(&mut rng(h as u64 + 2000), h, 1.5 / h as f64)
}
