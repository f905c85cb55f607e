//! Seeded input generators for the sorting and shortest-path experiments,
//! and the runners that drive heaps over them.

mod graphs;
mod permutations;
mod runners;

pub use graphs::{gen_erdos_renyi, gen_regular, WeightedGraph, MAX_WEIGHT};
pub use permutations::{gen_localized, gen_separable, gen_sorted_blocks, gen_uniform, Permutation, SortedBlocks};
pub use runners::{run_dijkstra, run_sorting, run_sorting_traced, DijkstraRun, StepCost};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for trial `trial` of a run seeded with `base`.
pub fn trial_rng(base: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(base.wrapping_add(trial))
}
