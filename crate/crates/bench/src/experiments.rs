use std::time::Instant;

use anyhow::{bail, Result};
use smooth_heap::workloads::{
    gen_erdos_renyi, gen_localized, gen_regular, gen_separable, gen_sorted_blocks, gen_uniform, run_dijkstra,
    run_sorting, trial_rng,
};
use smooth_heap::HeapKind;

use crate::{canonical_order, ResultRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SortFamily {
    Uniform,
    Separable,
    Localized,
    Blocks,
}

impl SortFamily {
    pub fn experiment(self) -> &'static str {
        match self {
            SortFamily::Uniform => "sort-uniform",
            SortFamily::Separable => "sort-separable",
            SortFamily::Localized => "sort-localized",
            SortFamily::Blocks => "sort-blocks",
        }
    }

    pub fn default_trials(self) -> u64 {
        match self {
            SortFamily::Uniform => 5,
            SortFamily::Separable => 20,
            SortFamily::Localized => 10,
            SortFamily::Blocks => 20,
        }
    }

    pub fn default_sizes(self) -> Vec<u64> {
        match self {
            SortFamily::Uniform | SortFamily::Separable => (1..=17).map(|e| 1 << e).collect(),
            SortFamily::Localized | SortFamily::Blocks => vec![10_000],
        }
    }

    pub fn default_params(self) -> Vec<f64> {
        match self {
            SortFamily::Uniform | SortFamily::Separable => vec![0.0],
            SortFamily::Localized => (0..=30).map(|i| f64::from(i) / 100.0).collect(),
            SortFamily::Blocks => (1..=20).map(|i| f64::from(i * 100)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFamily {
    Er,
    Regular,
}

impl GraphFamily {
    pub fn experiment(self) -> &'static str {
        match self {
            GraphFamily::Er => "dijkstra-er",
            GraphFamily::Regular => "dijkstra-regular",
        }
    }

    pub fn default_sizes(self) -> Vec<u64> {
        match self {
            GraphFamily::Er => vec![500],
            GraphFamily::Regular => (1..=20).map(|i| i * 500).collect(),
        }
    }

    pub fn default_params(self) -> Vec<f64> {
        match self {
            GraphFamily::Er => (0..=20).map(|i| f64::from(i) * 0.05).collect(),
            GraphFamily::Regular => vec![10.0],
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed().as_nanos() as u64)
}

/// Every heap sorts the same permutation for a given (n, param, trial).
pub fn sort_bench(
    family: SortFamily,
    heaps: &[HeapKind],
    sizes: &[u64],
    params: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Vec<ResultRow>> {
    let mut rows = Vec::new();
    for &n in sizes {
        if n == 0 {
            bail!("sizes must be positive");
        }
        for &param in params {
            for trial in 0..trials {
                let mut rng = trial_rng(seed, trial);
                let n_us = n as usize;
                let perm = match family {
                    SortFamily::Uniform => gen_uniform(n_us, &mut rng),
                    SortFamily::Separable => gen_separable(n_us, &mut rng),
                    SortFamily::Localized => {
                        if param < 0.0 {
                            bail!("epsilon must be non-negative");
                        }
                        gen_localized(n_us, param, &mut rng)
                    }
                    SortFamily::Blocks => {
                        if param < 1.0 {
                            bail!("block bound must be at least 1");
                        }
                        gen_sorted_blocks(n_us, param as usize, &mut rng).perm
                    }
                };
                for &heap in heaps {
                    let (c, nanos) = timed(|| run_sorting(heap, &perm.0));
                    let c = c?;
                    rows.push(ResultRow {
                        experiment: family.experiment().into(),
                        heap: heap.name().into(),
                        n,
                        param,
                        trial,
                        comparisons: c.comparisons,
                        links: c.links,
                        wall_nanos: nanos,
                    });
                }
            }
        }
    }
    canonical_order(&mut rows);
    Ok(rows)
}

/// Every heap runs on the same graph for a given (n, param, trial); the
/// source is vertex 0. `param` is the edge probability (ER) or the degree
/// (regular).
pub fn dijkstra_bench(
    family: GraphFamily,
    heaps: &[HeapKind],
    sizes: &[u64],
    params: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Vec<ResultRow>> {
    let mut rows = Vec::new();
    for &n in sizes {
        if n == 0 {
            bail!("sizes must be positive");
        }
        for &param in params {
            for trial in 0..trials {
                let mut rng = trial_rng(seed, trial);
                let g = match family {
                    GraphFamily::Er => {
                        if !(0.0..=1.0).contains(&param) {
                            bail!("edge probability {param} outside [0, 1]");
                        }
                        gen_erdos_renyi(n as usize, param, &mut rng)
                    }
                    GraphFamily::Regular => {
                        if param < 0.0 || param.fract() != 0.0 {
                            bail!("degree must be a non-negative integer");
                        }
                        gen_regular(n as usize, param as usize, &mut rng)?
                    }
                };
                for &heap in heaps {
                    let (r, nanos) = timed(|| run_dijkstra(heap, &g, 0));
                    let r = r?;
                    rows.push(ResultRow {
                        experiment: family.experiment().into(),
                        heap: heap.name().into(),
                        n,
                        param,
                        trial,
                        comparisons: r.counters.comparisons,
                        links: r.counters.links,
                        wall_nanos: nanos,
                    });
                }
            }
        }
    }
    canonical_order(&mut rows);
    Ok(rows)
}
