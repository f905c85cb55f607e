use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use heap_bench::experiments::{dijkstra_bench, sort_bench, GraphFamily, SortFamily};
use heap_bench::{selftest, summary, write_rows, ResultRow};
use smooth_heap::analysis::{audit_sequence, random_script, ScriptParams};
use smooth_heap::workloads::trial_rng;
use smooth_heap::{HeapConfig, HeapKind};

#[derive(Parser)]
#[command(name = "heap-bench", version, about = "Operation-count experiments for smooth, slim and pairing heaps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sort permutations from one input family with each heap.
    SortBench {
        #[arg(long, value_enum)]
        family: SortFamily,
        #[arg(long, value_delimiter = ',', default_value = "pairing,smooth,slim")]
        heaps: Vec<HeapKind>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<u64>>,
        /// epsilon (localized) or block bound B (blocks)
        #[arg(long, value_delimiter = ',')]
        param: Option<Vec<f64>>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run Dijkstra's algorithm on random graphs with each heap.
    DijkstraBench {
        #[arg(long, value_enum)]
        family: GraphFamily,
        #[arg(long, value_delimiter = ',', default_value = "pairing,smooth,slim")]
        heaps: Vec<HeapKind>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<u64>>,
        /// edge probability (er)
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<f64>>,
        /// vertex degree (regular)
        #[arg(long, default_value_t = 10)]
        degree: u32,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Audit amortized costs on random scripts against the potential function.
    Audit {
        #[arg(long, value_enum)]
        mode: AuditMode,
        #[arg(long, default_value_t = 10_000)]
        ops: usize,
        #[arg(long, default_value_t = 4096)]
        size_cap: usize,
        #[arg(long, default_value_t = 1)]
        scripts: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// also script simple decrease-key operations
        #[arg(long)]
        decrease_key: bool,
    },
    /// Differential, treap-shape and link-discipline checks.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Per-cell statistics and heap-to-heap ratios of a results CSV.
    Summarize { csv: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditMode {
    Slim,
    Smooth,
}

#[derive(clap::Args)]
struct OutArgs {
    /// CSV destination; defaults to $HEAPBENCH_OUT_DIR/<experiment>.csv, else stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "HEAPBENCH_OUT_DIR", hide_env_values = true)]
    out_dir: Option<PathBuf>,
}

fn emit(out: &OutArgs, experiment: &str, rows: &[ResultRow]) -> Result<()> {
    let path = out.out.clone().or_else(|| out.out_dir.as_ref().map(|d| d.join(format!("{experiment}.csv"))));
    match path {
        Some(p) => {
            let f = File::create(&p).with_context(|| format!("cannot create {}", p.display()))?;
            write_rows(f, rows).with_context(|| format!("cannot write {}", p.display()))?;
            eprintln!("wrote {} rows to {}", rows.len(), p.display());
        }
        None => write_rows(io::stdout().lock(), rows).context("cannot write CSV to stdout")?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::SortBench { family, heaps, sizes, param, trials, seed, out } => {
            let sizes = sizes.unwrap_or_else(|| family.default_sizes());
            let params = param.unwrap_or_else(|| family.default_params());
            let trials = trials.unwrap_or(family.default_trials());
            let rows = sort_bench(family, &heaps, &sizes, &params, trials, seed)?;
            emit(&out, family.experiment(), &rows)?;
        }
        Cmd::DijkstraBench { family, heaps, sizes, p, degree, trials, seed, out } => {
            let sizes = sizes.unwrap_or_else(|| family.default_sizes());
            let params = match family {
                GraphFamily::Er => p.unwrap_or_else(|| family.default_params()),
                GraphFamily::Regular => vec![f64::from(degree)],
            };
            let rows = dijkstra_bench(family, &heaps, &sizes, &params, trials, seed)?;
            emit(&out, family.experiment(), &rows)?;
        }
        Cmd::Audit { mode, ops, size_cap, scripts, seed, decrease_key } => {
            let config = match mode {
                AuditMode::Slim => HeapConfig::slim(),
                AuditMode::Smooth => HeapConfig::smooth(),
            };
            let params = ScriptParams { ops, size_cap, decrease_key, ..Default::default() };
            let mut ok = true;
            for i in 0..scripts {
                let script = random_script(params, &mut trial_rng(seed, i));
                let report = audit_sequence(&script, config)?;
                print!("{report}");
                ok &= report.all_pass;
            }
            println!("allPass = {ok}");
            return Ok(ok);
        }
        Cmd::Selftest { seed } => {
            let mut ok = true;
            for c in selftest::run(seed) {
                println!("[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                ok &= c.passed;
            }
            return Ok(ok);
        }
        Cmd::Summarize { csv } => {
            let f = File::open(&csv).with_context(|| format!("cannot open {}", csv.display()))?;
            let rows = summary::read_rows(f)?;
            let (s, r) = summary::summarize(&rows);
            io::stdout().write_all(summary::render(&s, &r).as_bytes())?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
