//! Experiment drivers behind the `heap-bench` binary.

pub mod experiments;
pub mod selftest;
pub mod summary;

use serde::{Deserialize, Serialize};

/// One measured (experiment, heap, n, param, trial) cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub experiment: String,
    pub heap: String,
    pub n: u64,
    pub param: f64,
    pub trial: u64,
    pub comparisons: u64,
    pub links: u64,
    #[serde(rename = "wallNanos")]
    pub wall_nanos: u64,
}

/// Sorts rows into the canonical order used for every CSV the tool writes.
pub fn canonical_order(rows: &mut [ResultRow]) {
    rows.sort_by(|a, b| {
        (&a.experiment, &a.heap, a.n)
            .cmp(&(&b.experiment, &b.heap, b.n))
            .then(a.param.total_cmp(&b.param))
            .then(a.trial.cmp(&b.trial))
    });
}

pub fn write_rows<W: std::io::Write>(out: W, rows: &[ResultRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
