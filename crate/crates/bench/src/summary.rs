use std::collections::BTreeMap;
use std::fmt::Write;
use std::io::Read;

use anyhow::{anyhow, Result};
use serde::Serialize;

use crate::ResultRow;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub experiment: String,
    pub heap: String,
    pub n: u64,
    pub param: f64,
    pub trials: usize,
    pub mean_comparisons: f64,
    pub min_comparisons: u64,
    pub max_comparisons: u64,
    pub mean_links: f64,
    pub min_links: u64,
    pub max_links: u64,
    /// Mean comparisons over `lg(n!)`; sorting experiments only.
    pub comparisons_per_lg_fact: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRow {
    pub experiment: String,
    pub n: u64,
    pub param: f64,
    pub heap_a: String,
    pub heap_b: String,
    /// mean comparisons of A over mean comparisons of B
    pub comparison_ratio: f64,
    pub link_ratio: f64,
}

/// `lg(n!)`, the information-theoretic lower bound for sorting.
pub fn lg_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).log2()).sum()
}

pub fn read_rows(input: impl Read) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_reader(input);
    let mut rows = Vec::new();
    for rec in r.deserialize() {
        let row: ResultRow = rec.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            anyhow!("malformed CSV at line {line}: {e}")
        })?;
        rows.push(row);
    }
    Ok(rows)
}

fn ratio(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        f64::NAN
    } else {
        a / b
    }
}

pub fn summarize(rows: &[ResultRow]) -> (Vec<SummaryRow>, Vec<RatioRow>) {
    type Key = (String, u64, u64, String); // experiment, n, param bits, heap
    let mut groups: BTreeMap<Key, Vec<&ResultRow>> = BTreeMap::new();
    for r in rows {
        groups.entry((r.experiment.clone(), r.n, r.param.to_bits(), r.heap.clone())).or_default().push(r);
    }
    let mut summary = Vec::new();
    for ((experiment, n, param, heap), rs) in &groups {
        let k = rs.len() as f64;
        let mean_c = rs.iter().map(|r| r.comparisons as f64).sum::<f64>() / k;
        summary.push(SummaryRow {
            experiment: experiment.clone(),
            heap: heap.clone(),
            n: *n,
            param: f64::from_bits(*param),
            trials: rs.len(),
            mean_comparisons: mean_c,
            min_comparisons: rs.iter().map(|r| r.comparisons).min().unwrap(),
            max_comparisons: rs.iter().map(|r| r.comparisons).max().unwrap(),
            mean_links: rs.iter().map(|r| r.links as f64).sum::<f64>() / k,
            min_links: rs.iter().map(|r| r.links).min().unwrap(),
            max_links: rs.iter().map(|r| r.links).max().unwrap(),
            comparisons_per_lg_fact: (experiment.starts_with("sort-") && *n >= 2).then(|| mean_c / lg_factorial(*n)),
        });
    }
    let mut ratios = Vec::new();
    for a in &summary {
        for b in &summary {
            if a.heap != b.heap && a.experiment == b.experiment && a.n == b.n && a.param.to_bits() == b.param.to_bits()
            {
                ratios.push(RatioRow {
                    experiment: a.experiment.clone(),
                    n: a.n,
                    param: a.param,
                    heap_a: a.heap.clone(),
                    heap_b: b.heap.clone(),
                    comparison_ratio: ratio(a.mean_comparisons, b.mean_comparisons),
                    link_ratio: ratio(a.mean_links, b.mean_links),
                });
            }
        }
    }
    (summary, ratios)
}

pub fn render(summary: &[SummaryRow], ratios: &[RatioRow]) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:<18} {:<16} {:>8} {:>8} {:>6} {:>14} {:>12} {:>12} {:>14} {:>12} {:>12} {:>10}",
        "experiment",
        "heap",
        "n",
        "param",
        "trials",
        "mean_cmp",
        "min_cmp",
        "max_cmp",
        "mean_links",
        "min_links",
        "max_links",
        "cmp/lg(n!)"
    )
    .unwrap();
    for r in summary {
        let lf = r.comparisons_per_lg_fact.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into());
        writeln!(
            s,
            "{:<18} {:<16} {:>8} {:>8} {:>6} {:>14.1} {:>12} {:>12} {:>14.1} {:>12} {:>12} {:>10}",
            r.experiment,
            r.heap,
            r.n,
            r.param,
            r.trials,
            r.mean_comparisons,
            r.min_comparisons,
            r.max_comparisons,
            r.mean_links,
            r.min_links,
            r.max_links,
            lf
        )
        .unwrap();
    }
    if !ratios.is_empty() {
        writeln!(s).unwrap();
        writeln!(
            s,
            "{:<18} {:>8} {:>8} {:<16} {:<16} {:>10} {:>10}",
            "experiment", "n", "param", "heap_a", "heap_b", "cmp A/B", "links A/B"
        )
        .unwrap();
        for r in ratios {
            writeln!(
                s,
                "{:<18} {:>8} {:>8} {:<16} {:<16} {:>10.4} {:>10.4}",
                r.experiment, r.n, r.param, r.heap_a, r.heap_b, r.comparison_ratio, r.link_ratio
            )
            .unwrap();
        }
    }
    s
}
