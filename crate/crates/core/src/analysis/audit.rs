//! Replays operation scripts and checks every operation's amortized cost
//! (actual cost plus potential change) against its bound.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::potential::{heap_potential, size, PotentialMode};
use crate::error::{HeapError, Result};
use crate::heap::{DecreaseKeyPolicy, HeapConfig, HeapId, HeapSet};
use crate::store::NodeHandle;

const SLACK: f64 = 1e-9;
/// Cached potentials are re-derived from scratch this often.
const VERIFY_EVERY: usize = 256;

/// One scripted operation. Heaps are addressed by their position among the
/// live heaps (in creation order; a meld removes `from`); nodes by their
/// position, modulo the heap's size, among the heap's live nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScriptOp {
    MakeHeap,
    Insert { heap: usize, key: i64 },
    Meld { into: usize, from: usize },
    FindMin { heap: usize },
    DeleteMin { heap: usize },
    DecreaseKey { heap: usize, node: usize, delta: i64 },
    Delete { heap: usize, node: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OpKind {
    MakeHeap,
    Insert,
    Meld,
    FindMin,
    DeleteMin,
    DecreaseKey,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    pub step: usize,
    pub op: OpKind,
    /// Heap size before the operation.
    pub n: usize,
    pub actual: u64,
    pub phi_before: f64,
    pub phi_after: f64,
    pub amortized: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub mode: PotentialMode,
    pub rows: Vec<AuditRow>,
    pub all_pass: bool,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// Largest `amortized - bound` seen for an operation kind.
    pub fn worst_margin(&self, op: OpKind) -> Option<f64> {
        self.rows.iter().filter(|r| r.op == op).map(|r| r.amortized - r.bound).reduce(f64::max)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "audit ({:?}): {} operations, all_pass = {}", self.mode, self.rows.len(), self.all_pass)?;
        writeln!(f, "{:<12} {:>8} {:>14} {:>14}", "op", "count", "max amortized", "max amort-bound")?;
        for op in
            [OpKind::MakeHeap, OpKind::Insert, OpKind::Meld, OpKind::FindMin, OpKind::DeleteMin, OpKind::DecreaseKey]
        {
            let rows: Vec<_> = self.rows.iter().filter(|r| r.op == op).collect();
            if rows.is_empty() {
                continue;
            }
            let max_am = rows.iter().map(|r| r.amortized).fold(f64::NEG_INFINITY, f64::max);
            let margin = self.worst_margin(op).unwrap();
            writeln!(f, "{:<12} {:>8} {:>14.4} {:>14.4}", format!("{op:?}"), rows.len(), max_am, margin)?;
        }
        for r in self.failures().take(20) {
            writeln!(
                f,
                "FAIL step {} {:?} n={} actual={} phi {:.4} -> {:.4} amortized {:.4} > bound {:.4}",
                r.step, r.op, r.n, r.actual, r.phi_before, r.phi_after, r.amortized, r.bound
            )?;
        }
        Ok(())
    }
}

fn lg(n: usize) -> f64 {
    (n.max(1) as f64).log2()
}

/// Replays `ops` on fresh heaps of `config` (smooth or slim, simple
/// decrease-key; link stamps are switched on) and audits every operation.
pub fn audit_sequence(ops: &[ScriptOp], config: HeapConfig) -> Result<AuditReport> {
    let mode = PotentialMode::of(config.kind).ok_or(HeapError::UnsupportedOp("no potential for pairing heaps"))?;
    if config.decrease_key != DecreaseKeyPolicy::Simple {
        return Err(HeapError::UnsupportedOp("buffered decrease-key is not audited"));
    }
    if ops.iter().any(|op| matches!(op, ScriptOp::Delete { .. })) {
        return Err(HeapError::UnsupportedOp("delete is not audited"));
    }
    let config = config.with_audit(true);
    let coeff = match mode {
        PotentialMode::Slim => 3.0,
        PotentialMode::Smooth => 4.0,
    };

    let mut set: HeapSet<i64> = HeapSet::new();
    let mut heaps: Vec<HeapId> = Vec::new();
    let mut nodes: Vec<Vec<NodeHandle>> = Vec::new();
    let mut phis: Vec<f64> = Vec::new();
    let mut rows = Vec::with_capacity(ops.len());

    let slot = |heaps: &Vec<HeapId>, i: usize| heaps.get(i).copied().ok_or(HeapError::UnknownHeap(i));

    for (step, &op) in ops.iter().enumerate() {
        let (kind, n, actual, before, after, bound) = match op {
            ScriptOp::MakeHeap => {
                let h = set.make_heap(config)?;
                let phi = heap_potential(&set, h, mode)?;
                heaps.push(h);
                nodes.push(Vec::new());
                phis.push(phi);
                (OpKind::MakeHeap, 0, 1, 0.0, phi, 1.0)
            }
            ScriptOp::Insert { heap, key } => {
                let h = slot(&heaps, heap)?;
                let n = set.len(h)?;
                let x = set.insert(h, key)?;
                nodes[heap].push(x);
                // an insert leaves every existing tree alone; the new
                // one-node tree is all that changes
                let before = phis[heap];
                phis[heap] += 2.0 + 2.0 * lg(size(set.store(), x));
                (OpKind::Insert, n, 1, before, phis[heap], 3.0)
            }
            ScriptOp::Meld { into, from } => {
                let (a, b) = (slot(&heaps, into)?, slot(&heaps, from)?);
                let n = set.len(a)? + set.len(b)?;
                let before = phis[into] + phis[from];
                set.meld(a, b)?;
                let moved = nodes.remove(from);
                heaps.remove(from);
                phis.remove(from);
                let into = if from < into { into - 1 } else { into };
                nodes[into].extend(moved);
                phis[into] = before;
                (OpKind::Meld, n, 1, before, before, 1.0)
            }
            ScriptOp::FindMin { heap } => {
                let h = slot(&heaps, heap)?;
                set.find_min(h)?;
                (OpKind::FindMin, set.len(h)?, 1, phis[heap], phis[heap], 1.0)
            }
            ScriptOp::DeleteMin { heap } => {
                let h = slot(&heaps, heap)?;
                let n = set.len(h)?;
                let links = set.counters().links;
                let (x, _) = set.delete_min(h)?;
                let actual = 1 + set.counters().links - links;
                let pos = nodes[heap].iter().position(|&y| y == x).expect("deleted node not tracked");
                nodes[heap].swap_remove(pos);
                let before = phis[heap];
                phis[heap] = heap_potential(&set, h, mode)?;
                (OpKind::DeleteMin, n, actual, before, phis[heap], 5.0 + coeff * lg(n))
            }
            ScriptOp::DecreaseKey { heap, node, delta } => {
                let h = slot(&heaps, heap)?;
                let n = set.len(h)?;
                if n == 0 {
                    return Err(HeapError::EmptyHeap);
                }
                let x = nodes[heap][node % n];
                let sz = size(set.store(), x);
                let key = set.key(x).copied().expect("tracked node without key");
                set.decrease_key(h, x, key - delta.abs())?;
                let before = phis[heap];
                phis[heap] = heap_potential(&set, h, mode)?;
                (OpKind::DecreaseKey, n, 1, before, phis[heap], 3.0 + 2.0 * lg(sz))
            }
            ScriptOp::Delete { .. } => unreachable!(),
        };
        let amortized = actual as f64 + after - before;
        rows.push(AuditRow {
            step,
            op: kind,
            n,
            actual,
            phi_before: before,
            phi_after: after,
            amortized,
            bound,
            pass: amortized <= bound + SLACK,
        });
        if step % VERIFY_EVERY == VERIFY_EVERY - 1 {
            for (i, &h) in heaps.iter().enumerate() {
                let fresh = heap_potential(&set, h, mode)?;
                assert!(
                    (fresh - phis[i]).abs() < 1e-6,
                    "cached potential drifted at step {step}: {} vs {fresh}",
                    phis[i]
                );
            }
        }
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(AuditReport { mode, rows, all_pass })
}

#[derive(Clone, Copy, Debug)]
pub struct ScriptParams {
    pub ops: usize,
    /// Upper limit on the total number of live nodes.
    pub size_cap: usize,
    pub max_heaps: usize,
    pub decrease_key: bool,
    /// Keys are drawn from `0..key_range` (small ranges give duplicates).
    pub key_range: i64,
}

impl Default for ScriptParams {
    fn default() -> Self {
        Self { ops: 10_000, size_cap: 1 << 12, max_heaps: 8, decrease_key: false, key_range: 1 << 20 }
    }
}

/// A random valid script: never deletes from an empty heap and never lets
/// the total size exceed the cap.
pub fn random_script(p: ScriptParams, rng: &mut impl Rng) -> Vec<ScriptOp> {
    let mut sizes: Vec<usize> = vec![0];
    let mut ops = vec![ScriptOp::MakeHeap];
    while ops.len() < p.ops {
        let total: usize = sizes.iter().sum();
        let nonempty: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 0).collect();
        let r = rng.random_range(0..100);
        let op = if r < 55 && total < p.size_cap {
            let heap = rng.random_range(0..sizes.len());
            sizes[heap] += 1;
            ScriptOp::Insert { heap, key: rng.random_range(0..p.key_range) }
        } else if r < 80 && !nonempty.is_empty() {
            let heap = nonempty[rng.random_range(0..nonempty.len())];
            sizes[heap] -= 1;
            ScriptOp::DeleteMin { heap }
        } else if r < 86 && sizes.len() >= 2 {
            let into = rng.random_range(0..sizes.len());
            let mut from = rng.random_range(0..sizes.len() - 1);
            if from >= into {
                from += 1;
            }
            let moved = sizes.remove(from);
            sizes[if from < into { into - 1 } else { into }] += moved;
            ScriptOp::Meld { into, from }
        } else if r < 89 && sizes.len() < p.max_heaps {
            sizes.push(0);
            ScriptOp::MakeHeap
        } else if r < 93 || !p.decrease_key || nonempty.is_empty() {
            ScriptOp::FindMin { heap: rng.random_range(0..sizes.len()) }
        } else {
            let heap = nonempty[rng.random_range(0..nonempty.len())];
            ScriptOp::DecreaseKey {
                heap,
                node: rng.random_range(0..usize::MAX),
                delta: rng.random_range(0..p.key_range / 4 + 1),
            }
        };
        ops.push(op);
    }
    ops
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn insert_into_empty_heap() {
        let ops = [ScriptOp::MakeHeap, ScriptOp::Insert { heap: 0, key: 5 }];
        let r = audit_sequence(&ops, HeapConfig::slim()).unwrap();
        let row = &r.rows[1];
        assert_eq!(row.actual, 1);
        assert!((row.phi_after - row.phi_before - 2.0).abs() < 1e-12);
        assert!((row.amortized - 3.0).abs() < 1e-12);
        assert!(r.all_pass);
    }

    #[test]
    fn delete_min_on_singleton() {
        let ops = [ScriptOp::MakeHeap, ScriptOp::Insert { heap: 0, key: 5 }, ScriptOp::DeleteMin { heap: 0 }];
        let r = audit_sequence(&ops, HeapConfig::smooth()).unwrap();
        let row = &r.rows[2];
        assert_eq!(row.actual, 1);
        assert!((row.amortized + 1.0).abs() < 1e-12);
        assert_eq!(row.bound, 5.0);
    }

    #[test]
    fn unsupported_inputs() {
        let ops = [ScriptOp::MakeHeap, ScriptOp::Delete { heap: 0, node: 0 }];
        assert!(matches!(audit_sequence(&ops, HeapConfig::slim()), Err(HeapError::UnsupportedOp(_))));
        let buffered = HeapConfig::slim().with_decrease_key(DecreaseKeyPolicy::Buffered);
        assert!(matches!(audit_sequence(&[], buffered), Err(HeapError::UnsupportedOp(_))));
        let pairing = HeapConfig::pairing(crate::pairing::PairingMode::MultiTree);
        assert!(matches!(audit_sequence(&[], pairing), Err(HeapError::UnsupportedOp(_))));
    }

    #[test]
    fn random_scripts_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = ScriptParams { ops: 3000, size_cap: 512, decrease_key: true, key_range: 64, ..Default::default() };
        for cfg in [HeapConfig::slim(), HeapConfig::smooth()] {
            let ops = random_script(p, &mut rng);
            let r = audit_sequence(&ops, cfg).unwrap();
            assert!(r.all_pass, "{r}");
        }
    }
}
