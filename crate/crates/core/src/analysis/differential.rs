//! Randomized differential testing of heaps against [`OracleQueue`].

use rand::Rng;

use super::OracleQueue;
use crate::heap::{buffer_threshold, HeapConfig, HeapId, HeapSet};
use crate::store::NodeHandle;

#[derive(Clone, Copy, Debug)]
pub struct DiffParams {
    pub ops: usize,
    pub max_heaps: usize,
    /// Upper limit on live nodes over all heaps.
    pub size_cap: usize,
    /// Keys come from `0..key_range`; small ranges force duplicates.
    pub key_range: i64,
    /// Run the full structural check after every operation.
    pub deep: bool,
}

impl Default for DiffParams {
    fn default() -> Self {
        Self { ops: 10_000, max_heaps: 8, size_cap: 2_000, key_range: 200, deep: false }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DiffStats {
    pub ops: usize,
    pub delete_mins: usize,
    pub decrease_keys: usize,
    pub deletes: usize,
    pub melds: usize,
    pub max_buffer: usize,
}

struct Live {
    id: HeapId,
    nodes: Vec<NodeHandle>,
    oracle: OracleQueue<i64>,
}

/// Drives random insert / delete-min / find-min / decrease-key / delete /
/// meld / make-heap operations over up to `max_heaps` heaps of `config`
/// and compares every answer with the oracle. Also checks the buffer bound
/// after every operation.
pub fn differential_check(config: HeapConfig, p: DiffParams, rng: &mut impl Rng) -> Result<DiffStats, String> {
    let mut set: HeapSet<i64> = HeapSet::new();
    let mut heaps: Vec<Live> = Vec::new();
    let mut stats = DiffStats::default();
    let new_heap = |set: &mut HeapSet<i64>| -> Result<Live, String> {
        Ok(Live {
            id: set.make_heap(config).map_err(|e| e.to_string())?,
            nodes: Vec::new(),
            oracle: OracleQueue::new(),
        })
    };
    heaps.push(new_heap(&mut set)?);

    for step in 0..p.ops {
        let total: usize = heaps.iter().map(|h| h.nodes.len()).sum();
        let hi = rng.random_range(0..heaps.len());
        let r = rng.random_range(0..100);
        let ctx = |what: &str| format!("step {step} ({what}) on {}", config.kind);
        let touched;
        if r < 40 && total < p.size_cap {
            let key = rng.random_range(0..p.key_range);
            let live = &mut heaps[hi];
            let x = set.insert(live.id, key).map_err(|e| format!("{}: {e}", ctx("insert")))?;
            live.nodes.push(x);
            live.oracle.insert(x.id(), key);
            touched = hi;
        } else if r < 60 {
            let live = &mut heaps[hi];
            match set.delete_min(live.id) {
                Ok((x, key)) => {
                    stats.delete_mins += 1;
                    if Some(&key) != live.oracle.min_key() {
                        return Err(format!(
                            "{}: got {key}, oracle min {:?}",
                            ctx("delete-min"),
                            live.oracle.min_key()
                        ));
                    }
                    if live.oracle.remove(x.id()) != Some(key) {
                        return Err(format!("{}: returned node unknown to the oracle", ctx("delete-min")));
                    }
                    let pos = live.nodes.iter().position(|&y| y == x).unwrap();
                    live.nodes.swap_remove(pos);
                }
                Err(e) if live.oracle.is_empty() => {
                    let _ = e;
                }
                Err(e) => return Err(format!("{}: {e}", ctx("delete-min"))),
            }
            touched = hi;
        } else if r < 75 && !heaps[hi].nodes.is_empty() {
            let live = &mut heaps[hi];
            let x = live.nodes[rng.random_range(0..live.nodes.len())];
            let old = *set.key(x).ok_or_else(|| ctx("decrease-key on a dead node"))?;
            let key = old - rng.random_range(0..=p.key_range / 4);
            set.decrease_key(live.id, x, key).map_err(|e| format!("{}: {e}", ctx("decrease-key")))?;
            live.oracle.decrease_key(x.id(), key);
            stats.decrease_keys += 1;
            touched = hi;
        } else if r < 85 && !heaps[hi].nodes.is_empty() {
            let live = &mut heaps[hi];
            let pos = rng.random_range(0..live.nodes.len());
            let x = live.nodes.swap_remove(pos);
            let key = set.delete(live.id, x).map_err(|e| format!("{}: {e}", ctx("delete")))?;
            if live.oracle.remove(x.id()) != Some(key) {
                return Err(format!("{}: key {key} does not match the oracle", ctx("delete")));
            }
            stats.deletes += 1;
            touched = hi;
        } else if r < 90 && heaps.len() >= 2 {
            let mut other = rng.random_range(0..heaps.len() - 1);
            if other >= hi {
                other += 1;
            }
            let gone = heaps.remove(other);
            let hi = if other < hi { hi - 1 } else { hi };
            set.meld(heaps[hi].id, gone.id).map_err(|e| format!("{}: {e}", ctx("meld")))?;
            heaps[hi].nodes.extend(gone.nodes);
            heaps[hi].oracle.meld(gone.oracle);
            stats.melds += 1;
            touched = hi;
        } else if r < 93 && heaps.len() < p.max_heaps {
            heaps.push(new_heap(&mut set)?);
            touched = heaps.len() - 1;
        } else {
            touched = hi;
        }

        let live = &heaps[touched];
        let got = set.find_min(live.id).map_err(|e| e.to_string())?.map(|x| *set.key(x).unwrap());
        if got.as_ref() != live.oracle.min_key() {
            return Err(format!("{}: find-min {got:?}, oracle {:?}", ctx("find-min"), live.oracle.min_key()));
        }
        let n = set.len(live.id).map_err(|e| e.to_string())?;
        if n != live.oracle.len() {
            return Err(format!("{}: size {n}, oracle {}", ctx("size"), live.oracle.len()));
        }
        let b = set.buffer_len(live.id).map_err(|e| e.to_string())?;
        if b >= buffer_threshold(n) {
            return Err(format!("{}: buffer {b} with n = {n}", ctx("buffer bound")));
        }
        stats.max_buffer = stats.max_buffer.max(b);
        if p.deep {
            set.check_invariants(live.id).map_err(|e| format!("{}: {e}", ctx("invariants")))?;
        }
        stats.ops += 1;
    }
    // drain everything: the full delete-min sequences must agree
    for live in &mut heaps {
        while let Some(&want) = live.oracle.min_key() {
            let (x, key) = set.delete_min(live.id).map_err(|e| e.to_string())?;
            if key != want {
                return Err(format!("drain on {}: got {key}, oracle {want}", config.kind));
            }
            live.oracle.remove(x.id());
        }
        if !set.is_empty(live.id).map_err(|e| e.to_string())? {
            return Err("heap not empty after draining".into());
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::{DecreaseKeyPolicy, DeletePolicy, HeapKind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_configs_agree_with_the_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = DiffParams { ops: 1500, size_cap: 300, deep: true, ..Default::default() };
        for kind in HeapKind::ALL {
            for dk in [DecreaseKeyPolicy::Simple, DecreaseKeyPolicy::Buffered] {
                if kind.is_pairing() && dk == DecreaseKeyPolicy::Buffered {
                    continue;
                }
                for del in [DeletePolicy::ViaDecreaseKey, DeletePolicy::EagerLinkChildren, DeletePolicy::LazySplice] {
                    let cfg = HeapConfig::new(kind).with_decrease_key(dk).with_delete(del);
                    differential_check(cfg, p, &mut rng).unwrap();
                }
            }
        }
    }
}
