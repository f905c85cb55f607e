//! Quick correctness sweep runnable from the command line.

use itertools::Itertools;
use smooth_heap::analysis::{check_lemma1, check_treap_shape, differential_check, DiffParams};
use smooth_heap::workloads::trial_rng;
use smooth_heap::{
    treapify, DecreaseKeyPolicy, DeletePolicy, HeapConfig, HeapKind, HeapSet, Linking, NodeStore, TieBreak,
};

pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, r: Result<String, String>) -> CheckResult {
    match r {
        Ok(detail) => CheckResult { name: name.into(), passed: true, detail },
        Err(detail) => CheckResult { name: name.into(), passed: false, detail },
    }
}

fn oracle_sweep(seed: u64) -> Result<String, String> {
    let mut rng = trial_rng(seed, 0);
    let p = DiffParams { ops: 5_000, size_cap: 500, ..Default::default() };
    let mut runs = 0;
    for kind in HeapKind::ALL {
        for dk in [DecreaseKeyPolicy::Simple, DecreaseKeyPolicy::Buffered] {
            if kind.is_pairing() && dk == DecreaseKeyPolicy::Buffered {
                continue;
            }
            for del in [DeletePolicy::ViaDecreaseKey, DeletePolicy::EagerLinkChildren, DeletePolicy::LazySplice] {
                differential_check(HeapConfig::new(kind).with_decrease_key(dk).with_delete(del), p, &mut rng)?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} configurations x {} operations", p.ops))
}

fn treap_sweep() -> Result<String, String> {
    let mut lists: Vec<Vec<u32>> = Vec::new();
    for n in 1..=8u32 {
        lists.extend((1..=n).permutations(n as usize));
    }
    for n in 1..=6 {
        lists.extend((0..n).map(|_| 1..=3u32).multi_cartesian_product());
    }
    for keys in &lists {
        for linking in [Linking::Stable, Linking::OneSided] {
            let mut s = NodeStore::new();
            let hs: Vec<_> = keys.iter().map(|&k| s.alloc(k)).collect();
            s.start_trace();
            treapify(&mut s, &hs, linking, TieBreak::Positional);
            let round = s.take_trace().unwrap().rounds.concat();
            if !check_treap_shape(&s, &hs, &round) {
                return Err(format!("{linking:?} treapify of {keys:?} is not the treap"));
            }
        }
    }
    Ok(format!("{} lists, both linking modes", lists.len()))
}

fn lemma1_sweep(seed: u64) -> Result<String, String> {
    let mut rng = trial_rng(seed, 1);
    let mut rounds = 0;
    for kind in [HeapKind::Smooth, HeapKind::Slim] {
        let mut set: HeapSet<u32> = HeapSet::new();
        let h = set.make_heap(HeapConfig::new(kind)).map_err(|e| e.to_string())?;
        set.start_trace();
        set.load_unsorted(h, smooth_heap::workloads::gen_uniform(2000, &mut rng).0).map_err(|e| e.to_string())?;
        while set.delete_min(h).is_ok() {}
        for round in set.take_trace().unwrap().rounds {
            if !check_lemma1(&round) {
                return Err(format!("{kind}: a root won two links on one side"));
            }
            rounds += 1;
        }
    }
    Ok(format!("{rounds} consolidations"))
}

pub fn run(seed: u64) -> Vec<CheckResult> {
    vec![
        check("oracle differential", oracle_sweep(seed)),
        check("treap shape (exhaustive)", treap_sweep()),
        check("two-link bound", lemma1_sweep(seed)),
    ]
}
