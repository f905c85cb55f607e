//! The potential function of the amortized analysis.
//!
//! A root `x` holds `2 + 2 lg size(x)`. A child holds `lg mass(x)` unless it
//! is one of the two children its parent gained most recently (slim heaps)
//! or the leftmost LEFT / rightmost RIGHT child (smooth heaps), in which case
//! it holds nothing. `mass(x)` is the size of `x` plus the sizes of the
//! siblings linked to the parent before `x`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{HeapError, Result};
use crate::heap::{HeapId, HeapKind, HeapSet};
use crate::store::{Ix, NodeHandle, NodeStore, Place, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PotentialMode {
    Slim,
    Smooth,
}

impl PotentialMode {
    pub fn of(kind: HeapKind) -> Option<Self> {
        match kind {
            HeapKind::Slim => Some(PotentialMode::Slim),
            HeapKind::Smooth => Some(PotentialMode::Smooth),
            HeapKind::Pairing(_) => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PotentialSnapshot {
    pub total: f64,
    pub per_node: BTreeMap<NodeHandle, f64>,
    pub mode: PotentialMode,
}

/// Number of descendants of `x`, itself included.
pub fn size<K>(s: &NodeStore<K>, x: NodeHandle) -> usize {
    let mut n = 0;
    let mut stack = vec![s.ix(x)];
    while let Some(v) = stack.pop() {
        n += 1;
        stack.extend(s.child_ixs(v));
    }
    n
}

/// Siblings of child `c` (itself included) in link order, latest first.
fn link_order<K>(s: &NodeStore<K>, kids: &[Ix], mode: PotentialMode) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..kids.len()).collect();
    if mode == PotentialMode::Smooth {
        let mut stamps = Vec::with_capacity(kids.len());
        for &c in kids {
            stamps.push(s.stamp_of(c).ok_or(HeapError::AuditModeRequired)?);
        }
        order.sort_by(|&a, &b| stamps[b].cmp(&stamps[a]).then(a.cmp(&b)));
    }
    Ok(order)
}

/// `mass(x)` of a child node.
pub fn mass<K>(s: &NodeStore<K>, x: NodeHandle, mode: PotentialMode) -> Result<usize> {
    let ix = s.ix(x);
    if s.place(ix) != Place::Child {
        return Err(HeapError::UnsupportedOp("mass of a non-child"));
    }
    let kids = s.child_ixs(s.parent_ix(ix));
    let order = link_order(s, &kids, mode)?;
    let at = order.iter().position(|&i| kids[i] == ix).unwrap();
    Ok(order[at..].iter().map(|&i| size(s, s.handle(kids[i]))).sum())
}

/// Visits every node below `roots` and reports its potential.
fn walk<K>(s: &NodeStore<K>, roots: &[Ix], mode: PotentialMode, mut sink: impl FnMut(Ix, f64)) -> Result<()> {
    let mut order = Vec::new();
    let mut stack: Vec<Ix> = roots.to_vec();
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(s.child_ixs(v));
    }
    let mut sizes = vec![0u32; s.len_slots()];
    for &v in order.iter().rev() {
        sizes[v as usize] = 1 + s.child_ixs(v).iter().map(|&c| sizes[c as usize]).sum::<u32>();
    }
    for &r in roots {
        sink(r, 2.0 + 2.0 * f64::from(sizes[r as usize]).log2());
    }
    for &v in &order {
        let kids = s.child_ixs(v);
        if kids.is_empty() {
            continue;
        }
        let lo = link_order(s, &kids, mode)?;
        let mut suffix = 0u32;
        let mut mass = vec![0u32; kids.len()];
        for &i in lo.iter().rev() {
            suffix += sizes[kids[i] as usize];
            mass[i] = suffix;
        }
        let zero = |i: usize| match mode {
            PotentialMode::Slim => i < 2,
            PotentialMode::Smooth => {
                (i == 0 && s.side_of(kids[i]) == Side::Left)
                    || (i == kids.len() - 1 && s.side_of(kids[i]) == Side::Right)
            }
        };
        for (i, &c) in kids.iter().enumerate() {
            sink(c, if zero(i) { 0.0 } else { f64::from(mass[i]).log2() });
        }
    }
    Ok(())
}

fn heap_tops<K: Ord>(set: &HeapSet<K>, h: HeapId) -> Result<Vec<Ix>> {
    let s = set.store();
    let mut tops: Vec<Ix> = set.roots(h)?.into_iter().map(|r| s.ix(r)).collect();
    tops.extend(set.buffer(h)?.into_iter().map(|b| s.ix(b)));
    Ok(tops)
}

/// Total potential of one heap.
pub fn heap_potential<K: Ord>(set: &HeapSet<K>, h: HeapId, mode: PotentialMode) -> Result<f64> {
    let mut total = 0.0;
    walk(set.store(), &heap_tops(set, h)?, mode, |_, p| total += p)?;
    Ok(total)
}

/// Potential of a collection of heaps, with the share of every node.
pub fn potential<K: Ord>(set: &HeapSet<K>, heaps: &[HeapId], mode: PotentialMode) -> Result<PotentialSnapshot> {
    let s = set.store();
    let mut per_node = BTreeMap::new();
    let mut total = 0.0;
    for &h in heaps {
        walk(s, &heap_tops(set, h)?, mode, |x, p| {
            total += p;
            per_node.insert(s.handle(x), p);
        })?;
    }
    Ok(PotentialSnapshot { total, per_node, mode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::HeapConfig;

    #[test]
    fn sizes() {
        let mut s = NodeStore::new();
        let [a, b, c, d, e, f] = [0i64, 1, 2, 3, 4, 5].map(|k| s.alloc(k));
        assert_eq!(size(&s, a), 1);
        s.add_child(a, b, true, Side::Left);
        s.add_child(b, c, true, Side::Left);
        assert_eq!(size(&s, a), 3);
        s.add_child(d, e, true, Side::Left);
        s.add_child(f, d, false, Side::Right);
        s.add_child(f, a, false, Side::Right);
        assert_eq!(size(&s, f), 6);
    }

    #[test]
    fn slim_mass_follows_list_order() {
        let mut s = NodeStore::new();
        let p = s.alloc(0i64);
        let [c1, c2, c3, g1, g2, g3] = [1i64, 2, 3, 4, 5, 6].map(|k| s.alloc(k));
        s.add_child(c1, g1, true, Side::Left);
        s.add_child(c3, g2, true, Side::Left);
        s.add_child(c3, g3, true, Side::Left);
        for c in [c1, c2, c3] {
            s.add_child(p, c, false, Side::Right);
        }
        assert_eq!(mass(&s, c1, PotentialMode::Slim).unwrap(), 6);
        assert_eq!(mass(&s, c2, PotentialMode::Slim).unwrap(), 4);
        assert_eq!(mass(&s, c3, PotentialMode::Slim).unwrap(), 3);
    }

    #[test]
    fn smooth_mass_follows_stamps() {
        let mut s = NodeStore::new();
        let p = s.alloc(0i64);
        let [l1, l2, r1] = [1i64, 2, 3].map(|k| s.alloc(k));
        // link order (latest first) L1, R1, L2: link L2 first, then R1, then L1
        s.add_child(p, l2, true, Side::Left);
        s.add_child(p, r1, false, Side::Right);
        s.add_child(p, l1, true, Side::Left);
        assert_eq!(s.children(p), vec![l1, l2, r1]);
        assert_eq!(mass(&s, l1, PotentialMode::Smooth).unwrap(), 3);
        assert_eq!(mass(&s, r1, PotentialMode::Smooth).unwrap(), 2);
        assert_eq!(mass(&s, l2, PotentialMode::Smooth).unwrap(), 1);
    }

    #[test]
    fn smooth_without_stamps_is_an_error() {
        let mut set = HeapSet::new();
        let h = set.make_heap(HeapConfig::smooth()).unwrap();
        set.load_unsorted(h, [3i64, 1, 2, 4]).unwrap();
        set.delete_min(h).unwrap();
        assert_eq!(heap_potential(&set, h, PotentialMode::Smooth), Err(HeapError::AuditModeRequired));
        assert!(heap_potential(&set, h, PotentialMode::Slim).is_ok());
    }

    #[test]
    fn snapshot_values() {
        let mut set = HeapSet::new();
        let h = set.make_heap(HeapConfig::slim().with_audit(true)).unwrap();
        assert_eq!(potential(&set, &[], PotentialMode::Slim).unwrap().total, 0.0);
        assert_eq!(heap_potential(&set, h, PotentialMode::Slim).unwrap(), 0.0);
        set.insert(h, 1).unwrap();
        assert_eq!(heap_potential(&set, h, PotentialMode::Slim).unwrap(), 2.0);
        set.delete_min(h).unwrap();
        set.load_unsorted(h, [0i64, 1, 2, 3]).unwrap();
        assert_eq!(heap_potential(&set, h, PotentialMode::Slim).unwrap(), 8.0);
        set.delete_min(h).unwrap();
        // root of size 3, two children each of size 1 in first/second place
        let snap = potential(&set, &[h], PotentialMode::Slim).unwrap();
        assert!((snap.total - (2.0 + 2.0 * 3f64.log2())).abs() < 1e-12);
        assert_eq!(snap.per_node.len(), 3);
    }
}
