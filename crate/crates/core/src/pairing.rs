//! Pairing-heap restructuring: two-pass combining and the single pairing
//! pass of the pure (forest) variant. All links are one-sided.

use crate::store::{Ix, Linking, NodeHandle, NodeStore, TieBreak};

/// Pairing heap flavours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum PairingMode {
    /// One tree at all times; insert, meld and decrease-key link eagerly.
    Classic,
    /// Lazy insert/decrease-key append roots; delete-min two-pass combines the
    /// whole root list.
    MultiTree,
    /// Forest; delete-min does one left-to-right pairing pass.
    Pure,
}

/// Pairs adjacent roots left to right, then links the survivors right to
/// left. `k - 1` links and `k - 1` comparisons for `k` roots.
pub(crate) fn two_pass_ix<K: Ord>(s: &mut NodeStore<K>, roots: &[Ix], tie: TieBreak, stamp: bool) -> Ix {
    assert!(!roots.is_empty(), "two-pass combine of an empty list");
    s.begin_round();
    let mut winners: Vec<Ix> = roots
        .chunks(2)
        .map(|p| match *p {
            [a, b] => s.compare_and_attach(a, b, Linking::OneSided, tie, stamp),
            [a] => a,
            _ => unreachable!(),
        })
        .collect();
    let mut acc = winners.pop().unwrap();
    while let Some(left) = winners.pop() {
        acc = s.compare_and_attach(left, acc, Linking::OneSided, tie, stamp);
    }
    acc
}

/// One pairing pass; returns the surviving roots in order and the position
/// of a minimum among them. Min-location comparisons are charged to
/// `min_tracking`.
pub(crate) fn pairing_pass_ix<K: Ord>(
    s: &mut NodeStore<K>,
    roots: &[Ix],
    tie: TieBreak,
    stamp: bool,
) -> (Vec<Ix>, usize) {
    assert!(!roots.is_empty(), "pairing pass over an empty list");
    s.begin_round();
    let mut out = Vec::with_capacity(roots.len().div_ceil(2));
    let mut best = 0;
    for p in roots.chunks(2) {
        let w = match *p {
            [a, b] => s.compare_and_attach(a, b, Linking::OneSided, tie, stamp),
            [a] => a,
            _ => unreachable!(),
        };
        if let Some(&m) = out.get(best) {
            s.counters.min_tracking += 1;
            if s.prio(w) < s.prio(m) {
                best = out.len();
            }
        }
        out.push(w);
    }
    (out, best)
}

/// Two-pass combine of detached roots given in list order; returns the survivor.
pub fn two_pass_combine<K: Ord>(s: &mut NodeStore<K>, roots: &[NodeHandle], tie: TieBreak) -> NodeHandle {
    let ixs: Vec<Ix> = roots.iter().map(|&h| s.ix(h)).collect();
    let w = two_pass_ix(s, &ixs, tie, true);
    s.handle(w)
}

/// Single pairing pass over detached roots; returns survivors in order and
/// the index of a minimum survivor.
pub fn pairing_pass<K: Ord>(s: &mut NodeStore<K>, roots: &[NodeHandle], tie: TieBreak) -> (Vec<NodeHandle>, usize) {
    let ixs: Vec<Ix> = roots.iter().map(|&h| s.ix(h)).collect();
    let (out, best) = pairing_pass_ix(s, &ixs, tie, true);
    (out.into_iter().map(|w| s.handle(w)).collect(), best)
}
