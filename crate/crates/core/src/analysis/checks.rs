//! Structural checks on link traces: the two-links-per-winner property of
//! leftmost locally maximum linking, and comparison against a brute-force treap.

use std::collections::HashMap;

use crate::store::{LinkDir, LinkEvent, NodeHandle, NodeStore};

/// True iff no node wins more than one left link and one right link.
pub fn check_lemma1(round: &[LinkEvent]) -> bool {
    let mut wins: HashMap<NodeHandle, (u32, u32)> = HashMap::new();
    round.iter().all(|e| {
        let w = wins.entry(e.winner).or_default();
        match e.dir {
            LinkDir::Left => w.0 += 1,
            LinkDir::Right => w.1 += 1,
        }
        w.0 <= 1 && w.1 <= 1
    })
}

/// Binary tree over positions `0..n` of an input list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTree {
    pub root: Option<usize>,
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl BinaryTree {
    fn empty(n: usize) -> Self {
        Self { root: None, left: vec![None; n], right: vec![None; n] }
    }
}

/// The treap over list order and key order: the root of every sublist is
/// its minimum, equal keys resolved in favour of the rightmost position.
pub fn brute_force_treap<K: Ord>(keys: &[K]) -> BinaryTree {
    let mut t = BinaryTree::empty(keys.len());
    // (lo, hi, parent, is_left_child)
    let mut work = vec![(0usize, keys.len(), None::<usize>, false)];
    while let Some((lo, hi, parent, is_left)) = work.pop() {
        if lo >= hi {
            continue;
        }
        let m = (lo..hi).fold(lo, |best, i| if keys[i] <= keys[best] { i } else { best });
        match parent {
            None => t.root = Some(m),
            Some(p) if is_left => t.left[p] = Some(m),
            Some(p) => t.right[p] = Some(m),
        }
        work.push((lo, m, Some(m), true));
        work.push((m + 1, hi, Some(m), false));
    }
    t
}

/// Rebuilds the binary tree recorded by one round of links over `input`.
/// `None` if the trace mentions foreign nodes or gives a node two children
/// on one side.
pub fn treap_from_trace(input: &[NodeHandle], round: &[LinkEvent]) -> Option<BinaryTree> {
    let pos: HashMap<NodeHandle, usize> = input.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let mut t = BinaryTree::empty(input.len());
    let mut has_parent = vec![false; input.len()];
    for e in round {
        let (w, l) = (*pos.get(&e.winner)?, *pos.get(&e.loser)?);
        let slot = match e.dir {
            LinkDir::Left => &mut t.left[w],
            LinkDir::Right => &mut t.right[w],
        };
        if slot.replace(l).is_some() || has_parent[l] {
            return None;
        }
        has_parent[l] = true;
    }
    let roots: Vec<usize> = (0..input.len()).filter(|&i| !has_parent[i]).collect();
    if roots.len() != 1 {
        return None;
    }
    t.root = Some(roots[0]);
    Some(t)
}

/// True iff the links of `round` arranged `input` into the brute-force treap
/// of its keys.
pub fn check_treap_shape<K: Ord>(s: &NodeStore<K>, input: &[NodeHandle], round: &[LinkEvent]) -> bool {
    let Some(keys) = input.iter().map(|&h| s.key(h)).collect::<Option<Vec<&K>>>() else {
        return false;
    };
    treap_from_trace(input, round).is_some_and(|t| t == brute_force_treap(&keys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::treapify;
    use crate::store::{Linking, TieBreak};

    fn run(keys: &[i64], linking: Linking) -> (NodeStore<i64>, Vec<NodeHandle>, Vec<LinkEvent>) {
        let mut s = NodeStore::new();
        let hs: Vec<_> = keys.iter().map(|&k| s.alloc(k)).collect();
        s.start_trace();
        treapify(&mut s, &hs, linking, TieBreak::Positional);
        let round = s.take_trace().unwrap().rounds.concat();
        (s, hs, round)
    }

    #[test]
    fn brute_force_small() {
        let t = brute_force_treap(&[3, 1, 2]);
        assert_eq!(t.root, Some(1));
        assert_eq!(t.left[1], Some(0));
        assert_eq!(t.right[1], Some(2));
        // ties: the rightmost equal key is the root
        assert_eq!(brute_force_treap(&[4, 4]).root, Some(1));
    }

    #[test]
    fn lemma1_on_examples() {
        assert!(check_lemma1(&[]));
        let (_, _, round) = run(&[3, 1, 2], Linking::OneSided);
        assert!(check_lemma1(&round));
        let (_, _, round) = run(&[2, 5, 4, 6, 1, 7, 3, 8], Linking::Stable);
        assert!(check_lemma1(&round));
    }

    #[test]
    fn lemma1_detects_double_wins() {
        let mut s = NodeStore::new();
        let [a, b, c] = [1i64, 2, 3].map(|k| s.alloc(k));
        let ev = |w, l| LinkEvent { winner: w, loser: l, dir: LinkDir::Right };
        assert!(!check_lemma1(&[ev(a, b), ev(a, c)]));
    }

    #[test]
    fn treap_shape_examples() {
        for keys in [&[3i64, 1, 2][..], &[2, 5, 4, 6, 1, 7, 3, 8], &[2, 2, 1, 2, 1]] {
            let (s, hs, round) = run(keys, Linking::Stable);
            assert!(check_treap_shape(&s, &hs, &round), "{keys:?}");
        }
    }
}
