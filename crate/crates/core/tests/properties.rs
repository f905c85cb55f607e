use proptest::prelude::*;
use smooth_heap::{
    DecreaseKeyPolicy, DeletePolicy, HeapConfig, HeapKind, HeapSet, NodeHandle, NodeStore, PairingMode, Side, TieBreak,
};

#[derive(Clone, Debug)]
enum Op {
    Insert(i32),
    DeleteMin,
    DecreaseKey(usize, i32),
    Delete(usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        4 => (0..50i32).prop_map(Op::Insert),
        2 => Just(Op::DeleteMin),
        2 => (any::<usize>(), 0..20i32).prop_map(|(i, d)| Op::DecreaseKey(i, d)),
        1 => any::<usize>().prop_map(Op::Delete),
    ]
}

fn config() -> impl Strategy<Value = HeapConfig> {
    let kind = prop_oneof![
        Just(HeapKind::Smooth),
        Just(HeapKind::Slim),
        Just(HeapKind::Pairing(PairingMode::Classic)),
        Just(HeapKind::Pairing(PairingMode::MultiTree)),
        Just(HeapKind::Pairing(PairingMode::Pure)),
    ];
    let dk = prop_oneof![Just(DecreaseKeyPolicy::Simple), Just(DecreaseKeyPolicy::Buffered)];
    let del = prop_oneof![
        Just(DeletePolicy::ViaDecreaseKey),
        Just(DeletePolicy::EagerLinkChildren),
        Just(DeletePolicy::LazySplice)
    ];
    let tie = prop_oneof![Just(TieBreak::Positional), Just(TieBreak::NodeId)];
    (kind, dk, del, tie).prop_map(|(kind, dk, del, tie)| {
        let dk = if kind.is_pairing() { DecreaseKeyPolicy::Simple } else { dk };
        HeapConfig::new(kind).with_decrease_key(dk).with_delete(del).with_tie_break(tie)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Structure stays well formed and heap ordered, and the heap behaves as
    /// a multiset under every operation.
    #[test]
    fn behaves_like_a_multiset(cfg in config(), ops in prop::collection::vec(op(), 1..200)) {
        let mut set = HeapSet::new();
        let h = set.make_heap(cfg).unwrap();
        let mut model: Vec<(NodeHandle, i32)> = Vec::new();
        for op in ops {
            match op {
                Op::Insert(k) => model.push((set.insert(h, k).unwrap(), k)),
                Op::DeleteMin => match set.delete_min(h) {
                    Ok((x, k)) => {
                        let min = model.iter().map(|e| e.1).min().unwrap();
                        prop_assert_eq!(k, min);
                        let i = model.iter().position(|e| e.0 == x).unwrap();
                        prop_assert_eq!(model.swap_remove(i).1, k);
                    }
                    Err(_) => prop_assert!(model.is_empty()),
                },
                Op::DecreaseKey(i, d) if !model.is_empty() => {
                    let i = i % model.len();
                    let k = model[i].1 - d;
                    set.decrease_key(h, model[i].0, k).unwrap();
                    model[i].1 = k;
                }
                Op::Delete(i) if !model.is_empty() => {
                    let (x, k) = model.swap_remove(i % model.len());
                    prop_assert_eq!(set.delete(h, x).unwrap(), k);
                    prop_assert!(set.key(x).is_none());
                }
                _ => {}
            }
            prop_assert_eq!(set.len(h).unwrap(), model.len());
            if let Err(e) = set.check_invariants(h) {
                return Err(TestCaseError::fail(e));
            }
            let min = set.find_min(h).unwrap().map(|x| *set.key(x).unwrap());
            prop_assert_eq!(min, model.iter().map(|e| e.1).min());
        }
        let mut rest: Vec<i32> = model.iter().map(|e| e.1).collect();
        rest.sort();
        let mut drained = Vec::new();
        while let Ok((_, k)) = set.delete_min(h) {
            drained.push(k);
        }
        prop_assert_eq!(drained, rest);
    }

    /// Melding preserves the union of the two multisets.
    #[test]
    fn meld_is_union(cfg in config(), a in prop::collection::vec(0..30i32, 0..40), b in prop::collection::vec(0..30i32, 0..40)) {
        let mut set = HeapSet::new();
        let h1 = set.make_heap(cfg).unwrap();
        let h2 = set.make_heap(cfg).unwrap();
        for &k in &a { set.insert(h1, k).unwrap(); }
        for &k in &b { set.insert(h2, k).unwrap(); }
        set.meld(h1, h2).unwrap();
        prop_assert!(set.len(h2).is_err());
        let mut all: Vec<i32> = a.iter().chain(&b).copied().collect();
        all.sort();
        let mut drained = Vec::new();
        while let Ok((_, k)) = set.delete_min(h1) {
            drained.push(k);
        }
        prop_assert_eq!(drained, all);
    }

    /// Stable links keep the left-to-right order of nodes: reading the forest
    /// with left children before their parent and right children after it
    /// gives the input order, minus deleted nodes, after every delete-min.
    #[test]
    fn stable_linking_preserves_order(keys in prop::collection::vec(0..20u32, 1..120)) {
        let mut set = HeapSet::new();
        let h = set.make_heap(HeapConfig::smooth()).unwrap();
        let handles = set.load_unsorted(h, keys.iter().copied()).unwrap();
        set.delete_min(h).unwrap();
        while !set.is_empty(h).unwrap() {
            let expect: Vec<NodeHandle> = handles.iter().copied().filter(|&x| set.key(x).is_some()).collect();
            let roots = set.roots(h).unwrap();
            prop_assert_eq!(roots.len(), 1);
            let mut seen = Vec::new();
            in_order(set.store(), roots[0], &mut seen);
            prop_assert_eq!(seen, expect);
            set.delete_min(h).unwrap();
        }
    }
}

fn in_order(s: &NodeStore<u32>, v: NodeHandle, out: &mut Vec<NodeHandle>) {
    let kids = s.children(v);
    for &c in kids.iter().filter(|&&c| s.side(c) == Some(Side::Left)) {
        in_order(s, c, out);
    }
    out.push(v);
    for &c in kids.iter().filter(|&&c| s.side(c) == Some(Side::Right)) {
        in_order(s, c, out);
    }
}
