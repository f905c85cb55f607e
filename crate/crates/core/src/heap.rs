//! Smooth, slim and pairing heaps over a shared node store.
//!
//! A [`HeapSet`] owns one [`NodeStore`] and any number of heaps; meld moves
//! nodes between heaps of the same set without copying. The root list of
//! every heap is circular with the min-root first, so making a different
//! root the min-root is a rotation and needs no pointer changes.

use std::fmt;

use serde::Serialize;

use crate::analysis::Counters;
use crate::error::{HeapError, Result};
use crate::pairing::{pairing_pass_ix, two_pass_ix, PairingMode};
use crate::store::{Ix, KeyOrder, LinkDir, LinkTrace, Linking, NodeHandle, NodeStore, Place, Priority, Side, TieBreak};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HeapKind {
    Smooth,
    Slim,
    Pairing(PairingMode),
}

impl HeapKind {
    pub const ALL: [HeapKind; 5] = [
        HeapKind::Smooth,
        HeapKind::Slim,
        HeapKind::Pairing(PairingMode::Classic),
        HeapKind::Pairing(PairingMode::MultiTree),
        HeapKind::Pairing(PairingMode::Pure),
    ];

    pub fn linking(self) -> Linking {
        match self {
            HeapKind::Smooth => Linking::Stable,
            _ => Linking::OneSided,
        }
    }

    pub fn is_pairing(self) -> bool {
        matches!(self, HeapKind::Pairing(_))
    }

    pub fn name(self) -> &'static str {
        match self {
            HeapKind::Smooth => "smooth",
            HeapKind::Slim => "slim",
            HeapKind::Pairing(PairingMode::MultiTree) => "pairing",
            HeapKind::Pairing(PairingMode::Classic) => "pairing-classic",
            HeapKind::Pairing(PairingMode::Pure) => "pairing-pure",
        }
    }
}

impl fmt::Display for HeapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for HeapKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        HeapKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            format!("unknown heap `{s}` (expected smooth, slim, pairing, pairing-classic, pairing-pure)")
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecreaseKeyPolicy {
    /// Cut the node and add it to the root list.
    Simple,
    /// Elmasry's buffer: cut the node, hand its leftmost child its place, and
    /// park it in a buffer that is sorted and chain-linked once it holds
    /// `max(1, floor(lg n))` roots.
    Buffered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DeletePolicy {
    /// Decrease the key to minus infinity, then delete-min.
    ViaDecreaseKey,
    /// Link the node's children into one tree, which takes the node's place.
    EagerLinkChildren,
    /// Put the node's children in its place.
    LazySplice,
}

/// Where a lazily inserted root enters the root list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InsertPosition {
    /// First if smaller than the min-root, else second.
    AfterMin,
    /// End of the root list.
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeapConfig {
    pub kind: HeapKind,
    pub decrease_key: DecreaseKeyPolicy,
    pub delete: DeletePolicy,
    pub insert_position: InsertPosition,
    pub tie_break: TieBreak,
    /// Record link stamps so smooth-heap link order can be reconstructed.
    pub audit: bool,
}

impl HeapConfig {
    pub fn new(kind: HeapKind) -> Self {
        Self {
            kind,
            decrease_key: DecreaseKeyPolicy::Simple,
            delete: DeletePolicy::ViaDecreaseKey,
            insert_position: if kind.is_pairing() { InsertPosition::Last } else { InsertPosition::AfterMin },
            tie_break: TieBreak::Positional,
            audit: false,
        }
    }

    pub fn smooth() -> Self {
        Self::new(HeapKind::Smooth)
    }

    pub fn slim() -> Self {
        Self::new(HeapKind::Slim)
    }

    pub fn pairing(mode: PairingMode) -> Self {
        Self::new(HeapKind::Pairing(mode))
    }

    pub fn with_decrease_key(mut self, p: DecreaseKeyPolicy) -> Self {
        self.decrease_key = p;
        self
    }

    pub fn with_delete(mut self, p: DeletePolicy) -> Self {
        self.delete = p;
        self
    }

    pub fn with_insert_position(mut self, p: InsertPosition) -> Self {
        self.insert_position = p;
        self
    }

    pub fn with_tie_break(mut self, t: TieBreak) -> Self {
        self.tie_break = t;
        self
    }

    pub fn with_audit(mut self, on: bool) -> Self {
        self.audit = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind.is_pairing() && self.decrease_key == DecreaseKeyPolicy::Buffered {
            return Err(HeapError::InvalidConfig("buffered decrease-key needs a smooth or slim heap"));
        }
        Ok(())
    }
}

/// `max(1, floor(lg n))`, with `n = 0` read as 1.
pub fn buffer_threshold(n: usize) -> usize {
    let n = n.max(1);
    ((usize::BITS - 1 - n.leading_zeros()) as usize).max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HeapId(usize);

impl HeapId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for HeapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct HeapState {
    config: HeapConfig,
    min_root: Option<Ix>,
    len: usize,
    buffer: Vec<Ix>,
    buffer_min: Option<Ix>,
}

/// A collection of heaps sharing one node store.
#[derive(Clone, Debug)]
pub struct HeapSet<K> {
    store: NodeStore<K>,
    heaps: Vec<Option<HeapState>>,
}

impl<K: Ord> Default for HeapSet<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord> HeapSet<K> {
    pub fn new() -> Self {
        Self { store: NodeStore::new(), heaps: Vec::new() }
    }

    pub fn store(&self) -> &NodeStore<K> {
        &self.store
    }

    pub fn counters(&self) -> Counters {
        self.store.counters()
    }

    pub fn reset_counters(&mut self) {
        *self.store.counters_mut() = Counters::default();
    }

    pub fn start_trace(&mut self) {
        self.store.start_trace();
    }

    pub fn take_trace(&mut self) -> Option<LinkTrace> {
        self.store.take_trace()
    }

    pub fn make_heap(&mut self, config: HeapConfig) -> Result<HeapId> {
        config.validate()?;
        self.heaps.push(Some(HeapState { config, min_root: None, len: 0, buffer: Vec::new(), buffer_min: None }));
        Ok(HeapId(self.heaps.len() - 1))
    }

    /// Heaps that have not been consumed by a meld.
    pub fn live_heaps(&self) -> Vec<HeapId> {
        (0..self.heaps.len()).filter(|&i| self.heaps[i].is_some()).map(HeapId).collect()
    }

    fn state(&self, h: HeapId) -> Result<&HeapState> {
        self.heaps.get(h.0).and_then(Option::as_ref).ok_or(HeapError::UnknownHeap(h.0))
    }

    fn take(&mut self, h: HeapId) -> Result<HeapState> {
        self.heaps.get_mut(h.0).and_then(Option::take).ok_or(HeapError::UnknownHeap(h.0))
    }

    fn put(&mut self, h: HeapId, st: HeapState) {
        self.heaps[h.0] = Some(st);
    }

    pub fn config(&self, h: HeapId) -> Result<HeapConfig> {
        Ok(self.state(h)?.config)
    }

    /// Number of nodes, buffered ones included.
    pub fn len(&self, h: HeapId) -> Result<usize> {
        Ok(self.state(h)?.len)
    }

    pub fn is_empty(&self, h: HeapId) -> Result<bool> {
        Ok(self.state(h)?.len == 0)
    }

    pub fn key(&self, x: NodeHandle) -> Option<&K> {
        self.store.key(x)
    }

    /// Root list, min-root first.
    pub fn roots(&self, h: HeapId) -> Result<Vec<NodeHandle>> {
        let st = self.state(h)?;
        Ok(st
            .min_root
            .map(|m| self.store.ring(m).into_iter().map(|r| self.store.handle(r)).collect())
            .unwrap_or_default())
    }

    /// Buffered roots, in buffer order.
    pub fn buffer(&self, h: HeapId) -> Result<Vec<NodeHandle>> {
        Ok(self.state(h)?.buffer.iter().map(|&b| self.store.handle(b)).collect())
    }

    pub fn buffer_len(&self, h: HeapId) -> Result<usize> {
        Ok(self.state(h)?.buffer.len())
    }

    fn find_min_ix(&self, st: &HeapState) -> Option<Ix> {
        match (st.min_root, st.buffer_min) {
            (Some(m), Some(b)) if self.store.prio(b) < self.store.prio(m) => Some(b),
            (Some(m), _) => Some(m),
            (None, b) => b,
        }
    }

    /// A node of minimum key. Between equal root-list and buffer minima the
    /// root-list node is returned. Charges no comparison.
    pub fn find_min(&self, h: HeapId) -> Result<Option<NodeHandle>> {
        let st = self.state(h)?;
        Ok(self.find_min_ix(st).map(|x| self.store.handle(x)))
    }

    pub fn insert(&mut self, h: HeapId, key: K) -> Result<NodeHandle> {
        let mut st = self.take(h)?;
        let x = self.store.alloc_key(Priority::Key(key));
        let pos = st.config.insert_position;
        self.add_root(&mut st, x, pos);
        st.len += 1;
        self.put(h, st);
        Ok(self.store.handle(x))
    }

    /// Puts detached `x` into the root list (or links it with the root of a
    /// classic pairing heap), keeping the min-root current.
    fn add_root(&mut self, st: &mut HeapState, x: Ix, pos: InsertPosition) {
        let Some(m) = st.min_root else {
            self.store.make_ring(&[x]);
            st.min_root = Some(x);
            return;
        };
        if st.config.kind == HeapKind::Pairing(PairingMode::Classic) {
            self.store.set_place(x, Place::Detached);
            let w = self.store.compare_and_attach(m, x, Linking::OneSided, st.config.tie_break, st.config.audit);
            self.store.make_ring(&[w]);
            st.min_root = Some(w);
            return;
        }
        match pos {
            InsertPosition::AfterMin => {
                if self.store.key_less(x, m) {
                    self.store.ring_insert_before(m, x);
                    st.min_root = Some(x);
                } else {
                    self.store.ring_insert_after(m, x);
                }
            }
            InsertPosition::Last => {
                self.store.ring_insert_before(m, x);
                if self.store.key_less(x, m) {
                    st.min_root = Some(x);
                }
            }
        }
    }

    /// Moves every node of `h2` into `h`; `h2` is consumed. With buffered
    /// decrease-key, the buffer of the smaller heap (by node count, buffered
    /// nodes included; `h2` on a tie) is emptied first and the other buffer
    /// survives in `h`.
    pub fn meld(&mut self, h: HeapId, h2: HeapId) -> Result<()> {
        if h == h2 {
            return Err(HeapError::SameHeap);
        }
        if self.state(h)?.config != self.state(h2)?.config {
            return Err(HeapError::IncompatibleHeaps);
        }
        let mut a = self.take(h)?;
        let mut b = self.take(h2)?;
        if a.config.decrease_key == DecreaseKeyPolicy::Buffered {
            if b.len <= a.len {
                self.empty_buffer(&mut b);
            } else {
                self.empty_buffer(&mut a);
                a.buffer = std::mem::take(&mut b.buffer);
                a.buffer_min = b.buffer_min.take();
            }
        }
        match (a.min_root, b.min_root) {
            (_, None) => {}
            (None, Some(y)) => a.min_root = Some(y),
            (Some(x), Some(y)) => {
                if a.config.kind == HeapKind::Pairing(PairingMode::Classic) {
                    self.store.set_place(x, Place::Detached);
                    self.store.set_place(y, Place::Detached);
                    let w = self.store.compare_and_attach(x, y, Linking::OneSided, a.config.tie_break, a.config.audit);
                    self.store.make_ring(&[w]);
                    a.min_root = Some(w);
                } else {
                    self.store.ring_concat(x, y);
                    if self.store.key_less(y, x) {
                        a.min_root = Some(y);
                    }
                }
            }
        }
        a.len += b.len;
        self.put(h, a);
        Ok(())
    }

    /// Sorting mode: makes one root per key with no links. The min-root goes
    /// first and the others keep their input order, so the first delete-min
    /// links them exactly as given. Locating the min is charged to
    /// `min_tracking`, not to comparisons.
    pub fn load_unsorted(&mut self, h: HeapId, keys: impl IntoIterator<Item = K>) -> Result<Vec<NodeHandle>> {
        if self.state(h)?.len != 0 {
            return Err(HeapError::NotEmpty);
        }
        let mut st = self.take(h)?;
        let ixs: Vec<Ix> = keys.into_iter().map(|k| self.store.alloc_key(Priority::Key(k))).collect();
        let handles = ixs.iter().map(|&x| self.store.handle(x)).collect();
        if !ixs.is_empty() {
            st.len = ixs.len();
            let mut m = ixs[0];
            for &x in &ixs[1..] {
                self.store.counters.min_tracking += 1;
                if self.store.prio(x) <= self.store.prio(m) {
                    m = x;
                }
            }
            let order: Vec<Ix> = std::iter::once(m).chain(ixs.iter().copied().filter(|&x| x != m)).collect();
            self.store.make_ring(&order);
            st.min_root = Some(m);
        }
        self.put(h, st);
        Ok(handles)
    }

    /// Restructures the root list starting at `first` per the heap kind.
    fn consolidate(&mut self, st: &mut HeapState, first: Ix) {
        let roots = self.store.ring(first);
        let cfg = st.config;
        match cfg.kind {
            HeapKind::Smooth | HeapKind::Slim => {
                let w = treapify_ix(&mut self.store, &roots, cfg.kind.linking(), cfg.tie_break, cfg.audit);
                self.store.make_ring(&[w]);
                st.min_root = Some(w);
            }
            HeapKind::Pairing(PairingMode::Classic | PairingMode::MultiTree) => {
                let w = two_pass_ix(&mut self.store, &roots, cfg.tie_break, cfg.audit);
                self.store.make_ring(&[w]);
                st.min_root = Some(w);
            }
            HeapKind::Pairing(PairingMode::Pure) => {
                let (out, best) = pairing_pass_ix(&mut self.store, &roots, cfg.tie_break, cfg.audit);
                self.store.make_ring(&out);
                st.min_root = Some(out[best]);
            }
        }
    }

    /// Links detached roots into one tree per the heap kind.
    fn combine(&mut self, cfg: HeapConfig, roots: &[Ix]) -> Ix {
        match cfg.kind {
            HeapKind::Smooth | HeapKind::Slim => {
                treapify_ix(&mut self.store, roots, cfg.kind.linking(), cfg.tie_break, cfg.audit)
            }
            HeapKind::Pairing(_) => two_pass_ix(&mut self.store, roots, cfg.tie_break, cfg.audit),
        }
    }

    pub fn delete_min(&mut self, h: HeapId) -> Result<(NodeHandle, K)> {
        let mut st = self.take(h)?;
        if st.len == 0 {
            self.put(h, st);
            return Err(HeapError::EmptyHeap);
        }
        let (x, key) = self.delete_min_ix(&mut st);
        self.put(h, st);
        match key {
            Priority::Key(k) => Ok((x, k)),
            Priority::NegInfinity => unreachable!("sentinel key escaped a delete"),
        }
    }

    fn delete_min_ix(&mut self, st: &mut HeapState) -> (NodeHandle, Priority<K>) {
        self.empty_buffer(st);
        let x = st.min_root.expect("non-empty heap without a min-root");
        let kids = self.store.take_children(x);
        match self.store.replace_in_list(x, &kids) {
            Some(first) => self.consolidate(st, first),
            None => st.min_root = None,
        }
        let handle = self.store.handle(x);
        let key = self.store.take_prio(x);
        self.store.release(x);
        st.len -= 1;
        (handle, key)
    }

    /// Sorts the buffered roots by non-increasing key (ties by node
    /// identifier), links them into a chain and appends the chain's root to
    /// the root list.
    fn empty_buffer(&mut self, st: &mut HeapState) {
        if st.buffer.is_empty() {
            return;
        }
        let mut buf = std::mem::take(&mut st.buffer);
        st.buffer_min = None;
        let mut cmps = 0u64;
        let store = &self.store;
        buf.sort_by(|&a, &b| {
            cmps += 1;
            store.prio(b).cmp(store.prio(a)).then(a.cmp(&b))
        });
        self.store.counters.comparisons += cmps;
        for &b in &buf {
            self.store.set_place(b, Place::Detached);
        }
        let cfg = st.config;
        let s = treapify_ix(&mut self.store, &buf, cfg.kind.linking(), cfg.tie_break, cfg.audit);
        self.add_root(st, s, InsertPosition::Last);
    }

    pub fn decrease_key(&mut self, h: HeapId, x: NodeHandle, key: K) -> Result<()> {
        let ix = self.store.resolve(x).ok_or(HeapError::StaleHandle)?;
        let key = Priority::Key(key);
        if key > *self.store.prio(ix) {
            return Err(HeapError::KeyIncrease);
        }
        let mut st = self.take(h)?;
        self.store.set_prio(ix, key);
        self.decrease_ix(&mut st, ix);
        self.put(h, st);
        Ok(())
    }

    fn decrease_ix(&mut self, st: &mut HeapState, x: Ix) {
        match self.store.place(x) {
            Place::Root => {
                if let Some(m) = st.min_root {
                    if m != x && self.store.key_less(x, m) {
                        st.min_root = Some(x);
                    }
                }
            }
            Place::Buffered => {
                let b = st.buffer_min.expect("buffered node without buffer minimum");
                if b != x && self.store.key_less(x, b) {
                    st.buffer_min = Some(x);
                }
            }
            Place::Child => match st.config.decrease_key {
                DecreaseKeyPolicy::Simple => {
                    self.store.replace_in_list(x, &[]);
                    self.add_root(st, x, InsertPosition::Last);
                }
                DecreaseKeyPolicy::Buffered => {
                    match self.store.leftmost_child(x) {
                        Some(y) => {
                            self.store.replace_in_list(y, &[]);
                            self.store.replace_in_list(x, &[y]);
                        }
                        None => {
                            self.store.replace_in_list(x, &[]);
                        }
                    }
                    self.store.set_place(x, Place::Buffered);
                    st.buffer.push(x);
                    match st.buffer_min {
                        Some(b) if !self.store.key_less(x, b) => {}
                        _ => st.buffer_min = Some(x),
                    }
                    if st.buffer.len() >= buffer_threshold(st.len) {
                        self.empty_buffer(st);
                    }
                }
            },
            p => unreachable!("decrease-key on a node in state {p:?}"),
        }
    }

    /// Deletes an arbitrary node of `h`; returns its key.
    pub fn delete(&mut self, h: HeapId, x: NodeHandle) -> Result<K> {
        let ix = self.store.resolve(x).ok_or(HeapError::StaleHandle)?;
        let mut st = self.take(h)?;
        if st.min_root == Some(ix) {
            self.empty_buffer(&mut st);
        }
        let is_min = st.min_root == Some(ix) || self.find_min_ix(&st) == Some(ix);
        let key = self.store.take_prio(ix);
        if is_min {
            self.delete_min_ix(&mut st);
        } else {
            match st.config.delete {
                DeletePolicy::ViaDecreaseKey => {
                    self.decrease_ix(&mut st, ix);
                    let (gone, _) = self.delete_min_ix(&mut st);
                    debug_assert_eq!(gone, x);
                }
                DeletePolicy::EagerLinkChildren => {
                    let kids = self.store.take_children(ix);
                    let survivor: Vec<Ix> = if kids.is_empty() { vec![] } else { vec![self.combine(st.config, &kids)] };
                    self.remove_non_min(&mut st, ix, &survivor);
                }
                DeletePolicy::LazySplice => {
                    let kids = self.store.take_children(ix);
                    self.remove_non_min(&mut st, ix, &kids);
                }
            }
            if st.buffer.len() >= buffer_threshold(st.len) {
                self.empty_buffer(&mut st);
            }
        }
        self.put(h, st);
        match key {
            Priority::Key(k) => Ok(k),
            Priority::NegInfinity => unreachable!("sentinel key on a live node"),
        }
    }

    /// Replaces childless-by-now `x` by `seq` and frees it. A buffered `x`
    /// leaves the buffer and `seq` joins the root list.
    fn remove_non_min(&mut self, st: &mut HeapState, x: Ix, seq: &[Ix]) {
        match self.store.place(x) {
            Place::Root | Place::Child => {
                self.store.replace_in_list(x, seq);
            }
            Place::Buffered => {
                let pos = st.buffer.iter().position(|&b| b == x).expect("buffered node missing from buffer");
                st.buffer.swap_remove(pos);
                self.store.set_place(x, Place::Detached);
                for &s in seq {
                    self.add_root(st, s, InsertPosition::Last);
                }
                st.buffer_min = None;
                for i in 0..st.buffer.len() {
                    let b = st.buffer[i];
                    match st.buffer_min {
                        Some(m) if !self.store.key_less(b, m) => {}
                        _ => st.buffer_min = Some(b),
                    }
                }
            }
            p => unreachable!("delete of a node in state {p:?}"),
        }
        self.store.release(x);
        st.len -= 1;
    }

    /// Full structural check of one heap: list shape, heap order, min-root,
    /// node count, buffer discipline and variant-specific shape.
    pub fn check_invariants(&self, h: HeapId) -> std::result::Result<(), String> {
        let st = self.state(h).map_err(|e| e.to_string())?;
        let s = &self.store;
        let mut count = 0usize;
        let mut stack: Vec<Ix> = Vec::new();
        if let Some(m) = st.min_root {
            let ring = s.ring(m);
            for (i, &r) in ring.iter().enumerate() {
                if s.place(r) != Place::Root {
                    return Err(format!("root {r} has state {:?}", s.place(r)));
                }
                if s.back(r) != ring[(i + ring.len() - 1) % ring.len()] {
                    return Err(format!("root {r} has a broken back handle"));
                }
                if s.prio(r) < s.prio(m) {
                    return Err(format!("root {r} is smaller than the min-root {m}"));
                }
            }
            if st.config.kind == HeapKind::Pairing(PairingMode::Classic) && ring.len() != 1 {
                return Err(format!("classic pairing heap has {} trees", ring.len()));
            }
            stack.extend(ring);
        }
        if st.buffer.len() >= buffer_threshold(st.len) {
            return Err(format!("buffer holds {} roots with n = {}", st.buffer.len(), st.len));
        }
        if let Some(&b) = st.buffer.first() {
            let bm = st.buffer_min.ok_or("buffer without minimum")?;
            let _ = b;
            for &x in &st.buffer {
                if s.place(x) != Place::Buffered {
                    return Err(format!("buffer member {x} has state {:?}", s.place(x)));
                }
                if s.prio(x) < s.prio(bm) {
                    return Err("buffer minimum is stale".into());
                }
            }
        } else if st.buffer_min.is_some() {
            return Err("empty buffer with a minimum".into());
        }
        stack.extend(st.buffer.iter().copied());
        while let Some(x) = stack.pop() {
            count += 1;
            let kids = s.child_ixs(x);
            let mut seen_right = false;
            for (i, &c) in kids.iter().enumerate() {
                let expect_back = if i == 0 { x } else { kids[i - 1] };
                if s.back(c) != expect_back || s.place(c) != Place::Child {
                    return Err(format!("child list of {x} is malformed at {c}"));
                }
                if s.prio(c) < s.prio(x) {
                    return Err(format!("heap order violated: {c} below {x}"));
                }
                if st.config.kind == HeapKind::Smooth {
                    match s.side_of(c) {
                        Side::Left if seen_right => return Err(format!("LEFT child {c} after a RIGHT child")),
                        Side::Right => seen_right = true,
                        Side::Unset => return Err(format!("child {c} has no side")),
                        Side::Left => {}
                    }
                }
            }
            stack.extend(kids);
        }
        if count != st.len {
            return Err(format!("reachable nodes {count} != recorded {}", st.len));
        }
        Ok(())
    }
}

/// Leftmost locally maximum linking over `roots` (detached, in list order).
///
/// Scans left to right keeping the strictly increasing prefix on a stack.
/// When the stack top is no less than the next root it is the leftmost
/// local maximum and loses to the larger of its neighbours (the left one on
/// a tie). At the end the increasing stack is linked from the right. Makes
/// `k - 1` links and at most `2k` comparisons.
pub(crate) fn treapify_ix<K: Ord>(
    s: &mut NodeStore<K>,
    roots: &[Ix],
    linking: Linking,
    tie: TieBreak,
    stamp: bool,
) -> Ix {
    assert!(!roots.is_empty(), "treapify of an empty list");
    s.begin_round();
    let mut stack: Vec<Ix> = Vec::with_capacity(32);
    stack.push(roots[0]);
    for &w in &roots[1..] {
        let mut top_wins = false;
        while let Some(&top) = stack.last() {
            if !top_wins && s.compare_ix(top, w, true, tie) == KeyOrder::Less {
                break;
            }
            let v = stack.pop().unwrap();
            let Some(&u) = stack.last() else {
                s.attach(w, v, LinkDir::Left, linking, stamp);
                break;
            };
            if s.compare_ix(u, w, true, tie) == KeyOrder::Greater {
                s.attach(u, v, LinkDir::Right, linking, stamp);
                top_wins = true;
            } else {
                s.attach(w, v, LinkDir::Left, linking, stamp);
                break;
            }
        }
        stack.push(w);
    }
    while stack.len() > 1 {
        let v = stack.pop().unwrap();
        s.attach(*stack.last().unwrap(), v, LinkDir::Right, linking, stamp);
    }
    stack[0]
}

/// Treapifies detached nodes given in list order; returns the root.
pub fn treapify<K: Ord>(s: &mut NodeStore<K>, roots: &[NodeHandle], linking: Linking, tie: TieBreak) -> NodeHandle {
    let ixs: Vec<Ix> = roots.iter().map(|&h| s.ix(h)).collect();
    let w = treapify_ix(s, &ixs, linking, tie, true);
    s.handle(w)
}
