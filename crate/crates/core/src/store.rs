//! Node storage and the list/link primitives shared by every heap variant.
//!
//! Nodes live in a generation-checked arena. Every list (the root list of a
//! heap and each list of children) is circular through `next`. The `back`
//! handle makes the lists doubly linked:
//!
//! ```text
//!   root list:    back(x) = left neighbour, back(first) = last root
//!   child list:   back(x) = previous sibling, back(leftmost) = parent
//! ```
//!
//! A parent reaches its children through its rightmost child, so both ends
//! of a child list are available in O(1): `leftmost = next(rightmost)`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::analysis::Counters;

pub(crate) type Ix = u32;

/// Stable identity of a node. Stale handles (node deleted, slot reused) are
/// rejected by the generation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NodeHandle {
    index: u32,
    generation: u32,
}

impl NodeHandle {
    /// Slot index; doubles as the node identifier for identifier tie-breaking.
    pub fn index(self) -> usize {
        self.index as usize
    }

    /// Index and generation packed into one value, unique over the store's life.
    pub fn id(self) -> u64 {
        (u64::from(self.generation) << 32) | u64::from(self.index)
    }
}

/// Which kind of child a node is: it lost a left link (it was left of its
/// parent) or a right link. Roots carry `Unset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
    Unset,
}

/// Direction of a link, named after the loser's position relative to the winner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinkDir {
    Left,
    Right,
}

/// Where the loser of a link goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Linking {
    /// Leftmost child on a left link, rightmost child on a right link (smooth heaps).
    Stable,
    /// Always the new leftmost child (slim and pairing heaps).
    OneSided,
}

/// Resolution of equal keys.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum TieBreak {
    /// The node on the right is treated as smaller.
    #[default]
    Positional,
    /// The node with the smaller identifier is treated as smaller.
    NodeId,
}

/// Outcome of a key comparison. Equality is never reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyOrder {
    Less,
    Greater,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Place {
    Free,
    Detached,
    Root,
    Child,
    Buffered,
}

/// Key plus the reserved minus-infinity sentinel used by delete-via-decrease-key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Priority<K> {
    NegInfinity,
    Key(K),
}

#[derive(Clone, Debug)]
struct Node<K> {
    key: Priority<K>,
    next: Ix,
    back: Ix,
    child: Option<Ix>,
    side: Side,
    stamp: Option<u64>,
    place: Place,
    generation: u32,
}

/// One link performed during a consolidation round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinkEvent {
    pub winner: NodeHandle,
    pub loser: NodeHandle,
    pub dir: LinkDir,
}

/// Links grouped by consolidation round (one treapify, one two-pass combine,
/// one pairing pass, one buffer flush).
#[derive(Clone, Debug, Default)]
pub struct LinkTrace {
    pub rounds: Vec<Vec<LinkEvent>>,
}

/// Arena of heap nodes plus the operation counters every primitive charges.
#[derive(Clone, Debug)]
pub struct NodeStore<K> {
    nodes: Vec<Node<K>>,
    free: Vec<Ix>,
    clock: u64,
    pub(crate) counters: Counters,
    trace: Option<LinkTrace>,
}

impl<K> Default for NodeStore<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K> NodeStore<K> {
    pub fn new() -> Self {
        Self { nodes: Vec::new(), free: Vec::new(), clock: 0, counters: Counters::default(), trace: None }
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    pub fn counters_mut(&mut self) -> &mut Counters {
        &mut self.counters
    }

    /// Starts recording links; any previous trace is discarded.
    pub fn start_trace(&mut self) {
        self.trace = Some(LinkTrace::default());
    }

    pub fn take_trace(&mut self) -> Option<LinkTrace> {
        self.trace.take()
    }

    pub(crate) fn begin_round(&mut self) {
        if let Some(trace) = self.trace.as_mut() {
            trace.rounds.push(Vec::new());
        }
    }

    pub(crate) fn alloc_key(&mut self, key: Priority<K>) -> Ix {
        if let Some(ix) = self.free.pop() {
            let node = &mut self.nodes[ix as usize];
            node.generation = node.generation.wrapping_add(1);
            node.key = key;
            node.next = ix;
            node.back = ix;
            node.child = None;
            node.side = Side::Unset;
            node.stamp = None;
            node.place = Place::Detached;
            ix
        } else {
            let ix = Ix::try_from(self.nodes.len()).expect("node store exhausted");
            self.nodes.push(Node {
                key,
                next: ix,
                back: ix,
                child: None,
                side: Side::Unset,
                stamp: None,
                place: Place::Detached,
                generation: 0,
            });
            ix
        }
    }

    /// Creates a detached single node (in no list, no heap).
    pub fn alloc(&mut self, key: K) -> NodeHandle {
        let ix = self.alloc_key(Priority::Key(key));
        self.handle(ix)
    }

    pub(crate) fn release(&mut self, ix: Ix) {
        let node = &mut self.nodes[ix as usize];
        debug_assert!(node.child.is_none(), "released node still has children");
        node.place = Place::Free;
        node.child = None;
        self.free.push(ix);
    }

    pub(crate) fn handle(&self, ix: Ix) -> NodeHandle {
        NodeHandle { index: ix, generation: self.nodes[ix as usize].generation }
    }

    pub(crate) fn resolve(&self, h: NodeHandle) -> Option<Ix> {
        let node = self.nodes.get(h.index as usize)?;
        (node.generation == h.generation && node.place != Place::Free).then_some(h.index)
    }

    /// True while the handle refers to a live node.
    pub fn contains(&self, h: NodeHandle) -> bool {
        self.resolve(h).is_some()
    }

    /// Key of a live node; `None` for stale handles.
    pub fn key(&self, h: NodeHandle) -> Option<&K> {
        match &self.nodes[self.resolve(h)? as usize].key {
            Priority::Key(k) => Some(k),
            Priority::NegInfinity => None,
        }
    }

    pub fn side(&self, h: NodeHandle) -> Option<Side> {
        self.resolve(h).map(|ix| self.nodes[ix as usize].side)
    }

    pub fn link_stamp(&self, h: NodeHandle) -> Option<u64> {
        self.resolve(h).and_then(|ix| self.nodes[ix as usize].stamp)
    }

    /// Children of `h`, left to right.
    pub fn children(&self, h: NodeHandle) -> Vec<NodeHandle> {
        self.resolve(h).map(|ix| self.child_ixs(ix).into_iter().map(|c| self.handle(c)).collect()).unwrap_or_default()
    }

    pub fn is_root(&self, h: NodeHandle) -> bool {
        self.resolve(h).is_some_and(|ix| self.place(ix) == Place::Root)
    }

    /// Parent of a child node (walks left to the leftmost sibling).
    pub fn parent(&self, h: NodeHandle) -> Option<NodeHandle> {
        let ix = self.resolve(h)?;
        (self.place(ix) == Place::Child).then(|| self.handle(self.parent_ix(ix)))
    }

    // --- raw accessors -------------------------------------------------

    #[inline]
    pub(crate) fn prio(&self, ix: Ix) -> &Priority<K> {
        &self.nodes[ix as usize].key
    }

    pub(crate) fn set_prio(&mut self, ix: Ix, key: Priority<K>) {
        self.nodes[ix as usize].key = key;
    }

    pub(crate) fn take_prio(&mut self, ix: Ix) -> Priority<K> {
        std::mem::replace(&mut self.nodes[ix as usize].key, Priority::NegInfinity)
    }

    #[inline]
    pub(crate) fn next(&self, ix: Ix) -> Ix {
        self.nodes[ix as usize].next
    }

    #[inline]
    pub(crate) fn back(&self, ix: Ix) -> Ix {
        self.nodes[ix as usize].back
    }

    #[inline]
    pub(crate) fn child(&self, ix: Ix) -> Option<Ix> {
        self.nodes[ix as usize].child
    }

    #[inline]
    pub(crate) fn place(&self, ix: Ix) -> Place {
        self.nodes[ix as usize].place
    }

    pub(crate) fn set_place(&mut self, ix: Ix, place: Place) {
        let node = &mut self.nodes[ix as usize];
        node.place = place;
        if place != Place::Child {
            node.side = Side::Unset;
            node.stamp = None;
        }
    }

    #[inline]
    pub(crate) fn side_of(&self, ix: Ix) -> Side {
        self.nodes[ix as usize].side
    }

    #[inline]
    pub(crate) fn stamp_of(&self, ix: Ix) -> Option<u64> {
        self.nodes[ix as usize].stamp
    }

    pub(crate) fn leftmost_child(&self, ix: Ix) -> Option<Ix> {
        self.child(ix).map(|r| self.next(r))
    }

    pub(crate) fn child_ixs(&self, ix: Ix) -> Vec<Ix> {
        let mut out = Vec::new();
        if let Some(first) = self.leftmost_child(ix) {
            let mut c = first;
            loop {
                out.push(c);
                c = self.next(c);
                if c == first {
                    break;
                }
            }
        }
        out
    }

    /// For a child: is it the leftmost in its sibling list?
    #[inline]
    pub(crate) fn is_leftmost_child(&self, ix: Ix) -> bool {
        let b = self.back(ix);
        self.child(b).is_some_and(|r| self.next(r) == ix)
    }

    pub(crate) fn parent_ix(&self, ix: Ix) -> Ix {
        debug_assert_eq!(self.place(ix), Place::Child);
        let mut c = ix;
        while !self.is_leftmost_child(c) {
            c = self.back(c);
        }
        self.back(c)
    }

    /// Members of the circular list containing `first`, starting at `first`.
    pub(crate) fn ring(&self, first: Ix) -> Vec<Ix> {
        let mut out = vec![first];
        let mut c = self.next(first);
        while c != first {
            out.push(c);
            c = self.next(c);
        }
        out
    }

    // --- comparison ----------------------------------------------------

    /// Positional tie-break needs to know whether `a` sits left of `b`.
    pub(crate) fn order(&self, a: Ix, b: Ix, a_left_of_b: bool, tie: TieBreak) -> KeyOrder
    where
        K: Ord,
    {
        match self.prio(a).cmp(self.prio(b)) {
            Ordering::Less => KeyOrder::Less,
            Ordering::Greater => KeyOrder::Greater,
            Ordering::Equal => match tie {
                TieBreak::Positional if a_left_of_b => KeyOrder::Greater,
                TieBreak::Positional => KeyOrder::Less,
                TieBreak::NodeId if a < b => KeyOrder::Less,
                TieBreak::NodeId => KeyOrder::Greater,
            },
        }
    }

    /// Counted comparison.
    pub(crate) fn compare_ix(&mut self, a: Ix, b: Ix, a_left_of_b: bool, tie: TieBreak) -> KeyOrder
    where
        K: Ord,
    {
        self.counters.comparisons += 1;
        self.order(a, b, a_left_of_b, tie)
    }

    /// Compares two nodes under the tie-break rule and charges one comparison.
    pub fn compare(&mut self, a: NodeHandle, b: NodeHandle, a_left_of_b: bool, tie: TieBreak) -> KeyOrder
    where
        K: Ord,
    {
        let (a, b) = (self.ix(a), self.ix(b));
        debug_assert_ne!(a, b);
        self.compare_ix(a, b, a_left_of_b, tie)
    }

    /// Strict `<` on keys, counted. Used for min-root maintenance.
    pub(crate) fn key_less(&mut self, a: Ix, b: Ix) -> bool
    where
        K: Ord,
    {
        self.counters.comparisons += 1;
        self.prio(a) < self.prio(b)
    }

    pub(crate) fn ix(&self, h: NodeHandle) -> Ix {
        self.resolve(h).expect("stale node handle")
    }

    // --- list surgery --------------------------------------------------

    /// Adds `c` to the child list of `p`, at the front or the back.
    pub(crate) fn push_child(&mut self, p: Ix, c: Ix, front: bool) {
        match self.child(p) {
            None => {
                self.nodes[c as usize].next = c;
                self.nodes[c as usize].back = p;
                self.nodes[p as usize].child = Some(c);
            }
            Some(r) => {
                let l = self.next(r);
                if front {
                    self.nodes[c as usize].next = l;
                    self.nodes[l as usize].back = c;
                    self.nodes[r as usize].next = c;
                    self.nodes[c as usize].back = p;
                } else {
                    self.nodes[r as usize].next = c;
                    self.nodes[c as usize].back = r;
                    self.nodes[c as usize].next = l;
                    self.nodes[p as usize].child = Some(c);
                }
            }
        }
        self.nodes[c as usize].place = Place::Child;
    }

    /// Removes every child of `p`, returned left to right, all detached.
    pub(crate) fn take_children(&mut self, p: Ix) -> Vec<Ix> {
        let kids = self.child_ixs(p);
        self.nodes[p as usize].child = None;
        for &c in &kids {
            self.detach_fields(c);
        }
        kids
    }

    fn detach_fields(&mut self, ix: Ix) {
        let node = &mut self.nodes[ix as usize];
        node.next = ix;
        node.back = ix;
        node.place = Place::Detached;
        node.side = Side::Unset;
        node.stamp = None;
    }

    /// Replaces `x` by `seq` (in order) in whatever list holds `x`; `x` ends
    /// up detached with its subtree intact. Members of `seq` must be
    /// detached. In a child list they inherit `x`'s side and link stamp; in
    /// the root list they become plain roots. For a root list, returns the
    /// member now occupying `x`'s position (first of `seq`, or `x`'s right
    /// neighbour), or `None` when the list became empty.
    pub(crate) fn replace_in_list(&mut self, x: Ix, seq: &[Ix]) -> Option<Ix> {
        let place = self.place(x);
        debug_assert!(matches!(place, Place::Root | Place::Child), "{place:?}");
        let (side, stamp) = (self.side_of(x), self.stamp_of(x));
        for &s in seq {
            debug_assert_eq!(self.place(s), Place::Detached);
            let node = &mut self.nodes[s as usize];
            node.place = place;
            if place == Place::Child {
                node.side = side;
                node.stamp = stamp;
            } else {
                node.side = Side::Unset;
                node.stamp = None;
            }
        }
        for w in seq.windows(2) {
            self.nodes[w[0] as usize].next = w[1];
            self.nodes[w[1] as usize].back = w[0];
        }
        let ends = seq.first().copied().zip(seq.last().copied());
        let nx = self.next(x);
        let bx = self.back(x);
        let mut occupant = None;

        if place == Place::Root {
            if nx == x {
                if let Some((f, l)) = ends {
                    self.nodes[l as usize].next = f;
                    self.nodes[f as usize].back = l;
                    occupant = Some(f);
                }
            } else if let Some((f, l)) = ends {
                self.nodes[bx as usize].next = f;
                self.nodes[f as usize].back = bx;
                self.nodes[l as usize].next = nx;
                self.nodes[nx as usize].back = l;
                occupant = Some(f);
            } else {
                self.nodes[bx as usize].next = nx;
                self.nodes[nx as usize].back = bx;
                occupant = Some(nx);
            }
        } else {
            let leftmost = self.is_leftmost_child(x);
            let rightmost = self.is_leftmost_child(nx);
            if nx == x {
                let p = bx;
                match ends {
                    Some((f, l)) => {
                        self.nodes[p as usize].child = Some(l);
                        self.nodes[l as usize].next = f;
                        self.nodes[f as usize].back = p;
                    }
                    None => self.nodes[p as usize].child = None,
                }
            } else if leftmost {
                let p = bx;
                let r = self.child(p).expect("parent without children");
                match ends {
                    Some((f, l)) => {
                        self.nodes[f as usize].back = p;
                        self.nodes[l as usize].next = nx;
                        self.nodes[nx as usize].back = l;
                        self.nodes[r as usize].next = f;
                    }
                    None => {
                        self.nodes[nx as usize].back = p;
                        self.nodes[r as usize].next = nx;
                    }
                }
            } else if rightmost {
                let p = self.back(nx);
                match ends {
                    Some((f, l)) => {
                        self.nodes[bx as usize].next = f;
                        self.nodes[f as usize].back = bx;
                        self.nodes[l as usize].next = nx;
                        self.nodes[p as usize].child = Some(l);
                    }
                    None => {
                        self.nodes[bx as usize].next = nx;
                        self.nodes[p as usize].child = Some(bx);
                    }
                }
            } else {
                match ends {
                    Some((f, l)) => {
                        self.nodes[bx as usize].next = f;
                        self.nodes[f as usize].back = bx;
                        self.nodes[l as usize].next = nx;
                        self.nodes[nx as usize].back = l;
                    }
                    None => {
                        self.nodes[bx as usize].next = nx;
                        self.nodes[nx as usize].back = bx;
                    }
                }
            }
        }
        self.detach_fields(x);
        occupant
    }

    /// Makes `seq` one circular root list.
    pub(crate) fn make_ring(&mut self, seq: &[Ix]) {
        for (i, &s) in seq.iter().enumerate() {
            let n = seq[(i + 1) % seq.len()];
            self.nodes[s as usize].next = n;
            self.nodes[n as usize].back = s;
            self.set_place(s, Place::Root);
        }
    }

    /// Inserts detached `x` into a root ring right after `anchor`.
    pub(crate) fn ring_insert_after(&mut self, anchor: Ix, x: Ix) {
        let n = self.next(anchor);
        self.nodes[anchor as usize].next = x;
        self.nodes[x as usize].back = anchor;
        self.nodes[x as usize].next = n;
        self.nodes[n as usize].back = x;
        self.set_place(x, Place::Root);
    }

    /// Inserts detached `x` into a root ring right before `anchor` (at the
    /// end of the list when `anchor` is its first member).
    pub(crate) fn ring_insert_before(&mut self, anchor: Ix, x: Ix) {
        let b = self.back(anchor);
        self.ring_insert_after(b, x);
    }

    /// Catenates the ring starting at `b` after the ring starting at `a`.
    pub(crate) fn ring_concat(&mut self, a: Ix, b: Ix) {
        let a_last = self.back(a);
        let b_last = self.back(b);
        self.nodes[a_last as usize].next = b;
        self.nodes[b as usize].back = a_last;
        self.nodes[b_last as usize].next = a;
        self.nodes[a as usize].back = b_last;
    }

    // --- linking -------------------------------------------------------

    /// Makes detached `loser` a child of `winner`; the outcome is already known.
    pub(crate) fn attach(&mut self, winner: Ix, loser: Ix, dir: LinkDir, linking: Linking, stamp: bool) {
        let front = linking == Linking::OneSided || dir == LinkDir::Left;
        self.push_child(winner, loser, front);
        let node = &mut self.nodes[loser as usize];
        node.side = match dir {
            LinkDir::Left => Side::Left,
            LinkDir::Right => Side::Right,
        };
        node.stamp = if stamp {
            self.clock += 1;
            Some(self.clock)
        } else {
            None
        };
        self.counters.links += 1;
        if let Some(trace) = self.trace.as_mut() {
            let event = LinkEvent {
                winner: NodeHandle { index: winner, generation: self.nodes[winner as usize].generation },
                loser: NodeHandle { index: loser, generation: self.nodes[loser as usize].generation },
                dir,
            };
            match trace.rounds.last_mut() {
                Some(round) => round.push(event),
                None => trace.rounds.push(vec![event]),
            }
        }
    }

    /// Compares two detached or ring-free nodes, `left` positioned left of
    /// `right`, and links them. Returns the winner.
    pub(crate) fn compare_and_attach(&mut self, left: Ix, right: Ix, linking: Linking, tie: TieBreak, stamp: bool) -> Ix
    where
        K: Ord,
    {
        match self.compare_ix(left, right, true, tie) {
            KeyOrder::Less => {
                self.attach(left, right, LinkDir::Right, linking, stamp);
                left
            }
            KeyOrder::Greater => {
                self.attach(right, left, LinkDir::Left, linking, stamp);
                right
            }
        }
    }

    fn link_adjacent(&mut self, left: NodeHandle, right: NodeHandle, linking: Linking, tie: TieBreak) -> NodeHandle
    where
        K: Ord,
    {
        let (l, r) = (self.ix(left), self.ix(right));
        debug_assert_eq!(self.next(l), r, "link of non-adjacent nodes");
        debug_assert_eq!(self.place(l), self.place(r));
        let (winner, loser, dir) = match self.compare_ix(l, r, true, tie) {
            KeyOrder::Less => (l, r, LinkDir::Right),
            KeyOrder::Greater => (r, l, LinkDir::Left),
        };
        self.replace_in_list(loser, &[]);
        self.attach(winner, loser, dir, linking, true);
        self.handle(winner)
    }

    /// Links two adjacent list members (`left` immediately left of `right`);
    /// the loser becomes the winner's leftmost child. When applied to a root
    /// list, the owning heap's min-root is the caller's business.
    pub fn link_one_sided(&mut self, left: NodeHandle, right: NodeHandle, tie: TieBreak) -> NodeHandle
    where
        K: Ord,
    {
        self.link_adjacent(left, right, Linking::OneSided, tie)
    }

    /// Links two adjacent list members; the loser becomes the winner's
    /// leftmost child on a left link and rightmost child on a right link.
    pub fn link_stable(&mut self, left: NodeHandle, right: NodeHandle, tie: TieBreak) -> NodeHandle
    where
        K: Ord,
    {
        self.link_adjacent(left, right, Linking::Stable, tie)
    }

    /// Removes `x` (with its subtree) from its list in O(1).
    pub fn cut_from_list(&mut self, x: NodeHandle) {
        let ix = self.ix(x);
        self.replace_in_list(ix, &[]);
    }

    /// Removes `x` from its list and puts its children in its place, in
    /// order. Returns the children, left to right.
    pub fn splice_children_in_place(&mut self, x: NodeHandle) -> Vec<NodeHandle> {
        let ix = self.ix(x);
        let kids = self.take_children(ix);
        self.replace_in_list(ix, &kids);
        kids.into_iter().map(|c| self.handle(c)).collect()
    }

    /// Builds a circular root list out of detached nodes.
    pub fn make_root_list(&mut self, members: &[NodeHandle]) {
        let ixs: Vec<Ix> = members.iter().map(|&h| self.ix(h)).collect();
        self.make_ring(&ixs);
    }

    /// Left-to-right members of the list containing `x`, starting at its
    /// first member (the leftmost child, or `x` itself for a root list).
    pub fn list_members(&self, x: NodeHandle) -> Vec<NodeHandle> {
        let ix = self.ix(x);
        let ixs = match self.place(ix) {
            Place::Child => self.child_ixs(self.parent_ix(ix)),
            _ => self.ring(ix),
        };
        ixs.into_iter().map(|c| self.handle(c)).collect()
    }

    /// Attaches a detached `c` as a child of `p` (tests and tree builders).
    /// `front` selects leftmost vs rightmost; `side` is recorded verbatim.
    pub fn add_child(&mut self, p: NodeHandle, c: NodeHandle, front: bool, side: Side) {
        let (p, c) = (self.ix(p), self.ix(c));
        debug_assert_eq!(self.place(c), Place::Detached);
        self.push_child(p, c, front);
        self.clock += 1;
        let node = &mut self.nodes[c as usize];
        node.side = side;
        node.stamp = Some(self.clock);
    }

    /// Checks circularity and back-handle consistency of the list holding `x`.
    pub fn list_is_well_formed(&self, x: NodeHandle) -> bool {
        let Some(ix) = self.resolve(x) else { return false };
        match self.place(ix) {
            Place::Child => {
                let p = self.parent_ix(ix);
                let kids = self.child_ixs(p);
                if self.child(p) != kids.last().copied() {
                    return false;
                }
                kids.iter().enumerate().all(|(i, &c)| {
                    let expect_back = if i == 0 { p } else { kids[i - 1] };
                    self.back(c) == expect_back && self.place(c) == Place::Child
                })
            }
            Place::Root => {
                let ring = self.ring(ix);
                let n = ring.len();
                ring.iter()
                    .enumerate()
                    .all(|(i, &c)| self.back(c) == ring[(i + n - 1) % n] && self.place(c) == Place::Root)
            }
            _ => true,
        }
    }

    pub(crate) fn len_slots(&self) -> usize {
        self.nodes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store_with(keys: &[i64]) -> (NodeStore<i64>, Vec<NodeHandle>) {
        let mut s = NodeStore::new();
        let hs = keys.iter().map(|&k| s.alloc(k)).collect();
        (s, hs)
    }

    fn keys_of(s: &NodeStore<i64>, hs: &[NodeHandle]) -> Vec<i64> {
        hs.iter().map(|&h| *s.key(h).unwrap()).collect()
    }

    #[test]
    fn compare_strict_and_ties() {
        let (mut s, h) = store_with(&[3, 5, 4, 4]);
        assert_eq!(s.compare(h[0], h[1], true, TieBreak::Positional), KeyOrder::Less);
        assert_eq!(s.compare(h[2], h[3], true, TieBreak::Positional), KeyOrder::Greater);
        assert_eq!(s.compare(h[2], h[3], false, TieBreak::Positional), KeyOrder::Less);
        assert_eq!(s.counters().comparisons, 3);
        // identifier rule: smaller slot wins regardless of position
        assert_eq!(s.compare(h[3], h[2], true, TieBreak::NodeId), KeyOrder::Greater);
    }

    #[test]
    fn one_sided_link_puts_loser_leftmost() {
        let (mut s, h) = store_with(&[3, 5]);
        s.make_root_list(&h);
        let w = s.link_one_sided(h[0], h[1], TieBreak::Positional);
        assert_eq!(w, h[0]);
        assert_eq!(s.children(h[0]), vec![h[1]]);
        assert_eq!(s.counters().links, 1);
        assert_eq!(s.counters().comparisons, 1);

        let (mut s, h) = store_with(&[4, 4]);
        s.make_root_list(&h);
        assert_eq!(s.link_one_sided(h[0], h[1], TieBreak::Positional), h[1]);
        assert_eq!(s.children(h[1]), vec![h[0]]);
    }

    #[test]
    fn one_sided_link_inserts_before_existing_children() {
        let (mut s, h) = store_with(&[1, 9, 5]);
        let (x, y, c) = (h[0], h[1], h[2]);
        s.add_child(x, c, true, Side::Left);
        s.make_root_list(&[x, y]);
        assert_eq!(s.link_one_sided(x, y, TieBreak::Positional), x);
        assert_eq!(s.children(x), vec![y, c]);
    }

    #[test]
    fn stable_link_sides() {
        let (mut s, h) = store_with(&[3, 5, 0]);
        s.make_root_list(&h[..2]);
        let extra = h[2];
        s.add_child(h[0], extra, true, Side::Left);
        assert_eq!(s.link_stable(h[0], h[1], TieBreak::Positional), h[0]);
        assert_eq!(s.children(h[0]), vec![extra, h[1]]);
        assert_eq!(s.side(h[1]), Some(Side::Right));

        let (mut s, h) = store_with(&[7, 2]);
        s.make_root_list(&h);
        assert_eq!(s.link_stable(h[0], h[1], TieBreak::Positional), h[1]);
        assert_eq!(s.side(h[0]), Some(Side::Left));

        let (mut s, h) = store_with(&[4, 4]);
        s.make_root_list(&h);
        assert_eq!(s.link_stable(h[0], h[1], TieBreak::Positional), h[1]);
        assert_eq!(s.children(h[1]), vec![h[0]]);
        assert_eq!(s.side(h[0]), Some(Side::Left));
    }

    fn parent_with_children(n: usize) -> (NodeStore<i64>, NodeHandle, Vec<NodeHandle>) {
        let mut s = NodeStore::new();
        let p = s.alloc(0);
        let kids: Vec<_> = (1..=n as i64).map(|k| s.alloc(k)).collect();
        for &c in &kids {
            s.add_child(p, c, false, Side::Right);
        }
        (s, p, kids)
    }

    #[test]
    fn cut_middle_leftmost_and_sole() {
        let (mut s, p, k) = parent_with_children(3);
        s.cut_from_list(k[1]);
        assert_eq!(s.children(p), vec![k[0], k[2]]);
        assert!(s.list_is_well_formed(k[0]));

        let (mut s, p, k) = parent_with_children(3);
        s.cut_from_list(k[0]);
        assert_eq!(s.children(p), vec![k[1], k[2]]);
        assert_eq!(s.parent(k[1]), Some(p));
        assert!(s.list_is_well_formed(k[1]));

        let (mut s, p, k) = parent_with_children(3);
        s.cut_from_list(k[2]);
        assert_eq!(s.children(p), vec![k[0], k[1]]);
        assert!(s.list_is_well_formed(k[0]));

        let (mut s, p, k) = parent_with_children(1);
        s.cut_from_list(k[0]);
        assert!(s.children(p).is_empty());
    }

    #[test]
    fn cut_keeps_subtree() {
        let (mut s, p, k) = parent_with_children(2);
        let g = s.alloc(10);
        s.add_child(k[0], g, true, Side::Left);
        s.cut_from_list(k[0]);
        assert_eq!(s.children(k[0]), vec![g]);
        assert_eq!(s.children(p), vec![k[1]]);
    }

    #[test]
    fn splice_children_into_root_list() {
        let (mut s, h) = store_with(&[0, 1, 2, 3, 9]);
        let (x, a, b, c, r) = (h[0], h[1], h[2], h[3], h[4]);
        for &k in &[a, b, c] {
            s.add_child(x, k, false, Side::Right);
        }
        s.make_root_list(&[x, r]);
        let kids = s.splice_children_in_place(x);
        assert_eq!(kids, vec![a, b, c]);
        assert_eq!(keys_of(&s, &s.list_members(a)), vec![1, 2, 3, 9]);
        assert!(s.list_is_well_formed(a));
        assert_eq!(s.side(a), Some(Side::Unset));
    }

    #[test]
    fn splice_childless_and_sibling_cases() {
        let (mut s, h) = store_with(&[0, 9]);
        s.make_root_list(&h);
        assert!(s.splice_children_in_place(h[0]).is_empty());
        assert_eq!(s.list_members(h[1]), vec![h[1]]);

        // [p, x, q] under a parent, x has child a -> [p, a, q]
        let (mut s, h) = store_with(&[0, 1, 2, 3, 4]);
        let (root, p, x, q, a) = (h[0], h[1], h[2], h[3], h[4]);
        for &k in &[p, x, q] {
            s.add_child(root, k, false, Side::Right);
        }
        s.add_child(x, a, true, Side::Left);
        s.splice_children_in_place(x);
        assert_eq!(s.children(root), vec![p, a, q]);
        assert_eq!(s.side(a), Some(Side::Right));
        assert!(s.list_is_well_formed(a));
    }

    #[test]
    fn stale_handles_are_rejected() {
        let mut s: NodeStore<i64> = NodeStore::new();
        let a = s.alloc(1);
        let ix = s.ix(a);
        s.release(ix);
        assert!(!s.contains(a));
        let b = s.alloc(2);
        assert_eq!(a.index(), b.index());
        assert!(s.key(a).is_none());
        assert_eq!(s.key(b), Some(&2));
    }
}
