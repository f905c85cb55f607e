use std::collections::{BTreeSet, HashMap};

/// Reference priority queue: an ordered multiset of `(key, id)` pairs.
/// Ids are chosen by the caller (typically derived from node handles), so a
/// heap's answer can be removed by identity even among equal keys.
#[derive(Clone, Debug, Default)]
pub struct OracleQueue<K: Ord + Clone> {
    items: BTreeSet<(K, u64)>,
    keys: HashMap<u64, K>,
}

impl<K: Ord + Clone> OracleQueue<K> {
    pub fn new() -> Self {
        Self { items: BTreeSet::new(), keys: HashMap::new() }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn insert(&mut self, id: u64, key: K) {
        assert!(self.keys.insert(id, key.clone()).is_none(), "duplicate oracle id {id}");
        self.items.insert((key, id));
    }

    pub fn min_key(&self) -> Option<&K> {
        self.items.first().map(|(k, _)| k)
    }

    /// Removes an entry of minimum key.
    pub fn delete_min(&mut self) -> Option<K> {
        let (k, id) = self.items.pop_first()?;
        self.keys.remove(&id);
        Some(k)
    }

    pub fn remove(&mut self, id: u64) -> Option<K> {
        let k = self.keys.remove(&id)?;
        self.items.remove(&(k.clone(), id));
        Some(k)
    }

    pub fn key(&self, id: u64) -> Option<&K> {
        self.keys.get(&id)
    }

    pub fn decrease_key(&mut self, id: u64, key: K) {
        let old = self.remove(id).expect("unknown oracle id");
        assert!(key <= old, "oracle key increase");
        self.insert(id, key);
    }

    pub fn meld(&mut self, other: OracleQueue<K>) {
        for (id, k) in other.keys {
            self.insert(id, k);
        }
    }
}
