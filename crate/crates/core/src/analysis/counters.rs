use std::ops::{Add, AddAssign, Sub};

use serde::{Deserialize, Serialize};

/// Tallies of key comparisons and links.
///
/// `min_tracking` holds comparisons made only to locate the minimum of a
/// forest after a pure pairing pass; they are kept apart so that the
/// comparisons-equal-links property of pairing heaps stays checkable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub comparisons: u64,
    pub links: u64,
    pub min_tracking: u64,
}

impl Add for Counters {
    type Output = Counters;
    fn add(self, o: Counters) -> Counters {
        Counters {
            comparisons: self.comparisons + o.comparisons,
            links: self.links + o.links,
            min_tracking: self.min_tracking + o.min_tracking,
        }
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        *self = *self + o;
    }
}

impl Sub for Counters {
    type Output = Counters;
    fn sub(self, o: Counters) -> Counters {
        Counters {
            comparisons: self.comparisons - o.comparisons,
            links: self.links - o.links,
            min_tracking: self.min_tracking - o.min_tracking,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Counters { comparisons: 5, links: 3, min_tracking: 1 };
        let b = Counters { comparisons: 2, links: 1, min_tracking: 0 };
        assert_eq!(a - b, Counters { comparisons: 3, links: 2, min_tracking: 1 });
        let mut c = b;
        c += b;
        assert_eq!(c.links, 2);
    }
}
