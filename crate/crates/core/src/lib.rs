//! Smooth heaps, slim heaps and pairing-heap baselines.
//!
//! All variants share one node store ([`NodeStore`]) whose primitives count
//! every key comparison and every link, so costs are comparable across
//! variants. The [`analysis`] module audits the amortized bounds against the
//! potential function; [`workloads`] generates the benchmark inputs.
//!
//! ```
//! use smooth_heap::{HeapConfig, HeapSet};
//!
//! let mut heaps = HeapSet::new();
//! let h = heaps.make_heap(HeapConfig::smooth()).unwrap();
//! for k in [5, 3, 8] {
//!     heaps.insert(h, k).unwrap();
//! }
//! assert_eq!(heaps.delete_min(h).unwrap().1, 3);
//! ```

pub mod analysis;
mod error;
mod heap;
mod pairing;
mod store;
pub mod workloads;

pub use error::{HeapError, Result};
pub use heap::{
    buffer_threshold, treapify, DecreaseKeyPolicy, DeletePolicy, HeapConfig, HeapId, HeapKind, HeapSet, InsertPosition,
};
pub use pairing::{pairing_pass, two_pass_combine, PairingMode};
pub use store::{KeyOrder, LinkDir, LinkEvent, LinkTrace, Linking, NodeHandle, NodeStore, Side, TieBreak};
