use thiserror::Error;

/// Errors reported by heap, audit and workload operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeapError {
    #[error("heap is empty")]
    EmptyHeap,
    #[error("unknown or consumed heap {0}")]
    UnknownHeap(usize),
    #[error("stale or foreign node handle")]
    StaleHandle,
    #[error("decrease-key would increase the key")]
    KeyIncrease,
    #[error("heaps have different configurations")]
    IncompatibleHeaps,
    #[error("cannot meld a heap with itself")]
    SameHeap,
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("heap must be empty")]
    NotEmpty,
    #[error("smooth-heap mass needs link stamps; enable audit mode")]
    AuditModeRequired,
    #[error("unsupported operation: {0}")]
    UnsupportedOp(&'static str),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T, E = HeapError> = std::result::Result<T, E>;
