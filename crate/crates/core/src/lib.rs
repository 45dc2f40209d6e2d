//! Finite poset combinatorics (antichains, splitting, strong density) and an
//! exact implementation of a countable strongly dense poset in which a
//! maximal antichain fails to split.

pub mod construction;
pub mod order;
pub mod sampler;

pub use construction::{c_leq, c_lt, CElement, ConstructionError, Truncation, TruncationSpec, Word};
pub use order::{Antichain, ElementSet, FinitePoset, Limits, PosetError, SplitPartition, Splitting};
