//! A countably infinite strongly dense poset C without the splitting
//! property.
//!
//! C is built in stages. `C_0` is the binary tree of finite words under the
//! prefix order. `C_{n+1}` hangs a copy of the rootless binary tree directly
//! above every element of `C_n`; C is the union of all stages. Elements are
//! finite terms ([`CElement`]), and the order is decided by recursion on the
//! levels ([`c_leq`]), so no infinite object is ever materialized.
//!
//! Finite fragments ([`truncate`]) feed the generic engine in
//! [`crate::order`]. Strong density is witnessed constructively by
//! [`antichain_in_interval`]; the witnesses for an interval generally sit one
//! level above both endpoints, which is why fragments themselves are not
//! strongly dense.

mod claims;
mod element;
mod interval;
mod leq;
mod truncation;
mod word;

use thiserror::Error;

pub use claims::{
    the_antichain_a, verify_claim_three, verify_claim_two, verify_claim_two_with_capacity, witness_w1,
    witness_w2, ClaimThreeReport, ClaimTwoReport, PartitionRefutation, WitnessPosition,
};
pub use element::{parse_celement, render_celement, CElement};
pub use interval::{antichain_in_interval, is_interval_antichain, IntervalWitnessStream};
pub use leq::{c_leq, c_leq_at, c_lt, compare, Comparison};
pub use truncation::{truncate, truncate_with_capacity, truncation_elements, Truncation, TruncationSpec};
pub use word::Word;

use crate::order::PosetError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("malformed element: {0}")]
    Invariant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("fragment has {size} elements, exceeding the capacity of {limit}")]
    Capacity { size: u128, limit: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}
