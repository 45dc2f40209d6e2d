//! The order of C.
//!
//! `C_{n+1}` adds, for every `a ∈ C_n`, a fresh copy
//! `{⟨a, s, n+1⟩ : s ≠ ⟨⟩}` of the binary tree minus its root, sitting just
//! above `a` and below everything strictly above `a`. Writing
//! `x = ⟨a₁, b₁, c₁⟩`, `y = ⟨a₂, b₂, c₂⟩`, the stage order is `x ≤_{n+1} y`
//! iff one of
//!
//! * (i)   `c₁, c₂ ≤ n` and `x ≤_n y`
//! * (ii)  `c₁ ≤ n`, `c₂ = n+1` and `x ≤_n a₂`
//! * (iii) `c₁ = n+1`, `c₂ ≤ n` and `a₁ <_n y`
//! * (iv)  `c₁ = c₂ = n+1`, `a₁ = a₂` and `b₁ ⊴ b₂`
//! * (v)   `c₁ = c₂ = n+1` and `a₁ <_n a₂`
//!
//! with `≤_0` the prefix order on level-0 words.

use super::{CElement, ConstructionError};

/// `x ≤ y` in C, evaluated at the smallest stage containing both.
///
/// At that stage at least one argument sits on the top level, so rule (i)
/// never applies and every other rule recurses on terms of strictly smaller
/// maximum level.
pub fn c_leq(x: &CElement, y: &CElement) -> bool {
    let top = x.level().max(y.level());
    if top == 0 {
        return x.word().is_prefix_of(y.word());
    }
    match (x.level() == top, y.level() == top) {
        (false, true) => c_leq(x, parent(y)),
        (true, false) => c_lt(parent(x), y),
        (true, true) => {
            let (a1, a2) = (parent(x), parent(y));
            (a1.same(a2) && x.word().is_prefix_of(y.word())) || c_lt(a1, a2)
        }
        (false, false) => unreachable!("one argument has the top level"),
    }
}

/// `x < y` in C.
pub fn c_lt(x: &CElement, y: &CElement) -> bool {
    !x.same(y) && c_leq(x, y)
}

/// `x ≤_n y`, unfolding the stage relations one level at a time from `n`
/// down to 0. Requires both elements to lie in `C_n`.
pub fn c_leq_at(n: u32, x: &CElement, y: &CElement) -> Result<bool, ConstructionError> {
    let needed = x.level().max(y.level());
    if n < needed {
        return Err(ConstructionError::Precondition(format!(
            "{x} and {y} are not both in C_{n}; the smallest stage containing them is {needed}"
        )));
    }
    Ok(leq_stage(n, x, y))
}

fn leq_stage(n: u32, x: &CElement, y: &CElement) -> bool {
    if n == 0 {
        return x.word().is_prefix_of(y.word());
    }
    let below = n - 1;
    match (x.level() <= below, y.level() <= below) {
        (true, true) => leq_stage(below, x, y),
        (true, false) => leq_stage(below, x, parent(y)),
        (false, true) => lt_stage(below, parent(x), y),
        (false, false) => {
            let (a1, a2) = (parent(x), parent(y));
            (a1.same(a2) && x.word().is_prefix_of(y.word())) || lt_stage(below, a1, a2)
        }
    }
}

fn lt_stage(n: u32, x: &CElement, y: &CElement) -> bool {
    !x.same(y) && leq_stage(n, x, y)
}

fn parent(e: &CElement) -> &CElement {
    e.parent().expect("elements above level 0 have a parent")
}

/// Result of comparing two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Comparison {
    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Less => "<",
            Comparison::Greater => ">",
            Comparison::Equal => "=",
            Comparison::Incomparable => "incomparable",
        }
    }
}

pub fn compare(x: &CElement, y: &CElement) -> Comparison {
    if x.same(y) {
        Comparison::Equal
    } else if c_leq(x, y) {
        Comparison::Less
    } else if c_leq(y, x) {
        Comparison::Greater
    } else {
        Comparison::Incomparable
    }
}
