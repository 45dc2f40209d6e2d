//! Infinite antichains inside open intervals of C.
//!
//! For `x < y`, let `m` be the largest level of the two. The witnesses are
//! `⟨p, prefix ⌢ 1^i ⌢ 0, level⟩` for `i = 0, 1, 2, …`, where:
//!
//! | case                                    | p          | prefix   | level |
//! |-----------------------------------------|------------|----------|-------|
//! | both on level `m` (including `m = 0`)   | `x`        | `⟨⟩`     | `m+1` |
//! | `x` below level `m`, `y.parent = x`     | `x`        | `⟨⟩`     | `m+1` |
//! | `x` below level `m`, `x < y.parent`     | recurse into `(x, y.parent)`    |||
//! | `x` on level `m`, `y` below level `m`   | `x.parent` | `x.word` | `m`   |
//!
//! The words `prefix ⌢ 1^i ⌢ 0` are pairwise `⊴`-incomparable and the
//! witnesses share a parent, so they are pairwise incomparable in C.

use super::{c_leq, c_lt, CElement, ConstructionError, Word};

#[derive(Debug, Clone)]
pub struct IntervalWitnessStream {
    lower: CElement,
    upper: CElement,
    parent: CElement,
    prefix: Word,
    level: u32,
}

impl IntervalWitnessStream {
    pub fn new(lower: &CElement, upper: &CElement) -> Result<Self, ConstructionError> {
        if !c_lt(lower, upper) {
            return Err(ConstructionError::Precondition(format!(
                "{lower} is not strictly below {upper}"
            )));
        }
        let (parent, prefix, level) = scheme(lower, upper);
        Ok(Self {
            lower: lower.clone(),
            upper: upper.clone(),
            parent,
            prefix,
            level,
        })
    }

    pub fn lower(&self) -> &CElement {
        &self.lower
    }

    pub fn upper(&self) -> &CElement {
        &self.upper
    }

    /// The `i`-th witness.
    pub fn get(&self, i: usize) -> CElement {
        let word = self.prefix.concat(&Word::ones_then_zero(i));
        CElement::new(self.parent.clone(), word, self.level).expect("witness term is well formed")
    }

    pub fn iter(&self) -> impl Iterator<Item = CElement> + '_ {
        (0..).map(|i| self.get(i))
    }
}

fn scheme(x: &CElement, y: &CElement) -> (CElement, Word, u32) {
    let top = x.level().max(y.level());
    let x_top = x.level() == top;
    let y_top = y.level() == top;
    if x_top && !y_top {
        let p = x.parent().expect("x is above level 0").clone();
        return (p, x.word().clone(), top);
    }
    if !x_top {
        let a = y.parent().expect("y is above level 0");
        if !a.same(x) {
            debug_assert!(c_lt(x, a));
            return scheme(x, a);
        }
    }
    (x.clone(), Word::empty(), top + 1)
}

/// The first `k` witnesses of the interval `(x, y)`.
pub fn antichain_in_interval(x: &CElement, y: &CElement, k: usize) -> Result<Vec<CElement>, ConstructionError> {
    Ok(IntervalWitnessStream::new(x, y)?.iter().take(k).collect())
}

/// Checks, using only [`c_leq`], that every element of `zs` lies strictly
/// between `x` and `y` and that they are pairwise distinct and incomparable.
pub fn is_interval_antichain(x: &CElement, y: &CElement, zs: &[CElement]) -> bool {
    let inside = zs
        .iter()
        .all(|z| c_leq(x, z) && c_leq(z, y) && z != x && z != y);
    let antichain = zs.iter().enumerate().all(|(i, a)| {
        zs[i + 1..]
            .iter()
            .all(|b| a != b && !c_leq(a, b) && !c_leq(b, a))
    });
    inside && antichain
}
