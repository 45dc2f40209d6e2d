use std::collections::HashMap;

use super::{c_leq, CElement, ConstructionError, Word};
use crate::order::FinitePoset;

/// Selects the finite fragment of C with levels `≤ max_level` and every word
/// in the term (ancestors included) of length `≤ max_depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationSpec {
    pub max_level: u32,
    pub max_depth: u32,
}

impl TruncationSpec {
    /// Largest fragment [`truncate`] materializes unless told otherwise.
    pub const DEFAULT_CAPACITY: usize = 4096;

    pub fn new(max_level: u32, max_depth: u32) -> Self {
        Self {
            max_level,
            max_depth,
        }
    }

    /// `(2^{d+1} - 1)^{n+1}`, or `None` on overflow.
    pub fn element_count(&self) -> Option<u128> {
        let words = 1u128.checked_shl(self.max_depth + 1)? - 1;
        words.checked_pow(self.max_level + 1)
    }

    pub fn contains(&self, e: &CElement) -> bool {
        e.level() <= self.max_level && e.depth() <= self.max_depth as usize
    }
}

/// A materialized fragment of C: its elements, listed level by level, and
/// the induced order.
#[derive(Debug, Clone)]
pub struct Truncation {
    spec: TruncationSpec,
    elements: Vec<CElement>,
    index: HashMap<CElement, usize>,
    poset: FinitePoset,
}

impl Truncation {
    pub fn spec(&self) -> TruncationSpec {
        self.spec
    }

    pub fn elements(&self) -> &[CElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The fragment as a finite poset whose element names are the literals.
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn index_of(&self, e: &CElement) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Elements of the fragment without building the order: level-0 words in
/// shortlex order, then for each level `k` and each element `a` already
/// listed, `⟨a, s, k⟩` for the non-empty words `s` in shortlex order.
pub fn truncation_elements(spec: TruncationSpec) -> Vec<CElement> {
    let words = Word::all_up_to(spec.max_depth as usize);
    let mut elements: Vec<CElement> = words.iter().cloned().map(CElement::base).collect();
    for level in 1..=spec.max_level {
        let below = elements.len();
        for a in 0..below {
            for s in words.iter().filter(|w| !w.is_empty()) {
                let parent = elements[a].clone();
                elements.push(CElement::new(parent, s.clone(), level).expect("parent is below level"));
            }
        }
    }
    elements
}

pub fn truncate(spec: TruncationSpec) -> Result<Truncation, ConstructionError> {
    truncate_with_capacity(spec, TruncationSpec::DEFAULT_CAPACITY)
}

pub fn truncate_with_capacity(spec: TruncationSpec, capacity: usize) -> Result<Truncation, ConstructionError> {
    let size = spec.element_count().unwrap_or(u128::MAX);
    if size > capacity as u128 {
        return Err(ConstructionError::Capacity {
            size,
            limit: capacity,
        });
    }
    let elements = truncation_elements(spec);
    debug_assert_eq!(elements.len() as u128, size);
    let poset = FinitePoset::from_fn(elements.iter().map(|e| e.to_string()), |i, j| {
        c_leq(&elements[i], &elements[j])
    })?;
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    Ok(Truncation {
        spec,
        elements,
        index,
        poset,
    })
}
