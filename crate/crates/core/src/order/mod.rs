//! Finite partially ordered sets.
//!
//! A [`FinitePoset`] is an indexed list of named elements together with a
//! dense `≤` relation. Every query takes element indices; names are resolved
//! once with [`FinitePoset::indices_of`]. All operations are pure, and a poset
//! is immutable once built, so it can be shared freely across threads.
//!
//! The brute-force searches (maximal antichain enumeration, split search)
//! are exponential and are guarded by [`Limits`]; exceeding a bound is an
//! error, never a silent truncation.

mod antichain;
pub mod families;
mod relation;
pub mod text;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

pub use antichain::{Antichain, Splitting, SplitPartition};
pub use relation::BitMatrix;
pub(crate) use relation::thin_interval;

/// Sorted set of element indices.
pub type ElementSet = BTreeSet<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("element index {index} out of range for a poset of {len} elements")]
    UnknownIndex { index: usize, len: usize },
    #[error("duplicate element `{0}`")]
    Duplicate(String),
    #[error("order relations contain a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("{what} has {size} elements, exceeding the brute-force bound of {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{0:?} is not a maximal antichain")]
    NotMaximalAntichain(Vec<usize>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Bounds for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset for which maximal antichains are enumerated.
    pub max_elements: usize,
    /// Largest antichain whose `2^k` partitions are searched for a split.
    pub max_antichain: usize,
}

impl Limits {
    pub const DEFAULT_BOUND: usize = 20;

    pub fn uniform(bound: usize) -> Self {
        Self {
            max_elements: bound,
            max_antichain: bound,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::uniform(Self::DEFAULT_BOUND)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `leq[i][j]` iff `i ≤ j`.
    leq: BitMatrix,
    /// Transpose of `leq`; row `i` is the principal down-set of `i`.
    geq: BitMatrix,
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinitePoset")
            .field("elements", &self.names)
            .field("relations", &self.leq.count_ones())
            .finish()
    }
}

impl FinitePoset {
    /// Builds a poset from an explicit relation matrix, checking that it is
    /// reflexive, antisymmetric and transitive.
    pub fn from_relation<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        leq: BitMatrix,
    ) -> Result<Self, PosetError> {
        let (names, index) = index_names(names)?;
        if names.len() != leq.len() {
            return Err(PosetError::NotPartialOrder(format!(
                "{} names for a {}x{} relation",
                names.len(),
                leq.len(),
                leq.len()
            )));
        }
        let n = names.len();
        for i in 0..n {
            if !leq.get(i, i) {
                return Err(PosetError::NotPartialOrder(format!(
                    "not reflexive at `{}`",
                    names[i]
                )));
            }
        }
        for i in 0..n {
            for j in leq.row_ones(i) {
                if i != j && leq.get(j, i) {
                    return Err(PosetError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        if !leq.is_transitive() {
            return Err(PosetError::NotPartialOrder("not transitive".into()));
        }
        let geq = leq.transpose();
        Ok(Self {
            names,
            index,
            leq,
            geq,
        })
    }

    /// Builds a poset by evaluating `leq(i, j)` on every ordered pair.
    pub fn from_fn<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        leq: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let m = BitMatrix::from_fn(names.len(), leq);
        Self::from_relation(names, m)
    }

    /// Reflexive-transitive closure of the declared `a < b` pairs.
    pub fn from_cover_relations<S, A, B>(
        elements: impl IntoIterator<Item = S>,
        covers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, PosetError>
    where
        S: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let (names, index) = index_names(elements)?;
        let mut m = BitMatrix::new(names.len());
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| PosetError::UnknownName(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| PosetError::UnknownName(b.to_string()))?;
            if i == j {
                return Err(PosetError::Cycle(a.to_string(), b.to_string()));
            }
            m.set(i, j);
        }
        let closed = m.reflexive_transitive_closure();
        let poset = Self::from_relation(names, closed)?;
        debug_assert_eq!(poset.index, index);
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn relation(&self) -> &BitMatrix {
        &self.leq
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PosetError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| PosetError::UnknownName(name.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>, PosetError> {
        names.iter().map(|n| self.index_of(n.as_ref())).collect()
    }

    pub fn names_of<'a>(&'a self, set: impl IntoIterator<Item = &'a usize>) -> Vec<&'a str> {
        set.into_iter().map(|&i| self.name(i)).collect()
    }

    fn check(&self, h: &[usize]) -> Result<(), PosetError> {
        match h.iter().find(|&&i| i >= self.len()) {
            Some(&index) => Err(PosetError::UnknownIndex {
                index,
                len: self.len(),
            }),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// Bitset of every element `≤` some member of `h`.
    fn down_words(&self, h: &[usize]) -> Vec<u64> {
        union_rows(&self.geq, h)
    }

    fn up_words(&self, h: &[usize]) -> Vec<u64> {
        union_rows(&self.leq, h)
    }

    /// `{x : ∃ s ∈ h, x ≤ s}`.
    pub fn down_set(&self, h: &[usize]) -> Result<ElementSet, PosetError> {
        self.check(h)?;
        Ok(relation::ones(&self.down_words(h)).collect())
    }

    /// `{x : ∃ s ∈ h, x ≥ s}`.
    pub fn up_set(&self, h: &[usize]) -> Result<ElementSet, PosetError> {
        self.check(h)?;
        Ok(relation::ones(&self.up_words(h)).collect())
    }

    /// No two distinct members of `h` are comparable.
    pub fn is_antichain(&self, h: &[usize]) -> Result<bool, PosetError> {
        self.check(h)?;
        Ok(self.antichain_unchecked(h))
    }

    fn antichain_unchecked(&self, h: &[usize]) -> bool {
        h.iter().enumerate().all(|(k, &a)| {
            h[k + 1..]
                .iter()
                .all(|&b| a == b || self.incomparable(a, b))
        })
    }

    /// `a` is an antichain and every element outside it is comparable to
    /// some member of `a`.
    pub fn is_maximal_antichain(&self, a: &[usize]) -> Result<bool, PosetError> {
        self.check(a)?;
        Ok(self.maximal_unchecked(a))
    }

    fn maximal_unchecked(&self, a: &[usize]) -> bool {
        if !self.antichain_unchecked(a) {
            return false;
        }
        let mut covered = self.down_words(a);
        for (w, u) in covered.iter_mut().zip(self.up_words(a)) {
            *w |= u;
        }
        relation::ones(&covered).count() == self.len()
    }

    /// `{z : x < z < y}`; empty unless `x < y`.
    pub fn open_interval(&self, x: usize, y: usize) -> Result<ElementSet, PosetError> {
        self.check(&[x, y])?;
        Ok(self.interval_unchecked(x, y))
    }

    fn interval_unchecked(&self, x: usize, y: usize) -> ElementSet {
        if !self.lt(x, y) {
            return ElementSet::new();
        }
        let both: Vec<u64> = self
            .leq
            .row(x)
            .iter()
            .zip(self.geq.row(y))
            .map(|(a, b)| a & b)
            .collect();
        relation::ones(&both).filter(|&z| z != x && z != y).collect()
    }

    /// First non-empty open interval `(x, y)`, in index order, that contains
    /// no two incomparable elements. `None` means the poset is strongly dense.
    pub fn strong_density_violation(&self) -> Option<(usize, usize)> {
        relation::thin_interval(&self.leq, &self.geq)
    }

    pub fn is_strongly_dense(&self) -> bool {
        self.strong_density_violation().is_none()
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.leq.row_ones(x) {
                if x != y && self.interval_unchecked(x, y).is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The sub-poset on `keep`, in the order given.
    pub fn restrict(&self, keep: &[usize]) -> Result<FinitePoset, PosetError> {
        self.check(keep)?;
        Self::from_fn(keep.iter().map(|&i| self.names[i].clone()), |a, b| {
            self.leq(keep[a], keep[b])
        })
    }

    /// True if `other` has the same element names and the same order,
    /// regardless of element order.
    pub fn same_order_as(&self, other: &FinitePoset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Ok(map) = other.indices_of(&self.names) else {
            return false;
        };
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq(i, j) == other.leq(map[i], map[j])))
    }
}

fn index_names<S: Into<String>>(
    names: impl IntoIterator<Item = S>,
) -> Result<(Vec<String>, HashMap<String, usize>), PosetError> {
    let names: Vec<String> = names.into_iter().map(Into::into).collect();
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(PosetError::Duplicate(n.clone()));
        }
    }
    Ok((names, index))
}

fn union_rows(m: &BitMatrix, h: &[usize]) -> Vec<u64> {
    let mut acc = vec![0u64; m.len().div_ceil(64)];
    for &s in h {
        for (a, r) in acc.iter_mut().zip(m.row(s)) {
            *a |= r;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(p: &FinitePoset, names: &[&str]) -> ElementSet {
        p.indices_of(names).unwrap().into_iter().collect()
    }

    #[test]
    fn down_set_examples() {
        let c = two_chain();
        assert_eq!(c.down_set(&[c.index_of("b").unwrap()]).unwrap(), set(&c, &["a", "b"]));
        assert!(c.down_set(&[]).unwrap().is_empty());
        let d = diamond();
        let a = d.index_of("a").unwrap();
        assert_eq!(d.down_set(&[a]).unwrap(), set(&d, &["bot", "a"]));
    }

    #[test]
    fn up_set_examples() {
        let c = two_chain();
        assert_eq!(c.up_set(&[0]).unwrap(), set(&c, &["a", "b"]));
        assert!(c.up_set(&[]).unwrap().is_empty());
        let d = diamond();
        let b = d.index_of("b").unwrap();
        assert_eq!(d.up_set(&[b]).unwrap(), set(&d, &["b", "top"]));
    }

    #[test]
    fn unknown_index_is_rejected() {
        let d = diamond();
        assert_eq!(
            d.down_set(&[7]),
            Err(PosetError::UnknownIndex { index: 7, len: 4 })
        );
        assert!(d.is_antichain(&[0, 9]).is_err());
        assert!(d.open_interval(0, 4).is_err());
        assert_eq!(d.index_of("zz"), Err(PosetError::UnknownName("zz".into())));
    }

    #[test]
    fn antichain_examples() {
        let d = diamond();
        assert!(d.is_antichain(&d.indices_of(&["a", "b"]).unwrap()).unwrap());
        let c = two_chain();
        assert!(!c.is_antichain(&[0, 1]).unwrap());
        assert!(c.is_antichain(&[]).unwrap());
        assert!(c.is_antichain(&[1]).unwrap());
    }

    #[test]
    fn maximal_antichain_examples() {
        let d = diamond();
        assert!(d.is_maximal_antichain(&d.indices_of(&["a", "b"]).unwrap()).unwrap());
        assert!(!d.is_maximal_antichain(&d.indices_of(&["a"]).unwrap()).unwrap());
        let t = binary_tree(2);
        assert!(t.is_maximal_antichain(&t.indices_of(&["0", "1"]).unwrap()).unwrap());
        assert!(!t.is_maximal_antichain(&t.indices_of(&["0", "10"]).unwrap()).unwrap());
    }

    #[test]
    fn open_interval_examples() {
        let d = diamond();
        let (bot, top) = (d.index_of("bot").unwrap(), d.index_of("top").unwrap());
        assert_eq!(d.open_interval(bot, top).unwrap(), set(&d, &["a", "b"]));
        assert!(d.open_interval(top, bot).unwrap().is_empty());
        assert!(d.open_interval(bot, bot).unwrap().is_empty());
        let c = two_chain();
        assert!(c.open_interval(0, 1).unwrap().is_empty());
        let t = binary_tree(3);
        let (e, zz) = (t.index_of("e").unwrap(), t.index_of("00").unwrap());
        assert_eq!(t.open_interval(e, zz).unwrap(), set(&t, &["0"]));
    }

    #[test]
    fn strong_density_examples() {
        let t = binary_tree(3);
        let (x, y) = t.strong_density_violation().expect("tree is not strongly dense");
        assert_eq!((t.name(x), t.name(y)), ("e", "00"));
        assert!(diamond().is_strongly_dense());
        assert!(antichain(5).is_strongly_dense());
        assert!(FinitePoset::from_fn(Vec::<String>::new(), |_, _| true)
            .unwrap()
            .is_strongly_dense());
        // a 3-chain has the singleton interval {middle}
        assert!(!chain(3).is_strongly_dense());
        assert!(chain(2).is_strongly_dense());
    }

    #[test]
    fn cover_relation_examples() {
        let p = FinitePoset::from_cover_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(
            FinitePoset::from_cover_relations(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(PosetError::Cycle("a".into(), "b".into()))
        );
        assert_eq!(
            FinitePoset::from_cover_relations(["a"], [("a", "q")]).unwrap_err(),
            PosetError::UnknownName("q".into())
        );
        assert!(matches!(
            FinitePoset::from_cover_relations(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(PosetError::Duplicate(_))
        ));
        assert!(matches!(
            FinitePoset::from_cover_relations(["a"], [("a", "a")]),
            Err(PosetError::Cycle(..))
        ));
    }

    #[test]
    fn from_relation_rejects_non_orders() {
        let not_reflexive = BitMatrix::new(2);
        assert!(matches!(
            FinitePoset::from_relation(["a", "b"], not_reflexive),
            Err(PosetError::NotPartialOrder(_))
        ));
        let mut not_transitive = BitMatrix::identity(3);
        not_transitive.set(0, 1);
        not_transitive.set(1, 2);
        assert!(matches!(
            FinitePoset::from_relation(["a", "b", "c"], not_transitive),
            Err(PosetError::NotPartialOrder(_))
        ));
    }

    #[test]
    fn cover_pairs_of_diamond() {
        let d = diamond();
        let pairs: Vec<(&str, &str)> = d
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| (d.name(x), d.name(y)))
            .collect();
        assert_eq!(pairs, vec![("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")]);
    }
}
