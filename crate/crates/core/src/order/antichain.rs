use super::{relation, union_rows, FinitePoset, Limits, PosetError};

/// A set of pairwise incomparable elements, members sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain(Vec<usize>);

impl Antichain {
    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A partition `{D, U}` of an antichain such that `D(D) ∪ U(U)` is the
/// whole poset. Either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub down: Vec<usize>,
    pub up: Vec<usize>,
}

/// Outcome of [`FinitePoset::has_splitting_property`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Splitting {
    /// Every maximal antichain splits; carries how many were checked.
    Holds { antichains: usize },
    /// The first maximal antichain (in canonical order) that does not split.
    Fails { antichain: Antichain },
}

impl Splitting {
    pub fn holds(&self) -> bool {
        matches!(self, Splitting::Holds { .. })
    }
}

impl FinitePoset {
    /// Validates `members` as an antichain.
    pub fn antichain(&self, members: &[usize]) -> Result<Option<Antichain>, PosetError> {
        if !self.is_antichain(members)? {
            return Ok(None);
        }
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        Ok(Some(Antichain(m)))
    }

    /// Every maximal antichain exactly once, ordered lexicographically by
    /// their sorted index lists.
    pub fn enumerate_maximal_antichains(&self, limits: Limits) -> Result<Vec<Antichain>, PosetError> {
        if self.len() > limits.max_elements {
            return Err(PosetError::Capacity {
                what: "poset",
                size: self.len(),
                limit: limits.max_elements,
            });
        }
        let n = self.len();
        let words = n.div_ceil(64);
        // incomparable[i] = elements incomparable to i (i itself excluded)
        let incomparable: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in 0..n {
                    if self.incomparable(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();

        let mut out = Vec::new();
        let mut current = Vec::new();
        let all = full_mask(n);
        // Preorder over the tree of antichains, children in increasing index:
        // this visits sorted index lists in lexicographic order.
        fn visit(
            start: usize,
            free: &[u64],
            incomparable: &[Vec<u64>],
            current: &mut Vec<usize>,
            out: &mut Vec<Antichain>,
        ) {
            // `free` = elements incomparable to every member of `current`
            if free.iter().all(|&w| w == 0) {
                out.push(Antichain(current.clone()));
            }
            for j in relation::ones(free).filter(|&j| j >= start).collect::<Vec<_>>() {
                let next: Vec<u64> = free.iter().zip(&incomparable[j]).map(|(a, b)| a & b).collect();
                current.push(j);
                visit(j + 1, &next, incomparable, current, out);
                current.pop();
            }
        }
        visit(0, &all, &incomparable, &mut current, &mut out);
        Ok(out)
    }

    /// Searches the `2^|a|` partitions of the maximal antichain `a` for a
    /// split. Partition `mask` puts member `k` in `D` iff bit `k` is set;
    /// masks are tried in increasing order and the first success is returned.
    pub fn try_split(&self, a: &[usize], limits: Limits) -> Result<Option<SplitPartition>, PosetError> {
        if !self.is_maximal_antichain(a)? {
            return Err(PosetError::NotMaximalAntichain(a.to_vec()));
        }
        let mut members = a.to_vec();
        members.sort_unstable();
        members.dedup();
        let k = members.len();
        // masks are u64
        let limit = limits.max_antichain.min(63);
        if k > limit {
            return Err(PosetError::Capacity {
                what: "antichain",
                size: k,
                limit,
            });
        }
        let all = full_mask(self.len());
        // Per-member principal down- and up-sets.
        let downs: Vec<Vec<u64>> = members.iter().map(|&s| union_rows(&self.geq, &[s])).collect();
        let ups: Vec<Vec<u64>> = members.iter().map(|&s| union_rows(&self.leq, &[s])).collect();
        let mut cover = vec![0u64; all.len()];
        for mask in 0u64..(1u64 << k) {
            cover.iter_mut().for_each(|w| *w = 0);
            for m in 0..k {
                let src = if mask >> m & 1 == 1 { &downs[m] } else { &ups[m] };
                for (c, s) in cover.iter_mut().zip(src) {
                    *c |= s;
                }
            }
            if cover == all {
                let (down, up) = (0..k).partition::<Vec<_>, _>(|&m| mask >> m & 1 == 1);
                return Ok(Some(SplitPartition {
                    down: down.into_iter().map(|m| members[m]).collect(),
                    up: up.into_iter().map(|m| members[m]).collect(),
                }));
            }
        }
        Ok(None)
    }

    /// Checks that `split` partitions `a` and that `D(down) ∪ U(up)` covers
    /// the poset.
    pub fn is_split_of(&self, a: &[usize], split: &SplitPartition) -> Result<bool, PosetError> {
        self.check(a)?;
        self.check(&split.down)?;
        self.check(&split.up)?;
        let mut parts: Vec<usize> = split.down.iter().chain(&split.up).copied().collect();
        parts.sort_unstable();
        let before = parts.len();
        parts.dedup();
        let mut target = a.to_vec();
        target.sort_unstable();
        target.dedup();
        if before != parts.len() || parts != target {
            return Ok(false);
        }
        let mut covered = self.down_set(&split.down)?;
        covered.extend(self.up_set(&split.up)?);
        Ok(covered.len() == self.len())
    }

    /// Every maximal antichain splits. Reports the first one that does not.
    pub fn has_splitting_property(&self, limits: Limits) -> Result<Splitting, PosetError> {
        let antichains = self.enumerate_maximal_antichains(limits)?;
        for a in &antichains {
            if self.try_split(a.members(), limits)?.is_none() {
                return Ok(Splitting::Fails { antichain: a.clone() });
            }
        }
        Ok(Splitting::Holds {
            antichains: antichains.len(),
        })
    }
}

fn full_mask(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; n.div_ceil(64)];
    if n % 64 != 0 {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    fn names(p: &FinitePoset, a: &Antichain) -> Vec<String> {
        p.names_of(a.members()).into_iter().map(String::from).collect()
    }

    #[test]
    fn enumerate_examples() {
        let p = antichain(2);
        let got = p.enumerate_maximal_antichains(Limits::default()).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].members(), &[0, 1]);

        let c = two_chain();
        let got: Vec<_> = c
            .enumerate_maximal_antichains(Limits::default())
            .unwrap()
            .iter()
            .map(|a| names(&c, a))
            .collect();
        assert_eq!(got, vec![vec!["a"], vec!["b"]]);

        let d = diamond();
        let got: Vec<_> = d
            .enumerate_maximal_antichains(Limits::default())
            .unwrap()
            .iter()
            .map(|a| names(&d, a))
            .collect();
        assert_eq!(got, vec![vec!["bot"], vec!["a", "b"], vec!["top"]]);
    }

    #[test]
    fn enumerate_respects_bound() {
        let p = antichain(21);
        assert_eq!(
            p.enumerate_maximal_antichains(Limits::default()),
            Err(PosetError::Capacity {
                what: "poset",
                size: 21,
                limit: 20
            })
        );
        assert_eq!(chain(21).enumerate_maximal_antichains(Limits::uniform(21)).unwrap().len(), 21);
    }

    #[test]
    fn empty_poset_is_degenerate_but_valid() {
        let p = FinitePoset::from_fn(Vec::<String>::new(), |_, _| true).unwrap();
        let all = p.enumerate_maximal_antichains(Limits::default()).unwrap();
        assert_eq!(all, vec![Antichain(vec![])]);
        assert!(p.has_splitting_property(Limits::default()).unwrap().holds());
    }

    #[test]
    fn try_split_examples() {
        let d = diamond();
        let ab = d.indices_of(&["a", "b"]).unwrap();
        let s = d.try_split(&ab, Limits::default()).unwrap().unwrap();
        assert_eq!(d.names_of(&s.down), vec!["a"]);
        assert_eq!(d.names_of(&s.up), vec!["b"]);
        assert!(d.is_split_of(&ab, &s).unwrap());

        let t = binary_tree(2);
        let a = t.indices_of(&["0", "1"]).unwrap();
        assert_eq!(t.try_split(&a, Limits::default()).unwrap(), None);

        let c = two_chain();
        let s = c.try_split(&[1], Limits::default()).unwrap().unwrap();
        assert_eq!(s, SplitPartition { down: vec![1], up: vec![] });
    }

    #[test]
    fn try_split_preconditions() {
        let d = diamond();
        let a = d.indices_of(&["a"]).unwrap();
        assert_eq!(
            d.try_split(&a, Limits::default()),
            Err(PosetError::NotMaximalAntichain(a.clone()))
        );
        let p = antichain(3);
        assert!(matches!(
            p.try_split(&[0, 1, 2], Limits::uniform(2)),
            Err(PosetError::Capacity { what: "antichain", .. })
        ));
    }

    #[test]
    fn splitting_property_examples() {
        assert_eq!(
            diamond().has_splitting_property(Limits::default()).unwrap(),
            Splitting::Holds { antichains: 3 }
        );
        let t = binary_tree(2);
        match t.has_splitting_property(Limits::default()).unwrap() {
            Splitting::Fails { antichain } => assert_eq!(names(&t, &antichain), vec!["0", "1"]),
            other => panic!("expected failure, got {other:?}"),
        }
        assert!(chain(1).has_splitting_property(Limits::default()).unwrap().holds());
    }

    #[test]
    fn is_split_of_rejects_bad_partitions() {
        let d = diamond();
        let ab = d.indices_of(&["a", "b"]).unwrap();
        let overlapping = SplitPartition { down: ab.clone(), up: vec![ab[0]] };
        assert!(!d.is_split_of(&ab, &overlapping).unwrap());
        let not_covering = SplitPartition { down: vec![], up: ab.clone() };
        assert!(!d.is_split_of(&ab, &not_covering).unwrap());
    }
}
