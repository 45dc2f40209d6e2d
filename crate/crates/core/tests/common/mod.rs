//! Reference implementations used as oracles by the integration tests. None
//! of these go through the library's search or recursion code paths.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use proptest::prelude::*;
use sperner_core::{CElement, FinitePoset};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> FinitePoset {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture exists");
    sperner_core::order::text::parse_poset(&text).expect("fixture parses")
}

/// The order of C on a parent-closed list of elements, computed stage by
/// stage as lookup tables: `≤_0` is the prefix order, and the pairs first
/// appearing in stage `k` are filled from the stage-`k-1` entries using
/// rules (ii)-(v). Pairs already present keep their value (rule (i)).
pub fn stagewise_order(elements: &[CElement]) -> Vec<Vec<bool>> {
    let n = elements.len();
    let index: HashMap<&CElement, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let parent = |i: usize| -> usize {
        index[elements[i].parent().expect("level >= 1 has a parent")]
    };
    let level = |i: usize| elements[i].level();
    let top = elements.iter().map(CElement::level).max().unwrap_or(0);
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if level(i) == 0 && level(j) == 0 {
                m[i][j] = elements[i].word().is_prefix_of(elements[j].word());
            }
        }
    }
    for stage in 1..=top {
        for i in 0..n {
            for j in 0..n {
                let (ci, cj) = (level(i), level(j));
                if ci.max(cj) != stage {
                    continue;
                }
                m[i][j] = if ci < stage {
                    // (ii)
                    m[i][parent(j)]
                } else if cj < stage {
                    // (iii)
                    let a = parent(i);
                    a != j && m[a][j]
                } else {
                    let (a1, a2) = (parent(i), parent(j));
                    // (iv) or (v)
                    (a1 == a2 && elements[i].word().is_prefix_of(elements[j].word()))
                        || (a1 != a2 && m[a1][a2])
                };
            }
        }
    }
    m
}

/// Warshall closure of a strict relation given as pairs.
pub fn warshall(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        m[i][i] = true;
    }
    for &(a, b) in pairs {
        m[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    m
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn mask_is_antichain(p: &FinitePoset, mask: u32) -> bool {
    let m = members(mask, p.len());
    m.iter()
        .all(|&a| m.iter().all(|&b| a == b || (!p.leq(a, b) && !p.leq(b, a))))
}

/// All maximal antichains by the definition: antichains with no strictly
/// larger antichain containing them. Sorted lexicographically.
pub fn brute_maximal_antichains(p: &FinitePoset) -> Vec<Vec<usize>> {
    let n = p.len();
    assert!(n <= 12, "oracle is quadratic in 2^n");
    let antichains: Vec<u32> = (0u32..1 << n).filter(|&m| mask_is_antichain(p, m)).collect();
    let mut out: Vec<Vec<usize>> = antichains
        .iter()
        .filter(|&&a| !antichains.iter().any(|&b| b != a && b & a == a))
        .map(|&a| members(a, n))
        .collect();
    out.sort();
    out
}

/// Whether some partition of `a` splits, trying partitions from the last
/// mask down and testing coverage element by element.
pub fn brute_split_exists(p: &FinitePoset, a: &[usize]) -> bool {
    let k = a.len();
    (0u64..1 << k).rev().any(|mask| {
        let (down, up): (Vec<usize>, Vec<usize>) = {
            let mut d = Vec::new();
            let mut u = Vec::new();
            for (bit, &s) in a.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    d.push(s)
                } else {
                    u.push(s)
                }
            }
            (d, u)
        };
        (0..p.len()).all(|z| down.iter().any(|&d| p.leq(z, d)) || up.iter().any(|&u| p.leq(u, z)))
    })
}

/// Random finite posets on `v0..v{n-1}` generated from upper-triangular
/// strict relations, returned with those relations.
pub fn arb_poset(max: usize) -> impl Strategy<Value = (FinitePoset, Vec<(usize, usize)>)> {
    (0..=max)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let len = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(prop::bool::weighted(0.35), len))
        })
        .prop_map(|(n, pairs, keep)| {
            let chosen: Vec<(usize, usize)> = pairs
                .into_iter()
                .zip(keep)
                .filter_map(|(p, k)| k.then_some(p))
                .collect();
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let covers: Vec<(String, String)> = chosen
                .iter()
                .map(|&(a, b)| (names[a].clone(), names[b].clone()))
                .collect();
            let p = FinitePoset::from_cover_relations(names, covers).expect("acyclic by construction");
            (p, chosen)
        })
}

/// Random well-formed elements of C with bounded level and word length.
pub fn arb_celement(max_level: u32, max_len: usize) -> impl Strategy<Value = CElement> {
    let word = proptest::collection::vec(any::<bool>(), 0..=max_len);
    let leaf = word.clone().prop_map(|w| CElement::base(sperner_core::Word::from_bits(w)));
    leaf.prop_recursive(max_level, 64, 1, move |inner| {
        (
            inner,
            proptest::collection::vec(any::<bool>(), 1..=max_len.max(1)),
            0u32..2,
        )
            .prop_map(|(parent, bits, bump)| {
                let level = parent.level() + 1 + bump;
                CElement::new(parent, sperner_core::Word::from_bits(bits), level).expect("well formed")
            })
    })
}
