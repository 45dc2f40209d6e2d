//! Small named posets used throughout tests, examples and the CLI.

use super::FinitePoset;

/// `a < b`.
pub fn two_chain() -> FinitePoset {
    FinitePoset::from_cover_relations(["a", "b"], [("a", "b")]).expect("valid")
}

/// `bot < a, b < top` with `a`, `b` incomparable.
pub fn diamond() -> FinitePoset {
    FinitePoset::from_cover_relations(
        ["bot", "a", "b", "top"],
        [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
    )
    .expect("valid")
}

/// `v0 < v1 < … < v{n-1}`.
pub fn chain(n: usize) -> FinitePoset {
    FinitePoset::from_fn((0..n).map(|i| format!("v{i}")), |i, j| i <= j).expect("valid")
}

/// `n` pairwise incomparable elements.
pub fn antichain(n: usize) -> FinitePoset {
    FinitePoset::from_fn((0..n).map(|i| format!("v{i}")), |i, j| i == j).expect("valid")
}

/// Binary words of length at most `depth` under the prefix order, named by
/// their bits (`e` for the empty word) and listed shortest first.
pub fn binary_tree(depth: usize) -> FinitePoset {
    let words: Vec<String> = (0..=depth)
        .flat_map(|len| (0..1usize << len).map(move |v| word_name(v, len)))
        .collect();
    FinitePoset::from_fn(words.clone(), |i, j| {
        let (s, t) = (&words[i], &words[j]);
        s == "e" || t.starts_with(s.as_str())
    })
    .expect("prefix order is a partial order")
}

fn word_name(v: usize, len: usize) -> String {
    if len == 0 {
        "e".to_string()
    } else {
        (0..len)
            .rev()
            .map(|b| if v >> b & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}
