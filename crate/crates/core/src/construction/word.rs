use std::fmt;

/// A finite binary word, ordered by the initial-segment relation `⊴`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        Word(bits.into_iter().collect())
    }

    /// `1^ones ⌢ 0`.
    pub fn ones_then_zero(ones: usize) -> Self {
        let mut bits = vec![true; ones];
        bits.push(false);
        Word(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// `self ⊴ other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn concat(&self, tail: &Word) -> Word {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&tail.0);
        Word(bits)
    }

    /// Every word of length at most `depth`, shortest first and
    /// lexicographic within a length.
    pub fn all_up_to(depth: usize) -> Vec<Word> {
        (0..=depth)
            .flat_map(|len| {
                (0u64..1 << len).map(move |v| Word((0..len).rev().map(|b| v >> b & 1 == 1).collect()))
            })
            .collect()
    }
}

impl fmt::Display for Word {
    /// `e` for the empty word, otherwise the bits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
