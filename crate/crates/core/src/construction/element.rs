//! Element terms of C and their literal syntax.
//!
//! ```text
//! elem  ::= "(0," word ")" | "(" level "," elem "," word ")"
//! word  ::= "e" | bit+
//! level ::= decimal >= 1
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{ConstructionError, Word};

/// An element `⟨parent, word, level⟩` of C.
///
/// Level-0 elements have no parent and may carry any word. An element of
/// level `c ≥ 1` has a parent of level at most `c - 1` and a non-empty word.
/// Two elements are equal iff their terms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CElement(Arc<Term>);

#[derive(PartialEq, Eq, Hash)]
struct Term {
    level: u32,
    parent: Option<CElement>,
    word: Word,
}

impl CElement {
    /// `⟨∅, ⟨⟩, 0⟩`.
    pub fn root() -> Self {
        Self::base(Word::empty())
    }

    /// `⟨∅, word, 0⟩`.
    pub fn base(word: Word) -> Self {
        CElement(Arc::new(Term {
            level: 0,
            parent: None,
            word,
        }))
    }

    /// `⟨parent, word, level⟩` for `level ≥ 1`.
    pub fn new(parent: CElement, word: Word, level: u32) -> Result<Self, ConstructionError> {
        if level == 0 {
            return Err(ConstructionError::Invariant(
                "level-0 elements have no parent".into(),
            ));
        }
        if parent.level() >= level {
            return Err(ConstructionError::Invariant(format!(
                "parent {parent} has level {}, which is not below {level}",
                parent.level()
            )));
        }
        if word.is_empty() {
            return Err(ConstructionError::Invariant(format!(
                "the word of a level-{level} element must be non-empty"
            )));
        }
        Ok(CElement(Arc::new(Term {
            level,
            parent: Some(parent),
            word,
        })))
    }

    pub fn level(&self) -> u32 {
        self.0.level
    }

    pub fn parent(&self) -> Option<&CElement> {
        self.0.parent.as_ref()
    }

    pub fn word(&self) -> &Word {
        &self.0.word
    }

    /// Longest word in the term, ancestors included.
    pub fn depth(&self) -> usize {
        let own = self.word().len();
        self.parent().map_or(own, |p| own.max(p.depth()))
    }

    /// Cheap identity check before falling back to structural comparison.
    pub fn same(&self, other: &CElement) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self == other
    }
}

impl fmt::Display for CElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parent() {
            None => write!(f, "(0,{})", self.word()),
            Some(p) => write!(f, "({},{},{})", self.level(), p, self.word()),
        }
    }
}

impl fmt::Debug for CElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CElement {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_celement(s)
    }
}

pub fn parse_celement(text: &str) -> Result<CElement, ConstructionError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.elem()?;
    if p.pos != p.src.len() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

pub fn render_celement(e: &CElement) -> String {
    e.to_string()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> ConstructionError {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("`{}`", c as char),
            None => "end of input".into(),
        };
        ConstructionError::Syntax {
            pos: self.pos,
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ConstructionError> {
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("`{}`", c as char)))
        }
    }

    fn elem(&mut self) -> Result<CElement, ConstructionError> {
        let start = self.pos;
        self.expect(b'(')?;
        let level = self.level()?;
        self.expect(b',')?;
        let e = if level == 0 {
            let word = self.word()?;
            CElement::base(word)
        } else {
            let parent = self.elem()?;
            self.expect(b',')?;
            let word_pos = self.pos;
            let word = self.word()?;
            if word.is_empty() {
                return Err(ConstructionError::Invariant(format!(
                    "at {word_pos}: the empty word is only allowed at level 0"
                )));
            }
            CElement::new(parent, word, level).map_err(|e| match e {
                ConstructionError::Invariant(m) => ConstructionError::Invariant(format!("at {start}: {m}")),
                other => other,
            })?
        };
        self.expect(b')')?;
        Ok(e)
    }

    fn level(&mut self) -> Result<u32, ConstructionError> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a level"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        if digits.len() > 1 && digits.starts_with('0') {
            self.pos = start;
            return Err(self.error("a level without leading zeros"));
        }
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("a level that fits in 32 bits")
        })
    }

    fn word(&mut self) -> Result<Word, ConstructionError> {
        if self.src.get(self.pos) == Some(&b'e') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(b'0' | b'1')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a word (`e` or bits)"));
        }
        Ok(Word::from_bits(self.src[start..self.pos].iter().map(|&b| b == b'1')))
    }
}
