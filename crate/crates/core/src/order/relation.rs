//! Dense square boolean relation stored as one bitset row per element.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(WORD);
        Self {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j);
                }
            }
        }
        m
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.stride + j / WORD] |= 1 << (j % WORD);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// Indices `j` with `self[i][j]` set, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                t.set(j, i);
            }
        }
        t
    }

    /// Boolean product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = Self::new(self.n);
        for i in 0..self.n {
            let base = i * self.stride;
            let dst = &mut out.bits[base..base + self.stride];
            for k in ones(&self.bits[base..base + self.stride]) {
                for (w, s) in dst.iter_mut().zip(other.row(k)) {
                    *w |= s;
                }
            }
        }
        out
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    /// `self ⊆ other` entrywise.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Reflexive-transitive closure by repeated squaring: `R ← R ∪ R·R` until
    /// nothing changes. Each round at least doubles the path length covered,
    /// so there are at most ⌈log₂ n⌉ + 1 rounds.
    pub fn reflexive_transitive_closure(&self) -> Self {
        let mut r = self.clone();
        r.union_with(&Self::identity(self.n));
        loop {
            let mut next = r.compose(&r);
            next.union_with(&r);
            if next == r {
                return r;
            }
            r = next;
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// First pair `x < y` (row-major) whose open interval is non-empty and a
/// chain. `leq` must be a partial order and `geq` its transpose.
pub(crate) fn thin_interval(leq: &BitMatrix, geq: &BitMatrix) -> Option<(usize, usize)> {
    let stride = leq.stride;
    let mut between = vec![0u64; stride];
    for x in 0..leq.n {
        for y in leq.row_ones(x) {
            if x == y {
                continue;
            }
            let mut any = false;
            for (w, (a, b)) in between.iter_mut().zip(leq.row(x).iter().zip(geq.row(y))) {
                *w = a & b;
                any |= *w != 0;
            }
            between[x / WORD] &= !(1 << (x % WORD));
            between[y / WORD] &= !(1 << (y % WORD));
            if !any || between.iter().all(|&w| w == 0) {
                continue;
            }
            // a chain iff every member is comparable to every other member
            let chain = ones(&between).all(|a| {
                between
                    .iter()
                    .zip(leq.row(a).iter().zip(geq.row(a)))
                    .all(|(&w, (up, down))| w & !(up | down) == 0)
            });
            if chain {
                return Some((x, y));
            }
        }
    }
    None
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let tz = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * WORD + tz)
        })
    })
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
