//! Seeded random finite posets, filtered for strong density, and a check
//! that every accepted sample has the splitting property.
//!
//! Draw `i` of seed `s` is generated from its own ChaCha stream, so any draw
//! can be reproduced without replaying the ones before it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::order::{thin_interval, BitMatrix, FinitePoset, Limits, PosetError, Splitting};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SampleError {
    #[error("invalid sample configuration: {0}")]
    Config(String),
    #[error("draw budget of {draws} exhausted with {found} of {requested} strongly dense samples")]
    BudgetExhausted {
        found: usize,
        requested: usize,
        draws: u64,
    },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleConfig {
    pub size: usize,
    pub count: usize,
    pub seed: u64,
    pub edge_density: f64,
}

impl SampleConfig {
    /// Draws allowed per requested sample.
    pub const DRAWS_PER_SAMPLE: u64 = 10_000;

    pub fn validate(&self) -> Result<(), SampleError> {
        if self.size < 1 {
            return Err(SampleError::Config("size must be at least 1".into()));
        }
        if self.count < 1 {
            return Err(SampleError::Config("count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.edge_density) {
            return Err(SampleError::Config(format!(
                "edge density {} is outside [0, 1]",
                self.edge_density
            )));
        }
        Ok(())
    }

    pub fn draw_budget(&self) -> u64 {
        Self::DRAWS_PER_SAMPLE.saturating_mul(self.count as u64)
    }
}

/// Includes each pair `(i, j)`, `i < j`, as `v_i < v_j` with probability
/// `edge_density`, then closes reflexively and transitively.
pub fn random_poset(config: &SampleConfig, draw: u64) -> FinitePoset {
    FinitePoset::from_relation((0..config.size).map(|i| format!("v{i}")), random_order(config, draw))
        .expect("upper-triangular relations close to partial orders")
}

fn random_order(config: &SampleConfig, draw: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(draw);
    let n = config.size;
    let mut m = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(config.edge_density) {
                m.set(i, j);
            }
        }
    }
    m.reflexive_transitive_closure()
}

/// A strongly dense sample together with the draw that produced it.
#[derive(Debug, Clone)]
pub struct Sample {
    pub draw: u64,
    pub poset: FinitePoset,
}

/// Draws posets in index order until `count` are strongly dense.
pub fn sample_strongly_dense(config: &SampleConfig) -> Result<Vec<Sample>, SampleError> {
    config.validate()?;
    let budget = config.draw_budget();
    let mut out = Vec::with_capacity(config.count);
    for draw in 0..budget {
        let order = random_order(config, draw);
        if thin_interval(&order, &order.transpose()).is_none() {
            let poset = random_poset(config, draw);
            debug_assert!(poset.is_strongly_dense());
            out.push(Sample { draw, poset });
            if out.len() == config.count {
                return Ok(out);
            }
        }
    }
    Err(SampleError::BudgetExhausted {
        found: out.len(),
        requested: config.count,
        draws: budget,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleLine {
    pub draw: u64,
    pub size: usize,
    pub maximal_antichains: usize,
    pub all_split: bool,
    /// Some open interval is non-empty, so strong density is not vacuous.
    pub nontrivial: bool,
    /// The first maximal antichain that fails to split, by element name.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AegReport {
    pub lines: Vec<SampleLine>,
    /// Candidates turned away because they are not strongly dense.
    pub rejected: usize,
}

impl AegReport {
    pub fn samples(&self) -> usize {
        self.lines.len()
    }

    pub fn maximal_antichains(&self) -> usize {
        self.lines.iter().map(|l| l.maximal_antichains).sum()
    }

    pub fn nontrivial(&self) -> usize {
        self.lines.iter().filter(|l| l.nontrivial).count()
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.all_split).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for AegReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            write!(
                f,
                "draw={} n={} maximal_antichains={} all_split={}",
                l.draw, l.size, l.maximal_antichains, l.all_split
            )?;
            if let Some(a) = &l.counterexample {
                write!(f, " counterexample={{{}}}", a.join(","))?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "summary samples={} nontrivial={} rejected={} maximal_antichains={} failures={}",
            self.samples(),
            self.nontrivial(),
            self.rejected,
            self.maximal_antichains(),
            self.failures()
        )
    }
}

/// Filters `candidates` for strong density and runs the splitting check on
/// the survivors. Lines are sorted by draw index.
pub fn check_candidates(
    candidates: impl IntoIterator<Item = (u64, FinitePoset)>,
    limits: Limits,
) -> Result<AegReport, SampleError> {
    let mut report = AegReport::default();
    for (draw, poset) in candidates {
        if !poset.is_strongly_dense() {
            report.rejected += 1;
            continue;
        }
        let nontrivial = poset.cover_pairs().len() < poset.relation().count_ones() - poset.len();
        let line = match poset.has_splitting_property(limits)? {
            Splitting::Holds { antichains } => SampleLine {
                draw,
                size: poset.len(),
                maximal_antichains: antichains,
                all_split: true,
                nontrivial,
                counterexample: None,
            },
            Splitting::Fails { antichain } => SampleLine {
                draw,
                size: poset.len(),
                maximal_antichains: poset.enumerate_maximal_antichains(limits)?.len(),
                all_split: false,
                nontrivial,
                counterexample: Some(
                    poset
                        .names_of(antichain.members())
                        .into_iter()
                        .map(String::from)
                        .collect(),
                ),
            },
        };
        report.lines.push(line);
    }
    report.lines.sort_by_key(|l| l.draw);
    Ok(report)
}

/// Samples strongly dense posets and checks each for the splitting property.
pub fn verify_aeg(config: &SampleConfig, limits: Limits) -> Result<AegReport, SampleError> {
    config.validate()?;
    if config.size > limits.max_elements {
        return Err(PosetError::Capacity {
            what: "poset",
            size: config.size,
            limit: limits.max_elements,
        }
        .into());
    }
    let samples = sample_strongly_dense(config)?;
    check_candidates(samples.into_iter().map(|s| (s.draw, s.poset)), limits)
}
