//! The antichain `A = {x̂, ŷ}` of C and exact checks that it is maximal
//! (on finite fragments) and that it does not split.

use std::fmt;

use super::{c_leq, truncate_with_capacity, CElement, ConstructionError, TruncationSpec, Word};

fn on_root(bits: &[bool]) -> CElement {
    CElement::new(CElement::root(), Word::from_bits(bits.iter().copied()), 1).expect("level-1 term")
}

/// `(x̂, ŷ) = (⟨root, ⟨0⟩, 1⟩, ⟨root, ⟨1⟩, 1⟩)`.
pub fn the_antichain_a() -> (CElement, CElement) {
    (on_root(&[false]), on_root(&[true]))
}

/// `⟨root, ⟨0,1⟩, 1⟩`: above `x̂` only.
pub fn witness_w1() -> CElement {
    on_root(&[false, true])
}

/// `⟨root, ⟨1,1⟩, 1⟩`: above `ŷ` only.
pub fn witness_w2() -> CElement {
    on_root(&[true, true])
}

#[derive(Debug, Clone)]
pub struct ClaimTwoReport {
    pub spec: TruncationSpec,
    pub elements_checked: usize,
    /// First element comparable to neither `x̂` nor `ŷ`.
    pub counterexample: Option<CElement>,
    /// `{x̂, ŷ}` is a maximal antichain of the finite fragment.
    pub maximal_in_truncation: bool,
}

impl ClaimTwoReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.maximal_in_truncation
    }
}

impl fmt::Display for ClaimTwoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "maximality levels={} depth={} elements={} counterexamples={}",
            self.spec.max_level,
            self.spec.max_depth,
            self.elements_checked,
            usize::from(self.counterexample.is_some())
        )?;
        if let Some(z) = &self.counterexample {
            writeln!(f, "maximality counterexample z={z}")?;
        }
        writeln!(
            f,
            "maximality is_maximal_antichain={} {}",
            self.maximal_in_truncation,
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Every element of the fragment is comparable to `x̂` or `ŷ`, and
/// `{x̂, ŷ}` passes the generic maximal-antichain check there.
pub fn verify_claim_two(spec: TruncationSpec) -> Result<ClaimTwoReport, ConstructionError> {
    verify_claim_two_with_capacity(spec, TruncationSpec::DEFAULT_CAPACITY)
}

pub fn verify_claim_two_with_capacity(
    spec: TruncationSpec,
    capacity: usize,
) -> Result<ClaimTwoReport, ConstructionError> {
    if spec.max_level < 1 || spec.max_depth < 1 {
        return Err(ConstructionError::Precondition(
            "the fragment must have level ≥ 1 and depth ≥ 1 to contain x̂ and ŷ".into(),
        ));
    }
    let t = truncate_with_capacity(spec, capacity)?;
    let (x, y) = the_antichain_a();
    let counterexample = t
        .elements()
        .iter()
        .find(|z| !(c_leq(&x, z) || c_leq(&y, z) || c_leq(z, &x) || c_leq(z, &y)))
        .cloned();
    let a = [
        t.index_of(&x).expect("x̂ in fragment"),
        t.index_of(&y).expect("ŷ in fragment"),
    ];
    let maximal_in_truncation = t.poset().is_maximal_antichain(&a)?;
    Ok(ClaimTwoReport {
        spec,
        elements_checked: t.len(),
        counterexample,
        maximal_in_truncation,
    })
}

/// Where a witness sits relative to `x̂` and `ŷ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPosition {
    pub element: CElement,
    pub above_x: bool,
    pub above_y: bool,
    pub below_x: bool,
    pub below_y: bool,
}

impl WitnessPosition {
    fn of(element: CElement) -> Self {
        let (x, y) = the_antichain_a();
        Self {
            above_x: c_leq(&x, &element),
            above_y: c_leq(&y, &element),
            below_x: c_leq(&element, &x),
            below_y: c_leq(&element, &y),
            element,
        }
    }
}

/// One of the four partitions `{D, U}` of `A`, with the element that is in
/// neither `D(D)` nor `U(U)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRefutation {
    pub down: Vec<CElement>,
    pub up: Vec<CElement>,
    pub witness: CElement,
    pub refuted: bool,
}

#[derive(Debug, Clone)]
pub struct ClaimThreeReport {
    pub w1: WitnessPosition,
    pub w2: WitnessPosition,
    pub root: WitnessPosition,
    pub partitions: Vec<PartitionRefutation>,
}

impl ClaimThreeReport {
    /// The witnesses sit exactly where they should and every partition is
    /// refuted.
    pub fn witnesses_exact(&self) -> bool {
        let WitnessPosition { above_x, above_y, below_x, .. } = self.w1;
        let w1 = above_x && !above_y && !below_x;
        let WitnessPosition { above_x, above_y, below_y, .. } = self.w2;
        let w2 = above_y && !above_x && !below_y;
        let root = !self.root.above_x && !self.root.above_y;
        w1 && w2 && root
    }

    pub fn passed(&self) -> bool {
        self.witnesses_exact() && self.partitions.len() == 4 && self.partitions.iter().all(|p| p.refuted)
    }
}

fn set(es: &[CElement]) -> String {
    let inner: Vec<String> = es.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for ClaimThreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, w) in [("w1", &self.w1), ("w2", &self.w2), ("root", &self.root)] {
            writeln!(
                f,
                "witness {label}={} above_x={} above_y={} below_x={} below_y={}",
                w.element, w.above_x, w.above_y, w.below_x, w.below_y
            )?;
        }
        for p in &self.partitions {
            writeln!(
                f,
                "partition D={} U={} {} w={}",
                set(&p.down),
                set(&p.up),
                if p.refuted { "refuted" } else { "NOT-REFUTED" },
                p.witness
            )?;
        }
        writeln!(
            f,
            "non-splitting partitions_refuted={}/4 {}",
            self.partitions.iter().filter(|p| p.refuted).count(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Certifies, with [`c_leq`] alone, that no partition of `A` splits it.
pub fn verify_claim_three() -> ClaimThreeReport {
    let (x, y) = the_antichain_a();
    let (w1, w2, root) = (witness_w1(), witness_w2(), CElement::root());
    // (D, U, witness) in mask order: bit 0 puts x̂ in D, bit 1 puts ŷ in D.
    let cases = [
        (vec![], vec![x.clone(), y.clone()], root.clone()),
        (vec![x.clone()], vec![y.clone()], w1.clone()),
        (vec![y.clone()], vec![x.clone()], w2.clone()),
        (vec![x.clone(), y.clone()], vec![], w1.clone()),
    ];
    let partitions = cases
        .into_iter()
        .map(|(down, up, witness)| {
            let covered =
                down.iter().any(|d| c_leq(&witness, d)) || up.iter().any(|u| c_leq(u, &witness));
            PartitionRefutation {
                down,
                up,
                witness,
                refuted: !covered,
            }
        })
        .collect();
    ClaimThreeReport {
        w1: WitnessPosition::of(w1),
        w2: WitnessPosition::of(w2),
        root: WitnessPosition::of(root),
        partitions,
    }
}
