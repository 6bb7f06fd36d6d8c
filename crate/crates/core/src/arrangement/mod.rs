//! Complements of complexified real line arrangements.

mod geometry;
mod poset;
mod salvetti;

pub use geometry::{Line, LineArrangement, OmegaSubset, Point};
pub use poset::{compose, is_face_of, Edge, FacePoset, SignVector, Vertex};
pub use salvetti::{equivariant_salvetti, salvetti_complex, SalvettiCells};

use crate::chain::{unit_reduce, HomologyProfile};
use crate::covers::{run_covers, CoverOutcome};
use crate::error::Result;

/// `(1, n, Σ_p (m_p - 1))` over the intersection points `p` of multiplicity
/// `m_p`.
pub fn combinatorial_betti(arr: &LineArrangement) -> (usize, usize, usize) {
    let poset = FacePoset::new(arr);
    let b2 = poset.vertices.iter().map(|v| v.multiplicity() - 1).sum();
    (1, arr.len(), b2)
}

/// Everything computed for one arrangement and line subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementReport {
    pub lines: Vec<Line>,
    pub omega: Vec<usize>,
    pub combinatorial_betti: (usize, usize, usize),
    pub salvetti_homology: HomologyProfile,
    pub salvetti_cells: [usize; 3],
    /// Ranks of the equivariant complex after unit reduction.
    pub reduced_ranks: Vec<usize>,
    pub outcome: CoverOutcome,
}

impl ArrangementReport {
    /// Integral Salvetti homology agrees with the combinatorial Betti numbers.
    pub fn betti_consistent(&self) -> bool {
        let (b0, b1, b2) = self.combinatorial_betti;
        self.salvetti_homology.is_torsion_free() && self.salvetti_homology.ranks() == vec![b0, b1, b2]
    }
}

/// Salvetti complex, equivariant lift over the generic base chamber, unit
/// reduction, then the covers pipeline.
///
/// A reduced complex that is minimal must have the Betti numbers as ranks;
/// a violation is a construction bug and panics.
pub fn pipeline(arr: &LineArrangement, omega: &OmegaSubset) -> Result<ArrangementReport> {
    let poset = FacePoset::new(arr);
    pipeline_with_base(arr, omega, &poset, poset.generic_base_chamber(arr))
}

/// [`pipeline`] with an explicit base chamber index.
pub fn pipeline_with_base(
    arr: &LineArrangement,
    omega: &OmegaSubset,
    poset: &FacePoset,
    base: usize,
) -> Result<ArrangementReport> {
    let integral = salvetti_complex(poset);
    let lifted = equivariant_salvetti(poset, omega, base)?;
    let reduced = unit_reduce(&lifted);
    let betti = combinatorial_betti(arr);
    if reduced.is_minimal() {
        assert_eq!(reduced.ranks(), &[betti.0, betti.1, betti.2][..], "minimal model ranks must be the Betti numbers");
    }
    let outcome = run_covers(&reduced)?;
    Ok(ArrangementReport {
        lines: arr.lines().to_vec(),
        omega: omega.indices().collect(),
        combinatorial_betti: betti,
        salvetti_homology: integral.homology(),
        salvetti_cells: SalvettiCells::new(poset).counts(),
        reduced_ranks: reduced.ranks().to_vec(),
        outcome,
    })
}
