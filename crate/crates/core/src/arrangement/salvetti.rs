//! The Salvetti complex of a complexified real line arrangement.
//!
//! Cells are pairs `[C ≺ F]` of a face `F` and a chamber `C` whose closure
//! contains `F`, of dimension `codim F`:
//!
//! * `[C ≺ C]` is a vertex for every chamber;
//! * `[C ≺ e]` is an edge from `C` across `e` to the opposite chamber;
//! * `[C ≺ p]` is a polygon bounded by the two shortest galleries from `C` to
//!   the chamber opposite `C` at `p`: counterclockwise minus clockwise.
//!
//! The lift to the infinite cyclic cover gives each edge a weight, 1 when it
//! crosses a selected line from its negative to its positive side. The weight
//! of a loop around line `i` is then 1 exactly when `i` is selected, and both
//! galleries bounding a polygon cross the same lines in the same direction.

use crate::chain::{EquivariantComplex, IntComplex};
use crate::error::Result;
use crate::laurent::{LaurentMatrix, LaurentPoly, UnitPoint};

use super::geometry::OmegaSubset;
use super::poset::FacePoset;

/// Cell enumeration of the Salvetti complex, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalvettiCells {
    /// 0-cells: chamber indices.
    pub vertices: Vec<usize>,
    /// 1-cells `(chamber, edge)`; for each edge the negative-side chamber
    /// first.
    pub edges: Vec<(usize, usize)>,
    /// 2-cells `(vertex, sector)`: the chamber is `vertices[v].sectors[sector]`.
    pub polygons: Vec<(usize, usize)>,
}

impl SalvettiCells {
    pub fn new(poset: &FacePoset) -> Self {
        let vertices = (0..poset.chambers.len()).collect();
        let mut edges = Vec::with_capacity(2 * poset.edges.len());
        for (e, edge) in poset.edges.iter().enumerate() {
            for s in [-1, 1] {
                let c = poset.chamber_index(&edge.side(s)).expect("edge side is a chamber");
                edges.push((c, e));
            }
        }
        let polygons = poset
            .vertices
            .iter()
            .enumerate()
            .flat_map(|(v, vert)| (0..vert.sectors.len()).map(move |s| (v, s)))
            .collect();
        SalvettiCells { vertices, edges, polygons }
    }

    pub fn counts(&self) -> [usize; 3] {
        [self.vertices.len(), self.edges.len(), self.polygons.len()]
    }

    /// Index of the 1-cell `[chamber ≺ edge]`.
    fn edge_cell(&self, chamber: usize, edge: usize) -> usize {
        let k = 2 * edge;
        if self.edges[k].0 == chamber {
            k
        } else {
            debug_assert_eq!(self.edges[k + 1].0, chamber);
            k + 1
        }
    }
}

/// Builds the boundary matrices with a per-edge-cell weight function; the
/// integral complex is the case of all weights zero.
fn boundaries(
    poset: &FacePoset,
    cells: &SalvettiCells,
    weight: impl Fn(usize, usize) -> i64,
) -> (LaurentMatrix, LaurentMatrix) {
    let mut d1 = LaurentMatrix::zeros(cells.vertices.len(), cells.edges.len());
    for (k, &(c, e)) in cells.edges.iter().enumerate() {
        let edge = &poset.edges[e];
        let side = poset.chambers[c][edge.line];
        let target = poset.chamber_index(&edge.side(-side)).expect("chamber");
        d1[(c, k)] = &d1[(c, k)] - &LaurentPoly::one();
        d1[(target, k)] = &d1[(target, k)] + &LaurentPoly::monomial(1, weight(c, e));
    }

    let mut d2 = LaurentMatrix::zeros(cells.edges.len(), cells.polygons.len());
    for (k, &(v, s)) in cells.polygons.iter().enumerate() {
        let vert = &poset.vertices[v];
        let n = vert.rays.len();
        let m = n / 2;
        // Counterclockwise: cross rays s+1, ..., s+m, standing in sector (ray - 1).
        let mut height = 0;
        for l in 1..=m {
            let ray = (s + l) % n;
            let chamber = vert.sectors[(ray + n - 1) % n];
            let edge = vert.rays[ray];
            let cell = cells.edge_cell(chamber, edge);
            d2[(cell, k)] = &d2[(cell, k)] + &LaurentPoly::monomial(1, height);
            height += weight(chamber, edge);
        }
        // Clockwise: cross rays s, s-1, ..., s-m+1, standing in sector (ray).
        let mut height = 0;
        for l in 0..m {
            let ray = (s + n - l) % n;
            let chamber = vert.sectors[ray];
            let edge = vert.rays[ray];
            let cell = cells.edge_cell(chamber, edge);
            d2[(cell, k)] = &d2[(cell, k)] - &LaurentPoly::monomial(1, height);
            height += weight(chamber, edge);
        }
    }
    (d1, d2)
}

/// Integral cellular chain complex of the Salvetti complex.
pub fn salvetti_complex(poset: &FacePoset) -> IntComplex {
    let cells = SalvettiCells::new(poset);
    let (d1, d2) = boundaries(poset, &cells, |_, _| 0);
    let [r0, r1, r2] = cells.counts();
    IntComplex::new(vec![r0, r1, r2], vec![d1.specialize(UnitPoint::Plus), d2.specialize(UnitPoint::Plus)])
        .expect("Salvetti boundaries compose to zero")
}

/// Weight of the edge cell `[chamber ≺ edge]`: 1 when it crosses a selected
/// line from the negative to the positive side.
fn crossing_weight(poset: &FacePoset, omega: &OmegaSubset, chamber: usize, edge: usize) -> i64 {
    let line = poset.edges[edge].line;
    i64::from(omega.contains(line) && poset.chambers[chamber][line] < 0)
}

/// Equivariant chains of the infinite cyclic cover in which a meridian of
/// line `i` acts by `t` if `i ∈ omega` and trivially otherwise.
///
/// Each cell is lifted so that it starts at height `φ(C)` over its chamber
/// `C`, where `φ(C)` counts the selected lines having `C` on their positive
/// side and `base` on their negative side. Other base chambers change the
/// matrices by unit factors only.
pub fn equivariant_salvetti(poset: &FacePoset, omega: &OmegaSubset, base: usize) -> Result<EquivariantComplex> {
    let cells = SalvettiCells::new(poset);
    let (mut d1, mut d2) = boundaries(poset, &cells, |c, e| crossing_weight(poset, omega, c, e));

    let base_signs = &poset.chambers[base];
    let phi = |c: usize| -> i64 {
        omega.indices().filter(|&i| base_signs[i] < 0 && poset.chambers[c][i] > 0).count() as i64
    };
    let h0: Vec<i64> = cells.vertices.iter().map(|&c| phi(c)).collect();
    let h1: Vec<i64> = cells.edges.iter().map(|&(c, _)| phi(c)).collect();
    let h2: Vec<i64> = cells.polygons.iter().map(|&(v, s)| phi(poset.vertices[v].sectors[s])).collect();
    rebase(&mut d1, &h0, &h1);
    rebase(&mut d2, &h1, &h2);

    let [r0, r1, r2] = cells.counts();
    EquivariantComplex::new(vec![r0, r1, r2], vec![d1, d2])
}

/// Matrix in the basis `t^{h(g)} e_g`: entry `(r, c)` gains `t^{h(c) - h(r)}`.
fn rebase(d: &mut LaurentMatrix, rows: &[i64], cols: &[i64]) {
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let shift = cols[c] - rows[r];
            if shift != 0 && !d[(r, c)].is_zero() {
                d[(r, c)] = d[(r, c)].shift(shift);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::geometry::LineArrangement;
    use crate::linalg::AbelianGroup;

    fn poset(lines: &[[i64; 3]]) -> (LineArrangement, FacePoset) {
        let arr = LineArrangement::from_ints(lines).unwrap();
        let p = FacePoset::new(&arr);
        (arr, p)
    }

    fn free(ranks: &[usize]) -> Vec<AbelianGroup> {
        ranks.iter().map(|&r| AbelianGroup::free(r)).collect()
    }

    #[test]
    fn integral_homology() {
        let (_, p) = poset(&[[1, 0, 0]]);
        assert_eq!(salvetti_complex(&p).homology().groups, free(&[1, 1, 0]));
        let (_, p) = poset(&[[1, 0, 0], [0, 1, 0]]);
        assert_eq!(salvetti_complex(&p).homology().groups, free(&[1, 2, 1]));
        let (_, p) = poset(&[[1, 0, 0], [0, 1, 0], [1, 1, -1]]);
        assert_eq!(salvetti_complex(&p).homology().groups, free(&[1, 3, 3]));
        let (_, p) = poset(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert_eq!(salvetti_complex(&p).homology().groups, free(&[1, 3, 2]));
    }

    #[test]
    fn cell_counts() {
        let (_, p) = poset(&[[1, 0, 0], [0, 1, 0], [1, 1, -1]]);
        assert_eq!(SalvettiCells::new(&p).counts(), [7, 18, 12]);
    }

    #[test]
    fn single_line_lift() {
        let (arr, p) = poset(&[[1, 0, 0]]);
        let omega = OmegaSubset::all(1).unwrap();
        let c = equivariant_salvetti(&p, &omega, p.generic_base_chamber(&arr)).unwrap();
        let local = c.specialize(UnitPoint::Minus).homology();
        assert_eq!(local.groups, vec![AbelianGroup::from_cyclic(0, [2]), AbelianGroup::trivial(), AbelianGroup::trivial()]);
    }

    #[test]
    fn lift_specializes_to_integral_complex() {
        let lines = [[1, 0, 0], [0, 1, 0], [1, 1, -1], [1, -1, 0], [0, 1, -2]];
        let (arr, p) = poset(&lines);
        let integral = salvetti_complex(&p);
        for omega in [vec![0], vec![1, 3], vec![0, 1, 2, 3, 4]] {
            let omega = OmegaSubset::new(omega, lines.len()).unwrap();
            for base in [0, p.generic_base_chamber(&arr), p.chambers.len() - 1] {
                let c = equivariant_salvetti(&p, &omega, base).unwrap();
                assert_eq!(c.specialize(UnitPoint::Plus), integral);
            }
        }
    }
}
