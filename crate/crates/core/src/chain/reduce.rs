//! Elimination of unit boundary entries.
//!
//! If `d_k` has an entry `u = ±t^m` at `(r, c)`, the generator `c` of `C_k`
//! and the generator `r` of `C_{k-1}` span an acyclic summand after a change
//! of basis. Dropping both gives a chain-homotopy equivalent complex:
//!
//! * `d_k' = d_k - d_k[·, c] u^{-1} d_k[r, ·]` with row `r` and column `c` removed,
//! * `d_{k+1}'` is `d_{k+1}` with row `c` removed,
//! * `d_{k-1}'` is `d_{k-1}` with column `r` removed.

use crate::laurent::LaurentMatrix;

use super::EquivariantComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pivot {
    degree: usize,
    row: usize,
    col: usize,
}

/// Repeatedly cancels unit pivots until none remain.
///
/// Among all unit entries the one with the fewest
/// `(nonzeros in its row) * (nonzeros in its column)` goes first; ties go to
/// the lowest degree, then row, then column.
pub fn unit_reduce(complex: &EquivariantComplex) -> EquivariantComplex {
    let (mut ranks, mut boundaries) = complex.clone().into_parts();
    while let Some(p) = choose_pivot(&boundaries) {
        eliminate(&mut boundaries, p);
        ranks[p.degree] -= 1;
        ranks[p.degree - 1] -= 1;
    }
    EquivariantComplex::from_parts(ranks, boundaries)
}

fn choose_pivot(boundaries: &[LaurentMatrix]) -> Option<Pivot> {
    let mut best: Option<(usize, Pivot)> = None;
    for (k, d) in boundaries.iter().enumerate() {
        let (rows, cols) = d.shape();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut row_nnz = vec![0usize; rows];
        let mut col_nnz = vec![0usize; cols];
        for (i, j, f) in d.entries() {
            if !f.is_zero() {
                row_nnz[i] += 1;
                col_nnz[j] += 1;
            }
        }
        for (i, j, f) in d.entries() {
            if !f.is_unit() {
                continue;
            }
            let score = row_nnz[i] * col_nnz[j];
            if best.as_ref().is_none_or(|(s, _)| score < *s) {
                best = Some((score, Pivot { degree: k + 1, row: i, col: j }));
            }
        }
    }
    best.map(|(_, p)| p)
}

fn eliminate(boundaries: &mut [LaurentMatrix], p: Pivot) {
    let k = p.degree - 1;
    let d = &mut boundaries[k];
    let inverse = d[(p.row, p.col)].unit_inverse().expect("pivot is a unit");
    for i in 0..d.rows() {
        if i == p.row || d[(i, p.col)].is_zero() {
            continue;
        }
        let factor = -(&d[(i, p.col)] * &inverse);
        d.add_row_multiple(i, p.row, &factor);
    }
    boundaries[k] = boundaries[k].without(Some(p.row), Some(p.col));
    if k + 1 < boundaries.len() {
        boundaries[k + 1] = boundaries[k + 1].without(Some(p.col), None);
    }
    if k >= 1 {
        boundaries[k - 1] = boundaries[k - 1].without(None, Some(p.row));
    }
}
