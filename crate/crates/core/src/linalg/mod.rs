//! Exact integer linear algebra: dense big-integer matrices, Smith normal
//! form, finitely generated abelian groups, and homology of a composable pair.

mod group;
mod matrix;
mod snf;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, kernel_basis, snf, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
pub fn rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = m.shape();
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let pivot = m[(r, c)].clone();
        for i in r + 1..rows {
            let below = m[(i, c)].clone();
            for j in c..cols {
                let v = &pivot * &m[(i, j)] - &below * &m[(r, j)];
                m[(i, j)] = v / &prev;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank over the field with two elements.
pub fn rank_mod2(a: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|v| v.is_odd()).collect())
        .collect();
    let mut r = 0;
    for c in 0..a.cols() {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x ^= *y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Returns the position of a nonzero entry of `outer * inner`, if any.
pub(crate) fn composition_witness(outer: &IntMatrix, inner: &IntMatrix) -> Option<(usize, usize)> {
    (outer * inner).first_nonzero()
}

/// Homology `ker(d_out) / im(d_in)` of free modules `A --d_in--> B --d_out--> C`.
///
/// The torsion is read off the invariant factors of `d_in` alone: `im(d_in)`
/// sits inside `ker(d_out)`, which is a pure sublattice, so the torsion of the
/// quotient agrees with that of `coker(d_in)`.
pub fn homology_pair(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<AbelianGroup> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::ShapeMismatch(format!(
            "outgoing map is {}x{} but incoming map is {}x{}",
            d_out.rows(),
            d_out.cols(),
            d_in.rows(),
            d_in.cols()
        )));
    }
    if let Some((row, col)) = composition_witness(d_out, d_in) {
        return Err(Error::CompositionNonzero { degree: 0, row, col });
    }
    let factors = invariant_factors(d_in);
    let rank_in = factors.iter().filter(|d| !d.is_zero()).count();
    let free = d_out.cols() - rank(d_out) - rank_in;
    Ok(AbelianGroup::from_cyclic(free, factors.into_iter().filter(|d| !d.is_zero())))
}
