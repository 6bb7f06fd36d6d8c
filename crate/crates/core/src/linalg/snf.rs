//! Smith normal form with unimodular certificates.
//!
//! The elimination picks, at every step, the nonzero entry of least absolute
//! value in the active submatrix (lowest row, then lowest column on ties).
//! Row and column reductions by that pivot either clear its row and column or
//! leave a strictly smaller remainder, which becomes the next pivot. Once the
//! cross is clear, any entry of the trailing block not divisible by the pivot
//! is folded into the pivot row so the divisibility chain comes out directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Diagonal form `left * A * right = diag(diag)` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Invariant factors, nonnegative, `min(rows, cols)` of them, zeros last.
    pub diag: Vec<BigInt>,
    /// Unimodular, `rows x rows`.
    pub left: IntMatrix,
    /// Unimodular, `cols x cols`.
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix `left * A * right` should equal.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.left.rows(), self.right.cols(), &self.diag)
    }

    /// Checks the certificate identity `left * a * right == diag` exactly.
    pub fn certifies(&self, a: &IntMatrix) -> bool {
        self.left.rows() == a.rows()
            && self.right.cols() == a.cols()
            && &(&self.left * a) * &self.right == self.diagonal_matrix()
    }
}

/// Computes the Smith normal form of `a` together with unimodular
/// certificates.
pub fn snf(a: &IntMatrix) -> SmithForm {
    let mut work = a.clone();
    let mut left = IntMatrix::identity(a.rows());
    let mut right = IntMatrix::identity(a.cols());
    let diag = reduce(&mut work, Some((&mut left, &mut right)));
    SmithForm { diag, left, right }
}

/// Invariant factors only (no certificates). Same elimination as [`snf`].
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut work = a.clone();
    reduce(&mut work, None)
}

/// A basis of the kernel lattice of `a`, as the columns of the returned
/// `cols x (cols - rank)` matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let form = snf(a);
    let r = form.rank();
    form.right.columns(r, a.cols())
}

type Certificates<'a> = Option<(&'a mut IntMatrix, &'a mut IntMatrix)>;

fn reduce(a: &mut IntMatrix, mut cert: Certificates<'_>) -> Vec<BigInt> {
    let (m, n) = a.shape();
    let steps = m.min(n);

    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = min_abs_entry(a, t) else {
            break;
        };
        move_pivot(a, &mut cert, t, pi, pj);

        if !clear_cross(a, &mut cert, t) {
            continue;
        }

        if let Some(i) = indivisible_row(a, t) {
            add_row(a, &mut cert, t, i, &BigInt::from(1));
            continue;
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some((left, _)) = cert.as_mut() {
                left.negate_row(t);
            }
        }
        t += 1;
    }

    (0..steps).map(|i| a[(i, i)].clone()).collect()
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                best = Some((i, j, abs));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn move_pivot(a: &mut IntMatrix, cert: &mut Certificates<'_>, t: usize, pi: usize, pj: usize) {
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    if let Some((left, right)) = cert.as_mut() {
        left.swap_rows(t, pi);
        right.swap_cols(t, pj);
    }
}

fn add_row(a: &mut IntMatrix, cert: &mut Certificates<'_>, dst: usize, src: usize, f: &BigInt) {
    a.add_row_multiple(dst, src, f);
    if let Some((left, _)) = cert.as_mut() {
        left.add_row_multiple(dst, src, f);
    }
}

fn add_col(a: &mut IntMatrix, cert: &mut Certificates<'_>, dst: usize, src: usize, f: &BigInt) {
    a.add_col_multiple(dst, src, f);
    if let Some((_, right)) = cert.as_mut() {
        right.add_col_multiple(dst, src, f);
    }
}

/// Reduces row `t` and column `t` modulo the pivot. Returns true when both
/// are clear apart from the pivot itself.
fn clear_cross(a: &mut IntMatrix, cert: &mut Certificates<'_>, t: usize) -> bool {
    let pivot = a[(t, t)].clone();
    let mut clear = true;
    for i in t + 1..a.rows() {
        if a[(i, t)].is_zero() {
            continue;
        }
        let q = &a[(i, t)] / &pivot;
        add_row(a, cert, i, t, &-q);
        clear &= a[(i, t)].is_zero();
    }
    for j in t + 1..a.cols() {
        if a[(t, j)].is_zero() {
            continue;
        }
        let q = &a[(t, j)] / &pivot;
        add_col(a, cert, j, t, &-q);
        clear &= a[(t, j)].is_zero();
    }
    clear
}

fn indivisible_row(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = &a[(t, t)];
    for i in t + 1..a.rows() {
        for j in t + 1..a.cols() {
            if !a[(i, j)].is_multiple_of(pivot) {
                return Some(i);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_has_unit_factors() {
        let form = snf(&IntMatrix::identity(2));
        assert_eq!(form.diag, ints(&[1, 1]));
        assert!(form.certifies(&IntMatrix::identity(2)));
    }

    #[test]
    fn two_by_two_example() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let form = snf(&a);
        assert_eq!(form.diag, ints(&[2, 4]));
        assert!(form.certifies(&a));
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::zeros(3, 2);
        let form = snf(&a);
        assert_eq!(form.diag, ints(&[0, 0]));
        assert_eq!(form.rank(), 0);
        assert!(form.certifies(&a));
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) is not in normal form; the answer is diag(1, 6).
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let form = snf(&a);
        assert_eq!(form.diag, ints(&[1, 6]));
        assert!(form.certifies(&a));
    }

    #[test]
    fn negative_and_rectangular() {
        let a = IntMatrix::from_i64(&[&[-4, 6, 2], &[0, -6, 12]]);
        let form = snf(&a);
        assert!(form.certifies(&a));
        assert_eq!(form.diag, ints(&[2, 6]));
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zeros(r, c);
            let form = snf(&a);
            assert!(form.diag.is_empty());
            assert!(form.certifies(&a));
            assert_eq!(kernel_basis(&a).shape(), (c, c));
        }
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.shape(), (3, 2));
        assert!((&a * &k).is_zero());
    }
}
