use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use twocover::linalg::{homology_pair, invariant_factors, kernel_basis, rank, rank_mod2, snf, IntMatrix};

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

/// Determinant by Bareiss elimination over `BigInt`.
fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n < 2 {
        return u;
    }
    for &(a, b, f) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            u.negate_row(a);
        } else {
            u.add_row_multiple(a, b, &BigInt::from(f));
        }
    }
    u
}

proptest! {
    #[test]
    fn certificate_is_unimodular_and_diagonalizes(a in matrix(6, 6, 20)) {
        let s = snf(&a);
        prop_assert!(s.certifies(&a));
        prop_assert_eq!(&(&(&s.left * &a) * &s.right), &s.diagonal_matrix());
        prop_assert!(det(&s.left).abs().is_one());
        prop_assert!(det(&s.right).abs().is_one());
    }

    #[test]
    fn factors_form_a_divisibility_chain(a in matrix(6, 6, 20)) {
        let d = invariant_factors(&a);
        prop_assert_eq!(d.len(), a.rows().min(a.cols()));
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn factors_are_unimodular_invariants(
        a in matrix(5, 5, 9),
        left in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..12),
        right in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..12),
    ) {
        let p = unimodular(a.rows(), &left);
        let q = unimodular(a.cols(), &right);
        let b = &(&p * &a) * &q;
        prop_assert_eq!(invariant_factors(&a), invariant_factors(&b));
    }

    #[test]
    fn ranks_agree_with_factors(a in matrix(6, 6, 12)) {
        let d = invariant_factors(&a);
        prop_assert_eq!(rank(&a), d.iter().filter(|x| !x.is_zero()).count());
        prop_assert_eq!(rank_mod2(&a), d.iter().filter(|x| x.is_odd()).count());
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn kernel_basis_is_saturated(a in matrix(5, 6, 9)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.cols(), a.cols() - rank(&a));
        prop_assert!((&a * &k).is_zero());
        // A saturated sublattice has unit invariant factors.
        prop_assert!(invariant_factors(&k).iter().all(|d| d.is_one()));
    }

    #[test]
    fn pair_homology_rank_identity(
        d_out in matrix(4, 5, 6),
        mix in prop::collection::vec(-4i64..=4, 25),
        extra in 0usize..5,
    ) {
        let k = kernel_basis(&d_out);
        let r = IntMatrix::from_fn(k.cols(), extra, |i, j| BigInt::from(mix[(i * 5 + j) % 25]));
        let d_in = &k * &r;
        let h = homology_pair(&d_in, &d_out).unwrap();
        prop_assert_eq!(h.rank(), d_out.cols() - rank(&d_out) - rank(&d_in));
        let mut torsion: Vec<BigInt> =
            invariant_factors(&d_in).into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        torsion.sort();
        let mut got = h.torsion().to_vec();
        got.sort();
        prop_assert_eq!(got, torsion);
    }
}
