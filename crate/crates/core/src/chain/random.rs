//! Seeded generators for test instances.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3), so a seed reproduces the same complex on every platform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::linalg::{kernel_basis, IntMatrix};

use super::EquivariantComplex;

/// Size limits for [`random_minimal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomBounds {
    /// Top degree `N` is drawn from `1..=max_degree`.
    pub max_degree: usize,
    /// Ranks above degree 0 are drawn from `0..=max_rank` (`1..=max_rank` in degree 1).
    pub max_rank: usize,
    /// Bound on the absolute value of every freely drawn integer.
    pub coeff_bound: i64,
}

impl Default for RandomBounds {
    fn default() -> Self {
        RandomBounds { max_degree: 4, max_rank: 6, coeff_bound: 5 }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_int(rng: &mut impl Rng, bound: i64) -> BigInt {
    BigInt::from(rng.gen_range(-bound..=bound))
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| random_int(rng, bound))
}

/// A random minimal equivariant complex with one generator in degree 0 and a
/// nontrivial sign character.
///
/// An integer complex `d` with `d∘d = 0` is drawn first: `d_1` is a row
/// whose entries have gcd 1, and each later `d_{i+1}` is a kernel basis of
/// `d_i` times a random matrix. The boundaries are then
/// `(t - 1) t^{k_i} d_i` with random shifts `k_i ∈ [-2, 2]`.
pub fn random_minimal(seed: u64, bounds: RandomBounds) -> EquivariantComplex {
    assert!(bounds.max_degree >= 1 && bounds.max_rank >= 1 && bounds.coeff_bound >= 1);
    let mut rng = rng_from_seed(seed);
    let top = rng.gen_range(1..=bounds.max_degree);
    let mut ranks = vec![1, rng.gen_range(1..=bounds.max_rank)];
    for _ in 2..=top {
        ranks.push(rng.gen_range(0..=bounds.max_rank));
    }

    let mut first = random_matrix(&mut rng, 1, ranks[1], bounds.coeff_bound);
    let content = first.row(0).iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !content.is_one() {
        let j = rng.gen_range(0..ranks[1]);
        first[(0, j)] = if rng.gen_bool(0.5) { BigInt::one() } else { -BigInt::one() };
    }

    let mut integral = vec![first];
    for i in 2..=top {
        let kernel = kernel_basis(&integral[i - 2]);
        let coeffs = random_matrix(&mut rng, kernel.cols(), ranks[i], bounds.coeff_bound);
        integral.push(&kernel * &coeffs);
    }

    let boundaries = integral
        .iter()
        .map(|d| {
            let shift = rng.gen_range(-2..=2);
            let factor = LaurentPoly::from_terms([(shift + 1, 1), (shift, -1)]);
            LaurentMatrix::from_int(d).scale(&factor)
        })
        .collect();
    EquivariantComplex::from_parts(ranks, boundaries)
}

/// Mutable view of a complex for base changes.
struct Scrambler {
    ranks: Vec<usize>,
    boundaries: Vec<LaurentMatrix>,
}

impl Scrambler {
    fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// New basis `e'_dst = e_dst + λ e_src` of `C_j`.
    fn add(&mut self, j: usize, dst: usize, src: usize, lambda: &LaurentPoly) {
        if j >= 1 {
            self.boundaries[j - 1].add_col_multiple(dst, src, lambda);
        }
        if j < self.top() {
            self.boundaries[j].add_row_multiple(src, dst, &-lambda);
        }
    }

    /// New basis `e'_g = u e_g` for a unit `u`.
    fn scale(&mut self, j: usize, g: usize, unit: &LaurentPoly) {
        let inverse = unit.unit_inverse().expect("unit");
        if j >= 1 {
            self.boundaries[j - 1].scale_col(g, unit);
        }
        if j < self.top() {
            self.boundaries[j].scale_row(g, &inverse);
        }
    }

    fn swap(&mut self, j: usize, a: usize, b: usize) {
        if j >= 1 {
            self.boundaries[j - 1].swap_cols(a, b);
        }
        if j < self.top() {
            self.boundaries[j].swap_rows(a, b);
        }
    }

    /// Appends generators `b ∈ C_k`, `a ∈ C_{k-1}` with `d_k(b) = u·a`.
    fn stabilize(&mut self, k: usize, unit: LaurentPoly) -> (usize, usize) {
        let a = self.ranks[k - 1];
        let b = self.ranks[k];
        self.ranks[k - 1] += 1;
        self.ranks[k] += 1;
        let mut dk = LaurentMatrix::block_diag(&self.boundaries[k - 1], &LaurentMatrix::zeros(1, 1));
        dk[(a, b)] = unit;
        self.boundaries[k - 1] = dk;
        if k < self.top() {
            let d = &self.boundaries[k];
            self.boundaries[k] = LaurentMatrix::block_diag(d, &LaurentMatrix::zeros(1, 0));
        }
        if k >= 2 {
            let d = &self.boundaries[k - 2];
            self.boundaries[k - 2] = LaurentMatrix::block_diag(d, &LaurentMatrix::zeros(0, 1));
        }
        (a, b)
    }
}

fn random_unit(rng: &mut impl Rng) -> LaurentPoly {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    LaurentPoly::monomial(sign, rng.gen_range(-2..=2))
}

fn random_multiplier(rng: &mut impl Rng) -> LaurentPoly {
    let terms = rng.gen_range(1..=2);
    let mut f = LaurentPoly::zero();
    while f.is_zero() {
        f = LaurentPoly::from_terms((0..terms).map(|_| {
            let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
            (rng.gen_range(-1..=1), c)
        }));
    }
    f
}

/// Hides `complex` behind random invertible base changes over `Z[t^±]` and
/// one acyclic stabilization `Z[t^±] --u--> Z[t^±]` in a random degree.
///
/// Base changes before the stabilization are unrestricted. Afterwards they
/// never add into the new generator `b ∈ C_k` nor modify the coordinate of
/// the new generator `a ∈ C_{k-1}`, so the entry `d_k[a, b]` stays a unit up
/// to the final monomial rescaling and permutation. Unrestricted mixing can
/// hide the pair completely (some matrices in `GL_2(Z[t^±])` have no unit
/// entries), which unit-pivot elimination cannot undo.
pub fn disguise(complex: &EquivariantComplex, seed: u64) -> EquivariantComplex {
    let mut rng = rng_from_seed(seed);
    let (ranks, boundaries) = complex.clone().into_parts();
    let mut s = Scrambler { ranks, boundaries };
    let total: usize = s.ranks.iter().sum();

    for _ in 0..total {
        let j = rng.gen_range(0..s.ranks.len());
        if s.ranks[j] < 2 {
            continue;
        }
        let dst = rng.gen_range(0..s.ranks[j]);
        let src = (dst + rng.gen_range(1..s.ranks[j])) % s.ranks[j];
        let lambda = random_multiplier(&mut rng);
        s.add(j, dst, src, &lambda);
    }

    let k = rng.gen_range(1..=s.top());
    let unit = random_unit(&mut rng);
    let (a, b) = s.stabilize(k, unit);

    for _ in 0..total + 2 {
        let j = rng.gen_range(0..s.ranks.len());
        if s.ranks[j] < 2 {
            continue;
        }
        let dst = rng.gen_range(0..s.ranks[j]);
        let src = (dst + rng.gen_range(1..s.ranks[j])) % s.ranks[j];
        if (j == k && dst == b) || (j == k - 1 && src == a) {
            continue;
        }
        let lambda = random_multiplier(&mut rng);
        s.add(j, dst, src, &lambda);
    }

    for j in 0..s.ranks.len() {
        for g in 0..s.ranks[j] {
            if rng.gen_bool(0.3) {
                let u = random_unit(&mut rng);
                s.scale(j, g, &u);
            }
        }
        let n = s.ranks[j];
        for g in (1..n).rev() {
            let h = rng.gen_range(0..=g);
            s.swap(j, g, h);
        }
    }

    EquivariantComplex::from_parts(s.ranks, s.boundaries)
}
