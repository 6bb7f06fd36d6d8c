use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, UnitPoint};
use crate::linalg::{self, homology_pair, AbelianGroup, IntMatrix};

/// A bounded chain complex `C_N -> ... -> C_1 -> C_0` of free Z-modules.
///
/// `boundaries[i - 1]` is `d_i: C_i -> C_{i-1}`, of shape
/// `ranks[i - 1] x ranks[i]`. A complex always has at least one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

/// A bounded chain complex of free `Z[t^±]`-modules, same conventions as
/// [`IntComplex`]. The deck transformation acts as multiplication by `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantComplex {
    ranks: Vec<usize>,
    boundaries: Vec<LaurentMatrix>,
}

/// Homology groups in degrees `0..=N`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub groups: Vec<AbelianGroup>,
}

fn check_shapes(ranks: &[usize], shapes: impl Iterator<Item = (usize, usize)>) -> Result<()> {
    if ranks.is_empty() {
        return Err(Error::ShapeMismatch("a complex needs at least one degree".into()));
    }
    let shapes: Vec<_> = shapes.collect();
    if shapes.len() + 1 != ranks.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} ranks require {} boundaries, got {}",
            ranks.len(),
            ranks.len() - 1,
            shapes.len()
        )));
    }
    for (k, &(rows, cols)) in shapes.iter().enumerate() {
        let i = k + 1;
        if rows != ranks[i - 1] || cols != ranks[i] {
            return Err(Error::ShapeMismatch(format!(
                "d_{i} is {rows}x{cols}, expected {}x{}",
                ranks[i - 1],
                ranks[i]
            )));
        }
    }
    Ok(())
}

impl IntComplex {
    /// Validating constructor: checks shapes and `d_i d_{i+1} = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        let c = IntComplex { ranks, boundaries };
        c.validate()?;
        Ok(c)
    }

    /// The complex with the given ranks and all boundaries zero.
    pub fn zero(ranks: Vec<usize>) -> Self {
        let boundaries = ranks.windows(2).map(|w| IntMatrix::zeros(w[0], w[1])).collect();
        IntComplex { ranks, boundaries }
    }

    pub fn validate(&self) -> Result<()> {
        check_shapes(&self.ranks, self.boundaries.iter().map(IntMatrix::shape))?;
        for (k, pair) in self.boundaries.windows(2).enumerate() {
            if let Some((row, col)) = linalg::composition_witness(&pair[0], &pair[1]) {
                return Err(Error::CompositionNonzero { degree: k + 1, row, col });
            }
        }
        Ok(())
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_i` for `1 <= i <= N`.
    pub fn boundary(&self, i: usize) -> &IntMatrix {
        &self.boundaries[i - 1]
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// `d_i` for any `i`, with the zero maps out of `C_0` and into `C_N`.
    fn boundary_or_zero(&self, i: usize) -> IntMatrix {
        if i == 0 {
            IntMatrix::zeros(0, self.ranks[0])
        } else if i > self.top_degree() {
            IntMatrix::zeros(self.ranks[self.top_degree()], 0)
        } else {
            self.boundaries[i - 1].clone()
        }
    }

    pub fn homology(&self) -> HomologyProfile {
        let groups = (0..self.ranks.len())
            .map(|i| {
                homology_pair(&self.boundary_or_zero(i + 1), &self.boundary_or_zero(i))
                    .expect("validated complex")
            })
            .collect();
        HomologyProfile { groups }
    }

    /// Dimensions of homology with coefficients in the field of two elements.
    pub fn homology_mod2_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.ranks.len()).map(|i| linalg::rank_mod2(&self.boundary_or_zero(i))).collect();
        (0..self.ranks.len()).map(|i| self.ranks[i] - ranks[i] - ranks[i + 1]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.boundaries.iter().all(IntMatrix::is_zero)
    }

    pub fn map_boundaries(&self, f: impl Fn(usize, &IntMatrix) -> IntMatrix) -> Result<IntComplex> {
        let boundaries = self.boundaries.iter().enumerate().map(|(k, d)| f(k + 1, d)).collect();
        IntComplex::new(self.ranks.clone(), boundaries)
    }
}

impl EquivariantComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<LaurentMatrix>) -> Result<Self> {
        let c = EquivariantComplex { ranks, boundaries };
        c.validate()?;
        Ok(c)
    }

    /// Skips the `d∘d = 0` check; only for callers that preserve it by
    /// construction (base changes, elimination).
    pub(crate) fn from_parts(ranks: Vec<usize>, boundaries: Vec<LaurentMatrix>) -> Self {
        debug_assert!(check_shapes(&ranks, boundaries.iter().map(LaurentMatrix::shape)).is_ok());
        EquivariantComplex { ranks, boundaries }
    }

    pub fn zero(ranks: Vec<usize>) -> Self {
        let boundaries = ranks.windows(2).map(|w| LaurentMatrix::zeros(w[0], w[1])).collect();
        EquivariantComplex { ranks, boundaries }
    }

    /// Lifts an integer complex to constant Laurent coefficients.
    pub fn from_int(c: &IntComplex) -> Self {
        EquivariantComplex {
            ranks: c.ranks.clone(),
            boundaries: c.boundaries.iter().map(LaurentMatrix::from_int).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_shapes(&self.ranks, self.boundaries.iter().map(LaurentMatrix::shape))?;
        for (k, pair) in self.boundaries.windows(2).enumerate() {
            if let Some((row, col)) = pair[0].mul(&pair[1]).first_nonzero() {
                return Err(Error::CompositionNonzero { degree: k + 1, row, col });
            }
        }
        Ok(())
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn boundary(&self, i: usize) -> &LaurentMatrix {
        &self.boundaries[i - 1]
    }

    pub fn boundaries(&self) -> &[LaurentMatrix] {
        &self.boundaries
    }

    pub(crate) fn into_parts(self) -> (Vec<usize>, Vec<LaurentMatrix>) {
        (self.ranks, self.boundaries)
    }

    /// Tensor with `Z[t^±]/(t - u)`: entrywise evaluation at `t = u`.
    pub fn specialize(&self, u: UnitPoint) -> IntComplex {
        IntComplex {
            ranks: self.ranks.clone(),
            boundaries: self.boundaries.iter().map(|d| d.specialize(u)).collect(),
        }
    }

    /// Tensor with `Z[t^±]/(t^2 - 1)`, as a complex of free abelian groups of
    /// doubled ranks.
    pub fn double_cover_complex(&self) -> IntComplex {
        IntComplex {
            ranks: self.ranks.iter().map(|r| 2 * r).collect(),
            boundaries: self.boundaries.iter().map(LaurentMatrix::companion_embed).collect(),
        }
    }

    /// The first boundary entry `(degree, row, col)` that does not vanish at
    /// `t = 1`, if any.
    pub fn minimality_defect(&self) -> Option<(usize, usize, usize)> {
        self.boundaries.iter().enumerate().find_map(|(k, d)| {
            d.entries()
                .find(|(_, _, f)| !f.divisible_by_t_minus_one())
                .map(|(row, col, _)| (k + 1, row, col))
        })
    }

    /// Every boundary entry is divisible by `t - 1`, i.e. the specialization
    /// at `t = 1` has zero differentials.
    pub fn is_minimal(&self) -> bool {
        self.minimality_defect().is_none()
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &EquivariantComplex) -> Result<EquivariantComplex> {
        if self.ranks.len() != other.ranks.len() {
            return Err(Error::ShapeMismatch("direct sum of complexes of different length".into()));
        }
        let ranks = self.ranks.iter().zip(&other.ranks).map(|(a, b)| a + b).collect();
        let boundaries = self
            .boundaries
            .iter()
            .zip(&other.boundaries)
            .map(|(a, b)| LaurentMatrix::block_diag(a, b))
            .collect();
        Ok(EquivariantComplex { ranks, boundaries })
    }
}

impl HomologyProfile {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn degree(&self, i: usize) -> &AbelianGroup {
        &self.groups[i]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.groups.iter().map(AbelianGroup::rank).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(AbelianGroup::is_torsion_free)
    }

    pub fn direct_sum(&self, other: &HomologyProfile) -> HomologyProfile {
        assert_eq!(self.len(), other.len(), "profiles of different length");
        HomologyProfile {
            groups: self.groups.iter().zip(&other.groups).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
