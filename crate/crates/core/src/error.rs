use thiserror::Error;

use crate::linalg::AbelianGroup;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Every variant corresponds to a distinct
/// failure class; the CLI maps each class to its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// `d_{degree} * d_{degree+1}` has a nonzero entry at `(row, col)`.
    #[error("d_{degree} * d_{} is nonzero at ({row}, {col})", degree + 1)]
    CompositionNonzero { degree: usize, row: usize, col: usize },

    #[error("boundary d_{degree} has an odd entry at ({row}, {col}); the source complex is not minimal")]
    OddEntry { degree: usize, row: usize, col: usize },

    #[error("complex is not minimal: d_{degree} entry ({row}, {col}) does not vanish at t = 1")]
    NotMinimal { degree: usize, row: usize, col: usize },

    #[error("the character is trivial: H_0 with sign coefficients is {h0}, expected a torsion group")]
    ZeroOmega { h0: AbelianGroup },

    #[error("group does not have the shape required by the translation: {0}")]
    ShapeViolation(String),

    #[error("lines {first} and {second} coincide")]
    DuplicateLine { first: usize, second: usize },

    #[error("line {0} has a = b = 0")]
    DegenerateLine(usize),

    #[error("omega must select at least one line")]
    EmptyOmega,

    #[error("omega index {index} out of range for {lines} lines")]
    OmegaIndex { index: usize, lines: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
