//! Bounded chain complexes over Z and over `Z[t^±]`.
//!
//! Indexing: `d_i: C_i -> C_{i-1}` for `i = 1..=N`. A map written
//! `E_{i+1} -> E_i` elsewhere is this crate's `d_{i+1}`.

mod complex;
mod random;
mod reduce;

pub use complex::{EquivariantComplex, HomologyProfile, IntComplex};
pub use random::{disguise, random_minimal, rng_from_seed, RandomBounds};
pub use reduce::unit_reduce;
