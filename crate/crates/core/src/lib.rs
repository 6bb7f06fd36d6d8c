//! Integral homology of double covers and rank-one sign local systems.
//!
//! A finite CW complex `X` with a surjection `π_1(X) -> Z` is presented by
//! the cellular chain complex of the infinite cyclic cover, a complex of free
//! `Z[t^±]`-modules ([`chain::EquivariantComplex`]). Tensoring with
//! `Z[t^±]/(t - 1)`, `/(t + 1)` and `/(t^2 - 1)` gives the chains of `X`, of
//! `X` with the sign local system, and of the double cover.
//!
//! When every boundary entry is divisible by `t - 1` (a minimal complex),
//! the sign-twisted boundaries are all even and the homology of the double
//! cover splits as `H_i(X) ⊕ H_i(E, α/2)`. [`covers`] computes both sides and
//! compares them; [`arrangement`] builds such complexes for complements of
//! complexified real line arrangements.

pub mod arrangement;
pub mod battery;
pub mod chain;
pub mod covers;
pub mod doc;
pub mod error;
pub mod laurent;
pub mod linalg;

pub use error::{Error, Result};
