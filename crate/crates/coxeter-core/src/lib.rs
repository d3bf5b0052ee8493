//! Exact computation in finite Coxeter groups.
//!
//! The crate is organized around three layers:
//!
//! * [`matrix`] / [`classify`] — Coxeter matrices, their graphs, and the
//!   finite-type classification with the standard vertex numbering;
//! * [`cartan`] — generalized Cartan matrices and the Weyl-type
//!   correspondence `C(A)`;
//! * [`group`] — a faithful exact reflection representation
//!   ([`GroupContext`] / [`Element`]) for finite-type matrices, with normal
//!   forms, descents, and group enumeration.
//!
//! All arithmetic is exact: integer root coordinates for crystallographic
//! components, `ℤ[φ]` (golden-ratio integers) where pentagonal bonds occur,
//! and closed-form dihedral normal forms for `I₂(m)`, `m ≥ 7`.

pub mod cartan;
pub mod classify;
pub mod group;
pub mod matrix;
pub mod scalar;
pub mod subset;

pub use cartan::CartanMatrix;
pub use classify::{ComponentType, FiniteTypeReport, TypeTag};
pub use group::{Direction, Element, GroupContext};
pub use matrix::{CoxeterMatrix, INF};
pub use scalar::Scalar;
pub use subset::Subset;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not of finite type: {0}")]
    NotFiniteType(String),
    #[error("cap exceeded: {what} needs more than {cap}")]
    CapExceeded { what: String, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
