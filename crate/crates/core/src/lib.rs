//! Linear-algebraic machinery for orthogonal representations of Lie algebras:
//! skew-symmetric prolongation spaces, algebraic curvature spaces, Casimir
//! operators, characteristic 4-forms, holonomy algebras generated by 3-forms,
//! and Plücker / n-Lie bracket verification.
//!
//! Every dimension-valued computation is available through two backends: a
//! floating-point one built on rank-revealing decompositions ([`linalg`]) and
//! an exact rational one built on fraction-free elimination ([`exact`]). The
//! [`catalog`] module constructs the standard representations (so(n), u(m),
//! su(m), sp(m), sp(m)+sp(1), spin(7), g2 and adjoint representations) in both
//! backends at once, and [`verify`] runs the regression matrix over them.

pub mod catalog;
pub mod combin;
pub mod curvature;
pub mod exact;
pub mod exterior;
pub mod holonomy;
pub mod linalg;
pub mod pluecker;
pub mod prolong;
pub mod rep;
pub mod verify;

/// Default relative tolerance for rank decisions and residual checks.
///
/// Catalog data are integers and half-integers, so spectral gaps are large
/// and a fixed relative cutoff is reliable.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Tolerance for identities that hold to rounding error on unit-scale data.
pub const TIGHT_TOL: f64 = 1e-12;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("degree error: {0}")]
    Degree(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("eigenvalue clustering is tolerance-ambiguous: {0}")]
    AmbiguousCluster(String),
    #[error("classification failed: {0}")]
    Classify(String),
    #[error("unknown catalog entry: {0}")]
    UnknownCatalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
