//! Exact computations with bound quiver algebras and generalized bound path
//! algebras (gbp-algebras).
//!
//! The crate has two directions of travel:
//!
//! * [`GbpAlgebra::expand`] turns a gbp-algebra `k(Γ, 𝒜, I)` into an ordinary
//!   presentation `kQ/(R)` over the expanded quiver `Γ[Σ₁, …, Σₙ]`;
//! * [`simplify::search_simplifications`] goes the other way, looking for
//!   equivalence relations on the vertices of `Q` that realise `kQ/(R)` as a
//!   non-trivial gbp-algebra.
//!
//! Every construction is checked against an exact oracle: ideal membership
//! and dimension are decided by Gaussian elimination over the rationals on
//! the finite-dimensional truncation `kQ / J^n`, where `n` is a certified
//! nilpotency witness for the ideal.

pub mod algebra;
pub mod error;
pub mod gbp;
pub mod io;
pub mod iso;
mod linalg;
pub mod lincomb;
pub mod partition;
pub mod quiver;
pub mod simplify;

pub use algebra::{Admissibility, BoundPathAlgebra, Limits, TruncatedIdeal};
pub use error::{Error, Result};
pub use gbp::{ExpandedPresentation, GbpAlgebra, VertexAlgebra};
pub use lincomb::{LinComb, Scalar};
pub use partition::VertexPartition;
pub use quiver::{Arrow, Path, Quiver};
