//! Exact computer algebra for the finite Grassmann algebra ∧(N) and (1|1)
//! supermatrices over it, together with the even/odd reduction semigroups,
//! the generalized Λ₀⊕Λ₁-module built from scalars and anti-scalars, and a
//! seeded verification harness that checks every law exactly.

pub mod codec;
pub mod error;
pub mod grassmann;
pub mod lambda_module;
pub mod reduced;
pub mod semigroups;
pub mod sample;
pub mod supermatrix;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use grassmann::{Blade, GrassmannElement, Parity, Rational};
pub use supermatrix::{InvertibilityClass, Mat2, OddMatrix, ShapeClass, SuperMatrix};
pub use reduced::{Reduced, ReducedKind};
