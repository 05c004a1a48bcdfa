//! Exact arithmetic over the rationals, Gaussian rationals and rational
//! quaternions, together with the left-module linear algebra and the exact
//! linear programming kernel the sign-vector machinery is built on.
//!
//! Everything in this crate is a pure function of immutable inputs; no
//! floating point appears anywhere.

pub mod lp;
pub mod scalar;
pub mod sphere;
pub mod subspace;

pub use lp::{feasible, lp_strict_feasible, Constraint, Rel, VarKind};
pub use scalar::{hermitian_form, Field, Scalar};
pub use sphere::{is_unit, rational_sphere_point};
pub use subspace::{left_rref, Subspace};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("field tags differ: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("component outside the {0} subfield")]
    ComponentOutsideField(Field),
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("empty vector")]
    EmptyVector,
    #[error("division by zero")]
    DivisionByZero,
    #[error("rows are left-linearly dependent")]
    DependentBasis,
}
