//! Integer linear algebra for finitely generated abelian groups.

mod group;
mod matrix;
mod snf;

pub use group::{coinvariants, fixed_subgroup, FgAbelian};
pub use matrix::{Matrix, Scalar};
pub use snf::{column_span_basis, integer_kernel, smith_normal_form, solve_integer, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbelianError {
    #[error("ENDO_ILL_DEFINED: {0}")]
    EndoIllDefined(String),
    #[error("bad invariant factors: {0}")]
    BadInvariantFactors(String),
}
