//! Exact combinatorics of Iwahori-Weyl groups: root data with a Frobenius
//! twist, admissible sets, sigma-conjugacy invariants, stratum indexing and
//! Levi reduction.
//!
//! The integer linear algebra in [`abelian`] is generic over any
//! [`abelian::Scalar`]; everything above it works with arbitrary precision
//! integers through the aliases below.

// IwElement hashes its datum tag, translation and finite part only; the
// Arc'd datum's interior caches do not take part.
#![allow(clippy::mutable_key_type)]
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod admissible;
pub mod error;
pub mod iwahori_weyl;
pub mod levi_reduction;
pub mod root_datum;
pub mod sigma_conj;
pub mod strata;

pub use error::{Error, Result};

/// Arbitrary precision integer used for all lattice coordinates.
pub type Int = num_bigint::BigInt;
/// Exact rational number.
pub type Rat = num_rational::BigRational;
/// Integer matrix over [`Int`].
pub type IntMatrix = abelian::Matrix<Int>;
