//! Brute-force oracles for the `iwk-core` combinatorics.
//!
//! Every oracle here re-derives a definition by exhaustive search and uses
//! nothing from the core beyond the datum and element types (multiplication,
//! inversion, generators, Frobenius). They are exponential and capped; inputs
//! beyond [`CAPS`] are refused with `CAP_EXCEEDED` rather than answered
//! approximately.

// IwElement hashes its datum tag, translation and finite part only; the
// Arc'd datum's interior caches do not take part.
#![allow(clippy::mutable_key_type)]
#![allow(clippy::needless_range_loop)]

use std::fmt;

mod cone;
mod orbit;
mod snf;
pub mod suites;
mod word;

pub use cone::cone_member;
pub use orbit::orbit_closure;
pub use snf::{determinantal_invariant_factors, pi1_sigma_shape, relation_matrix, verify_smith, IntRows};
pub use word::{ball, bfs_length, bfs_word, down_set, is_omega, omega_sample, subword_leq, subword_set};

/// Size limits shared by all oracles.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Longest word any search will explore.
    pub max_length: usize,
    /// Largest absolute coordinate accepted as input.
    pub max_coord: i64,
    /// Largest coefficient tried in cone membership.
    pub max_cone_coeff: i64,
    /// Coordinate box for orbit closures.
    pub orbit_coord: i64,
    /// Largest orbit an orbit closure may build.
    pub max_orbit: usize,
}

pub const CAPS: Caps = Caps {
    max_length: 6,
    max_coord: 3,
    max_cone_coeff: 8,
    orbit_coord: 6,
    max_orbit: 200_000,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("CAP_EXCEEDED: {0}")]
    CapExceeded(String),
    #[error("UNKNOWN_SUITE: {0}")]
    UnknownSuite(String),
    #[error("{0}")]
    Core(#[from] iwk_core::Error),
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::CapExceeded(_) => "CAP_EXCEEDED",
            OracleError::UnknownSuite(_) => "USAGE",
            OracleError::Core(e) => e.code(),
        }
    }
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub input: String,
    pub main: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub suite: String,
    pub checked: usize,
    /// Cases the oracle refused because they exceed [`CAPS`].
    pub skipped: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn new(suite: &str) -> Self {
        OracleReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + fmt::Debug>(&mut self, input: impl FnOnce() -> String, main: T, oracle: T) {
        self.checked += 1;
        if main != oracle {
            self.mismatches.push(Mismatch { input: input(), main: format!("{main:?}"), oracle: format!("{oracle:?}") });
        }
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.mismatches.extend(other.mismatches);
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: checked {}, skipped {}, mismatches {}",
            self.suite,
            self.checked,
            self.skipped,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            writeln!(f, "  {}: main {} oracle {}", m.input, m.main, m.oracle)?;
        }
        Ok(())
    }
}
