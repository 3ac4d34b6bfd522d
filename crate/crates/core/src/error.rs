use crate::abelian::AbelianError;

/// Errors surfaced by the library. Each variant carries a stable
/// machine-readable code (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("BAD_CARTAN at {path}: {msg}")]
    BadCartan { path: String, msg: String },
    #[error("BAD_TWIST at {path}: {msg}")]
    BadTwist { path: String, msg: String },
    #[error("BAD_PAIRING at {path}: {msg}")]
    BadPairing { path: String, msg: String },
    #[error("DATUM_ERROR at {path}: {msg}")]
    BadSpec { path: String, msg: String },
    #[error("DATUM_ERROR: unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("UNSUPPORTED_FOLDING: {0}")]
    UnsupportedFolding(String),
    #[error("NOT_DOMINANT: {0}")]
    NotDominant(String),
    #[error("DATUM_MISMATCH: elements belong to different root data")]
    DatumMismatch,
    #[error("ARITY: {0}")]
    Arity(String),
    #[error("K_INFINITE: generators {0:?} generate an infinite subgroup")]
    KInfinite(Vec<usize>),
    #[error("K_NOT_SIGMA_STABLE: {0:?}")]
    KNotSigmaStable(Vec<usize>),
    #[error("NOT_VERY_SPECIAL: {0}")]
    NotVerySpecial(String),
    #[error("TAU_NOT_LENGTH_ZERO: tau has length {0}")]
    TauNotLengthZero(usize),
    #[error("INVARIANTS_NOT_IN_BGMU: {0}")]
    InvariantsNotInBgMu(String),
    #[error("LEVI_MISMATCH: {0}")]
    LeviMismatch(String),
    #[error("ALPHA_IN_LEVI: root {0} lies in the Levi subsystem")]
    AlphaInLevi(usize),
    #[error("NO_REPRESENTATIVE: {0}")]
    NoRepresentative(String),
    #[error("CLASS_ERROR: orbit size {size} is not in {{h, 2h, 3h}} for h = {h}")]
    ClassError { size: usize, h: usize },
    #[error("NOT_STRAIGHT: {0}")]
    NotStraight(String),
    #[error("{0}")]
    Abelian(#[from] AbelianError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadCartan { .. } => "BAD_CARTAN",
            Error::BadTwist { .. } => "BAD_TWIST",
            Error::BadPairing { .. } => "BAD_PAIRING",
            Error::BadSpec { .. } | Error::UnknownPreset(_) => "DATUM_ERROR",
            Error::UnsupportedFolding(_) => "UNSUPPORTED_FOLDING",
            Error::NotDominant(_) => "NOT_DOMINANT",
            Error::DatumMismatch => "DATUM_MISMATCH",
            Error::Arity(_) => "USAGE",
            Error::KInfinite(_) => "K_INFINITE",
            Error::KNotSigmaStable(_) => "K_NOT_SIGMA_STABLE",
            Error::NotVerySpecial(_) => "NOT_VERY_SPECIAL",
            Error::TauNotLengthZero(_) => "TAU_NOT_LENGTH_ZERO",
            Error::InvariantsNotInBgMu(_) => "INVARIANTS_NOT_IN_BGMU",
            Error::LeviMismatch(_) => "LEVI_MISMATCH",
            Error::AlphaInLevi(_) => "ALPHA_IN_LEVI",
            Error::NoRepresentative(_) => "NO_REPRESENTATIVE",
            Error::ClassError { .. } => "CLASS_ERROR",
            Error::NotStraight(_) => "NOT_STRAIGHT",
            Error::Abelian(AbelianError::EndoIllDefined(_)) => "ENDO_ILL_DEFINED",
            Error::Abelian(_) => "DATUM_ERROR",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
