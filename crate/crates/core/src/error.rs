use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input (bad coefficient counts, zero forms, ...).
    Input,
    /// A mathematical obstruction or a failed certificate.
    Math,
    /// Working precision was not enough to certify a result.
    Precision,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("input cubic is singular")]
    SingularInput,
    #[error("internal error: {0}")]
    Internal(String),

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("ambiguous rational reconstruction: {0} and {1} both fit")]
    AmbiguousReconstruction(String, String),
    #[error("rational reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("inconclusive numeric decision: {0}")]
    Inconclusive(String),

    #[error("sampled Cayleans span only {0} dimension(s)")]
    RankDeficient(usize),
    #[error("pencil has {0} singular members, expected 4")]
    WrongCount(usize),
    #[error("j-invariant is constant on the pencil")]
    DegenerateJ,
    #[error("flex intersection degenerate: {0}")]
    DegenerateIntersection(String),
    #[error("bad Hesse configuration: {0}")]
    BadConfiguration(String),
    #[error("commutator is not scalar (deviation {0:e})")]
    NonScalarCommutator(f64),
    #[error("degenerate tangent construction: {0}")]
    DegenerateTangent(String),

    #[error("no rational point found up to height {0}")]
    NoRationalPoint(i64),
    #[error("no rational pencil parameter with the requested j-invariant")]
    NoJMatch,
    #[error("no mismatching prime up to {0}; curves may be isogenous")]
    IsogenousPair(u64),
    #[error("no linear equivalence found")]
    NoLinearEquivalence,
    #[error("interpolation null space has dimension {0}, expected 1")]
    NullSpaceDimension(usize),
    #[error("verification failed: residual {residual:e} exceeds {threshold:e}")]
    VerificationFailed { residual: f64, threshold: f64 },

    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InvalidInput(_) => ErrorClass::Input,
            Error::InsufficientPrecision(_)
            | Error::AmbiguousReconstruction(..)
            | Error::ReconstructionFailed(_)
            | Error::NonConvergence { .. }
            | Error::Inconclusive(_)
            | Error::DegenerateIntersection(_)
            | Error::NonScalarCommutator(_) => ErrorClass::Precision,
            Error::Stage { source, .. } => source.class(),
            _ => ErrorClass::Math,
        }
    }

    /// Strips stage labels.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |e| match e {
            e @ Error::Stage { .. } => e,
            e => Error::Stage {
                stage,
                source: Box::new(e),
            },
        }
    }
}
