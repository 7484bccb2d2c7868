use thiserror::Error;

/// Errors raised by the library. Each variant belongs to one of two
/// families: usage errors (bad parameters) and domain errors (a point that
/// violates the precondition of a chart or formula).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the Kronecker quiver needs ell >= 3, got {0}")]
    EllTooSmall(i64),

    #[error("simple reflection index must be 1 or 2, got {0}")]
    InvalidIndex(i64),

    #[error("max height must be at least 1")]
    InvalidHeight,

    #[error("sample count must be at least 1")]
    InvalidSampleCount,

    #[error("finite-difference step {0:e} outside [1e-9, 1e-2]")]
    InvalidStep(f64),

    #[error("point violates the strip |Im(y1 - y2)| < pi (|Im| = {0})")]
    OutsideStrip(f64),

    #[error("point ({0}) is not in X: a coordinate vanishes or x1/x2 is a non-positive real")]
    NotInX(String),

    #[error("s1 = {0} lies outside the ellipse E")]
    OutsideEllipse(String),

    #[error("s1 = {0} lies on the branch cut segment [-2i, 2i]")]
    OnBranchCut(String),

    #[error("t2 must be non-zero")]
    ZeroT2,

    #[error("operation not supported in chart {0}")]
    UnsupportedChart(&'static str),

    #[error("loop of radius {0} leaves the ellipse E or encloses both punctures")]
    LoopLeavesDomain(f64),

    #[error("linear system ill-conditioned (condition number {0:e})")]
    IllConditioned(f64),

    #[error("too few continuation steps ({0}); need at least 8")]
    TooFewSteps(usize),

    #[error("could not parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    /// True for errors caused by a point outside the domain of a formula,
    /// false for malformed parameters.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::OutsideStrip(_)
                | Error::NotInX(_)
                | Error::OutsideEllipse(_)
                | Error::OnBranchCut(_)
                | Error::ZeroT2
                | Error::UnsupportedChart(_)
                | Error::LoopLeavesDomain(_)
                | Error::IllConditioned(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
