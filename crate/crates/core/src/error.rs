use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("map is not hyperbolic (trace {trace})")]
    NotHyperbolic { trace: f64 },
    #[error("map is not parabolic (trace {trace})")]
    NotParabolic { trace: f64 },
    #[error("map fixes infinity (|c| = {c})")]
    FixesInfinity { c: f64 },
    #[error("length must be positive, got {0}")]
    NonPositiveLength(f64),
    #[error("length must be nonnegative, got {0}")]
    NegativeLength(f64),
    #[error("value must be positive, got {0}")]
    NonPositive(f64),
    #[error("argument outside domain: {0}")]
    DomainError(String),
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("group is not flagged as free")]
    NotFree,
    #[error("group has no cusp data")]
    NoCusp,
    #[error("group is not cusp-normalized")]
    NotNormalized,
    #[error("word ball contains no usable element")]
    EmptyBall,
    #[error("class is not certified simple")]
    NotSimple,
    #[error("inadmissible traces ({x}, {y}, {z}): boundary trace {boundary} > -2")]
    InadmissibleTraces {
        x: f64,
        y: f64,
        z: f64,
        boundary: f64,
    },
    #[error("boundary component {0} is a cusp; geodesic boundary required")]
    CuspedBoundary(usize),
    #[error("no hyperbolic class found in the search ball")]
    NoHyperbolicClass,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("degenerate sampling region: {0}")]
    DegenerateRegion(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid document: {0}")]
    Parse(String),
}
