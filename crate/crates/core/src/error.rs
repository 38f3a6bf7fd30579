use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("polynomial is not quasihomogeneous: {0}")]
    NotQuasihomogeneous(String),
    #[error("ideal is not closed under the Poisson bracket: {{g{0}, g{1}}} leaves remainder {2}")]
    NotInvolutive(usize, usize, String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("module is not graded: {0}")]
    NotGraded(String),
    #[error("cochain degree {0} is not supported (0..=3 only)")]
    UnsupportedCochainDegree(usize),
    #[error("input is not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("input is not a reduced plane curve: {0}")]
    NotPlaneCurve(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
