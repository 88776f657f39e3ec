use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("states share v; the point lies on the plane at z = infinity")]
    DegenerateDirection,
    #[error("formula has a pole at z = 0")]
    PoleAtZero,
    #[error("point lies on a bounding surface: {0}")]
    AmbiguousOnSurface(&'static str),
    #[error("point is not on the {0} surface")]
    NotOnSurface(&'static str),
    #[error("point lies on the boundary between the slow and fast sonic' components")]
    SonicBoundary,
    #[error("Hugoniot curve does not meet the characteristic surface")]
    NoIntersection,
    #[error("Hugoniot curve is tangent to the characteristic surface")]
    Tangency,
    #[error("point is on the wrong half of the characteristic surface: {0}")]
    WrongSide(&'static str),
    #[error("state ({0}, {1}) is elliptic")]
    EllipticState(f64, f64),
    #[error("state ({0}, {1}) lies on the coincidence ellipse")]
    TangentState(f64, f64),
    #[error("composite field is singular at this point")]
    Singularity,
    #[error("start point is not on the inflection locus")]
    NotOnInflection,
    #[error("point is not on the given Hugoniot curve")]
    NotOnCurve,
    #[error("no forward/backward intersection inside the working window")]
    NoRiemannIntersection,
    #[error("every intersection yields a sequence with decreasing speeds")]
    IncompatibleSequence,
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EllipticState(..) | Error::TangentState(..) => 3,
            Error::NoRiemannIntersection | Error::NoIntersection => 4,
            Error::IncompatibleSequence => 5,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
