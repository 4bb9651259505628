use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point has all coordinates equal to zero")]
    ZeroPoint,

    #[error("components {first} and {second} are the same projective point")]
    DuplicatePoint { first: usize, second: usize },

    #[error("multiplicity {0} is not positive")]
    NonpositiveMultiplicity(i64),

    #[error("point has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDim,

    #[error("a fat-point scheme needs at least one component")]
    EmptyScheme,

    #[error("target dimension {target} is too small for a scheme in P^{ambient}")]
    TargetTooSmall { ambient: usize, target: usize },

    #[error("curve parameter (0, 0) does not define a point of P^1")]
    ZeroParameter,

    #[error("curve parameters {first} and {second} define the same point of P^1")]
    DuplicateParameter { first: usize, second: usize },

    #[error("degree {t} is outside the range [0, {reg}) required here")]
    DegreeOutOfRange { t: usize, reg: usize },

    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),

    #[error("degree {t} needs {columns} monomial columns, above the cap of {cap}")]
    ResourceLimit { t: usize, columns: u64, cap: usize },

    #[error("internal bound violated: {0}")]
    InternalBoundViolation(String),

    #[error("could not draw {wanted} distinct points after {attempts} attempts")]
    GeneratorExhausted { wanted: usize, attempts: usize },

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
