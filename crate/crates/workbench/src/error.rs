use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("differential does not square to zero at degree {degree}")]
    DifferentialNotSquareZero { degree: i32 },

    #[error("not a chain map at degree {degree}")]
    NotChainMap { degree: i32 },

    #[error("not a cocycle in degree {degree}")]
    NotCocycle { degree: i32 },

    #[error("invalid DGLA: {0}")]
    InvalidDgla(String),

    #[error("invalid DGLA morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid coefficient algebra: {0}")]
    InvalidCoefficientAlgebra(String),

    #[error("commutative square does not commute at degree {degree}")]
    SquareNotCommuting { degree: i32 },

    #[error("morphism is not injective at degree {degree}")]
    NotInjective { degree: i32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("BCH word length {requested} exceeds the supported bound {supported}")]
    BchBoundExceeded { requested: usize, supported: usize },

    #[error("element has wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: i32, got: i32 },

    #[error("element is not Maurer-Cartan: residual is nonzero")]
    NotMaurerCartan,

    #[error("linear system has no solution")]
    NoSolution,

    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),

    #[error("unknown task `{0}`")]
    UnknownTask(String),

    #[error("document error at {path}: {message}")]
    Document { path: String, message: String },

    #[error("no admissible lift for Whitehead product representative")]
    NoAdmissibleLift,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
