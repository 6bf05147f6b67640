use thiserror::Error;

/// Errors raised while building models, reading files or evaluating functionals.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: expected length {expected}, found length {found}")]
    Length {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("{what}: non-finite entry at flat index {index}")]
    NonFinite { what: String, index: usize },

    #[error("{what}: symmetry `{relation}` violated by {violation:e}")]
    Symmetry {
        what: String,
        relation: String,
        violation: f64,
    },

    #[error("quadrature order {given} is not exact for integrand degree {degree}; order >= {required} required")]
    QuadratureOrder { given: usize, degree: u32, required: usize },

    #[error("polynomial degree of the Lagrangian is unknown, quadrature exactness cannot be checked")]
    UnknownDegree,

    #[error("Lagrangian evaluation returned a non-finite value")]
    NonFiniteEvaluation,

    #[error("finite-difference step underflow at argument {value:e}")]
    StepUnderflow { value: f64 },

    #[error("arity mismatch: expected {expected} components, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("seed closure conflict at entry {index:?}: {first} vs {second}")]
    SeedConflict { index: Vec<usize>, first: f64, second: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
