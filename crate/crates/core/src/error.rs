use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("index {index} out of range (maximum {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { k: usize, rows: usize, cols: usize },

    #[error("generic rank not attained: no nonzero {0}x{0} minor")]
    RankNotAttained(usize),

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("witness polynomial is zero")]
    ZeroWitness,

    #[error("undefined ideal `{0}`")]
    UndefinedAtom(String),

    #[error("jet context mismatch")]
    ContextMismatch,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
