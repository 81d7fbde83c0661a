use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn at_line(line: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!(" at line {line}")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("root search limit exceeded: {0}")]
    RootSearchLimit(String),

    /// `line` is 1-based; 0 means the input has no line structure.
    #[error("parse error{}: {message}", at_line(*line))]
    Parse { line: usize, message: String },

    #[error("invalid bracket [e{i},e{j}]: {message}")]
    InvalidBracket { i: usize, j: usize, message: String },
    #[error("Jacobi identity fails on (e{i}, e{j}, e{k}): residual {residual}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("Lie algebra is not solvable")]
    NotSolvable,
    #[error("not split over {field}: {element} has characteristic factor {factor} with no root in the field")]
    NotSplitOverField {
        field: String,
        element: String,
        factor: String,
    },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix does not preserve the bracket [e{i},e{j}]: residual {residual}")]
    NotAutomorphism {
        i: usize,
        j: usize,
        residual: String,
    },
    #[error("subspace is not invariant under the map")]
    NotInvariant,

    #[error("matrix is not unimodular (|det| = {det})")]
    NotUnimodular { det: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid group automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
}
