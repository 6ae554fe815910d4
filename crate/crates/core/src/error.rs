use std::fmt;

use thiserror::Error;

use crate::algebra::AxiomReport;

/// Location-tagged failure from one of the text parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column (in characters).
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shift a position reported relative to a substring so that it is
    /// relative to the enclosing line.
    pub(crate) fn offset(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("algebra is not a multiplicative Hom-Lie algebra (skew: {}, Hom-Jacobi: {}, multiplicative: {})",
        .0.skew_ok, .0.hom_jacobi_ok, .0.multiplicative_ok)]
    NotCertified(Box<AxiomReport>),

    #[error("subspace is not a Hom-Lie subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("subspace is not a Hom-Lie ideal: {0}")]
    NotIdeal(String),

    #[error("malformed series: {0}")]
    MalformedChain(String),

    #[error("linear map is not a morphism of Hom-Lie algebras")]
    NotMorphism,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series term {index} is not contained in its predecessor (witness {witness:?})")]
    NotDescending {
        index: usize,
        witness: crate::linalg::Vector,
    },

    #[error("step limit of {0} reached before the series terminated or stabilized")]
    StepLimit(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
