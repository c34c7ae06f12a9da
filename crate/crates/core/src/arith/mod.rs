//! Exact scalars: arbitrary-precision rationals and the single-radical
//! quadratic extension `Q(√d)`.

mod roots;
mod scalar;
mod sqrt;

pub use roots::{quad_roots, RootPair};
pub use scalar::{shared_radicand, QuadExt, Scalar};
pub(crate) use scalar::parse_rat;
pub use sqrt::{squarefree_decompose, squarefree_sqrt, squarefree_sqrt_with_bound, DEFAULT_TRIAL_BOUND};

use num_bigint::BigInt;
use thiserror::Error;

pub type Rat = num_rational::BigRational;

/// Shorthand for the rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("values from Q(√{left}) and Q(√{right}) cannot be combined")]
    MixedRadicals { left: BigInt, right: BigInt },
    #[error("division by zero")]
    DivisionByZero,
    #[error("could not certify the square-free part of {radicand}")]
    UnreducedRadical { radicand: BigInt },
    #[error("{0} is not a valid radicand (must be square-free, nonzero and not 1)")]
    InvalidRadicand(BigInt),
    #[error("the zero form has no roots")]
    ZeroForm,
    #[error("square root of an irrational discriminant would nest radicals")]
    NestedRadical,
    #[error("cannot parse exact value: {0}")]
    Parse(String),
}

impl ArithError {
    pub fn code(&self) -> &'static str {
        match self {
            ArithError::MixedRadicals { .. } => "MixedRadicals",
            ArithError::DivisionByZero => "DivisionByZero",
            ArithError::UnreducedRadical { .. } => "UnreducedRadical",
            ArithError::InvalidRadicand(_) => "InvalidRadicand",
            ArithError::ZeroForm => "ZeroForm",
            ArithError::NestedRadical => "NestedRadical",
            ArithError::Parse(_) => "ParseError",
        }
    }
}
