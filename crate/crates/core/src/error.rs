use thiserror::Error;

/// Errors raised anywhere in the classification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field of degree {m} over F_{p} exceeds the supported size")]
    DegreeTooLarge { p: u64, m: u64 },
    #[error("no irreducible polynomial of degree {m} found over F_{p}")]
    NoIrreducibleFound { p: u64, m: u64 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative order or logarithm")]
    ZeroElement,
    #[error("no element of order {0} in this field")]
    OrderNotAvailable(u64),
    #[error("F_(p^{sub}) is not a subfield of F_(p^{sup})")]
    NotASubfield { sub: u32, sup: u32 },
    #[error("incompatible parameters: {0}")]
    IncompatibleParameters(String),
    #[error("group of order {0} exceeds the supported bound")]
    GroupTooLarge(u64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("matrices do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("field F_(p^{0}) exceeds the supported size")]
    FieldTooLarge(u32),
    #[error("representation is not in monomial form: {0}")]
    NotMonomialForm(String),
    #[error("matrix is not a scalar")]
    NotAScalar,
    #[error("restriction of scalars is not isotypic")]
    IsotypicityViolation,
    #[error("representation is not irreducible")]
    NotIrreducible,
    #[error("levels {0} and {1} are incompatible")]
    LevelsIncompatible(u32, u32),
    #[error("splitting search inconclusive after {0} attempts")]
    Inconclusive(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
