use num_bigint::BigUint;
use thiserror::Error;

/// Errors reported by the library's operations.
///
/// These cover precondition violations (zero inputs, non-monic divisors,
/// composite moduli where a prime is required) and structural problems such
/// as family-shape mismatches. Budget exhaustion is *not* an error: operations
/// that can run out of factoring effort report a tri-state `Unknown` instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonzero")]
    ZeroInput,

    #[error("composition exponent must be positive")]
    ZeroExponent,

    #[error("modulus must be at least 2")]
    ModulusTooSmall,

    #[error("modulus {0} must be prime for this operation")]
    CompositeModulus(BigUint),

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("polynomial must be monic")]
    NonMonic,

    #[error("divisor must be monic of positive degree")]
    NonMonicDivisor,

    #[error("polynomial must have positive degree")]
    ConstantPolynomial,

    #[error("constant term must be nonzero")]
    ZeroConstantTerm,

    #[error("discriminant is zero: the polynomial has a repeated factor")]
    ZeroDiscriminant,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("invalid maximal ideal: {0}")]
    InvalidIdealSpec(String),

    #[error("family hypothesis violated: {0}")]
    FamilyShape(String),

    #[error("could not fully factor {0} within the given budget")]
    IncompleteFactorization(BigUint),

    #[error("too many divisor candidates for integer root search")]
    DivisorEnumerationOverflow,
}
