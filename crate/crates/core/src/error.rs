//! Error type shared by every module of the crate.

use num_bigint::BigUint;

use crate::factorization::ModulusKind;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The base of the coefficient ring must be prime.
    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    /// p^m does not fit in a machine word.
    #[error("p^m overflows a 64-bit word (p = {p}, m = {m})")]
    RingTooLarge { p: u64, m: u32 },

    /// Inversion of a scalar divisible by p was requested.
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    /// Two operands live in different coefficient rings.
    #[error("polynomials belong to different coefficient rings")]
    MixedRings,

    /// Polynomial division requires a divisor with a unit leading coefficient.
    #[error("divisor leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,

    /// Code lengths must be odd.
    #[error("length must be odd (got {n})")]
    EvenLength { n: u64 },

    /// Code lengths must be coprime to p.
    #[error("length {n} is not coprime to p = {p}")]
    NonCoprime { p: u64, n: u64 },

    /// Vectors fed to the inner product must have equal length.
    #[error("vector lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    /// An operation tied to one modulus form was invoked on the other.
    #[error("operation requires a {expected:?}-modulus basis, basis is {found:?}")]
    WrongModulusKind {
        expected: ModulusKind,
        found: ModulusKind,
    },

    /// Lifting requires a monic target that splits into coprime seeds mod p.
    #[error("lift precondition failed: {0}")]
    LiftPrecondition(String),

    /// Exponent vector does not match the factor basis.
    #[error("invalid exponent profile: {0}")]
    InvalidProfile(String),

    /// Type classification is defined for self-dual codes only.
    #[error("code is not self-dual")]
    NotSelfDual,

    /// The zero code has no nonzero codeword to measure.
    #[error("zero code has no nonzero codeword")]
    ZeroCode,

    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: {required} items needed, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },
}
