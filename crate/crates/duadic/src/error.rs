//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by code construction, bound computation, and the
/// distance engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("extension degree m = {0} outside the supported range 2..=32")]
    UnsupportedDegree(u32),

    #[error("polynomial of degree {got} where degree {expected} was required")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("{0} is not a primitive polynomial for the requested field")]
    NotPrimitive(String),

    #[error("minimal polynomial over GF(2^{m}) produced a coefficient outside GF(2); coset or field is inconsistent")]
    NonBinaryCoefficient { m: u32 },

    #[error("modulus n = {0} must be odd")]
    EvenModulus(u64),

    #[error("weight classes must form a nonempty proper subset of Z_{r}, got {got:?}")]
    DegenerateWeightClasses { r: u32, got: Vec<u32> },

    #[error("m = {0} is below the minimum of 3 for weight-class defining sets")]
    WeightSetDegreeTooSmall(u32),

    #[error("{u} is not a unit modulo {n}")]
    NotAUnit { u: u64, n: u64 },

    #[error("defining set over Z_{n} is not closed under doubling (offender {witness})")]
    NotConjugateClosed { n: u64, witness: u64 },

    #[error("defining set modulus {got} does not match field modulus {expected}")]
    ModulusMismatch { expected: u64, got: u64 },

    #[error("defining set equals all of Z_{0}; the construction is not a code")]
    FullDefiningSet(u64),

    #[error("message length {got} does not match code dimension {expected}")]
    MessageLength { expected: usize, got: usize },

    #[error("word length {got} does not match code length {expected}")]
    WordLength { expected: usize, got: usize },

    #[error("0 is already in the defining set; the code has no odd-weight words")]
    AlreadyEvenLike,

    #[error("dimension {k} exceeds the exhaustive-enumeration cap {cap}; use the certified engine instead")]
    DimensionAboveCap { k: usize, cap: usize },

    #[error("code has dimension 0; minimum distance is undefined")]
    ZeroDimension,

    #[error("duadic scan requires even r and odd m, got r = {r}, m = {m}")]
    ScanParity { r: u32, m: u32 },

    #[error("the given sets and unit do not form a splitting of Z_{0}")]
    NotASplitting(u64),

    #[error("no distance-bound table entry covers m = {m}, S = {s:?}")]
    TheoremNotCovered { m: u32, s: Vec<u32> },

    #[error("no containment-lemma clause covers m = {0}")]
    LemmaNotCovered(u32),

    #[error("trial count must be at least 1")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
