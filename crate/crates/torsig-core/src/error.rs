use thiserror::Error;

use crate::exact::Rational;

/// Errors produced by the library. Everything user-facing is a precise,
/// recoverable condition; internal transcription regressions surface as
/// [`Error::NonIntegerResult`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p and q must be coprime (got p = {p}, q = {q})")]
    NotCoprime { p: u64, q: u64 },

    #[error("torus knot parameters must both be at least 2 (got p = {p}, q = {q})")]
    ParameterTooSmall { p: u64, q: u64 },

    #[error("p*q overflows the supported range (p = {p}, q = {q})")]
    ParameterTooLarge { p: u64, q: u64 },

    #[error("spectral parameter must lie in [0, 1), got {value}")]
    SpectralOutOfRange { value: Rational },

    #[error("evaluation point {value} lies outside the open interval (0, 1)")]
    OutsideUnitInterval { value: Rational },

    #[error("{value} is a jump point of the signature function of T({p},{q})")]
    JumpPoint { value: Rational, p: u64, q: u64 },

    #[error(
        "{value}*{p}*{q} is an integer, so {value} may be a jump point of the \
         signature function of T({p},{q}); pick an evaluation point off the 1/(p*q) grid"
    )]
    OnJumpGrid { value: Rational, p: u64, q: u64 },

    #[error("branched-cover order m = {m} must be coprime to p*q (p = {p}, q = {q})")]
    CoverOrderNotCoprime { m: u64, p: u64, q: u64 },

    #[error("fast Dedekind sum evaluation requires gcd(a, b) = 1 (got a = {a}, b = {b})")]
    DedekindNotCoprime { a: i128, b: u64 },

    #[error("closed formula for {what} evaluated to the non-integer {value}: transcription regression")]
    NonIntegerResult { what: &'static str, value: Rational },

    #[error(
        "the closed signature formula excludes C with C*p*q integral \
         (C = {value}, p = {p}, q = {q}); use the counting evaluation instead"
    )]
    ExcludedSpectralParameter { value: Rational, p: u64, q: u64 },

    #[error("cannot parse {input:?} as a rational number \"a/b\"")]
    ParseRational { input: String },

    #[error("validation requires max at least 5 (got {max})")]
    ValidationMaxTooSmall { max: u64 },
}
