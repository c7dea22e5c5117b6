//! Exact rational arithmetic and the elementary number-theoretic functions
//! every formula in this crate is built from.
//!
//! All quantities are rational and all arithmetic is exact; there is no
//! floating point anywhere in this crate. Values render canonically as
//! `a/b` in lowest terms with the sign on the numerator, and integers
//! render without the `/1` (`-4/3`, `0`, `5`). That rendering is exactly
//! what [`Rational`]'s `Display` produces, and it is what every CLI
//! command prints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always stored in lowest terms with
/// a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor used pervasively in formulas and tests.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse the canonical text form `a/b` (or a bare integer `a`).
pub fn parse_rational(input: &str) -> Result<Rational, Error> {
    input.trim().parse::<Rational>().map_err(|_| Error::ParseRational {
        input: input.to_owned(),
    })
}

/// Integer part `⌊x⌋`: the unique integer `n` with `n ≤ x < n + 1`.
///
/// This is the floor, also for negative arguments: `int_part(-1/3) = -1`.
pub fn int_part(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Fractional part `{x} = x − ⌊x⌋`, always in `[0, 1)`.
pub fn frac_part(x: &Rational) -> Rational {
    x - x.floor()
}

/// The sawtooth function `((x))`: `{x} − 1/2` for non-integer `x`, `0` at
/// integers. Odd and 1-periodic.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        frac_part(x) - ratio(1, 2)
    }
}

/// The integrality indicator `d(x)`: `1` if `x` is an integer, else `0`.
pub fn is_integer_indicator(x: &Rational) -> i64 {
    i64::from(x.is_integer())
}

/// The periodized second Bernoulli polynomial `Ψ₂(x) = {x}² − {x} + 1/6`.
pub fn psi2(x: &Rational) -> Rational {
    let f = frac_part(x);
    &f * &f - f + ratio(1, 6)
}

/// Sawtooth of an explicit fraction `n/d` without building a [`Rational`]:
/// `((n/d)) = (2(n mod d) − d) / 2d`, or `0` when `d | n`.
///
/// `d` must be positive. Used by the summation kernels, which hold their
/// arguments over a fixed common denominator.
pub(crate) fn sawtooth_fraction(n: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(d.is_positive());
    let m = n.mod_floor(d);
    if m.is_zero() {
        (BigInt::zero(), BigInt::one())
    } else {
        (2 * m - d, 2 * d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_part_is_floor() {
        assert_eq!(int_part(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(int_part(&ratio(-1, 3)), BigInt::from(-1));
        assert_eq!(int_part(&ratio(5, 1)), BigInt::from(5));
    }

    #[test]
    fn frac_part_in_unit_interval() {
        assert_eq!(frac_part(&ratio(7, 2)), ratio(1, 2));
        assert_eq!(frac_part(&ratio(-1, 3)), ratio(2, 3));
        assert_eq!(frac_part(&ratio(4, 1)), ratio(0, 1));
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&ratio(0, 1)), ratio(0, 1));
        assert_eq!(sawtooth(&ratio(1, 3)), ratio(-1, 6));
        assert_eq!(sawtooth(&ratio(-1, 3)), ratio(1, 6));
    }

    #[test]
    fn integer_indicator() {
        assert_eq!(is_integer_indicator(&ratio(3, 1)), 1);
        assert_eq!(is_integer_indicator(&ratio(3, 2)), 0);
        assert_eq!(is_integer_indicator(&ratio(0, 1)), 1);
    }

    #[test]
    fn psi2_values() {
        assert_eq!(psi2(&ratio(0, 1)), ratio(1, 6));
        assert_eq!(psi2(&ratio(1, 2)), ratio(-1, 12));
        assert_eq!(psi2(&ratio(3, 2)), ratio(-1, 12));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(ratio(-4, 3).to_string(), "-4/3");
        assert_eq!(ratio(0, 5).to_string(), "0");
        assert_eq!(ratio(5, 1).to_string(), "5");
        assert_eq!(ratio(10, -15).to_string(), "-2/3");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["-4/3", "0", "5", "7/2", "-1/3"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn sawtooth_fraction_matches_sawtooth() {
        for n in -20i64..=20 {
            for d in 1i64..=12 {
                let (sn, sd) = sawtooth_fraction(&BigInt::from(n), &BigInt::from(d));
                assert_eq!(Rational::new(sn, sd), sawtooth(&ratio(n, d)));
            }
        }
    }
}
