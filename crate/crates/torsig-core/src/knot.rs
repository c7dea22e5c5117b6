use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::exact::Rational;

/// A torus knot `T(p,q)`: a coprime pair with `p, q ≥ 2`.
///
/// `(p,q)` and `(q,p)` describe the same knot; every operation in this
/// crate is symmetric under the swap, which the test suite checks rather
/// than forcing a canonical order here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    p: u64,
    q: u64,
}

impl TorusKnot {
    pub fn new(p: u64, q: u64) -> Result<Self, Error> {
        if p < 2 || q < 2 {
            return Err(Error::ParameterTooSmall { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        if p.checked_mul(q).is_none() {
            return Err(Error::ParameterTooLarge { p, q });
        }
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn pq(&self) -> u64 {
        self.p * self.q
    }

    /// `|Σ| = (p−1)(q−1)`, the number of jump points of the signature
    /// function.
    pub fn sigma_cardinality(&self) -> u64 {
        (self.p - 1) * (self.q - 1)
    }

    pub fn swapped(&self) -> TorusKnot {
        TorusKnot { p: self.q, q: self.p }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// A rational `C ∈ [0, 1)` standing for the unit-circle point
/// `z = e^{2πiC}` at which signatures are evaluated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralParameter {
    value: Rational,
}

impl SpectralParameter {
    pub fn new(value: Rational) -> Result<Self, Error> {
        if value.is_negative() || value >= Rational::one() {
            return Err(Error::SpectralOutOfRange { value });
        }
        Ok(SpectralParameter { value })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn into_value(self) -> Rational {
        self.value
    }
}

impl fmt::Display for SpectralParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(TorusKnot::new(4, 6), Err(Error::NotCoprime { .. })));
        assert!(matches!(TorusKnot::new(2, 2), Err(Error::NotCoprime { .. })));
        assert!(matches!(TorusKnot::new(1, 5), Err(Error::ParameterTooSmall { .. })));
        assert!(matches!(TorusKnot::new(0, 3), Err(Error::ParameterTooSmall { .. })));
        assert!(matches!(
            TorusKnot::new(u64::MAX, 2),
            Err(Error::ParameterTooLarge { .. })
        ));
    }

    #[test]
    fn accessors() {
        let k = TorusKnot::new(3, 5).unwrap();
        assert_eq!((k.p(), k.q(), k.pq()), (3, 5, 15));
        assert_eq!(k.sigma_cardinality(), 8);
        assert_eq!(k.swapped(), TorusKnot::new(5, 3).unwrap());
        assert_eq!(k.to_string(), "T(3,5)");
    }

    #[test]
    fn spectral_parameter_range() {
        assert!(SpectralParameter::new(ratio(0, 1)).is_ok());
        assert!(SpectralParameter::new(ratio(99, 100)).is_ok());
        assert!(SpectralParameter::new(ratio(1, 1)).is_err());
        assert!(SpectralParameter::new(ratio(-1, 2)).is_err());
    }
}
