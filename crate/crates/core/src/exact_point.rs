//! Spectral parameters: the computable subgroup of the nonzero complex
//! numbers consisting of a positive rational magnitude and a rational phase,
//! `q * e^{2 pi i k/m}`. The subgroup is closed under multiplication and
//! inversion and contains every root of unity, which is exactly what the
//! periodicity, scaling-orbit, and block computations need.

use std::cmp::Ordering;
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, ParseError};

/// A point `magnitude * e^{2 pi i phase}` with `magnitude > 0` rational and
/// `0 <= phase < 1` rational. Multiplication multiplies magnitudes and adds
/// phases modulo one; every element is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoint {
    magnitude: BigRational,
    phase: BigRational,
}

impl ExactPoint {
    pub fn new(magnitude: BigRational, phase: BigRational) -> Result<Self, Error> {
        if !magnitude.is_positive() {
            return Err(Error::InvalidPoint);
        }
        Ok(ExactPoint {
            magnitude,
            phase: normalize_phase(phase),
        })
    }

    /// The point 1.
    pub fn one() -> Self {
        ExactPoint {
            magnitude: BigRational::one(),
            phase: BigRational::zero(),
        }
    }

    /// A positive rational point `p/q`.
    pub fn from_rational(magnitude: BigRational) -> Result<Self, Error> {
        Self::new(magnitude, BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Result<Self, Error> {
        if n > 0 {
            Self::new(BigRational::from(BigInt::from(n)), BigRational::zero())
        } else if n < 0 {
            // negative reals have phase 1/2
            Self::new(
                BigRational::from(BigInt::from(-n)),
                BigRational::new(BigInt::from(1), BigInt::from(2)),
            )
        } else {
            Err(Error::InvalidPoint)
        }
    }

    /// The primitive m-th root of unity `e^{2 pi i / m}`.
    pub fn root_of_unity(m: u64) -> Self {
        assert!(m > 0);
        ExactPoint {
            magnitude: BigRational::one(),
            phase: normalize_phase(BigRational::new(BigInt::from(1), BigInt::from(m))),
        }
    }

    pub fn magnitude(&self) -> &BigRational {
        &self.magnitude
    }

    pub fn phase(&self) -> &BigRational {
        &self.phase
    }

    /// Denominator of the reduced phase; the order of the phase as a root of
    /// unity.
    pub fn phase_denominator(&self) -> BigInt {
        self.phase.denom().clone()
    }

    pub fn mul(&self, other: &ExactPoint) -> ExactPoint {
        ExactPoint {
            magnitude: &self.magnitude * &other.magnitude,
            phase: normalize_phase(&self.phase + &other.phase),
        }
    }

    pub fn inv(&self) -> ExactPoint {
        ExactPoint {
            magnitude: self.magnitude.recip(),
            phase: normalize_phase(-self.phase.clone()),
        }
    }

    /// `self / other`.
    pub fn div(&self, other: &ExactPoint) -> ExactPoint {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> ExactPoint {
        let mag = if k >= 0 {
            num::pow::pow(self.magnitude.clone(), k as usize)
        } else {
            num::pow::pow(self.magnitude.recip(), (-k) as usize)
        };
        let phase = normalize_phase(&self.phase * BigRational::from(BigInt::from(k)));
        ExactPoint { magnitude: mag, phase }
    }

    pub fn is_one(&self) -> bool {
        self.magnitude.is_one() && self.phase.is_zero()
    }
}

fn normalize_phase(p: BigRational) -> BigRational {
    let f = p.floor();
    p - f
}

// Deterministic total order: by magnitude as a reduced fraction, then phase.
impl Ord for ExactPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.magnitude
            .cmp(&other.magnitude)
            .then_with(|| self.phase.cmp(&other.phase))
    }
}

impl PartialOrd for ExactPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase.is_zero() {
            write!(f, "{}", format_rational(&self.magnitude))
        } else {
            write!(
                f,
                "{}*e({})",
                format_rational(&self.magnitude),
                format_rational(&self.phase)
            )
        }
    }
}

/// Formats a rational as `p` or `p/q` in lowest terms.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::new(format!("malformed fraction '{s}'"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(m: i64) -> ExactPoint {
        ExactPoint::from_integer(m).unwrap()
    }

    #[test]
    fn multiplication_and_inverse() {
        let a = pt(6);
        let b = pt(-2);
        let ab = a.mul(&b);
        assert_eq!(ab, pt(-12));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(pt(-1).mul(&pt(-1)), pt(1));
    }

    #[test]
    fn phases_add_modulo_one() {
        let z3 = ExactPoint::root_of_unity(3);
        let z = z3.mul(&z3).mul(&z3);
        assert!(z.is_one());
        assert_eq!(z3.pow(2).phase(), &BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(z3.pow(-1), z3.pow(2));
    }

    #[test]
    fn ordering_is_magnitude_then_phase() {
        let a = pt(2);
        let b = pt(-2); // same magnitude, phase 1/2
        assert!(a < b);
        assert!(pt(1) < a);
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-5", "2/7", "-9/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn zero_magnitude_rejected() {
        assert!(ExactPoint::from_integer(0).is_err());
        assert!(ExactPoint::new(BigRational::zero(), BigRational::zero()).is_err());
    }
}
