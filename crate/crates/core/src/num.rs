//! Exact rational scalars and symbolic `alpha*M + beta` values.
//!
//! `M` stands for a number larger than every concrete rational that can occur
//! during value iteration, so `MAffine` values compare lexicographically by
//! `(alpha, beta)`. The solver only ever adds M-affine values and scales them
//! by positive rationals; multiplying two M-affine values is not supported.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, the sole scalar type of the solver.
///
/// `num_rational::BigRational` keeps values in canonical form: positive
/// denominator, gcd(|numerator|, denominator) = 1.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from integer numerator and denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalParseError {
    pub input: String,
    pub reason: &'static str,
}

impl fmt::Display for RationalParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for RationalParseError {}

/// Parses the text form used by every file format of this crate:
/// an optional sign, then `p` or `p/q` in ASCII decimal digits with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let err = |reason| RationalParseError { input: text.to_string(), reason };
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (numer_text, denom_text) = match digits.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (digits, None),
    };
    let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(numer_text) {
        return Err(err("numerator must be one or more decimal digits"));
    }
    let numer: BigInt = numer_text.parse().expect("digits parse as BigInt");
    let denom: BigInt = match denom_text {
        None => BigInt::one(),
        Some(d) => {
            if !all_digits(d) {
                return Err(err("denominator must be one or more decimal digits"));
            }
            let q: BigInt = d.parse().expect("digits parse as BigInt");
            if q.is_zero() {
                return Err(err("denominator must be positive"));
            }
            q
        }
    };
    Ok(Rational::new(BigInt::from(sign) * numer, denom))
}

/// Formats a rational in the same grammar `parse_rational` accepts:
/// `p` for integers, `p/q` with `q > 0` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// A value `alpha*M + beta` where `M` represents an arbitrarily large number.
///
/// The total order is lexicographic: compare `alpha` first, then `beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MAffine {
    pub alpha: Rational,
    pub beta: Rational,
}

impl MAffine {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        MAffine { alpha, beta }
    }

    /// The symbol `M` itself: `1*M + 0`.
    pub fn symbol_m() -> Self {
        MAffine::new(Rational::one(), Rational::zero())
    }

    /// A concrete rational embedded as `0*M + beta`.
    pub fn constant(beta: Rational) -> Self {
        MAffine::new(Rational::zero(), beta)
    }

    pub fn zero() -> Self {
        MAffine::constant(Rational::zero())
    }

    /// True when the value does not involve `M`.
    pub fn is_constant(&self) -> bool {
        self.alpha.is_zero()
    }

    /// Scales by a strictly positive rational. Gains in the hypergraph are
    /// positive by definition, so a non-positive factor is a caller bug.
    pub fn scale(&self, factor: &Rational) -> MAffine {
        assert!(
            factor.is_positive(),
            "MAffine::scale requires a strictly positive factor, got {}",
            factor
        );
        MAffine::new(factor * &self.alpha, factor * &self.beta)
    }

    /// Evaluates at a concrete value for `M`.
    pub fn eval(&self, m_value: &Rational) -> Rational {
        &self.alpha * m_value + &self.beta
    }
}

impl PartialOrd for MAffine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MAffine {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alpha
            .cmp(&other.alpha)
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl Add for &MAffine {
    type Output = MAffine;

    fn add(self, rhs: &MAffine) -> MAffine {
        MAffine::new(&self.alpha + &rhs.alpha, &self.beta + &rhs.beta)
    }
}

impl Add for MAffine {
    type Output = MAffine;

    fn add(self, rhs: MAffine) -> MAffine {
        &self + &rhs
    }
}

impl Sub for &MAffine {
    type Output = MAffine;

    fn sub(self, rhs: &MAffine) -> MAffine {
        MAffine::new(&self.alpha - &rhs.alpha, &self.beta - &rhs.beta)
    }
}

impl fmt::Display for MAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha.is_zero() {
            return write!(f, "{}", format_rational(&self.beta));
        }
        if self.alpha.is_one() {
            write!(f, "M")?;
        } else {
            write!(f, "({})M", format_rational(&self.alpha))?;
        }
        if self.beta.is_zero() {
            Ok(())
        } else if self.beta.is_positive() {
            write!(f, "+{}", format_rational(&self.beta))
        } else {
            write!(f, "{}", format_rational(&self.beta))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_signed_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("+3").unwrap(), int(3));
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("007").unwrap(), int(7));
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for bad in ["", "+", "-", "1/0", "1/-2", "1/+2", "1.5", " 1", "1 ", "a", "1/2/3", "--1"] {
            assert!(parse_rational(bad).is_err(), "expected rejection of {:?}", bad);
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(8, 4)), "2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn add_is_componentwise() {
        let a = MAffine::new(int(1), int(0));
        let b = MAffine::new(int(0), int(-3));
        assert_eq!(&a + &b, MAffine::new(int(1), int(-3)));

        let a = MAffine::new(rat(1, 2), int(-3));
        let b = MAffine::new(rat(1, 2), int(3));
        assert_eq!(&a + &b, MAffine::new(int(1), int(0)));

        let a = MAffine::new(rat(1, 3), int(1));
        let b = MAffine::new(rat(1, 6), int(0));
        assert_eq!(&a + &b, MAffine::new(rat(1, 2), int(1)));
    }

    #[test]
    fn scale_multiplies_both_parts() {
        let m = MAffine::symbol_m();
        assert_eq!(m.scale(&rat(1, 3)), MAffine::new(rat(1, 3), int(0)));
        let x = MAffine::new(rat(2, 3), int(-5));
        assert_eq!(x.scale(&int(1)), x);
        let y = MAffine::new(rat(1, 6), int(0));
        assert_eq!(y.scale(&int(6)), MAffine::symbol_m());
    }

    #[test]
    #[should_panic(expected = "strictly positive")]
    fn scale_rejects_nonpositive_factor() {
        MAffine::symbol_m().scale(&int(0));
    }

    #[test]
    fn cmp_is_lexicographic() {
        let m = MAffine::symbol_m();
        let big_const = MAffine::constant(int(1_000_000));
        assert_eq!(m.cmp(&big_const), Ordering::Greater);

        let a = MAffine::new(rat(1, 2), int(-3));
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);

        let fifteen = MAffine::constant(int(15));
        let m_minus_2 = MAffine::new(int(1), int(-2));
        assert_eq!(fifteen.cmp(&m_minus_2), Ordering::Less);
    }

    #[test]
    fn display_uses_compact_m_notation() {
        assert_eq!(MAffine::symbol_m().to_string(), "M");
        assert_eq!(MAffine::new(rat(1, 2), int(-3)).to_string(), "(1/2)M-3");
        assert_eq!(MAffine::new(int(1), int(-2)).to_string(), "M-2");
        assert_eq!(MAffine::constant(int(15)).to_string(), "15");
        assert_eq!(MAffine::new(rat(1, 6), int(0)).to_string(), "(1/6)M");
    }
}
