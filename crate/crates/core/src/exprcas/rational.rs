use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalNumber(BigRational);

impl RationalNumber {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Option<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return None;
        }
        Some(RationalNumber(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        RationalNumber(BigRational::from_integer(value.into()))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in rational literal")
    }

    pub fn zero() -> Self {
        RationalNumber(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalNumber(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        RationalNumber(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RationalNumber(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(RationalNumber(&self.0 / &rhs.0))
        }
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn pow(&self, exp: i32) -> Option<Self> {
        if exp < 0 && self.is_zero() {
            return None;
        }
        Some(RationalNumber(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact conversion of a finite binary64 value.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(RationalNumber)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn from_big(value: BigRational) -> Self {
        RationalNumber(value)
    }
}

impl From<i64> for RationalNumber {
    fn from(value: i64) -> Self {
        RationalNumber::from_integer(value)
    }
}

impl From<BigRational> for RationalNumber {
    fn from(value: BigRational) -> Self {
        RationalNumber(value)
    }
}

impl fmt::Display for RationalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for RationalNumber {
    type Err = ParseRationalError;

    /// Accepts `a`, `a/b` and finite decimals such as `0.25` or `-1.5e-3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseRationalError(s.to_string());
        if let Some((a, b)) = t.split_once('/') {
            let a: BigInt = a.trim().parse().map_err(|_| err())?;
            let b: BigInt = b.trim().parse().map_err(|_| err())?;
            return RationalNumber::new(a, b).ok_or_else(err);
        }
        if let Ok(i) = t.parse::<BigInt>() {
            return Ok(RationalNumber::from_integer(i));
        }
        parse_decimal(t).ok_or_else(err)
    }
}

fn parse_decimal(t: &str) -> Option<RationalNumber> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let value = BigRational::from_integer(all) * num_traits::Pow::pow(&ten, scale);
    Some(RationalNumber(if neg { -value } else { value }))
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalNumber {
            type Output = RationalNumber;
            fn $m(self, rhs: RationalNumber) -> RationalNumber {
                RationalNumber($tr::$m(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a RationalNumber> for &'a RationalNumber {
            type Output = RationalNumber;
            fn $m(self, rhs: &'a RationalNumber) -> RationalNumber {
                RationalNumber($tr::$m(&self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for RationalNumber {
    type Output = RationalNumber;
    /// Panics on division by zero; use [`RationalNumber::checked_div`] otherwise.
    fn div(self, rhs: RationalNumber) -> RationalNumber {
        self.checked_div(&rhs).expect("rational division by zero")
    }
}

impl<'a> Div<&'a RationalNumber> for &'a RationalNumber {
    type Output = RationalNumber;
    fn div(self, rhs: &'a RationalNumber) -> RationalNumber {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Neg for RationalNumber {
    type Output = RationalNumber;
    fn neg(self) -> RationalNumber {
        RationalNumber(-self.0)
    }
}

impl Neg for &RationalNumber {
    type Output = RationalNumber;
    fn neg(self) -> RationalNumber {
        RationalNumber(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = RationalNumber::new(6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(RationalNumber::new(1, 0).is_none());
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("3/9".parse::<RationalNumber>().unwrap(), RationalNumber::frac(1, 3));
        assert_eq!("0.25".parse::<RationalNumber>().unwrap(), RationalNumber::frac(1, 4));
        assert_eq!("-1.5e-1".parse::<RationalNumber>().unwrap(), RationalNumber::frac(-3, 20));
        assert_eq!("7".parse::<RationalNumber>().unwrap(), RationalNumber::from(7));
        assert!("1/0".parse::<RationalNumber>().is_err());
        assert!("abc".parse::<RationalNumber>().is_err());
    }

    #[test]
    fn pow_of_zero() {
        assert!(RationalNumber::zero().pow(-1).is_none());
        assert_eq!(RationalNumber::frac(2, 3).pow(-2).unwrap(), RationalNumber::frac(9, 4));
    }
}
