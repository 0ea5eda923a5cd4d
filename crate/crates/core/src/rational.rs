//! Arbitrary-precision rational scalars.
//!
//! Every scalar in the crate is a [`Rational`]: numerator and positive
//! denominator in lowest terms, with `0/1` as the canonical zero. Values
//! serialize as the string `"p/q"`, with `/q` omitted when the denominator
//! is one.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always kept in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// Convenience constructor for small literals. Panics on a zero
    /// denominator; use [`Rational::new`] for fallible construction.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in Rational::frac");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
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

    /// Exact multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact division; the divisor must be nonzero.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power, allowing negative exponents for nonzero values.
    pub fn pow(&self, exp: i32) -> Result<Self, Error> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(exp)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with integer `p` and positive integer `q`.
    /// No floats, no whitespace, no sign on the denominator.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadRational(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = parse_int(num_str, true).ok_or_else(bad)?;
        let den = match den_str {
            Some(d) => {
                let den = parse_int(d, false).ok_or_else(bad)?;
                if den.is_zero() || den.is_negative() {
                    return Err(bad());
                }
                den
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix(['-', '+']) {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| de::Error::custom(format!("{e}")))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact_and_canonical() {
        let half = Rational::frac(1, 2);
        let third = Rational::frac(1, 3);
        assert_eq!(&half + &third, Rational::frac(5, 6));
        assert_eq!(Rational::frac(2, 4), Rational::frac(1, 2));
        assert_eq!(Rational::frac(2, -4), Rational::frac(-1, 2));
        assert_eq!(Rational::frac(2, -4).to_string(), "-1/2");
        assert_eq!(&half - &half, Rational::zero());
        assert_eq!((&half * &third).to_string(), "1/6");
    }

    #[test]
    fn inversion_of_zero_is_an_error() {
        assert!(matches!(Rational::zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!(
            Rational::one().checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(Rational::zero().pow(-1), Err(Error::DivisionByZero)));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "5", "-3/7", "22/7", "-1", "123456789123456789/2"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // canonicalization on parse
        let r: Rational = "6/4".parse().unwrap();
        assert_eq!(r.to_string(), "3/2");
    }

    #[test]
    fn rejects_bad_literals() {
        for s in ["", "/", "1/0", "1/-2", "1.5", "1e3", " 1", "1 ", "--1", "a"] {
            assert!(s.parse::<Rational>().is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn powers() {
        let r = Rational::frac(2, 3);
        assert_eq!(r.pow(2).unwrap(), Rational::frac(4, 9));
        assert_eq!(r.pow(-1).unwrap(), Rational::frac(3, 2));
        assert_eq!(r.pow(0).unwrap(), Rational::one());
    }
}
