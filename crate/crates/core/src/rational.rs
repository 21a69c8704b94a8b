//! Exact rational numbers.
//!
//! A thin newtype over an arbitrary-precision ratio. Values are always kept
//! in lowest terms with a positive denominator, and division is only
//! available through [`Rational::checked_div`] so a zero divisor surfaces as
//! an error instead of a panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `n / d` in lowest terms, carrying the sign on the numerator.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Smallest integer not less than `self`.
    pub fn ceil(&self) -> BigInt {
        let (q, r) = self.numer().div_mod_floor(self.denom());
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// The value as an integer, if it has denominator one and fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.is_integer() {
            self.numer().to_u64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}

from_primitive!(i32, u32, i64, u64, usize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer((*other).into())
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let malformed = || ParseRationalError::Malformed(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| malformed())?;
        let d: BigInt = d.parse().map_err(|_| malformed())?;
        Rational::new(n, d).map_err(|_| ParseRationalError::ZeroDenominator(s.to_string()))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        let x = r(100, 75);
        assert_eq!((x.numer().clone(), x.denom().clone()), (4.into(), 3.into()));
        let z = r(0, 5);
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        let s = r(-6, -4);
        assert_eq!((s.numer().clone(), s.denom().clone()), (3.into(), 2.into()));
        let t = r(6, -4);
        assert_eq!(t.to_string(), "-3/2");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(Rational::new(3, 0), Err(Error::ZeroDenominator));
        assert_eq!(
            r(1, 2).checked_div(&Rational::zero()),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(Rational::zero().recip(), Err(Error::ZeroDenominator));
        assert!(matches!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn unit_rate_chain_is_exact() {
        // 40/3 sandwiches per baker in 120 minutes is 1/9 per minute
        let per_minute = (r(40, 3) * r(1, 120))
            .checked_div(&Rational::one())
            .unwrap();
        assert_eq!(per_minute, r(1, 9));
        assert_eq!(per_minute * Rational::from(30i64), r(10, 3));
    }

    #[test]
    fn ceil_and_floor() {
        assert_eq!(r(10, 3).ceil(), 4.into());
        assert_eq!(r(12, 1).ceil(), 12.into());
        assert_eq!(r(-7, 2).ceil(), (-3).into());
        assert_eq!(r(-7, 2).floor(), (-4).into());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(12, 1).to_string(), "12");
        assert_eq!("4/6".parse::<Rational>().unwrap(), r(2, 3));
        assert_eq!("-5".parse::<Rational>().unwrap(), r(-5, 1));
        assert!("a/3".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    proptest! {
        #[test]
        fn addition_matches_cross_multiplication(
            a in -10_000i64..10_000, b in 1i64..10_000,
            c in -10_000i64..10_000, d in 1i64..10_000,
        ) {
            let sum = r(a, b) + r(c, d);
            let expected = Rational::new(
                BigInt::from(a) * d + BigInt::from(c) * b,
                BigInt::from(b) * d,
            ).unwrap();
            prop_assert_eq!(&sum, &expected);
            prop_assert!(sum.denom() > &BigInt::zero());
            prop_assert!(sum.numer().gcd(sum.denom()) == BigInt::one());
        }

        #[test]
        fn text_round_trip(n in any::<i64>(), d in any::<i64>().prop_filter("nonzero", |d| *d != 0)) {
            let x = r(n, d);
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }

        #[test]
        fn large_products_do_not_overflow(a in any::<i64>(), b in any::<i64>()) {
            let p = Rational::from(a) * Rational::from(b);
            prop_assert_eq!(p.numer().clone(), BigInt::from(a) * BigInt::from(b));
        }
    }
}
