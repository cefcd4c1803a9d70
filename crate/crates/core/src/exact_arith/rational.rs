//! Arbitrary-precision rationals with a canonical `p/q` text form.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::arg("zero denominator"));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// `numer/denom` for denominators known to be nonzero.
    pub fn frac(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Decimal rendering truncated toward zero to `digits` significant digits,
    /// prefixed with `~` so it is never mistaken for an exact value.
    pub fn approx_decimal(&self, digits: usize) -> String {
        format!("~{}", truncated_decimal(self.numer(), self.denom(), digits))
    }
}

/// Renders `numer/denom` with `digits` significant digits, truncating toward zero.
pub(crate) fn truncated_decimal(numer: &BigInt, denom: &BigInt, digits: usize) -> String {
    let digits = digits.max(1);
    if numer.is_zero() {
        return "0".to_string();
    }
    let negative = (numer.sign() == Sign::Minus) != (denom.sign() == Sign::Minus);
    let n = numer.magnitude().clone();
    let d = denom.magnitude().clone();
    let ten = BigUint::from(10u32);

    // Find the decimal exponent so that the integer part of n/d * 10^shift has `digits` digits.
    let int_part = &n / &d;
    let int_len = if int_part.is_zero() {
        0
    } else {
        int_part.to_string().len() as i64
    };
    let lead_exp = if int_len > 0 {
        int_len - 1
    } else {
        // first nonzero digit after the decimal point
        let mut k = 0i64;
        let mut scaled = n.clone();
        while (&scaled / &d).is_zero() {
            scaled *= &ten;
            k += 1;
        }
        -k
    };
    let shift = digits as i64 - 1 - lead_exp;
    let scaled = if shift >= 0 {
        (&n * ten.pow(shift as u32)) / &d
    } else {
        &n / (&d * ten.pow((-shift) as u32))
    };
    let mut body = scaled.to_string();
    let sign = if negative { "-" } else { "" };
    if shift <= 0 {
        body.push_str(&"0".repeat((-shift) as usize));
        return format!("{sign}{body}");
    }
    let shift = shift as usize;
    if body.len() <= shift {
        let pad = "0".repeat(shift - body.len());
        body = format!("0.{pad}{body}");
    } else {
        body.insert(body.len() - shift, '.');
    }
    let trimmed = body.trim_end_matches('0').trim_end_matches('.');
    format!("{sign}{trimmed}")
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::validation(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse(p)?, parse(q)?),
            None => Ok(Rational::integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! impl_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::integer(BigInt::from(n))
            }
        }
    )*};
}
impl_from_int!(i32, i64, i128, u32, u64, u128, usize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl From<BigUint> for Rational {
    fn from(n: BigUint) -> Self {
        Rational::integer(BigInt::from(n))
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $check:expr) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $check(&rhs);
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                $check(rhs);
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $check(&rhs);
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $check(rhs);
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
    };
}

fn no_check(_: &Rational) {}
fn nonzero_divisor(rhs: &Rational) {
    assert!(!rhs.is_zero(), "division by zero rational");
}

impl_binop!(Add, add, no_check);
impl_binop!(Sub, sub, no_check);
impl_binop!(Mul, mul, no_check);
impl_binop!(Div, div, nonzero_divisor);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = Rational::frac(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert!(q.denom() > &BigInt::zero());
        assert_eq!(Rational::frac(10, 5).to_string(), "2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Rational::new(1, 0).is_err());
        assert!("3/0".parse::<Rational>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "0",
            "-7",
            "149900/3",
            "-6/7",
            "123456789012345678901234567890/11",
        ] {
            let q: Rational = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn json_is_a_string() {
        let q = Rational::frac(151900, 3);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "\"151900/3\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::frac(1, 3).approx_decimal(5), "~0.33333");
        assert_eq!(Rational::frac(-151900, 3).approx_decimal(8), "~-50633.333");
        assert_eq!(Rational::frac(1, 800).approx_decimal(3), "~0.00125");
        assert_eq!(Rational::integer(1234567).approx_decimal(3), "~1230000");
        assert_eq!(Rational::zero().approx_decimal(3), "~0");
    }

    #[test]
    fn field_laws_on_vectors() {
        let xs: Vec<Rational> = ["1/3", "-5/7", "22/9", "0", "13"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        for a in &xs {
            for b in &xs {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in &xs {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
                if !b.is_zero() {
                    assert_eq!(&(a / b) * b, a.clone());
                }
            }
        }
    }
}
