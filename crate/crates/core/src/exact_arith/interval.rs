use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::arg(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    /// `[center - radius, center + radius]` for `radius >= 0`.
    pub fn centered(center: &Rational, radius: &Rational) -> Self {
        assert!(!radius.is_negative(), "negative radius");
        Interval {
            lo: center - radius,
            hi: center + radius,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn center(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::integer(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Image under `x -> scale * x + offset`.
    pub fn affine(&self, scale: &Rational, offset: &Rational) -> Interval {
        let a = scale * &self.lo + offset;
        let b = scale * &self.hi + offset;
        if scale.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    /// Largest absolute value attained on the interval.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = Interval::new(q("-1/2"), q("3")).unwrap();
        let b = Interval::new(q("1"), q("2")).unwrap();
        assert_eq!(a.add(&b), Interval::new(q("1/2"), q("5")).unwrap());
        assert_eq!(a.sub(&b), Interval::new(q("-5/2"), q("2")).unwrap());
        assert_eq!(a.width(), q("7/2"));
        assert_eq!(a.magnitude(), q("3"));
        assert!(Interval::new(q("2"), q("1")).is_err());
    }

    #[test]
    fn affine_scales_width() {
        let a = Interval::new(q("1"), q("4")).unwrap();
        let img = a.affine(&q("5/2"), &q("-7"));
        assert_eq!(img.width(), q("15/2"));
        let flipped = a.affine(&q("-1"), &q("0"));
        assert_eq!(flipped, Interval::new(q("-4"), q("-1")).unwrap());
    }
}
