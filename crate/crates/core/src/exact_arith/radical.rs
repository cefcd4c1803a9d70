//! Exact comparison of integers against `scalar * prod base_j^(1/e_j)`.
//!
//! Both sides are raised to `L = lcm(e_j)` and compared as integers. When the
//! powered operands would exceed the digit budget we switch to a directed
//! enclosure of the right-hand side: every root is bracketed by integer
//! `n`-th roots at a fixed decimal scale, so the enclosure always contains the
//! true value. An enclosure that still contains `lhs` yields `Undecided`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::{truncated_decimal, Rational};
use crate::error::{Error, Result};

/// Default cap on the decimal size of any powered operand.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;
/// Default number of decimal digits used by the enclosure fallback.
pub const DEFAULT_FALLBACK_DIGITS: u32 = 200;

/// One factor `base^(1/root)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFactor {
    pub base: BigUint,
    pub root: u32,
}

/// `scalar * prod base_j^(1/root_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalProduct {
    pub scalar: Rational,
    pub factors: Vec<RadicalFactor>,
}

impl RadicalProduct {
    pub fn new(scalar: Rational) -> Self {
        RadicalProduct {
            scalar,
            factors: Vec::new(),
        }
    }

    /// Appends `base^(1/root)`.
    pub fn with_factor(mut self, base: impl Into<BigUint>, root: u32) -> Self {
        self.factors.push(RadicalFactor {
            base: base.into(),
            root,
        });
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.scalar.is_positive() {
            return Err(Error::arg(format!(
                "radical scalar must be positive, got {}",
                self.scalar
            )));
        }
        for f in &self.factors {
            if f.base.is_zero() {
                return Err(Error::arg("radical base must be >= 1"));
            }
            if f.root == 0 {
                return Err(Error::arg("radical exponent denominator must be >= 1"));
            }
        }
        Ok(())
    }

    /// Lowest common multiple of the exponent denominators, if it fits in a `u64`.
    pub fn common_root(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, f| {
            let g = acc.gcd(&u64::from(f.root));
            (acc / g).checked_mul(u64::from(f.root))
        })
    }

    /// Rational bounds `lo <= value <= hi` using `digits` decimal digits per root.
    pub fn enclose(&self, digits: u32) -> (Rational, Rational) {
        let scale = BigUint::from(10u32).pow(digits);
        let mut lo = BigUint::one();
        let mut hi = BigUint::one();
        for f in &self.factors {
            let shifted = &f.base * scale.pow(f.root);
            let root = shifted.nth_root(f.root);
            let exact = root.pow(f.root) == shifted;
            hi *= if exact { root.clone() } else { &root + 1u32 };
            lo *= root;
        }
        let denom = BigInt::from(scale.pow(self.factors.len() as u32));
        let lo = &self.scalar * Rational::frac(BigInt::from(lo), denom.clone());
        let hi = &self.scalar * Rational::frac(BigInt::from(hi), denom);
        (lo, hi)
    }

    /// Truncated decimal rendering of the lower enclosure, prefixed with `~`.
    pub fn approx_decimal(&self, digits: usize) -> String {
        let (lo, _) = self.enclose(digits as u32 + 10);
        format!("~{}", truncated_decimal(lo.numer(), lo.denom(), digits))
    }
}

impl From<Rational> for RadicalProduct {
    fn from(scalar: Rational) -> Self {
        RadicalProduct::new(scalar)
    }
}

impl fmt::Display for RadicalProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for factor in &self.factors {
            write!(f, " * {}^(1/{})", factor.base, factor.root)?;
        }
        Ok(())
    }
}

/// Outcome of an exact comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    /// The fallback enclosure still contained the left-hand side.
    Undecided,
}

impl Comparison {
    pub fn as_ordering(self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Equal => Some(Ordering::Equal),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Undecided => None,
        }
    }
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComparisonMethod {
    IntegerPowers,
    DirectedEnclosure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalVerdict {
    pub comparison: Comparison,
    pub method: ComparisonMethod,
}

/// Limits for [`compare_radical`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonBudget {
    /// Maximum decimal digits of an integer-power operand before falling back.
    pub digit_budget: u64,
    /// Decimal digits per root in the fallback enclosure.
    pub fallback_digits: u32,
}

impl Default for ComparisonBudget {
    fn default() -> Self {
        ComparisonBudget {
            digit_budget: DEFAULT_DIGIT_BUDGET,
            fallback_digits: DEFAULT_FALLBACK_DIGITS,
        }
    }
}

impl ComparisonBudget {
    pub fn with_digit_budget(digit_budget: u64) -> Self {
        ComparisonBudget {
            digit_budget,
            ..Default::default()
        }
    }
}

fn digits_of_power(bits: u64, exp: u64) -> f64 {
    bits as f64 * exp as f64 * std::f64::consts::LOG10_2
}

/// Orders `lhs` against `rhs` exactly.
pub fn compare_radical(
    lhs: &BigUint,
    rhs: &RadicalProduct,
    budget: &ComparisonBudget,
) -> Result<RadicalVerdict> {
    rhs.validate()?;
    let p = rhs.scalar.numer().magnitude();
    let q = rhs.scalar.denom().magnitude();

    if let Some(l) = rhs.common_root() {
        // lhs^L * q^L  vs  p^L * prod base^(L/e)
        let left_digits = digits_of_power(lhs.bits() + q.bits(), l);
        let right_digits = digits_of_power(p.bits(), l)
            + rhs
                .factors
                .iter()
                .map(|f| digits_of_power(f.base.bits(), l / u64::from(f.root)))
                .sum::<f64>();
        if left_digits.max(right_digits) <= budget.digit_budget as f64 {
            if let Some(l32) = l.to_u32() {
                let left = (lhs * q).pow(l32);
                let mut right = p.pow(l32);
                for f in &rhs.factors {
                    right *= f.base.pow(l32 / f.root);
                }
                return Ok(RadicalVerdict {
                    comparison: left.cmp(&right).into(),
                    method: ComparisonMethod::IntegerPowers,
                });
            }
        }
    }

    let (lo, hi) = rhs.enclose(budget.fallback_digits);
    let lhs = Rational::from(lhs.clone());
    let comparison = if lhs < lo {
        Comparison::Less
    } else if lhs > hi {
        Comparison::Greater
    } else if lo == hi {
        Comparison::Equal
    } else {
        Comparison::Undecided
    };
    Ok(RadicalVerdict {
        comparison,
        method: ComparisonMethod::DirectedEnclosure,
    })
}
