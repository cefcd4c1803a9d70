//! Exact checks of the numerical hypotheses behind the bounds: the
//! separation inequalities `s_i >> s_{i+1}` for a flag, the `d >> s`
//! conditions for the corollary bound, and the lemma degree condition.
//!
//! The first separation inequality is non-strict, all others are strict.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_arith::{compare_radical, Comparison, ComparisonBudget, RadicalProduct, Rational};
use crate::recurrence::FlagCondition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject {
    FlagSeparation,
    CorollaryDegree,
    LemmaDegree,
}

impl Subject {
    pub fn name(self) -> &'static str {
        match self {
            Subject::FlagSeparation => "flagSeparation",
            Subject::CorollaryDegree => "corollaryDegree",
            Subject::LemmaDegree => "lemmaDegree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `lhs >= threshold`
    AtLeast,
    /// `lhs > threshold`
    Exceeds,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::Exceeds => ">",
        }
    }

    fn verdict(self, cmp: Comparison) -> Verdict {
        match (self, cmp) {
            (_, Comparison::Undecided) => Verdict::Undecided,
            (_, Comparison::Greater) | (Relation::AtLeast, Comparison::Equal) => Verdict::Pass,
            _ => Verdict::Fail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
        }
    }
}

/// One inequality `lhs REL threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub lhs: BigUint,
    pub relation: Relation,
    pub threshold: RadicalProduct,
    pub verdict: Verdict,
}

impl Check {
    fn rational(label: String, lhs: u64, relation: Relation, threshold: Rational) -> Check {
        let cmp = Rational::from(lhs).cmp(&threshold).into();
        Check {
            label,
            lhs: BigUint::from(lhs),
            relation,
            threshold: RadicalProduct::new(threshold),
            verdict: relation.verdict(cmp),
        }
    }

    fn radical(
        label: String,
        lhs: u64,
        relation: Relation,
        threshold: RadicalProduct,
        budget: &ComparisonBudget,
    ) -> Result<Check> {
        let lhs = BigUint::from(lhs);
        let cmp = compare_radical(&lhs, &threshold, budget)?.comparison;
        Ok(Check {
            label,
            lhs,
            relation,
            threshold,
            verdict: relation.verdict(cmp),
        })
    }

    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "label": self.label,
            "lhs": self.lhs.to_string(),
            "relation": self.relation.symbol(),
            "threshold": self.threshold.to_string(),
            "thresholdApprox": self.threshold.approx_decimal(digits),
            "verdict": self.verdict.name(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub subject: Subject,
    pub checks: Vec<Check>,
}

impl HypothesisReport {
    /// Fails if any check fails; otherwise undecided if any check is undecided.
    pub fn overall(&self) -> Verdict {
        let verdicts = self.checks.iter().map(|c| c.verdict);
        if verdicts.clone().any(|v| v == Verdict::Fail) {
            Verdict::Fail
        } else if verdicts.clone().any(|v| v == Verdict::Undecided) {
            Verdict::Undecided
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall() == Verdict::Pass
    }

    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "subject": self.subject.name(),
            "overall": self.overall().name(),
            "checks": self.checks.iter().map(|c| c.to_json(digits)).collect::<Vec<_>>(),
        })
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `scalar * prod_{j=1}^{count} [base]^(1/(top - j))`, the shape shared by the
/// two product thresholds.
fn product_threshold(scalar: Rational, base: &BigUint, top: u64, count: u64) -> RadicalProduct {
    (1..=count).fold(RadicalProduct::new(scalar), |acc, j| {
        acc.with_factor(base.clone(), (top - j) as u32)
    })
}

/// The four separation inequalities between consecutive degrees of a flag.
pub fn check_flag_separation(
    flag: &FlagCondition,
    budget: &ComparisonBudget,
) -> Result<HypothesisReport> {
    let l = flag.len() as u64;
    if l < 2 {
        return Err(Error::arg("flag separation needs at least two degrees"));
    }
    let r = flag.r();
    let mut checks = Vec::new();
    for i in 1..l {
        let si = flag.degree(i);
        let next = flag.degree(i + 1) + 1;
        // r - i - 1 >= 1 because i <= l - 1 <= r - 2
        let k = r - i - 1;
        let c = l - i + 1;

        let cubic = Rational::from(8 * (l - 1) * (c * c + 2 * c + 9)) * Rational::from(next).pow(3)
            / Rational::from(k);
        checks.push(Check::rational(
            format!("i={i} cubic"),
            si,
            Relation::AtLeast,
            cubic,
        ));

        let quadratic = Rational::frac(next * next, k) + Rational::from((2 * r - 2) * next);
        checks.push(Check::rational(
            format!("i={i} quadratic"),
            si,
            Relation::Exceeds,
            quadratic,
        ));

        let base = factorial(r - i) * next;
        let product = product_threshold(Rational::frac(2 * next, k), &base, r - i, r - 1 - i);
        checks.push(Check::radical(
            format!("i={i} product"),
            si,
            Relation::Exceeds,
            product,
            budget,
        )?);

        let s_next = Rational::from(flag.degree(i + 1));
        let quartic = Rational::integer(2) * s_next.pow(4) / Rational::from(k);
        checks.push(Check::rational(
            format!("i={i} quartic"),
            si,
            Relation::Exceeds,
            quartic,
        ));
    }
    Ok(HypothesisReport {
        subject: Subject::FlagSeparation,
        checks,
    })
}

/// The two `d >> s` conditions of the corollary bound.
pub fn check_corollary_degree(
    r: u64,
    d: u64,
    s: u64,
    budget: &ComparisonBudget,
) -> Result<HypothesisReport> {
    if r < 3 || s + 1 < r {
        return Err(Error::arg(format!(
            "corollary degree check needs r >= 3 and s >= r-1 (r={r}, s={s})"
        )));
    }
    let k = r - 2;
    let base = factorial(r - 1) * (s + 1);
    let product = product_threshold(Rational::frac(2 * (s + 1), k), &base, r - 1, r - 2);
    let cubic = Rational::integer(6) * Rational::from(s + 1).pow(3) / Rational::from(k);
    let checks = vec![
        Check::radical("product".into(), d, Relation::Exceeds, product, budget)?,
        Check::rational("cubic".into(), d, Relation::Exceeds, cubic),
    ];
    Ok(HypothesisReport {
        subject: Subject::CorollaryDegree,
        checks,
    })
}

/// `d >= s^2 + s(r-4)^2` for `r` in 3..=4, `d > s^2 - s` for `r >= 5`.
pub fn lemma_degree_holds(r: u64, d: u64, s: u64) -> bool {
    let (lhs, threshold, relation) = lemma_threshold(r, d, s);
    relation.verdict(Rational::from(lhs).cmp(&threshold).into()) == Verdict::Pass
}

fn lemma_threshold(r: u64, d: u64, s: u64) -> (u64, Rational, Relation) {
    let s_q = Rational::from(s);
    if r <= 4 {
        let gap = Rational::from(4i64 - r as i64).pow(2);
        (d, &s_q * &s_q + &s_q * gap, Relation::AtLeast)
    } else {
        (d, &s_q * &s_q - &s_q, Relation::Exceeds)
    }
}

pub fn check_lemma_degree(r: u64, d: u64, s: u64) -> Result<HypothesisReport> {
    if r < 3 {
        return Err(Error::arg(format!(
            "lemma degree check needs r >= 3, got {r}"
        )));
    }
    let (lhs, threshold, relation) = lemma_threshold(r, d, s);
    Ok(HypothesisReport {
        subject: Subject::LemmaDegree,
        checks: vec![Check::rational("degree".into(), lhs, relation, threshold)],
    })
}
