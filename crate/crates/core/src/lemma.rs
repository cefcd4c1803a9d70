//! The quadratic genus bound for a curve of degree `d` on a surface of degree `s`
//! in `P^r`:
//!
//! ```text
//! sum_{i>=1} (d - h_Gamma(i)) = d^2/(2s) + d/(2s) (2 pi - 2 - s) + R(C)
//! ```
//!
//! with the remainder split into four terms
//!
//! ```text
//! R(C) = (1+eps)/(2s) (s+1-eps-2 pi)
//!        - sum (i-1)(s - h_points(i))
//!        + sum (i-1) delta_i
//!        + sum_{i>m} (d - h_Gamma(i))
//! ```
//!
//! where `d - 1 = m s + eps`. The sectional genus `pi` is never an input: it
//! is derived from the point profile and deltas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euclid::{split_m_epsilon, split_w_v, DivisionForm};
use crate::exact_arith::{Interval, Rational};
use crate::hilbert::{
    accumulate_surface_section, sectional_genus_from_ciliberto, DeltaSequence, HilbertProfile,
};
use crate::hypotheses::lemma_degree_holds;

/// Everything needed to evaluate `R(C)` for one curve on one surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaInput {
    pub r: u64,
    pub d: u64,
    pub s: u64,
    pub point_profile: HilbertProfile,
    #[serde(default)]
    pub deltas: DeltaSequence,
    /// `t_{m+1}, t_{m+2}, ...` with `t_i = d - h_Gamma(i)`.
    #[serde(default)]
    pub tail: Vec<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Accept degrees below the lemma's degree hypothesis. The truncation
    /// window (`m >= w+1`, `m >= s-r+2`) is still enforced.
    pub allow_small_degree: bool,
}

/// Quantities derived from a validated [`LemmaInput`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaData {
    pub m_eps: DivisionForm,
    pub w_v: DivisionForm,
    pub pi: u128,
}

impl LemmaData {
    pub fn m(&self) -> u64 {
        self.m_eps.quotient
    }

    pub fn epsilon(&self) -> u64 {
        self.m_eps.remainder
    }

    pub fn w(&self) -> u64 {
        self.w_v.quotient
    }
}

impl LemmaInput {
    pub fn analyze(&self, opts: LemmaOptions) -> Result<LemmaData> {
        let LemmaInput { r, d, s, .. } = *self;
        if r < 3 {
            return Err(Error::arg(format!("r must be >= 3, got {r}")));
        }
        if s + 1 < r || s < 2 {
            return Err(Error::validation(format!(
                "surface degree must satisfy s >= r-1 >= 2 (r={r}, s={s})"
            )));
        }
        if self.point_profile.stable() != s {
            return Err(Error::validation(format!(
                "point profile stabilises at {} but s = {s}",
                self.point_profile.stable()
            )));
        }
        if !opts.allow_small_degree && !lemma_degree_holds(r, d, s) {
            return Err(Error::validation(format!(
                "degree d={d} violates the lemma degree hypothesis for r={r}, s={s}"
            )));
        }
        self.deltas.check_vanishing(s, r)?;
        let pi = sectional_genus_from_ciliberto(&self.point_profile, &self.deltas)?;
        let m_eps = split_m_epsilon(d, s)?;
        let w_v = split_w_v(s, r)?;
        let (m, eps, w) = (m_eps.quotient, m_eps.remainder, w_v.quotient);

        if m < w + 1 || m + r < s + 2 {
            return Err(Error::validation(format!(
                "truncation window fails: need m >= w+1 and m >= s-r+2 (m={m}, w={w}, s-r+2={})",
                (s + 2) as i128 - r as i128
            )));
        }
        if self.point_profile.saturation_index() > m {
            return Err(Error::validation(format!(
                "point profile saturates at i={} beyond m={m}",
                self.point_profile.saturation_index()
            )));
        }
        if self.tail.len() as u64 > w {
            return Err(Error::validation(format!(
                "tail has {} entries but the window holds only w={w}",
                self.tail.len()
            )));
        }
        if let Some(k) = self.tail.windows(2).position(|t| t[1] > t[0]) {
            return Err(Error::validation(format!(
                "tail increases at position {}: {} -> {}",
                k + 1,
                self.tail[k],
                self.tail[k + 1]
            )));
        }
        let cap = u128::from(eps) + pi;
        if let Some(&first) = self.tail.first() {
            if u128::from(first) > cap {
                return Err(Error::validation(format!(
                    "first tail deficiency {first} exceeds d - h_Gamma(m) = eps + pi = {cap}"
                )));
            }
        }
        Ok(LemmaData { m_eps, w_v, pi })
    }

    pub fn tail_sum(&self) -> u128 {
        self.tail.iter().map(|&t| u128::from(t)).sum()
    }
}

/// The four terms of `R(C)` and their signed total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RDecomposition {
    pub epsilon_term: Rational,
    pub point_sum_term: Rational,
    pub delta_sum_term: Rational,
    pub tail_term: Rational,
    pub total: Rational,
}

fn epsilon_term(eps: u64, s: u64, pi: u128) -> Rational {
    let inner = Rational::from(s + 1) - Rational::from(eps) - Rational::from(2 * pi);
    Rational::frac(1 + eps, 2 * s) * inner
}

pub fn compute_r(input: &LemmaInput) -> Result<RDecomposition> {
    compute_r_with(input, LemmaOptions::default())
}

pub fn compute_r_with(input: &LemmaInput, opts: LemmaOptions) -> Result<RDecomposition> {
    let data = input.analyze(opts)?;
    let epsilon_term = epsilon_term(data.epsilon(), input.s, data.pi);
    let point_sum_term = Rational::from(input.point_profile.weighted_deficiency_sum());
    let delta_sum_term = Rational::from(input.deltas.weighted_sum());
    let tail_term = Rational::from(input.tail_sum());
    let total = &epsilon_term - &point_sum_term + &delta_sum_term + &tail_term;
    Ok(RDecomposition {
        epsilon_term,
        point_sum_term,
        delta_sum_term,
        tail_term,
        total,
    })
}

/// `d^2/(2s) + d/(2s) (2 pi - 2 - s) + R`.
pub fn main_bound(d: u64, s: u64, pi: u128, remainder: &Rational) -> Result<Rational> {
    if s == 0 {
        return Err(Error::arg("main bound needs s >= 1"));
    }
    let d = Rational::from(d);
    let two_s = Rational::from(2 * s);
    let linear = Rational::from(2 * pi) - Rational::from(2u64 + s);
    Ok(&d * &d / &two_s + &d / &two_s * linear + remainder)
}

/// `sum_{i=1}^{m} (d - h_{S^(1)}(i)) + sum_{i>m} t_i`, computed term by term.
pub fn genus_from_lemma_input(input: &LemmaInput) -> Result<u128> {
    genus_from_lemma_input_with(input, LemmaOptions::default())
}

pub fn genus_from_lemma_input_with(input: &LemmaInput, opts: LemmaOptions) -> Result<u128> {
    let data = input.analyze(opts)?;
    let curve = accumulate_surface_section(&input.point_profile, &input.deltas)?;
    let d = u128::from(input.d);
    let mut total = 0u128;
    for (i, h) in curve.iter().enumerate().skip(1).take(data.m() as usize) {
        let deficiency = d.checked_sub(h).ok_or_else(|| {
            Error::Inconsistent(format!(
                "h_S1({i}) = {h} exceeds d = {d}; degree too small for this surface"
            ))
        })?;
        total += deficiency;
    }
    Ok(total + input.tail_sum())
}

/// The four term-wise estimates of `R(C)` for given `(r, s)` and their aggregate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TermEstimates {
    pub epsilon_term: Interval,
    pub point_sum_term: Interval,
    pub delta_sum_term: Interval,
    pub tail_term: Interval,
    /// `epsilon - point + delta + tail`, combined with interval arithmetic.
    pub aggregate: Interval,
    /// `[-s^3/(r-2), s^3/(r-2)]`.
    pub envelope: Interval,
}

impl TermEstimates {
    pub fn within_envelope(&self) -> bool {
        self.aggregate.is_subset_of(&self.envelope)
    }

    /// `max |aggregate| / (s^3/(r-2))`.
    pub fn envelope_ratio(&self) -> Rational {
        self.aggregate.magnitude() / &self.envelope.hi
    }
}

pub fn term_estimate_intervals(r: u64, s: u64) -> Result<TermEstimates> {
    if r < 4 {
        return Err(Error::arg(format!("term estimates need r >= 4, got {r}")));
    }
    if s + 1 < r {
        return Err(Error::arg(format!(
            "term estimates need s >= r-1 (r={r}, s={s})"
        )));
    }
    let k = Rational::from(r - 2);
    let s_q = Rational::from(s);
    let s2 = s_q.pow(2);
    let s3 = s_q.pow(3);
    let zero = Rational::zero();

    let epsilon_term = Interval::new(
        -(&s2 / (Rational::integer(2) * &k)),
        Rational::frac(s + 1, 2),
    )?;
    let point_sum_term = Interval::new(zero.clone(), &s3 / (Rational::integer(3) * &k * &k))?;
    let delta_sum_term = Interval::new(
        zero.clone(),
        &s2 * Rational::from(s - 1) / (Rational::integer(2) * &k),
    )?;
    let tail_term = Interval::new(zero, &s3 / (Rational::integer(2) * &k * &k))?;
    let aggregate = epsilon_term
        .sub(&point_sum_term)
        .add(&delta_sum_term)
        .add(&tail_term);
    let envelope = Interval::centered(&Rational::zero(), &(&s3 / &k));
    Ok(TermEstimates {
        epsilon_term,
        point_sum_term,
        delta_sum_term,
        tail_term,
        aggregate,
        envelope,
    })
}

/// Remainder when the surface is arithmetically Cohen-Macaulay (all deltas vanish):
/// `(1+eps)/(2s) (s+1-eps-2 pi) - p_a(S) + sum tail`.
pub fn acm_r(eps: u64, s: u64, pi: u128, surface_genus: u128, tail: &[u64]) -> Result<Rational> {
    if s == 0 || eps >= s {
        return Err(Error::arg(format!(
            "acm remainder needs 0 <= eps <= s-1 (eps={eps}, s={s})"
        )));
    }
    let tail: u128 = tail.iter().map(|&t| u128::from(t)).sum();
    Ok(epsilon_term(eps, s, pi) - Rational::from(surface_genus) + Rational::from(tail))
}

/// `w (eps + pi)`, the cap on the tail sum, with `d - h_Gamma(m) = eps + pi`.
///
/// Note this is not always below `s^3/(2(r-2)^2)`: at `r=10, s=9, d=81` it is 8.
pub fn tail_cap(r: u64, s: u64, d: u64, pi: u128) -> Result<u128> {
    let eps = split_m_epsilon(d, s)?.remainder;
    let w = split_w_v(s, r)?.quotient;
    Ok(u128::from(w) * (u128::from(eps) + pi))
}
