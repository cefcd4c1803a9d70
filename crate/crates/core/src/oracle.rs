//! Brute-force oracles for the summation identities behind the quadratic bound,
//! a generator of admissible lemma inputs, and the verification run behind
//! `flagbound verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::castelnuovo::{castelnuovo_bound, castelnuovo_bound_by_summation};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, Rational};
use crate::hilbert::{DeltaSequence, HilbertProfile};
use crate::hypotheses::lemma_degree_holds;
use crate::lemma::{
    acm_r, compute_r_with, genus_from_lemma_input_with, main_bound, term_estimate_intervals,
    LemmaInput, LemmaOptions,
};

fn check_rs(r: u64, s: u64) -> Result<()> {
    if r < 3 || s + 1 < r {
        return Err(Error::arg(format!(
            "oracle needs r >= 3 and s >= r-1 (r={r}, s={s})"
        )));
    }
    Ok(())
}

fn big_to_u128(x: num_bigint::BigUint) -> u128 {
    u128::try_from(x).expect("closed form fits in u128")
}

/// `sum_{i>=1} (s - min(s, i(r-2)+1))`, checked against `C(w,2)(r-2) + w v`.
pub fn oracle_point_deficiency_sum(r: u64, s: u64) -> Result<u128> {
    check_rs(r, s)?;
    let k = r - 2;
    let direct: u128 = (1u64..)
        .map(|i| s - s.min(i * k + 1))
        .take_while(|&def| def > 0)
        .map(u128::from)
        .sum();
    let (w, v) = ((s - 1) / k, (s - 1) % k);
    let closed = big_to_u128(binomial(w as i64, 2) * k + binomial(w as i64, 1) * v);
    if direct != closed {
        return Err(Error::IdentityViolation(format!(
            "point deficiency sum at r={r}, s={s}: direct {direct} != closed form {closed}"
        )));
    }
    Ok(direct)
}

/// `sum_{i>=1} (i-1)(s - min(s, i(r-2)+1))`, checked against
/// `C(w,3)(r-2) + C(w,2) v` and the cubic bound `s^3/(3(r-2)^2)`.
pub fn oracle_weighted_deficiency_sum(r: u64, s: u64) -> Result<u128> {
    check_rs(r, s)?;
    let k = r - 2;
    let mut direct = 0u128;
    for i in 1u64.. {
        let def = s - s.min(i * k + 1);
        if def == 0 {
            break;
        }
        direct += u128::from(i - 1) * u128::from(def);
    }
    let (w, v) = ((s - 1) / k, (s - 1) % k);
    let closed = big_to_u128(binomial(w as i64, 3) * k + binomial(w as i64, 2) * v);
    if direct != closed {
        return Err(Error::IdentityViolation(format!(
            "weighted deficiency sum at r={r}, s={s}: direct {direct} != closed form {closed}"
        )));
    }
    let cubic = Rational::from(s).pow(3) / Rational::from(3 * k * k);
    if Rational::from(direct) > cubic {
        return Err(Error::IdentityViolation(format!(
            "weighted deficiency sum {direct} exceeds s^3/(3(r-2)^2) = {cubic} at r={r}, s={s}"
        )));
    }
    Ok(direct)
}

/// Both sides of the truncated sum identity for one lemma input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChain {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl LemmaChain {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates `sum_{i=1}^m (d - h_S1(i))` directly and
/// `(ms/2)(m-1) + m eps + m pi - sum (i-1)(s - h(i) - delta_i)` in closed form.
pub fn lemma_chain_sides(input: &LemmaInput) -> Result<LemmaChain> {
    let (r, d, s) = (input.r, input.d, input.s);
    check_rs(r, s)?;
    if s < 2 || d == 0 {
        return Err(Error::arg(format!(
            "lemma chain needs s >= 2 and d >= 1 (d={d}, s={s})"
        )));
    }
    let (m, eps) = ((d - 1) / s, (d - 1) % s);
    let w = (s - 1) / (r - 2);
    if m < w + 1 || m + r < s + 2 {
        return Err(Error::arg(format!(
            "lemma chain needs m >= w+1 and m >= s-r+2 (m={m}, w={w}, r={r}, s={s})"
        )));
    }
    let h = |i: u64| i128::from(input.point_profile.value(i));
    let delta = |i: u64| {
        if i == 0 {
            0
        } else {
            i128::from(input.deltas.get(i))
        }
    };
    let horizon = m
        .max(input.point_profile.saturation_index())
        .max(input.deltas.values().len() as u64);
    let s_i = i128::from(s);

    let mut deficiency = 0i128;
    let mut delta_total = 0i128;
    let mut weighted = 0i128;
    for i in 1..=horizon {
        deficiency += s_i - h(i);
        delta_total += delta(i);
        weighted += i128::from(i - 1) * (s_i - h(i) - delta(i));
    }
    let pi = deficiency - delta_total;

    let mut lhs = 0i128;
    let mut section = 0i128;
    for i in 0..=m {
        section += h(i) + delta(i);
        if i >= 1 {
            lhs += i128::from(d) - section;
        }
    }
    let (m_q, s_q) = (Rational::from(m), Rational::from(s));
    let rhs = &m_q * &s_q / Rational::integer(2) * (&m_q - Rational::one())
        + &m_q * Rational::from(eps)
        + &m_q * Rational::from(pi)
        - Rational::from(weighted);
    Ok(LemmaChain {
        lhs: Rational::from(lhs),
        rhs,
    })
}

pub fn oracle_lemma_chain(input: &LemmaInput) -> Result<bool> {
    Ok(lemma_chain_sides(input)?.holds())
}

/// Outcome of [`oracle_envelope_scan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnvelopeReport {
    pub r_max: u64,
    pub s_max: u64,
    pub cases: u64,
    /// Largest `max |aggregate| / (s^3/(r-2))` seen.
    pub tightest_ratio: Rational,
    pub witness: (u64, u64),
    pub tightest_aggregate: Rational,
    pub tightest_envelope: Rational,
}

pub fn oracle_envelope_scan(r_max: u64, s_max: u64) -> Result<EnvelopeReport> {
    if r_max < 4 {
        return Err(Error::arg(format!(
            "envelope scan needs rMax >= 4, got {r_max}"
        )));
    }
    let mut best: Option<(Rational, (u64, u64), Rational, Rational)> = None;
    let mut cases = 0;
    for r in 4..=r_max {
        for s in (r - 1)..=s_max {
            let est = term_estimate_intervals(r, s)?;
            cases += 1;
            if !est.within_envelope() {
                return Err(Error::EnvelopeViolation {
                    r,
                    s,
                    detail: format!(
                        "aggregate [{}, {}] leaves [{}, {}]",
                        est.aggregate.lo, est.aggregate.hi, est.envelope.lo, est.envelope.hi
                    ),
                });
            }
            let ratio = est.envelope_ratio();
            if best.as_ref().is_none_or(|b| ratio > b.0) {
                best = Some((
                    ratio,
                    (r, s),
                    est.aggregate.magnitude(),
                    est.envelope.hi.clone(),
                ));
            }
        }
    }
    let Some((tightest_ratio, witness, tightest_aggregate, tightest_envelope)) = best else {
        return Err(Error::arg(format!(
            "empty scan: sMax={s_max} is below r-1 for every r"
        )));
    };
    Ok(EnvelopeReport {
        r_max,
        s_max,
        cases,
        tightest_ratio,
        witness,
        tightest_aggregate,
        tightest_envelope,
    })
}

/// Ranges for [`random_admissible_input`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InputRanges {
    pub r_min: u64,
    pub r_max: u64,
    pub s_max: u64,
    /// Draw `d` from the truncation window only, ignoring the lemma degree hypothesis.
    pub beyond_hypotheses: bool,
}

impl Default for InputRanges {
    fn default() -> Self {
        InputRanges {
            r_min: 3,
            r_max: 10,
            s_max: 30,
            beyond_hypotheses: false,
        }
    }
}

fn lemma_degree_floor(r: u64, s: u64) -> u64 {
    if r <= 4 {
        s * s + s * (4 - r) * (4 - r)
    } else {
        s * s - s + 1
    }
}

/// A random lemma input satisfying every check of [`LemmaInput::analyze`].
pub fn random_admissible_input<R: Rng>(rng: &mut R, ranges: InputRanges) -> LemmaInput {
    let r = rng.gen_range(ranges.r_min.max(3)..=ranges.r_max.max(ranges.r_min.max(3)));
    let s = rng.gen_range((r - 1).max(2)..=ranges.s_max.max((r - 1).max(2)));
    let k = r - 2;

    let mut values = vec![1u64];
    let mut prev = 1;
    for i in 1u64.. {
        let floor = prev.max(s.min(i * k + 1));
        let h = if i == 1 || rng.gen_bool(0.5) {
            floor
        } else {
            floor + rng.gen_range(0..=(s - floor).min(k + 1))
        };
        values.push(h);
        prev = h;
        if h == s {
            break;
        }
    }
    let deficiency: u64 = values.iter().skip(1).map(|&h| s - h).sum();
    let profile = HilbertProfile::new(s, values).expect("generated profile is valid");

    // delta_1 ..= delta_{s-r+1}
    let support = (s + 1).saturating_sub(r);
    let mut deltas = vec![0u64; support as usize];
    if support > 0 && deficiency > 0 && !rng.gen_bool(1.0 / 3.0) {
        let mut budget = rng.gen_range(0..=deficiency);
        while budget > 0 {
            let i = rng.gen_range(0..support) as usize;
            let step = rng.gen_range(1..=budget);
            deltas[i] += step;
            budget -= step;
        }
    }
    let pi = deficiency - deltas.iter().sum::<u64>();

    let w = (s - 1) / k;
    let window = (w + 1).max(s + 2 - r.min(s + 2)) * s + 1;
    let floor = if ranges.beyond_hypotheses {
        window
    } else {
        window.max(lemma_degree_floor(r, s))
    };
    let d = floor + rng.gen_range(0..=2 * s * s);
    debug_assert!(ranges.beyond_hypotheses || lemma_degree_holds(r, d, s));
    let eps = (d - 1) % s;

    let len = rng.gen_range(0..=w);
    let mut tail = Vec::with_capacity(len as usize);
    let mut cap = eps + pi;
    for _ in 0..len {
        let t = rng.gen_range(0..=cap);
        tail.push(t);
        cap = t;
    }

    LemmaInput {
        r,
        d,
        s,
        point_profile: profile,
        deltas: DeltaSequence::new(deltas),
        tail,
    }
}

pub fn seeded_admissible_input(seed: u64, ranges: InputRanges) -> LemmaInput {
    random_admissible_input(&mut ChaCha8Rng::seed_from_u64(seed), ranges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail,
    /// A violation found outside the stated hypotheses.
    Finding,
}

impl RowStatus {
    pub fn name(self) -> &'static str {
        match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "fail",
            RowStatus::Finding => "finding",
        }
    }
}

/// One line of the verification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub check: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub status: RowStatus,
    pub detail: String,
}

impl VerifyRow {
    fn new(check: &'static str, cases: u64, failures: Vec<String>, soft: bool) -> Self {
        let status = match (failures.is_empty(), soft) {
            (true, _) => RowStatus::Pass,
            (false, false) => RowStatus::Fail,
            (false, true) => RowStatus::Finding,
        };
        VerifyRow {
            check,
            cases,
            failures: failures.len() as u64,
            status,
            detail: failures.into_iter().next().unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "cases": self.cases,
            "failures": self.failures,
            "status": self.status.name(),
            "detail": self.detail,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub r_max: u64,
    pub s_max: u64,
    pub seeds: u64,
    pub beyond_hypotheses: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            r_max: 10,
            s_max: 200,
            seeds: 1000,
            beyond_hypotheses: false,
        }
    }
}

/// Runs every oracle over the grid and `seeds` random lemma inputs.
pub fn run_verification(cfg: VerifyConfig) -> Result<Vec<VerifyRow>> {
    if cfg.r_max < 4 {
        return Err(Error::arg(format!(
            "verification grid needs rMax >= 4, got {}",
            cfg.r_max
        )));
    }
    let mut rows = Vec::new();

    let (mut cases, mut bad) = (0, Vec::new());
    for n in 2..=cfg.r_max {
        for deg in n..=cfg.s_max {
            cases += 1;
            let closed = castelnuovo_bound(n, deg)?;
            let summed = castelnuovo_bound_by_summation(n, deg)?;
            if closed != summed {
                bad.push(format!("N={n} deg={deg}: {closed} != {summed}"));
            }
        }
    }
    rows.push(VerifyRow::new("castelnuovoSum", cases, bad, false));

    let (mut cases, mut point_bad, mut weighted_bad) = (0, Vec::new(), Vec::new());
    for r in 3..=cfg.r_max {
        for s in (r - 1).max(2)..=cfg.s_max {
            cases += 1;
            if let Err(e) = oracle_point_deficiency_sum(r, s) {
                point_bad.push(e.to_string());
            }
            if let Err(e) = oracle_weighted_deficiency_sum(r, s) {
                weighted_bad.push(e.to_string());
            }
        }
    }
    rows.push(VerifyRow::new(
        "pointDeficiencySum",
        cases,
        point_bad,
        false,
    ));
    rows.push(VerifyRow::new(
        "weightedDeficiencySum",
        cases,
        weighted_bad,
        false,
    ));

    let row = match oracle_envelope_scan(cfg.r_max, cfg.s_max) {
        Ok(rep) => VerifyRow {
            check: "termEstimateEnvelope",
            cases: rep.cases,
            failures: 0,
            status: RowStatus::Pass,
            detail: format!(
                "tightest ratio {} at r={}, s={}",
                rep.tightest_ratio.approx_decimal(6),
                rep.witness.0,
                rep.witness.1
            ),
        },
        Err(e @ Error::EnvelopeViolation { .. }) => {
            VerifyRow::new("termEstimateEnvelope", 1, vec![e.to_string()], false)
        }
        Err(e) => return Err(e),
    };
    rows.push(row);

    let ranges = InputRanges {
        r_min: 3,
        r_max: cfg.r_max,
        s_max: cfg.s_max.min(40),
        beyond_hypotheses: cfg.beyond_hypotheses,
    };
    let opts = LemmaOptions {
        allow_small_degree: cfg.beyond_hypotheses,
    };
    let (mut chain_bad, mut central_bad, mut env_bad, mut acm_bad) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut acm_cases = 0;
    for seed in 0..cfg.seeds {
        let input = seeded_admissible_input(seed, ranges);
        match lemma_chain_sides(&input) {
            Ok(c) if c.holds() => {}
            Ok(c) => chain_bad.push(format!("seed {seed}: {} != {}", c.lhs, c.rhs)),
            Err(e) => chain_bad.push(format!("seed {seed}: {e}")),
        }
        let decomposition = compute_r_with(&input, opts)?;
        let data = input.analyze(opts)?;
        let genus = genus_from_lemma_input_with(&input, opts)?;
        let bound = main_bound(input.d, input.s, data.pi, &decomposition.total)?;
        if Rational::from(genus) != bound {
            central_bad.push(format!("seed {seed}: {genus} != {bound}"));
        }
        let envelope = Rational::from(input.s).pow(3) / Rational::from(input.r - 2);
        if decomposition.total.abs() > envelope {
            env_bad.push(format!(
                "seed {seed} (r={}, d={}, s={}): |{}| > {envelope}",
                input.r, input.d, input.s, decomposition.total
            ));
        }
        if input.deltas.is_zero() {
            acm_cases += 1;
            let surface_genus = input.point_profile.weighted_deficiency_sum();
            let acm = acm_r(data.epsilon(), input.s, data.pi, surface_genus, &input.tail)?;
            if acm != decomposition.total {
                acm_bad.push(format!("seed {seed}: {acm} != {}", decomposition.total));
            }
        }
    }
    rows.push(VerifyRow::new("lemmaChain", cfg.seeds, chain_bad, false));
    rows.push(VerifyRow::new(
        "centralIdentity",
        cfg.seeds,
        central_bad,
        false,
    ));
    rows.push(VerifyRow::new(
        "remainderEnvelope",
        cfg.seeds,
        env_bad,
        cfg.beyond_hypotheses,
    ));
    rows.push(VerifyRow::new(
        "acmSpecialization",
        acm_cases,
        acm_bad,
        false,
    ));
    Ok(rows)
}
