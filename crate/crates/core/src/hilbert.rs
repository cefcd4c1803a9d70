//! Hilbert functions of hyperplane sections, stored up to saturation.
//!
//! A [`HilbertProfile`] is the Hilbert function of a zero-dimensional section:
//! `h(0) = 1`, nondecreasing, and constant at `stable` from the last stored
//! index on. Sums written over all `i >= 1` are finite because every summand
//! vanishes past saturation.

use serde::{Deserialize, Serialize};

use crate::castelnuovo::min_point_hilbert;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct HilbertProfile {
    stable: u64,
    values: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawProfile {
    stable: u64,
    values: Vec<u64>,
}

impl TryFrom<RawProfile> for HilbertProfile {
    type Error = Error;
    fn try_from(raw: RawProfile) -> Result<Self> {
        HilbertProfile::new(raw.stable, raw.values)
    }
}

impl From<HilbertProfile> for RawProfile {
    fn from(p: HilbertProfile) -> Self {
        RawProfile {
            stable: p.stable,
            values: p.values,
        }
    }
}

impl HilbertProfile {
    /// Validates and stores `h(0), ..., h(T)`. Trailing repeats of the stable
    /// value are trimmed so that `values.last()` is the first saturated entry.
    pub fn new(stable: u64, mut values: Vec<u64>) -> Result<Self> {
        if stable == 0 {
            return Err(Error::validation("profile stable value must be positive"));
        }
        match values.first() {
            Some(1) => {}
            Some(h0) => {
                return Err(Error::validation(format!(
                    "profile must start with h(0)=1, got {h0}"
                )))
            }
            None => return Err(Error::validation("profile has no values")),
        }
        if let Some(i) = values.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::validation(format!(
                "profile decreases at i={}: {} -> {}",
                i + 1,
                values[i],
                values[i + 1]
            )));
        }
        if let Some(i) = values.iter().position(|&h| h > stable) {
            return Err(Error::validation(format!(
                "profile value h({i})={} exceeds stable value {stable}",
                values[i]
            )));
        }
        if values.last() != Some(&stable) {
            return Err(Error::validation(format!(
                "profile does not saturate at its stable value {stable}"
            )));
        }
        let first = values.iter().position(|&h| h == stable).unwrap();
        values.truncate(first + 1);
        Ok(HilbertProfile { stable, values })
    }

    /// The extremal profile `i -> min{deg, i*n + 1}` of `deg` points spanning `P^n`.
    pub fn extremal(n: u64, deg: u64) -> Result<Self> {
        if n == 0 || deg == 0 {
            return Err(Error::arg("extremal profile needs n >= 1 and deg >= 1"));
        }
        let values = (0..)
            .map(|i| min_point_hilbert(n, deg, i))
            .scan(false, |done, h| {
                if *done {
                    return None;
                }
                *done = h == deg;
                Some(h)
            })
            .collect();
        HilbertProfile::new(deg, values)
    }

    pub fn stable(&self) -> u64 {
        self.stable
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `h(i)`, extended by the stable value past saturation.
    pub fn value(&self, i: u64) -> u64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.values.get(i).copied())
            .unwrap_or(self.stable)
    }

    /// First index at which the profile reaches its stable value.
    pub fn saturation_index(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// `sum_{i>=1} (stable - h(i))`.
    pub fn genus_sum(&self) -> u128 {
        self.values
            .iter()
            .skip(1)
            .map(|&h| u128::from(self.stable - h))
            .sum()
    }

    /// `sum_{i>=1} (i-1) * (stable - h(i))`.
    pub fn weighted_deficiency_sum(&self) -> u128 {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &h)| (i as u128 - 1) * u128::from(self.stable - h))
            .sum()
    }

    /// True if `h(i) >= min{stable, i*n + 1}` for every `i`.
    pub fn dominates_extremal(&self, n: u64) -> bool {
        (0..=self.saturation_index()).all(|i| self.value(i) >= min_point_hilbert(n, self.stable, i))
    }
}

/// `delta_1, ..., delta_K`, zero beyond `K`. `delta_0` is always zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaSequence {
    values: Vec<u64>,
}

impl DeltaSequence {
    pub fn new(values: Vec<u64>) -> Self {
        DeltaSequence { values }
    }

    pub fn zero() -> Self {
        DeltaSequence::default()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `delta_i` for `i >= 0`.
    pub fn get(&self, i: u64) -> u64 {
        if i == 0 {
            return 0;
        }
        usize::try_from(i - 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&d| d == 0)
    }

    /// Largest index carrying a nonzero entry, or 0.
    pub fn support_end(&self) -> u64 {
        self.values
            .iter()
            .rposition(|&d| d != 0)
            .map_or(0, |k| k as u64 + 1)
    }

    pub fn sum(&self) -> u128 {
        self.values.iter().map(|&d| u128::from(d)).sum()
    }

    /// `sum_{i>=1} (i-1) * delta_i`.
    pub fn weighted_sum(&self) -> u128 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &d)| k as u128 * u128::from(d))
            .sum()
    }

    /// For a surface section in `P^(r-1)` the deltas vanish from index `s - r + 2` on.
    pub fn check_vanishing(&self, s: u64, r: u64) -> Result<()> {
        let threshold = (s + 2).saturating_sub(r);
        if self.support_end() >= threshold.max(1) {
            return Err(Error::validation(format!(
                "delta_{} is nonzero but deltas must vanish for i >= s-r+2 = {threshold}",
                self.support_end()
            )));
        }
        Ok(())
    }
}

/// Hilbert function of a curve section, rebuilt from its point section and deltas:
/// `h(i) = sum_{j=0}^{i} (h_points(j) + delta_j)`. Grows without bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionCurveProfile {
    points: HilbertProfile,
    deltas: DeltaSequence,
}

impl SectionCurveProfile {
    pub fn point_profile(&self) -> &HilbertProfile {
        &self.points
    }

    pub fn deltas(&self) -> &DeltaSequence {
        &self.deltas
    }

    /// `h(0), h(1), ...` as an unbounded iterator.
    pub fn iter(&self) -> impl Iterator<Item = u128> + '_ {
        (0u64..).scan(0u128, move |acc, j| {
            *acc += u128::from(self.points.value(j)) + u128::from(self.deltas.get(j));
            Some(*acc)
        })
    }

    /// `h(0), ..., h(n)`.
    pub fn values_up_to(&self, n: u64) -> Vec<u128> {
        self.iter().take(n as usize + 1).collect()
    }

    pub fn value(&self, i: u64) -> u128 {
        self.iter().nth(i as usize).unwrap()
    }
}

/// Accumulates a point profile and its deltas into the curve-section Hilbert function.
pub fn accumulate_surface_section(
    point_profile: &HilbertProfile,
    deltas: &DeltaSequence,
) -> Result<SectionCurveProfile> {
    if point_profile.stable() < 2 {
        return Err(Error::validation(format!(
            "surface degree must be >= 2, point profile stabilises at {}",
            point_profile.stable()
        )));
    }
    Ok(SectionCurveProfile {
        points: point_profile.clone(),
        deltas: deltas.clone(),
    })
}

/// Sectional genus `pi = sum_{i>=1}(s - h(i)) - sum_{i>=1} delta_i`.
pub fn sectional_genus_from_ciliberto(
    point_profile: &HilbertProfile,
    deltas: &DeltaSequence,
) -> Result<u128> {
    let deficiency = point_profile.genus_sum();
    let delta_total = deltas.sum();
    deficiency.checked_sub(delta_total).ok_or_else(|| {
        Error::Inconsistent(format!(
            "sum of deltas {delta_total} exceeds the point deficiency {deficiency}; the sectional genus would be negative"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::castelnuovo::castelnuovo_bound;
    use proptest::prelude::*;

    #[test]
    fn validation() {
        assert!(HilbertProfile::new(5, vec![1, 3, 5]).is_ok());
        assert!(HilbertProfile::new(5, vec![2, 3, 5]).is_err());
        assert!(HilbertProfile::new(5, vec![1, 4, 3, 5]).is_err());
        assert!(HilbertProfile::new(5, vec![1, 3, 4]).is_err());
        assert!(HilbertProfile::new(5, vec![1, 6, 5]).is_err());
        assert!(HilbertProfile::new(5, vec![]).is_err());
        let p = HilbertProfile::new(5, vec![1, 3, 5, 5, 5]).unwrap();
        assert_eq!(p.values(), &[1, 3, 5]);
        assert_eq!(p.value(10), 5);
    }

    #[test]
    fn json_schema() {
        let p: HilbertProfile = serde_json::from_str(r#"{"stable":5,"values":[1,3,5]}"#).unwrap();
        assert_eq!(p.genus_sum(), 2);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"stable":5,"values":[1,3,5]}"#
        );
        assert!(
            serde_json::from_str::<HilbertProfile>(r#"{"stable":5,"values":[1,6,5]}"#).is_err()
        );
    }

    #[test]
    fn genus_sum_examples() {
        assert_eq!(HilbertProfile::extremal(2, 7).unwrap().genus_sum(), 6);
        assert_eq!(HilbertProfile::new(5, vec![1, 5]).unwrap().genus_sum(), 0);
        assert_eq!(HilbertProfile::extremal(3, 7).unwrap().genus_sum(), 3);
    }

    #[test]
    fn accumulate_examples() {
        let p = HilbertProfile::new(5, vec![1, 3, 5]).unwrap();
        let c = accumulate_surface_section(&p, &DeltaSequence::zero()).unwrap();
        assert_eq!(c.values_up_to(4), vec![1, 4, 9, 14, 19]);
        let c = accumulate_surface_section(&p, &DeltaSequence::new(vec![1])).unwrap();
        assert_eq!(c.values_up_to(3), vec![1, 5, 10, 15]);
        let one = HilbertProfile::new(1, vec![1]).unwrap();
        assert!(accumulate_surface_section(&one, &DeltaSequence::zero()).is_err());
    }

    #[test]
    fn ciliberto_examples() {
        let p = HilbertProfile::extremal(2, 7).unwrap();
        assert_eq!(
            sectional_genus_from_ciliberto(&p, &DeltaSequence::zero()).unwrap(),
            6
        );
        assert_eq!(
            sectional_genus_from_ciliberto(&p, &DeltaSequence::new(vec![1])).unwrap(),
            5
        );
        let err = sectional_genus_from_ciliberto(&p, &DeltaSequence::new(vec![3, 4])).unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)));
    }

    #[test]
    fn delta_vanishing() {
        // s=7, r=5: deltas vanish from i = 4 on
        assert!(DeltaSequence::new(vec![0, 1, 2])
            .check_vanishing(7, 5)
            .is_ok());
        assert!(DeltaSequence::new(vec![0, 1, 2, 1])
            .check_vanishing(7, 5)
            .is_err());
        assert!(DeltaSequence::new(vec![0, 1, 2, 0, 0])
            .check_vanishing(7, 5)
            .is_ok());
        assert_eq!(DeltaSequence::new(vec![0, 3]).weighted_sum(), 3);
    }

    #[test]
    fn extremal_profiles_reproduce_castelnuovo_with_dimension_shift() {
        for n in 2..=8u64 {
            for deg in (n + 1)..=200 {
                assert_eq!(
                    HilbertProfile::extremal(n, deg).unwrap().genus_sum(),
                    castelnuovo_bound(n + 1, deg).unwrap(),
                    "n={n} deg={deg}"
                );
            }
        }
    }

    fn arb_profile() -> impl Strategy<Value = HilbertProfile> {
        (2u64..40, prop::collection::vec(0u64..6, 0..12)).prop_map(|(s, steps)| {
            let mut values = vec![1u64];
            for step in steps {
                let next = (values.last().unwrap() + step).min(s);
                values.push(next);
            }
            values.push(s);
            HilbertProfile::new(s, values).unwrap()
        })
    }

    proptest! {
        #[test]
        fn accumulation_round_trips(p in arb_profile(), deltas in prop::collection::vec(0u64..4, 0..8)) {
            let deltas = DeltaSequence::new(deltas);
            let curve = accumulate_surface_section(&p, &deltas).unwrap();
            let n = p.saturation_index() + deltas.values().len() as u64 + 3;
            let h = curve.values_up_to(n);
            prop_assert_eq!(h[0], 1);
            for i in 1..=n {
                let diff = h[i as usize] - h[i as usize - 1];
                prop_assert_eq!(diff - u128::from(deltas.get(i)), u128::from(p.value(i)));
            }
        }

        #[test]
        fn genus_is_monotone_in_each_delta(p in arb_profile(), k in 0usize..4) {
            let base = vec![0u64; 4];
            let mut bumped = base.clone();
            bumped[k] = 1;
            let lo = sectional_genus_from_ciliberto(&p, &DeltaSequence::new(base)).unwrap();
            match sectional_genus_from_ciliberto(&p, &DeltaSequence::new(bumped)) {
                Ok(hi) => prop_assert!(hi <= lo),
                Err(_) => prop_assert_eq!(lo, 0),
            }
        }
    }
}
