//! The two Euclidean divisions behind every bound: `d - 1 = m*s + eps` and
//! `s - 1 = w*(r-2) + v`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dividend {
    /// The curve degree `d`, divided by the surface degree.
    DegreeD,
    /// The surface degree `s`, divided by `r - 2`.
    DegreeS,
}

/// `dividend - 1 = quotient * modulus + remainder`, `0 <= remainder < modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisionForm {
    pub dividend: Dividend,
    pub quotient: u64,
    pub remainder: u64,
    pub modulus: u64,
}

impl DivisionForm {
    fn of(dividend: Dividend, value: u64, modulus: u64) -> Self {
        DivisionForm {
            dividend,
            quotient: (value - 1) / modulus,
            remainder: (value - 1) % modulus,
            modulus,
        }
    }

    /// The number that was divided (before subtracting one), rebuilt from the parts.
    pub fn reconstruct(&self) -> u128 {
        u128::from(self.quotient) * u128::from(self.modulus) + u128::from(self.remainder) + 1
    }
}

/// `d - 1 = m*s + eps` with `0 <= eps <= s - 1`.
pub fn split_m_epsilon(d: u64, s: u64) -> Result<DivisionForm> {
    if d < 1 || s < 1 {
        return Err(Error::arg(format!(
            "split_m_epsilon needs d >= 1 and s >= 1 (d={d}, s={s})"
        )));
    }
    Ok(DivisionForm::of(Dividend::DegreeD, d, s))
}

/// `s - 1 = w*(r-2) + v` with `0 <= v <= r - 3`; at `r = 3` the modulus is 1 and `v = 0`.
pub fn split_w_v(s: u64, r: u64) -> Result<DivisionForm> {
    if s < 1 || r < 3 {
        return Err(Error::arg(format!(
            "split_w_v needs s >= 1 and r >= 3 (s={s}, r={r})"
        )));
    }
    Ok(DivisionForm::of(Dividend::DegreeS, s, r - 2))
}
