//! Castelnuovo's genus bound and the minimal Hilbert function of points in
//! uniform position.
//!
//! Dimension convention: a point set spans `P^N` and its Hilbert function is
//! bounded below by `min{deg, i*N + 1}`; a curve in `P^N` has hyperplane
//! section in `P^(N-1)`, so its bound is the deficiency sum with modulus `N - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::split_m_epsilon;
use crate::exact_arith::Rational;

/// A nondegenerate curve of degree `degree` in `P^projective_dimension`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientSpec {
    pub projective_dimension: u64,
    pub degree: u64,
}

impl AmbientSpec {
    pub fn new(projective_dimension: u64, degree: u64) -> Result<Self> {
        if projective_dimension < 2 {
            return Err(Error::arg(format!(
                "projective dimension must be >= 2, got {projective_dimension}"
            )));
        }
        if degree < projective_dimension {
            return Err(Error::arg(format!(
                "a nondegenerate curve in P^{projective_dimension} has degree >= {projective_dimension}, got {degree}"
            )));
        }
        Ok(AmbientSpec {
            projective_dimension,
            degree,
        })
    }

    /// `C(m,2)*(N-1) + m*eps` where `deg - 1 = m*(N-1) + eps`.
    pub fn genus_bound(&self) -> u128 {
        let modulus = self.projective_dimension - 1;
        let split = split_m_epsilon(self.degree, modulus).expect("degree and modulus are positive");
        let m = u128::from(split.quotient);
        m * m.saturating_sub(1) / 2 * u128::from(modulus) + m * u128::from(split.remainder)
    }
}

/// Lower bound `min{deg, i*N + 1}` for the Hilbert function of `deg` points spanning `P^N`.
pub fn min_point_hilbert(n: u64, deg: u64, i: u64) -> u64 {
    i.saturating_mul(n).saturating_add(1).min(deg)
}

/// Castelnuovo's bound for a nondegenerate curve of degree `deg` in `P^n`.
pub fn castelnuovo_bound(n: u64, deg: u64) -> Result<u128> {
    Ok(AmbientSpec::new(n, deg)?.genus_bound())
}

/// The same bound as the finite sum `sum_{i>=1} (deg - min{deg, i*(n-1) + 1})`.
pub fn castelnuovo_bound_by_summation(n: u64, deg: u64) -> Result<u128> {
    AmbientSpec::new(n, deg)?;
    let mut total = 0u128;
    for i in 1.. {
        let h = min_point_hilbert(n - 1, deg, i);
        if h == deg {
            break;
        }
        total += u128::from(deg - h);
    }
    Ok(total)
}

/// `s^2 / (2(r-2))`, an upper bound for `castelnuovo_bound(r-1, s)`.
pub fn castelnuovo_quadratic_envelope(s: u64, r: u64) -> Result<Rational> {
    if r < 3 {
        return Err(Error::arg(format!(
            "quadratic envelope needs r >= 3, got {r}"
        )));
    }
    Ok(Rational::frac(u128::from(s) * u128::from(s), 2 * (r - 2)))
}
