//! The combination `e^rho E1(rho)` of the exponential integral, plus its
//! power series and divergent large-argument expansion.
//!
//! Production evaluation switches at rho = 1.5: below that the convergent
//! series `-sum_n (log rho + gamma_EM - H_n) rho^n / n!` is used, above it a
//! modified-Lentz continued fraction in which the factor `e^rho` cancels
//! exactly. The large-rho sum `(1/rho) sum_m (-1)^m m! / rho^m` is divergent
//! and exposed separately for validation only.

use super::{harmonic_number, EULER_MASCHERONI};
use crate::{Error, Result};

/// Where the production path moves from the power series to the continued
/// fraction.
pub(crate) const SERIES_CUTOFF: f64 = 1.5;

/// Term count and first-omitted-term bound of a truncated evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTruncation {
    pub term_count: usize,
    pub error_bound: f64,
}

fn require_positive(rho: f64, what: &str) -> Result<()> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::Domain(format!("{what} requires rho > 0, got {rho}")));
    }
    Ok(())
}

/// `e^rho E1(rho)` for rho > 0. Strictly positive and strictly decreasing.
pub fn exp_e(rho: f64) -> Result<f64> {
    require_positive(rho, "exp_e")?;
    if rho < SERIES_CUTOFF {
        Ok(series_to_convergence(rho))
    } else {
        continued_fraction(rho)
    }
}

fn series_to_convergence(rho: f64) -> f64 {
    let log_term = rho.ln() + EULER_MASCHERONI;
    let mut sum = 0.0;
    let mut weight = 1.0; // rho^n / n!
    let mut harmonic = 0.0;
    for n in 0..200 {
        if n > 0 {
            weight *= rho / n as f64;
            harmonic += 1.0 / n as f64;
        }
        let term = -(log_term - harmonic) * weight;
        sum += term;
        if n > 2 && term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

// E1(rho) = e^{-rho} / (rho + 1 - 1^2/(rho + 3 - 2^2/(rho + 5 - ...))), so
// e^rho E1(rho) is the reciprocal of the continued fraction itself.
fn continued_fraction(rho: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut f = rho + 1.0;
    if f == 0.0 {
        f = TINY;
    }
    let mut c = f;
    let mut d = 0.0;
    for j in 1..=10_000u64 {
        let a = -((j * j) as f64);
        let b = rho + (2 * j + 1) as f64;
        d = b + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            return Ok(1.0 / f);
        }
    }
    Err(Error::QuadratureNotConverged {
        subdivisions: 10_000,
        error_estimate: f64::NAN,
    })
}

/// Partial sum of `-sum_{n=0}^{terms-1} (log rho + gamma_EM - H_n) rho^n / n!`,
/// with harmonic numbers exact as rationals up to n = 20.
pub fn exp_e_series(rho: f64, terms: usize) -> Result<(f64, SeriesTruncation)> {
    require_positive(rho, "exp_e_series")?;
    if terms < 1 {
        return Err(Error::Domain("exp_e_series requires terms >= 1".into()));
    }
    let log_term = rho.ln() + EULER_MASCHERONI;
    let mut sum = 0.0;
    let mut weight = 1.0;
    for n in 0..terms {
        if n > 0 {
            weight *= rho / n as f64;
        }
        sum += -(log_term - harmonic_number(n)) * weight;
    }
    let next_weight = weight * rho / terms as f64;
    let error_bound = ((log_term - harmonic_number(terms)) * next_weight).abs();
    Ok((
        sum,
        SeriesTruncation {
            term_count: terms,
            error_bound,
        },
    ))
}

/// Truncated divergent expansion `(1/rho) sum_{m=0}^{M} (-1)^m m! / rho^m`,
/// with the first omitted term `(M+1)! / rho^{M+2}` as the error bound.
/// Validation only; never the production path.
pub fn exp_e_asymptotic(rho: f64, m_max: usize) -> Result<(f64, SeriesTruncation)> {
    require_positive(rho, "exp_e_asymptotic")?;
    let mut sum = 0.0;
    let mut term = 1.0 / rho; // (-1)^m m! / rho^{m+1}
    for m in 0..=m_max {
        if m > 0 {
            term *= -(m as f64) / rho;
        }
        sum += term;
    }
    let error_bound = factorial(m_max + 1) / rho.powi(m_max as i32 + 2);
    Ok((
        sum,
        SeriesTruncation {
            term_count: m_max + 1,
            error_bound,
        },
    ))
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
