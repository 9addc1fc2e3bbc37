//! Modified Bessel function of the second kind for complex order, and the
//! weighted map `y^sigma K_sigma(y)`.
//!
//! A single integral representation covers every order and argument this
//! crate needs:
//!
//! `K_nu(y) = e^{-y} * integral over t in (0, inf) of
//!            e^{-y (cosh t - 1)} cosh(nu t) dt`
//!
//! The factor `e^{-y}` is split off so the remaining integrand is O(1) at
//! t = 0 for every y; the integration interval is truncated where the
//! factored integrand drops below 1e-18 of its unit scale.

use num_complex::Complex64;

use crate::quadrature::{integrate_finite_complex, ToleranceSpec};
use crate::{Error, Result};

fn truncation_point(y: f64, re_nu_abs: f64) -> f64 {
    // e^{-y (cosh t - 1)} cosh(|Re nu| t) < 1e-18 once
    // y (cosh t - 1) - |Re nu| t exceeds ln(1e18) ~ 41.4; pad to 43.
    let mut t = 1.0_f64;
    while y * (t.cosh() - 1.0) - re_nu_abs * t < 43.0 {
        t += 0.5;
        if t > 300.0 {
            break;
        }
    }
    t
}

/// K_nu(y) for complex order nu and y > 0. Real-valued (zero imaginary part)
/// for real nu.
pub fn bessel_k(nu: Complex64, y: f64) -> Result<Complex64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("bessel_k requires y > 0, got {y}")));
    }
    if !nu.re.is_finite() || !nu.im.is_finite() {
        return Err(Error::Domain("bessel_k requires finite order".into()));
    }
    let t_max = truncation_point(y, nu.re.abs());
    let tol = ToleranceSpec {
        relative: 1e-13,
        absolute: 0.0,
        max_subdivisions: 800,
    };
    let integral = integrate_finite_complex(
        |t| {
            let damp = (-y * (t.cosh() - 1.0)).exp();
            Ok((nu * t).cosh() * damp)
        },
        0.0,
        t_max,
        &tol,
    )?
    .check()?;
    let value = integral.value * (-y).exp();
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("bessel_k"));
    }
    Ok(value)
}

/// The weighted Bessel map `y^sigma K_sigma(y)` with the principal power.
pub fn frak_k(sigma: Complex64, y: f64) -> Result<Complex64> {
    let k = bessel_k(sigma, y)?;
    let power = (sigma * y.ln()).exp();
    let value = power * k;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("frak_k"));
    }
    Ok(value)
}

/// Real-order convenience wrapper for [`frak_k`]; the imaginary part is
/// exactly zero for real order.
pub fn frak_k_real(sigma: f64, y: f64) -> Result<f64> {
    Ok(frak_k(Complex64::new(sigma, 0.0), y)?.re)
}
