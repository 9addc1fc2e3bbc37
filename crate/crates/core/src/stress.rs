//! The four-stage stress-energy computation: regularized integral forms,
//! Bessel-form analytic continuation of the energy density, its Laurent
//! regular part at the origin of the regulating parameter, and the
//! closed-form renormalized tensor with its conformal decomposition.

use num_complex::Complex64;

use crate::kernels::{ImpurityConfig, SphericalPoint};
use crate::quadrature::{
    integrate_half_line, integrate_half_line_complex, integrate_product_half_lines_complex,
    ToleranceSpec,
};
use crate::specfun::{exp_e, frak_k, frak_k_real, gamma, gamma_reciprocal};
use crate::{Error, Result};

/// The four non-vanishing components of the stress-energy tensor in the
/// spherical coordinate basis. Complex-valued while regularized, real after
/// renormalization. The off-diagonal components vanish identically and are
/// not represented.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressTensorDiagonal<T> {
    pub t00: T,
    pub trr: T,
    /// Coordinate-basis theta-theta component; carries a factor r^2 relative
    /// to the orthonormal frame.
    pub tthth: T,
    /// Coordinate-basis phi-phi component, equal to sin^2(theta) * tthth.
    pub tphph: T,
}

impl StressTensorDiagonal<f64> {
    fn zip(self, other: Self, f: impl Fn(f64, f64) -> f64) -> Self {
        StressTensorDiagonal {
            t00: f(self.t00, other.t00),
            trr: f(self.trr, other.trr),
            tthth: f(self.tthth, other.tthth),
            tphph: f(self.tphph, other.tphph),
        }
    }
}

/// Pole coefficient and regular value of a function of the regulating
/// parameter at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentAtOrigin {
    pub pole_coefficient: f64,
    pub regular_value: f64,
}

/// Conformal / non-conformal decomposition: for every coupling xi,
/// `renormalized(xi) = conformal + (xi - 1/6) * nonconformal` componentwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalSplit {
    pub conformal: StressTensorDiagonal<f64>,
    pub nonconformal: StressTensorDiagonal<f64>,
}

/// Critical (conformal) value of the curvature coupling.
pub const XI_CONFORMAL: f64 = 1.0 / 6.0;

impl ConformalSplit {
    /// Recombines the split at a given coupling.
    pub fn at_xi(&self, xi: f64) -> StressTensorDiagonal<f64> {
        self.conformal
            .zip(self.nonconformal, |c, n| c + (xi - XI_CONFORMAL) * n)
    }
}

// xi-dependent coefficient bundle shared by the integral representations.
struct Coefficients {
    quarter_minus_2xi: f64,
    quarter_plus_xi: f64,
    quarter_minus_xi: f64,
    half_minus_2xi: f64,
    half_minus_4xi: f64,
    one_minus_4xi: f64,
    xi: f64,
}

impl Coefficients {
    fn new(xi: f64) -> Self {
        Coefficients {
            quarter_minus_2xi: 0.25 - 2.0 * xi,
            quarter_plus_xi: 0.25 + xi,
            quarter_minus_xi: 0.25 - xi,
            half_minus_2xi: 0.5 - 2.0 * xi,
            half_minus_4xi: 0.5 - 4.0 * xi,
            one_minus_4xi: 1.0 - 4.0 * xi,
            xi,
        }
    }
}

const FOUR_PI_POW_3_2: f64 = 44.54662397465366; // (4 pi)^{3/2}
const EIGHT_PI_SQ: f64 = 78.95683520871487; // 8 pi^2

fn reg_tolerance() -> ToleranceSpec {
    ToleranceSpec::default()
}

/// Regularized stress-energy tensor from the integral representations, valid
/// for `Re u > 4` with `epsilon > 0`. At `lambda = 0` the perturbative terms
/// cancel and only the free-theory part survives.
pub fn t_regularized(
    u: Complex64,
    q: &SphericalPoint,
    cfg: &ImpurityConfig,
) -> Result<StressTensorDiagonal<Complex64>> {
    if !(u.re > 4.0) {
        return Err(Error::Domain(format!(
            "t_regularized requires Re u > 4, got {}",
            u.re
        )));
    }
    cfg.require_epsilon_positive()?;

    let r = q.r;
    let eps2r2 = (cfg.epsilon * r).powi(2);
    let co = Coefficients::new(cfg.xi);
    let tol = reg_tolerance();

    // tau^{u/2 - 3} e^{-eps^2 r^2 tau}, all real exponents merged before exp.
    let tau_weight = move |tau: f64| (u / 2.0 - 3.0) * tau.ln() - eps2r2 * tau;

    let half_u = u / 2.0;

    // Single-tau brackets: constant term plus the image term carrying
    // e^{-1/tau}. At lambda = 0 the image term cancels against the
    // perturbative integral and both are dropped.
    let with_image = cfg.lambda > 0.0;

    let single = |constant: Complex64, image: Box<dyn Fn(f64) -> Complex64>| -> Result<Complex64> {
        integrate_half_line_complex(
            |tau| {
                let w = tau_weight(tau).exp();
                let mut bracket = constant;
                if with_image {
                    bracket += image(tau) * (-1.0 / tau).exp();
                }
                Ok(w * bracket)
            },
            &tol,
        )?
        .check()
        .map(|r| r.value)
    };

    let rho = if with_image {
        2.0 * r / cfg.lambda
    } else {
        0.0
    };

    let double = |poly: Box<dyn Fn(f64, f64) -> Complex64>| -> Result<Complex64> {
        if !with_image {
            return Ok(Complex64::new(0.0, 0.0));
        }
        integrate_product_half_lines_complex(
            |tau, v| {
                let exponent = tau_weight(tau) - (v + 1.0).powi(2) / tau - rho * v;
                Ok(rho * exponent.exp() * poly(tau, v))
            },
            &tol,
        )?
        .check()
        .map(|r| r.value)
    };

    // Energy density.
    let t00_single = single(
        Complex64::from(co.quarter_minus_2xi) + co.quarter_plus_xi * half_u,
        Box::new({
            let co = Coefficients::new(cfg.xi);
            move |tau| {
                Complex64::from(co.half_minus_2xi * (tau * tau + 1.0) + co.half_minus_4xi * tau)
                    + co.quarter_plus_xi * tau * u
            }
        }),
    )?;
    let t00_double = double(Box::new({
        let co = Coefficients::new(cfg.xi);
        move |tau, v| {
            Complex64::from(co.half_minus_2xi * (tau + v + 1.0).powi(2) - 0.5 * tau)
                + co.quarter_plus_xi * tau * u
        }
    }))?;

    // Radial component.
    let trr_single = single(
        Complex64::from(-co.quarter_minus_2xi) + co.quarter_minus_xi * half_u,
        Box::new({
            let co = Coefficients::new(cfg.xi);
            move |tau| {
                Complex64::from(co.half_minus_4xi * tau * tau + co.half_minus_2xi * (tau + 1.0))
                    + co.quarter_minus_xi * tau * u
            }
        }),
    )?;
    let trr_double = double(Box::new({
        let co = Coefficients::new(cfg.xi);
        move |tau, v| {
            Complex64::from(
                co.half_minus_2xi * ((tau + v + 1.0).powi(2) - tau) - 2.0 * co.xi * tau * tau,
            ) + co.quarter_minus_xi * tau * u
        }
    }))?;

    // Angular component; note the sign flips relative to the radial one.
    let tthth_single = single(
        Complex64::from(-co.quarter_minus_2xi) + co.quarter_minus_xi * half_u,
        Box::new({
            let co = Coefficients::new(cfg.xi);
            move |tau| {
                -(Complex64::from(
                    co.half_minus_4xi * (tau + 1.0) * tau + co.half_minus_2xi * (tau + 1.0),
                ) - co.quarter_minus_xi * tau * u)
            }
        }),
    )?;
    let tthth_double = double(Box::new({
        let co = Coefficients::new(cfg.xi);
        move |tau, v| {
            Complex64::from(
                co.half_minus_2xi * (tau + v + 1.0).powi(2) - 2.0 * co.xi * (tau + v + 1.0) * tau,
            ) - co.quarter_minus_xi * tau * u
        }
    }))?;

    let kappa_u = (u * cfg.kappa.ln()).exp();
    let inv_gamma = gamma_reciprocal((u + 1.0) / 2.0);
    let pref4 = kappa_u * inv_gamma / (FOUR_PI_POW_3_2 * ((4.0 - u) * r.ln()).exp());
    let pref2 = kappa_u * inv_gamma / (FOUR_PI_POW_3_2 * ((2.0 - u) * r.ln()).exp());

    let t00 = pref4 * (t00_single - t00_double);
    let trr = pref4 * (trr_single - trr_double);
    let tthth = pref2 * (tthth_single + tthth_double);
    let tphph = q.theta.sin().powi(2) * tthth;

    Ok(StressTensorDiagonal {
        t00,
        trr,
        tthth,
        tphph,
    })
}

/// Guard radius around the pole set of the continuation.
pub const POLE_GUARD: f64 = 1e-8;

fn distance_to_pole_set(u: Complex64) -> f64 {
    // Simple poles at u in {4, 2, 0, -2, -4, ...}: even integers <= 4.
    let nearest = (u.re / 2.0).round().min(2.0) * 2.0;
    let mut dist = (u - nearest).norm();
    for k in [nearest - 2.0, nearest + 2.0] {
        if k <= 4.0 {
            dist = dist.min((u - k).norm());
        }
    }
    dist
}

/// Analytic continuation of the regularized energy density to the whole
/// complex plane minus the simple poles at `u in {4, 2, 0, -2, -4, ...}`,
/// expressed through the weighted Bessel map.
pub fn t00_continuation(
    u: Complex64,
    q: &SphericalPoint,
    cfg: &ImpurityConfig,
) -> Result<Complex64> {
    cfg.require_epsilon_positive()?;
    if distance_to_pole_set(u) < POLE_GUARD {
        return Err(Error::PoleProximity {
            u,
            guard: POLE_GUARD,
        });
    }

    let r = q.r;
    let eps = cfg.epsilon;
    let co = Coefficients::new(cfg.xi);
    let half_u = u / 2.0;
    let y0 = 2.0 * eps * r;

    let inv_gamma = gamma_reciprocal((u + 1.0) / 2.0);
    let kappa_ratio_u = (u * (cfg.kappa / eps).ln()).exp();
    let free_line = eps.powi(4) * gamma(half_u - 2.0)? * inv_gamma / FOUR_PI_POW_3_2
        * kappa_ratio_u
        * (Complex64::from(co.quarter_minus_2xi) + co.quarter_plus_xi * half_u);

    // 2^{u/2} kappa^u / ((4 pi)^{3/2} Gamma((u+1)/2) r^{4-u}).
    let pref = (half_u * 2.0_f64.ln() + u * cfg.kappa.ln()).exp() * inv_gamma
        / (FOUR_PI_POW_3_2 * ((4.0 - u) * r.ln()).exp());

    let sig2 = 2.0 - half_u;
    let sig1 = 1.0 - half_u;
    let sig0 = -half_u;

    let direct = co.quarter_minus_xi * frak_k(sig2, y0)?
        + (Complex64::from(co.half_minus_4xi) + co.quarter_plus_xi * u) * frak_k(sig1, y0)?
        + co.one_minus_4xi * frak_k(sig0, y0)?;

    if cfg.lambda == 0.0 {
        // The perturbative integral cancels the direct Bessel terms in the
        // free limit; only the free-theory line survives.
        return Ok(free_line);
    }

    let rho = 2.0 * r / cfg.lambda;
    let tol = reg_tolerance();
    let v_integral = integrate_half_line_complex(
        |v| {
            let y = y0 * (v + 1.0);
            let weight = (-rho * v + (u - 2.0) * (v + 1.0).ln()).exp();
            let inner = co.one_minus_4xi * (v + 1.0).powi(2) * frak_k(sig0, y)?
                + (Complex64::from(co.one_minus_4xi * (v + 1.0) - 0.5) + co.quarter_plus_xi * u)
                    * frak_k(sig1, y)?
                + co.quarter_minus_xi * frak_k(sig2, y)?;
            Ok(weight * inner)
        },
        &tol,
    )?
    .check()?
    .value;

    Ok(free_line + pref * (direct - rho * v_integral))
}

/// Pole coefficient and regular value of the continued energy density at the
/// origin of the regulating parameter.
pub fn t00_laurent_at_zero(q: &SphericalPoint, cfg: &ImpurityConfig) -> Result<LaurentAtOrigin> {
    cfg.require_epsilon_positive()?;
    let r = q.r;
    let eps = cfg.epsilon;
    let xi = cfg.xi;
    let eps4 = eps.powi(4);

    let pole_coefficient = eps4 * (1.0 - 8.0 * xi) / (32.0 * std::f64::consts::PI.powi(2));

    let free_part =
        eps4 / EIGHT_PI_SQ * ((5.0 / 16.0 - xi) + (0.25 - 2.0 * xi) * (2.0 * cfg.kappa / eps).ln());

    if cfg.lambda == 0.0 {
        // Free theory: the Bessel terms cancel against the perturbative
        // integral in the lambda -> 0 limit.
        return Ok(LaurentAtOrigin {
            pole_coefficient,
            regular_value: free_part,
        });
    }

    let y0 = 2.0 * eps * r;
    let k0_at_y0 = frak_k_real(0.0, y0)?;
    let k1_at_y0 = frak_k_real(1.0, y0)?;
    let k2_at_y0 = frak_k_real(2.0, y0)?;
    let one_minus_4xi = 1.0 - 4.0 * xi;

    let rho = 2.0 * r / cfg.lambda;
    let tol = reg_tolerance();
    let v_integral = integrate_half_line(
        |v| {
            let y = y0 * (v + 1.0);
            let weight = (-rho * v).exp() / (v + 1.0).powi(2);
            let inner = one_minus_4xi * (v + 1.0).powi(2) * (k0_at_y0 - frak_k_real(0.0, y)?)
                - (one_minus_4xi * (v + 1.0) - 0.5) * frak_k_real(1.0, y)?
                - (0.25 - xi) * frak_k_real(2.0, y)?;
            Ok(weight * inner)
        },
        &tol,
    )?
    .check()?
    .value;

    let bracket = (0.25 - xi) * k2_at_y0 + (0.5 - 4.0 * xi) * k1_at_y0 + rho * v_integral;
    Ok(LaurentAtOrigin {
        pole_coefficient,
        regular_value: free_part + bracket / (EIGHT_PI_SQ * r.powi(4)),
    })
}

/// Residual of the conformal trace identity `-t00 + trr + 2 tthth / r^2 = 0`
/// at the critical coupling, paired with the natural magnitude against which
/// to compare it. The scale includes the bracket terms of the closed forms
/// (of size `rho^2 E(rho)`), since at large rho the components themselves
/// arise from cancellations of those terms.
pub fn conformal_trace_residual(q: &SphericalPoint, lambda: f64) -> Result<(f64, f64)> {
    let t = t_renormalized(q, lambda, XI_CONFORMAL)?;
    let r2 = q.r * q.r;
    let residual = -t.t00 + t.trr + 2.0 * t.tthth / r2;
    let rho = 2.0 * q.r / lambda;
    let bracket_terms = (1.0 + rho + rho * rho * exp_e(rho)?) / (EIGHT_PI_SQ * q.r.powi(4));
    let scale = t
        .t00
        .abs()
        .max(t.trr.abs())
        .max((2.0 * t.tthth / r2).abs())
        .max(bracket_terms);
    Ok((residual, scale))
}

fn require_positive_lambda(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "lambda must be > 0 here (the dimensionless radius 2r/lambda is undefined at \
             lambda = 0; the free theory has a vanishing renormalized tensor), got {lambda}"
        )));
    }
    Ok(lambda)
}

/// Conformal and non-conformal parts of the renormalized tensor, in closed
/// form through `exp_e` at `rho = 2r/lambda`.
pub fn conformal_parts(q: &SphericalPoint, lambda: f64) -> Result<ConformalSplit> {
    require_positive_lambda(lambda)?;
    let r = q.r;
    let rho = 2.0 * r / lambda;
    let ee = exp_e(rho)?;
    let pi2 = std::f64::consts::PI.powi(2);
    let r4 = r.powi(4);
    let r2 = r.powi(2);
    let sin2 = q.theta.sin().powi(2);

    let conf_t00 = (rho + (1.0 - rho - rho * rho) * ee) / (24.0 * pi2 * r4);
    let nonc_t00 = -(3.0 - rho + (2.0 - 2.0 * rho + rho * rho) * ee) / (4.0 * pi2 * r4);
    let conf_trr = (1.0 - (1.0 + rho) * ee) / (24.0 * pi2 * r4);
    let nonc_trr = -(1.0 + (2.0 - rho) * ee) / (2.0 * pi2 * r4);
    let conf_tthth = -((1.0 - rho) - (2.0 - rho * rho) * ee) / (48.0 * pi2 * r2);
    let nonc_tthth = ((4.0 - rho) + (4.0 - 3.0 * rho + rho * rho) * ee) / (4.0 * pi2 * r2);

    Ok(ConformalSplit {
        conformal: StressTensorDiagonal {
            t00: conf_t00,
            trr: conf_trr,
            tthth: conf_tthth,
            tphph: sin2 * conf_tthth,
        },
        nonconformal: StressTensorDiagonal {
            t00: nonc_t00,
            trr: nonc_trr,
            tthth: nonc_tthth,
            tphph: sin2 * nonc_tthth,
        },
    })
}

/// The renormalized stress-energy tensor. The energy density comes from its
/// dedicated closed form; the remaining components recombine the conformal
/// split at the requested coupling.
pub fn t_renormalized(
    q: &SphericalPoint,
    lambda: f64,
    xi: f64,
) -> Result<StressTensorDiagonal<f64>> {
    require_positive_lambda(lambda)?;
    let r = q.r;
    let rho = 2.0 * r / lambda;
    let ee = exp_e(rho)?;
    let t00 = ((1.0 - 6.0 * xi)
        + 2.0 * xi * rho
        + ((1.0 - 4.0 * xi) * (1.0 - rho) - 2.0 * xi * rho * rho) * ee)
        / (EIGHT_PI_SQ * r.powi(4));
    let split = conformal_parts(q, lambda)?;
    let rest = split.at_xi(xi);
    Ok(StressTensorDiagonal {
        t00,
        trr: rest.trr,
        tthth: rest.tthth,
        tphph: rest.tphph,
    })
}
