//! Heat kernel of the perturbed operator `A + epsilon^2` on R^3 minus the
//! origin, its Dirichlet kernels via the Mellin transform, and a
//! finite-difference oracle that assembles the regularized stress-energy
//! tensor directly from Dirichlet-kernel derivatives.

use num_complex::Complex64;

use crate::quadrature::{integrate_half_line, integrate_half_line_complex, ToleranceSpec};
use crate::specfun::gamma_reciprocal;
use crate::stress::StressTensorDiagonal;
use crate::{Error, Result};

/// Physical parameters of the impurity model.
///
/// `lambda >= 0` is the perturbation strength (`-lambda` is the zero-energy
/// s-wave scattering length; `lambda = 0` is the free theory), `epsilon >= 0`
/// the infrared cutoff mass, `kappa > 0` the regularization mass scale and
/// `xi` the dimensionless curvature coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpurityConfig {
    pub lambda: f64,
    pub epsilon: f64,
    pub kappa: f64,
    pub xi: f64,
}

impl ImpurityConfig {
    pub fn new(lambda: f64, epsilon: f64, kappa: f64, xi: f64) -> Result<Self> {
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "lambda must be >= 0 (negative lambda admits a bound state), got {lambda}"
            )));
        }
        if !(epsilon >= 0.0) || !epsilon.is_finite() {
            return Err(Error::Domain(format!(
                "epsilon must be >= 0, got {epsilon}"
            )));
        }
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::Domain(format!("kappa must be > 0, got {kappa}")));
        }
        if !xi.is_finite() {
            return Err(Error::Domain(format!("xi must be finite, got {xi}")));
        }
        Ok(ImpurityConfig {
            lambda,
            epsilon,
            kappa,
            xi,
        })
    }

    pub(crate) fn require_epsilon_positive(&self) -> Result<()> {
        if self.epsilon > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain(
                "the infrared cutoff epsilon must be > 0 for this operation".into(),
            ))
        }
    }
}

/// Position in the spherical chart on R^3 minus the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::Domain(format!(
                "r must be > 0 (the origin is excluded), got {r}"
            )));
        }
        if !(theta > 0.0 && theta < std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "theta must lie in (0, pi), got {theta}"
            )));
        }
        if !(phi > 0.0 && phi < 2.0 * std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "phi must lie in (0, 2 pi), got {phi}"
            )));
        }
        Ok(SphericalPoint { r, theta, phi })
    }

    pub fn to_cartesian(&self) -> CartesianPoint {
        CartesianPoint {
            x1: self.r * self.theta.sin() * self.phi.cos(),
            x2: self.r * self.theta.sin() * self.phi.sin(),
            x3: self.r * self.theta.cos(),
        }
    }

    fn with_r(&self, r: f64) -> SphericalPoint {
        SphericalPoint { r, ..*self }
    }
    fn with_theta(&self, theta: f64) -> SphericalPoint {
        SphericalPoint { theta, ..*self }
    }
    fn with_phi(&self, phi: f64) -> SphericalPoint {
        SphericalPoint { phi, ..*self }
    }
}

/// Cartesian position on R^3 minus the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl CartesianPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if x1 == 0.0 && x2 == 0.0 && x3 == 0.0 {
            return Err(Error::Domain(
                "the origin is excluded from the domain".into(),
            ));
        }
        Ok(CartesianPoint { x1, x2, x3 })
    }

    pub fn radius(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    fn distance_squared(&self, other: &CartesianPoint) -> f64 {
        (self.x1 - other.x1).powi(2) + (self.x2 - other.x2).powi(2) + (self.x3 - other.x3).powi(2)
    }
}

/// Angular factor of the squared chordal distance in spherical coordinates:
/// `|x - y|^2 = r^2 + r'^2 - 2 r r' S(theta, theta', phi - phi')`.
pub fn angular_factor(theta: f64, theta_p: f64, dphi: f64) -> f64 {
    (theta - theta_p).cos() * (0.5 * dphi).cos().powi(2)
        + (theta + theta_p).cos() * (0.5 * dphi).sin().powi(2)
}

const HEAT_W_TOL: ToleranceSpec = ToleranceSpec {
    relative: 1e-11,
    absolute: 0.0,
    max_subdivisions: 2000,
};

// Shared radial form: the kernel depends on |x|, |y| and |x - y| only.
fn kernel_core(d2: f64, r1: f64, r2: f64, t: f64, cfg: &ImpurityConfig) -> Result<f64> {
    let prefactor =
        (-cfg.epsilon * cfg.epsilon * t).exp() / (4.0 * std::f64::consts::PI * t).powf(1.5);
    let free = (-d2 / (4.0 * t)).exp();
    if cfg.lambda == 0.0 {
        // Free Laplacian exactly; avoids 1/lambda.
        return Ok(prefactor * free);
    }
    let c = r1 + r2;
    let image = (-c * c / (4.0 * t)).exp();
    // w-integral rescaled by v = w / (r1 + r2), which on the diagonal is the
    // v = w / (2r) substitution used downstream. A second linear rescale by
    // the combined decay rate keeps the integrand mass at order-one abscissae
    // for every (lambda, t); without it the adaptive panels can miss the
    // spike of width lambda / c entirely.
    let a = c / cfg.lambda;
    let b = c * c / (4.0 * t);
    let rate = a + 2.0 * b;
    let scaled = integrate_half_line(
        |s| {
            let v = s / rate;
            Ok((-a * v - b * (v + 1.0).powi(2)).exp() / rate)
        },
        &HEAT_W_TOL,
    )?
    .check()?
    .value
        * c;
    Ok(prefactor * (free + (2.0 * t / (r1 * r2)) * (image - scaled / cfg.lambda)))
}

/// Heat kernel of `A + epsilon^2` between Cartesian points at time t > 0.
pub fn heat_kernel(
    x: &CartesianPoint,
    y: &CartesianPoint,
    t: f64,
    cfg: &ImpurityConfig,
) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "heat_kernel requires t > 0, got {t}"
        )));
    }
    let r1 = x.radius();
    let r2 = y.radius();
    if r1 == 0.0 || r2 == 0.0 {
        return Err(Error::Domain("points must avoid the origin".into()));
    }
    kernel_core(x.distance_squared(y), r1, r2, t, cfg)
}

/// Heat kernel in the spherical chart; identical to [`heat_kernel`] under the
/// coordinate map.
pub fn heat_kernel_spherical(
    q: &SphericalPoint,
    p: &SphericalPoint,
    t: f64,
    cfg: &ImpurityConfig,
) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "heat_kernel requires t > 0, got {t}"
        )));
    }
    let s = angular_factor(q.theta, p.theta, q.phi - p.phi);
    let d2 = q.r * q.r + p.r * p.r - 2.0 * q.r * p.r * s;
    kernel_core(d2.max(0.0), q.r, p.r, t, cfg)
}

const MELLIN_TOL: ToleranceSpec = ToleranceSpec {
    relative: 1e-12,
    absolute: 1e-280,
    max_subdivisions: 4000,
};

/// Dirichlet kernel: the integral kernel of the complex power
/// `(A + epsilon^2)^{-s}`, via the Mellin transform of the heat kernel.
///
/// Requires `epsilon > 0`; on the diagonal additionally `Re s > 3/2`.
pub fn dirichlet_kernel(
    s: Complex64,
    q: &SphericalPoint,
    p: &SphericalPoint,
    cfg: &ImpurityConfig,
) -> Result<Complex64> {
    dirichlet_kernel_with_tolerance(s, q, p, cfg, &MELLIN_TOL)
}

/// [`dirichlet_kernel`] with an explicit tolerance for the Mellin integral.
pub fn dirichlet_kernel_with_tolerance(
    s: Complex64,
    q: &SphericalPoint,
    p: &SphericalPoint,
    cfg: &ImpurityConfig,
    tol: &ToleranceSpec,
) -> Result<Complex64> {
    cfg.require_epsilon_positive()?;
    if q == p && !(s.re > 1.5) {
        return Err(Error::Domain(format!(
            "the diagonal Dirichlet kernel requires Re s > 3/2, got {}",
            s.re
        )));
    }
    let integral = integrate_half_line_complex(
        |t| {
            let h = heat_kernel_spherical(q, p, t, cfg)?;
            if h == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(((s - 1.0) * t.ln()).exp() * h)
        },
        tol,
    )?
    .check()?;
    Ok(gamma_reciprocal(s) * integral.value)
}

// Relative step in r, absolute steps in the angles.
const FD_RELATIVE_STEP: f64 = 1e-4;

struct KernelStencil<'a> {
    s: Complex64,
    base: &'a SphericalPoint,
    cfg: &'a ImpurityConfig,
}

impl KernelStencil<'_> {
    fn eval(&self, q: &SphericalPoint, p: &SphericalPoint) -> Result<Complex64> {
        dirichlet_kernel(self.s, q, p, self.cfg)
    }

    fn center(&self) -> Result<Complex64> {
        self.eval(self.base, self.base)
    }

    // d/dq^i d/dp^i with both slots shifted, 4-point cross stencil.
    fn mixed(
        &self,
        shift: impl Fn(&SphericalPoint, f64) -> SphericalPoint,
        h: f64,
    ) -> Result<Complex64> {
        let pp = self.eval(&shift(self.base, h), &shift(self.base, h))?;
        let pm = self.eval(&shift(self.base, h), &shift(self.base, -h))?;
        let mp = self.eval(&shift(self.base, -h), &shift(self.base, h))?;
        let mm = self.eval(&shift(self.base, -h), &shift(self.base, -h))?;
        Ok((pp - pm - mp + mm) / (4.0 * h * h))
    }

    // First and second derivative in the q slot only, 3-point stencils.
    fn q_slot(
        &self,
        shift: impl Fn(&SphericalPoint, f64) -> SphericalPoint,
        h: f64,
        center: Complex64,
    ) -> Result<(Complex64, Complex64)> {
        let plus = self.eval(&shift(self.base, h), self.base)?;
        let minus = self.eval(&shift(self.base, -h), self.base)?;
        let first = (plus - minus) / (2.0 * h);
        let second = (plus - 2.0 * center + minus) / (h * h);
        Ok((first, second))
    }
}

/// Numeric oracle for the regularized stress-energy VEV, computed directly
/// from Dirichlet-kernel values and central finite differences with the
/// spherical-metric Christoffel symbols. Needs `Re u > 6` so that the numeric
/// differentiation of the Mellin integral stays well conditioned.
///
/// The mixed time components vanish identically and are not computed.
pub fn vev_from_dirichlet_oracle(
    u: Complex64,
    q: &SphericalPoint,
    cfg: &ImpurityConfig,
) -> Result<StressTensorDiagonal<Complex64>> {
    if !(u.re > 6.0) {
        return Err(Error::Domain(format!(
            "the Dirichlet oracle requires Re u > 6, got {}",
            u.re
        )));
    }
    cfg.require_epsilon_positive()?;

    let s_minus = (u - 1.0) / 2.0;
    let s_plus = (u + 1.0) / 2.0;
    let r = q.r;
    let h_r = FD_RELATIVE_STEP * r;
    let h_ang = FD_RELATIVE_STEP;
    if h_r == 0.0 || r + h_r == r {
        return Err(Error::StepUnderflow("radial finite-difference step"));
    }

    let shift_r = |pt: &SphericalPoint, h: f64| pt.with_r(pt.r + h);
    let shift_theta = |pt: &SphericalPoint, h: f64| pt.with_theta(pt.theta + h);
    let shift_phi = |pt: &SphericalPoint, h: f64| pt.with_phi(pt.phi + h);

    let minus = KernelStencil {
        s: s_minus,
        base: q,
        cfg,
    };
    let plus = KernelStencil {
        s: s_plus,
        base: q,
        cfg,
    };

    let d_minus = minus.center()?;
    let center = plus.center()?;

    let mixed_r = plus.mixed(shift_r, h_r)?;
    let mixed_theta = plus.mixed(shift_theta, h_ang)?;
    let mixed_phi = plus.mixed(shift_phi, h_ang)?;

    let (dr, drr) = plus.q_slot(shift_r, h_r, center)?;
    let (dtheta, dthetatheta) = plus.q_slot(shift_theta, h_ang, center)?;
    let (_, dphiphi) = plus.q_slot(shift_phi, h_ang, center)?;

    let sin_t = q.theta.sin();
    let cos_t = q.theta.cos();
    let a_thth = r * r;
    let a_phph = r * r * sin_t * sin_t;

    // Inverse-metric contraction of the mixed first derivatives.
    let contraction = mixed_r + mixed_theta / a_thth + mixed_phi / a_phph;

    // Second covariant derivatives in the q slot:
    //   D_rr = d^2/dr^2                      (gamma^k_rr = 0),
    //   D_thth = d^2/dtheta^2 + r d/dr       (gamma^r_thth = -r),
    //   D_phph = d^2/dphi^2 + r sin^2(theta) d/dr + sin(theta) cos(theta) d/dtheta.
    let cov_rr = drr;
    let cov_thth = dthetatheta + r * dr;
    let cov_phph = dphiphi + r * sin_t * sin_t * dr + sin_t * cos_t * dtheta;

    let xi = cfg.xi;
    let kappa_u = (u * cfg.kappa.ln()).exp();
    let quarter = 0.25;

    let t00 = kappa_u * ((quarter + xi) * d_minus + (quarter - xi) * contraction);
    let common = d_minus - contraction;
    let trr = kappa_u * ((quarter - xi) * common + (0.5 - xi) * mixed_r - xi * cov_rr);
    let tthth =
        kappa_u * ((quarter - xi) * a_thth * common + (0.5 - xi) * mixed_theta - xi * cov_thth);
    let tphph =
        kappa_u * ((quarter - xi) * a_phph * common + (0.5 - xi) * mixed_phi - xi * cov_phph);

    Ok(StressTensorDiagonal {
        t00,
        trr,
        tthth,
        tphph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_finite;
    use crate::specfun::gamma;
    use proptest::prelude::*;

    fn cfg(lambda: f64, epsilon: f64) -> ImpurityConfig {
        ImpurityConfig::new(lambda, epsilon, 1.0, 0.0).unwrap()
    }

    fn free_kernel(d2: f64, t: f64, epsilon: f64) -> f64 {
        (-epsilon * epsilon * t).exp() / (4.0 * std::f64::consts::PI * t).powf(1.5)
            * (-d2 / (4.0 * t)).exp()
    }

    #[test]
    fn angular_factor_special_values() {
        assert!((angular_factor(0.7, 0.7, 0.0) - 1.0).abs() < 1e-15);
        // Antipodal configuration: theta' = pi - theta, dphi = pi.
        let s = angular_factor(0.7, std::f64::consts::PI - 0.7, std::f64::consts::PI);
        assert!((s + 1.0).abs() < 1e-15);
    }

    #[test]
    fn epsilon_factorizes_exactly() {
        let x = CartesianPoint::new(0.3, -0.2, 0.9).unwrap();
        let y = CartesianPoint::new(-0.5, 0.1, 0.4).unwrap();
        let t = 0.37;
        let with = heat_kernel(&x, &y, t, &cfg(1.0, 0.7)).unwrap();
        let without = heat_kernel(&x, &y, t, &cfg(1.0, 0.0)).unwrap();
        let factor = (-0.49 * t).exp();
        assert!((with - factor * without).abs() <= 1e-13 * with.abs());
    }

    #[test]
    fn free_limit_at_tiny_lambda() {
        let x = CartesianPoint::new(0.8, 0.0, 0.6).unwrap();
        let y = CartesianPoint::new(-0.1, 0.5, 0.2).unwrap();
        for t in [0.05, 0.5, 2.0] {
            let k = heat_kernel(&x, &y, t, &cfg(1e-8, 0.3)).unwrap();
            let free = free_kernel(x.distance_squared(&y), t, 0.3);
            assert!(
                (k - free).abs() <= 1e-6 * free,
                "t = {t}: {k} vs free {free}"
            );
        }
    }

    #[test]
    fn spherical_chart_matches_cartesian() {
        // Deterministic pseudo-random sample of 20 point pairs.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let c = cfg(0.7, 0.4);
        for _ in 0..20 {
            let q = SphericalPoint::new(0.2 + 3.0 * next(), 0.1 + 2.9 * next(), 0.1 + 6.0 * next())
                .unwrap();
            let p = SphericalPoint::new(0.2 + 3.0 * next(), 0.1 + 2.9 * next(), 0.1 + 6.0 * next())
                .unwrap();
            let t = 0.05 + 2.0 * next();
            let spherical = heat_kernel_spherical(&q, &p, t, &c).unwrap();
            let cartesian = heat_kernel(&q.to_cartesian(), &p.to_cartesian(), t, &c).unwrap();
            assert!(
                (spherical - cartesian).abs() <= 1e-12 * cartesian.abs().max(1e-300),
                "{spherical} vs {cartesian}"
            );
        }
    }

    #[test]
    fn perturbative_part_stays_bounded_on_the_diagonal() {
        // heat kernel minus the free kernel at lambda = 10 as |x - y| -> 0.
        let c = cfg(10.0, 0.2);
        let x = CartesianPoint::new(1.0, 0.0, 0.0).unwrap();
        let t = 0.3;
        let mut last = f64::NAN;
        for k in 1..=6 {
            let d = 10f64.powi(-k);
            let y = CartesianPoint::new(1.0 + d, 0.0, 0.0).unwrap();
            let diff =
                heat_kernel(&x, &y, t, &c).unwrap() - free_kernel(x.distance_squared(&y), t, 0.2);
            assert!(diff.is_finite());
            assert!(diff.abs() < 1.0, "unbounded perturbative part: {diff}");
            last = diff;
        }
        // And it approaches the coincidence value continuously.
        let coincident = heat_kernel(&x, &x, t, &c).unwrap() - free_kernel(0.0, t, 0.2);
        assert!((last - coincident).abs() <= 1e-4 * coincident.abs());
    }

    #[test]
    fn approximate_semigroup_property() {
        // Both endpoints along the same direction; the intermediate point is
        // integrated in the reduced (radius, angle) chart, the azimuth giving
        // a factor 2 pi.
        let c = cfg(1.0, 0.3);
        let (t1, t2) = (0.2, 0.3);
        let (r1, r2) = (0.8, 1.2);
        let pair = |ra: f64, rb: f64, cos_g: f64, t: f64| -> Result<f64> {
            let d2 = ra * ra + rb * rb - 2.0 * ra * rb * cos_g;
            kernel_core(d2.max(0.0), ra, rb, t, &c)
        };
        let tol = ToleranceSpec::new(1e-7, 1e-12, 2000).unwrap();
        let inner_tol = ToleranceSpec::new(1e-8, 1e-13, 2000).unwrap();
        let composed = integrate_half_line(
            |rho| {
                let angular = integrate_finite(
                    |theta: f64| {
                        Ok(theta.sin()
                            * pair(r1, rho, theta.cos(), t1)?
                            * pair(rho, r2, theta.cos(), t2)?)
                    },
                    0.0,
                    std::f64::consts::PI,
                    &inner_tol,
                )?
                .check()?
                .value;
                Ok(2.0 * std::f64::consts::PI * rho * rho * angular)
            },
            &tol,
        )
        .unwrap()
        .check()
        .unwrap()
        .value;
        let direct = pair(r1, r2, 1.0, t1 + t2).unwrap();
        assert!(
            (composed - direct).abs() <= 1e-4 * direct,
            "composed {composed} vs direct {direct}"
        );
    }

    #[test]
    fn dirichlet_free_diagonal_closed_form() {
        // lambda = 0 on the diagonal:
        // (4 pi)^{-3/2} Gamma(s - 3/2) / Gamma(s) * epsilon^{3 - 2s}.
        let q = SphericalPoint::new(1.3, 1.0, 2.0).unwrap();
        let c = cfg(0.0, 0.5);
        for s in [Complex64::new(2.5, 0.0), Complex64::new(2.0, 0.3)] {
            let numeric = dirichlet_kernel(s, &q, &q, &c).unwrap();
            let closed = (4.0 * std::f64::consts::PI).powf(-1.5)
                * gamma(s - 1.5).unwrap()
                * gamma_reciprocal(s)
                * ((3.0 - 2.0 * s) * 0.5f64.ln()).exp();
            assert!(
                (numeric - closed).norm() <= 1e-9 * closed.norm(),
                "s = {s}: {numeric} vs {closed}"
            );
        }
    }

    #[test]
    fn dirichlet_tolerance_self_consistency() {
        let q = SphericalPoint::new(1.0, 1.1, 2.3).unwrap();
        let p = SphericalPoint::new(1.4, 0.9, 2.0).unwrap();
        let c = cfg(1.0, 0.5);
        let s = Complex64::new(2.0, 0.0);
        let loose = dirichlet_kernel_with_tolerance(
            s,
            &q,
            &p,
            &c,
            &ToleranceSpec::new(1e-8, 1e-280, 4000).unwrap(),
        )
        .unwrap();
        let tight = dirichlet_kernel_with_tolerance(
            s,
            &q,
            &p,
            &c,
            &ToleranceSpec::new(1e-10, 1e-280, 4000).unwrap(),
        )
        .unwrap();
        assert!((loose - tight).norm() <= 1e-8 * tight.norm().max(1e-300));
    }

    #[test]
    fn dirichlet_symmetry() {
        let q = SphericalPoint::new(0.9, 1.3, 1.0).unwrap();
        let p = SphericalPoint::new(1.7, 0.7, 4.0).unwrap();
        let c = cfg(0.8, 0.6);
        let s = Complex64::new(2.2, 0.4);
        let qp = dirichlet_kernel(s, &q, &p, &c).unwrap();
        let pq = dirichlet_kernel(s, &p, &q, &c).unwrap();
        assert!((qp - pq).norm() <= 1e-10 * qp.norm());
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let x = CartesianPoint::new(1.0, 0.0, 0.0).unwrap();
        assert!(heat_kernel(&x, &x, 0.0, &cfg(1.0, 0.5)).is_err());
        assert!(heat_kernel(&x, &x, -1.0, &cfg(1.0, 0.5)).is_err());
        assert!(CartesianPoint::new(0.0, 0.0, 0.0).is_err());
        assert!(SphericalPoint::new(-1.0, 1.0, 1.0).is_err());
        assert!(SphericalPoint::new(1.0, 4.0, 1.0).is_err());
        assert!(ImpurityConfig::new(-0.5, 0.5, 1.0, 0.0).is_err());
        assert!(ImpurityConfig::new(1.0, 0.5, 0.0, 0.0).is_err());
    }

    #[test]
    fn dirichlet_domain_guards() {
        let q = SphericalPoint::new(1.0, 1.0, 1.0).unwrap();
        // Diagonal with Re s <= 3/2 diverges.
        assert!(matches!(
            dirichlet_kernel(Complex64::new(1.0, 0.0), &q, &q, &cfg(1.0, 0.5)),
            Err(Error::Domain(_))
        ));
        // epsilon = 0 removes the infrared cutoff.
        assert!(matches!(
            dirichlet_kernel(Complex64::new(2.0, 0.0), &q, &q, &cfg(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn oracle_requires_margin_above_the_strip() {
        let q = SphericalPoint::new(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            vev_from_dirichlet_oracle(Complex64::new(5.0, 0.0), &q, &cfg(1.0, 0.5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn oracle_is_affine_in_xi() {
        let q = SphericalPoint::new(1.0, std::f64::consts::FRAC_PI_3, 1.0).unwrap();
        let u = Complex64::new(7.0, 0.0);
        let at_xi = |xi: f64| {
            let c = ImpurityConfig::new(1.0, 0.5, 1.0, xi).unwrap();
            vev_from_dirichlet_oracle(u, &q, &c).unwrap()
        };
        let t0 = at_xi(0.0);
        let t1 = at_xi(1.0);
        let t03 = at_xi(0.3);
        for (got, a, b) in [
            (t03.t00, t0.t00, t1.t00),
            (t03.trr, t0.trr, t1.trr),
            (t03.tthth, t0.tthth, t1.tthth),
            (t03.tphph, t0.tphph, t1.tphph),
        ] {
            let expected = a + 0.3 * (b - a);
            assert!(
                (got - expected).norm() <= 1e-6 * expected.norm().max(a.norm()),
                "affinity violated: {got} vs {expected}"
            );
        }
    }

    proptest! {
        #[test]
        fn kernel_is_symmetric(ax in 0.1..2.0f64, ay in -2.0..2.0f64, az in -2.0..2.0f64,
                               bx in 0.1..2.0f64, by in -2.0..2.0f64, bz in -2.0..2.0f64,
                               t in 0.05..5.0f64) {
            let x = CartesianPoint::new(ax, ay, az).unwrap();
            let y = CartesianPoint::new(bx, by, bz).unwrap();
            let c = cfg(1.0, 0.4);
            let k1 = heat_kernel(&x, &y, t, &c).unwrap();
            let k2 = heat_kernel(&y, &x, t, &c).unwrap();
            prop_assert!((k1 - k2).abs() <= 1e-12 * k1.abs().max(1e-300));
        }

        #[test]
        fn kernel_is_positive(lambda_idx in 0usize..3, r1 in 0.1..5.0f64, r2 in 0.1..5.0f64,
                              cos_g in -1.0..1.0f64, t in 0.01..10.0f64) {
            let lambda = [0.1, 1.0, 10.0][lambda_idx];
            let d2 = r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * cos_g;
            let k = kernel_core(d2.max(0.0), r1, r2, t, &cfg(lambda, 0.2)).unwrap();
            prop_assert!(k > 0.0, "kernel not positive: {k}");
        }
    }
}
