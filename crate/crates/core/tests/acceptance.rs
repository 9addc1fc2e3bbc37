//! Acceptance suite: every acquisition gate of the build, one test per
//! criterion, each printing one line per sub-check.
//!
//! Two tests are expected to stay red; they pin down misprints in commonly
//! quoted reference values that contradict the closed forms implemented and
//! cross-validated here (see the assertion messages and the test names).

use num_complex::Complex64;

use casimir_point::asymptotics::{
    bracket_asymptotic_coefficient, closed_form_brackets, t_small_rho, Component, ExpansionRequest,
    Part, ALL_COMPONENTS, ALL_PARTS,
};
use casimir_point::kernels::{
    heat_kernel, vev_from_dirichlet_oracle, CartesianPoint, ImpurityConfig, SphericalPoint,
};
use casimir_point::quadrature::{integrate_half_line, ToleranceSpec};
use casimir_point::specfun::{
    bessel_k, exp_e, exp_e_asymptotic, exp_e_series, frak_k_real, gamma, EULER_MASCHERONI,
};
use casimir_point::stress::{
    conformal_parts, conformal_trace_residual, t00_continuation, t00_laurent_at_zero,
    t_regularized, t_renormalized, XI_CONFORMAL,
};

struct Criterion {
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, sub: &str, pass: bool, detail: String) {
        let status = if pass { "PASS" } else { "FAIL" };
        println!("{} [{sub}] {status}: {detail}", self.name);
        if !pass {
            self.failures.push(format!("{sub}: {detail}"));
        }
    }

    fn gate(&mut self, sub: &str, worst: f64, tolerance: f64) {
        self.check(
            sub,
            worst <= tolerance,
            format!("worst {worst:.3e} vs tolerance {tolerance:.1e}"),
        );
    }

    fn finish(self) {
        assert!(
            self.failures.is_empty(),
            "{} failed sub-checks:\n  {}",
            self.name,
            self.failures.join("\n  ")
        );
    }
}

fn chain_point() -> SphericalPoint {
    SphericalPoint::new(1.0, std::f64::consts::FRAC_PI_3, 1.0).unwrap()
}

fn chain_cfg(xi: f64) -> ImpurityConfig {
    ImpurityConfig::new(1.0, 0.5, 1.0, xi).unwrap()
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn criterion_1_pipeline_chain() {
    let started = std::time::Instant::now();
    let mut c = Criterion::new("criterion 1");
    let q = chain_point();
    let cfg = chain_cfg(0.0);

    // Dirichlet-kernel oracle against the integral representation at u = 7.
    let u7 = c64(7.0);
    let oracle = vev_from_dirichlet_oracle(u7, &q, &cfg).unwrap();
    let integral = t_regularized(u7, &q, &cfg).unwrap();
    let mut worst = 0.0f64;
    for (a, b) in [
        (oracle.t00, integral.t00),
        (oracle.trr, integral.trr),
        (oracle.tthth, integral.tthth),
        (oracle.tphph, integral.tphph),
    ] {
        worst = worst.max((a - b).norm() / b.norm());
    }
    c.gate("oracle vs integral form, u = 7", worst, 1e-4);

    // Integral representation against the Bessel-form continuation at u = 5.
    let u5 = c64(5.0);
    let from_integrals = t_regularized(u5, &q, &cfg).unwrap().t00;
    let continued = t00_continuation(u5, &q, &cfg).unwrap();
    c.gate(
        "integral form vs continuation, u = 5",
        (from_integrals - continued).norm() / continued.norm(),
        1e-8,
    );

    // Symmetric average of the continuation against the closed regular part.
    let delta = 1e-3;
    let plus = t00_continuation(c64(delta), &q, &cfg).unwrap();
    let minus = t00_continuation(c64(-delta), &q, &cfg).unwrap();
    let average = 0.5 * (plus + minus).re;
    let regular = t00_laurent_at_zero(&q, &cfg).unwrap().regular_value;
    c.gate(
        "symmetric average vs regular part",
        (average - regular).abs() / regular.abs(),
        1e-5,
    );

    let elapsed = started.elapsed().as_secs_f64();
    c.check(
        "runtime budget",
        elapsed <= 120.0,
        format!("{elapsed:.2} s vs 120 s"),
    );
    c.finish();
}

#[test]
fn criterion_2_pole_law() {
    let mut c = Criterion::new("criterion 2");
    let q = chain_point();
    let delta = 1e-4;
    for xi in [0.0, XI_CONFORMAL, 0.25] {
        let cfg = chain_cfg(xi);
        let plus = t00_continuation(c64(delta), &q, &cfg).unwrap();
        let minus = t00_continuation(c64(-delta), &q, &cfg).unwrap();
        // The symmetric average of u T00(u) over +-delta cancels the even
        // Taylor terms and isolates the residue.
        let residue = 0.5 * (delta * plus - delta * minus).re;
        let expected = 0.5f64.powi(4) * (1.0 - 8.0 * xi) / (32.0 * std::f64::consts::PI.powi(2));
        c.gate(
            &format!("residue at xi = {xi:.4}"),
            (residue - expected).abs() / expected.abs(),
            1e-6,
        );
    }
    // The pole coefficient vanishes at xi = 1/8: the continuation stays
    // bounded and close to the regular part.
    let cfg = chain_cfg(0.125);
    let near = t00_continuation(c64(delta), &q, &cfg).unwrap().re;
    let regular = t00_laurent_at_zero(&q, &cfg).unwrap().regular_value;
    c.check(
        "no pole at xi = 1/8",
        (near - regular).abs() <= 1e-3 * regular.abs().max(1.0),
        format!("u -> 0 value {near:.6e} vs regular part {regular:.6e}"),
    );
    c.finish();
}

#[test]
fn criterion_3_infrared_removal() {
    let mut c = Criterion::new("criterion 3");
    let q = chain_point();
    let closed = t_renormalized(&q, 1.0, 0.0).unwrap().t00;
    let mut deviations = Vec::new();
    for k in 1..=3 {
        let cfg = ImpurityConfig::new(1.0, 10f64.powi(-k) / q.r, 1.0, 0.0).unwrap();
        let reg = t00_laurent_at_zero(&q, &cfg).unwrap().regular_value;
        deviations.push((reg - closed).abs() / closed.abs());
    }
    let order_12 = (deviations[0] / deviations[1]).log10();
    let order_23 = (deviations[1] / deviations[2]).log10();
    c.check(
        "empirical order in epsilon",
        order_12 >= 1.0 && order_23 >= 1.0,
        format!(
            "orders {order_12:.2}, {order_23:.2} with deviations {:.3e}, {:.3e}, {:.3e}",
            deviations[0], deviations[1], deviations[2]
        ),
    );
    c.gate("final deviation at k = 3", deviations[2], 1e-4);

    let at_kappa = |kappa: f64| {
        let cfg = ImpurityConfig::new(1.0, 1e-3 / q.r, kappa, 0.0).unwrap();
        t00_laurent_at_zero(&q, &cfg).unwrap().regular_value
    };
    let (a, b) = (at_kappa(1.0), at_kappa(2.0));
    c.gate(
        "kappa independence of the limit",
        (a - b).abs() / a.abs(),
        1e-10,
    );
    c.finish();
}

#[test]
fn criterion_4_closed_form_identities() {
    let mut c = Criterion::new("criterion 4");
    let grid: Vec<f64> = (0..50)
        .map(|i| 10f64.powf(-2.0 + 4.0 * i as f64 / 49.0))
        .collect();
    let lambda = 1.0;
    let point = |r: f64| SphericalPoint::new(r, std::f64::consts::FRAC_PI_2, 1.0).unwrap();
    // Identities hold to 1e-12 of the bracket-term magnitude; at the large
    // end of the grid the components themselves arise from cancellations of
    // terms of size rho^2 E(rho), which 1e-12 of the result alone would not
    // survive in f64.
    let bracket_scale = |rho: f64, r: f64| {
        (1.0 + rho + rho * rho * exp_e(rho).unwrap())
            / (8.0 * std::f64::consts::PI.powi(2) * r.powi(4))
    };

    let mut worst_recombination = 0.0f64;
    let mut worst_trace = 0.0f64;
    let mut worst_prescriptions = 0.0f64;
    let mut worst_conservation = 0.0f64;
    for &rho in &grid {
        let r = 0.5 * rho * lambda;
        let q = point(r);
        let scale4 = bracket_scale(rho, r);

        for xi in [0.0, XI_CONFORMAL, 0.25] {
            let direct = t_renormalized(&q, lambda, xi).unwrap().t00;
            let split = conformal_parts(&q, lambda).unwrap().at_xi(xi).t00;
            worst_recombination =
                worst_recombination.max((direct - split).abs() / direct.abs().max(scale4));
        }

        let (residual, scale) = conformal_trace_residual(&q, lambda).unwrap();
        worst_trace = worst_trace.max(residual.abs() / scale);

        let split = conformal_parts(&q, lambda).unwrap();
        let at_c = t_renormalized(&q, lambda, XI_CONFORMAL).unwrap();
        let at_0 = t_renormalized(&q, lambda, 0.0).unwrap();
        let r2 = r * r;
        for (cf, nc, tc, t0, scale) in [
            (
                split.conformal.t00,
                split.nonconformal.t00,
                at_c.t00,
                at_0.t00,
                scale4,
            ),
            (
                split.conformal.trr,
                split.nonconformal.trr,
                at_c.trr,
                at_0.trr,
                scale4,
            ),
            (
                split.conformal.tthth,
                split.nonconformal.tthth,
                at_c.tthth,
                at_0.tthth,
                scale4 * r2,
            ),
        ] {
            worst_prescriptions = worst_prescriptions.max((cf - tc).abs() / tc.abs().max(scale));
            let from_prescription = 6.0 * (cf - t0);
            worst_prescriptions =
                worst_prescriptions.max((nc - from_prescription).abs() / nc.abs().max(scale));
        }

        // Covariant conservation by five-point finite differences.
        for xi in [0.0, 0.25] {
            let h = 1e-3 * r;
            let trr_at = |rr: f64| t_renormalized(&point(rr), lambda, xi).unwrap().trr;
            let d_trr = (-trr_at(r + 2.0 * h) + 8.0 * trr_at(r + h) - 8.0 * trr_at(r - h)
                + trr_at(r - 2.0 * h))
                / (12.0 * h);
            let t = t_renormalized(&q, lambda, xi).unwrap();
            let residual = d_trr + (2.0 / r) * t.trr - (2.0 / r) * (t.tthth / r2);
            let scale = d_trr
                .abs()
                .max((2.0 / r * t.trr).abs())
                .max((2.0 / r * t.tthth / r2).abs());
            worst_conservation = worst_conservation.max(residual.abs() / scale);
        }
    }
    c.gate(
        "t00 closed form vs split recombination",
        worst_recombination,
        1e-12,
    );
    c.gate("conformal trace identity", worst_trace, 1e-12);
    c.gate("covariant conservation residual", worst_conservation, 1e-6);
    c.gate("decomposition prescriptions", worst_prescriptions, 1e-12);
    c.finish();
}

#[test]
fn criterion_5_asymptotic_coefficients() {
    let mut c = Criterion::new("criterion 5");

    // Expansion coefficients of E extracted from exp_e_asymptotic itself
    // (exact f64 arithmetic at rho = 2).
    let rho = 2.0;
    let mut e_coeffs = [0.0f64; 12];
    let mut previous = 0.0;
    for (m, slot) in e_coeffs.iter_mut().enumerate() {
        let (partial, _) = exp_e_asymptotic(rho, m).unwrap();
        *slot = (partial - previous) * rho.powi(m as i32 + 1);
        previous = partial;
    }

    // All 24 table coefficients recovered from the closed-form brackets.
    let mut worst = 0.0f64;
    for component in ALL_COMPONENTS {
        for part in ALL_PARTS {
            let (_, b_poly, bracket_pref, _) = closed_form_brackets(component, part);
            let lead = match part {
                Part::Conformal => 2,
                Part::Nonconformal => 1,
            };
            for order in 1..=4usize {
                let n = lead + order as i32 - 1;
                let mut from_series = 0.0;
                for (j, &bj) in b_poly.iter().enumerate() {
                    let idx = n + j as i32 - 1;
                    if idx >= 0 {
                        from_series += bj * e_coeffs[idx as usize];
                    }
                }
                let from_series = from_series * bracket_pref;
                // Difference successive production truncations at rho = 2,
                // lambda = 1 (so r = 1) to recover the table coefficient.
                let req = ExpansionRequest {
                    component,
                    part,
                    order,
                };
                let hi = casimir_point::asymptotics::t_large_rho(2.0, 1.0, &req).unwrap();
                let lo = if order == 1 {
                    0.0
                } else {
                    casimir_point::asymptotics::t_large_rho(
                        2.0,
                        1.0,
                        &ExpansionRequest {
                            order: order - 1,
                            ..req
                        },
                    )
                    .unwrap()
                };
                let power = match component {
                    Component::Tthth => 2,
                    _ => 4,
                };
                let from_table =
                    (hi - lo) * 2.0f64.powi(n) * std::f64::consts::PI.powi(2) * 1.0f64.powi(power);
                worst = worst.max((from_table - from_series).abs() / from_series.abs().max(1e-12));
            }
        }
    }
    c.gate("large-rho coefficients from the closed forms", worst, 1e-10);

    // Small-rho log + constant terms: relative error -> 0 as rho -> 0.
    let mut worst_final = 0.0f64;
    for component in ALL_COMPONENTS {
        for part in ALL_PARTS {
            let req = ExpansionRequest {
                component,
                part,
                order: 1,
            };
            let mut rel = f64::INFINITY;
            let mut decreasing = true;
            for k in 2..=6 {
                let small_rho = 10f64.powi(-k);
                let q =
                    SphericalPoint::new(0.5 * small_rho, std::f64::consts::FRAC_PI_2, 1.0).unwrap();
                let split = conformal_parts(&q, 1.0).unwrap();
                let tensor = match part {
                    Part::Conformal => split.conformal,
                    Part::Nonconformal => split.nonconformal,
                };
                let exact = match component {
                    Component::T00 => tensor.t00,
                    Component::Trr => tensor.trr,
                    Component::Tthth => tensor.tthth,
                };
                let approx = t_small_rho(small_rho, 1.0, &req).unwrap();
                let next = ((exact - approx) / exact).abs();
                decreasing &= next < rel;
                rel = next;
            }
            c.check(
                &format!("small-rho trend {component:?}/{part:?}"),
                decreasing,
                format!("final relative error {rel:.3e}"),
            );
            worst_final = worst_final.max(rel);
        }
    }
    c.gate("small-rho final relative error", worst_final, 1e-4);
    c.finish();
}

// EXPECTED FAIL. Two of the 24 commonly quoted large-rho coefficients are
// inconsistent with the closed forms that every other criterion validates:
//   - radial conformal third correction: quoted 36, closed form gives 18
//     (covariant conservation forces g_k = (k+2) f_k against the quoted
//     t00 / theta-theta tables, and the direct expansion of
//     1 - (1+rho) E(rho) has 18);
//   - energy-density non-conformal fourth correction: quoted -28, closed
//     form gives -30 (the rho^{-4} part of (2 - 2 rho + rho^2) E(rho) is
//     (-12 - 48 - 120) rho^{-4} = -180 rho^{-4}, i.e. -30 after pulling out
//     the factor 6; numerically visible at rho = 20 already).
// The production tables carry 18 and -30; this test records the conflict
// with the quoted values and is intentionally left red.
#[test]
fn criterion_5_quoted_coefficient_conflicts() {
    let mut c = Criterion::new("criterion 5 (quoted-value conflicts)");
    let quoted = [
        (Component::Trr, Part::Conformal, 2usize, 36.0),
        (Component::T00, Part::Nonconformal, 3usize, -28.0),
    ];
    for (component, part, index, quoted_value) in quoted {
        let (_, b_poly, bracket_pref, _) = closed_form_brackets(component, part);
        let lead = match part {
            Part::Conformal => 2,
            Part::Nonconformal => 1,
        };
        let n = lead + index as i32;
        let exact = bracket_asymptotic_coefficient(&b_poly, n) * bracket_pref;
        let table_pref = match (component, part) {
            (Component::Trr, Part::Conformal) => -1.0 / 24.0,
            (Component::T00, Part::Nonconformal) => -3.0 / 2.0,
            _ => unreachable!(),
        };
        let quoted_normalized = quoted_value * table_pref;
        c.check(
            &format!("{component:?}/{part:?} correction {}", index + 1),
            (exact - quoted_normalized).abs() <= 1e-10 * exact.abs(),
            format!(
                "closed form gives {:.6}, quoted value implies {:.6}",
                exact / table_pref,
                quoted_value
            ),
        );
    }
    c.finish();
}

#[test]
fn criterion_6_limits() {
    let mut c = Criterion::new("criterion 6");

    // Suppression of the renormalized tensor at lambda = 1e-6 r.
    let q = chain_point();
    let tiny = t_renormalized(&q, 1e-6 * q.r, 0.2).unwrap();
    let unit = t_renormalized(&q, 2.0 * q.r, 0.2).unwrap(); // rho = 1
    let mut worst = 0.0f64;
    for (small, reference) in [
        (tiny.t00, unit.t00),
        (tiny.trr, unit.trr),
        (tiny.tthth, unit.tthth),
        (tiny.tphph, unit.tphph),
    ] {
        worst = worst.max(small.abs() / reference.abs());
    }
    c.gate(
        "renormalized tensor suppressed at tiny coupling",
        worst,
        1e-3,
    );

    // Heat kernel tends to the free kernel as the coupling vanishes.
    let cfg = ImpurityConfig::new(1e-8, 0.3, 1.0, 0.0).unwrap();
    let x = CartesianPoint::new(0.8, 0.0, 0.6).unwrap();
    let y = CartesianPoint::new(-0.1, 0.5, 0.2).unwrap();
    let mut worst = 0.0f64;
    for t in [0.05, 0.5, 2.0] {
        let k = heat_kernel(&x, &y, t, &cfg).unwrap();
        let d2 = 0.9f64.powi(2) + 0.5f64.powi(2) + 0.4f64.powi(2);
        let free = (-0.09 * t).exp() / (4.0 * std::f64::consts::PI * t).powf(1.5)
            * (-d2 / (4.0 * t)).exp();
        worst = worst.max((k - free).abs() / free);
    }
    c.gate("heat kernel tends to the free kernel", worst, 1e-6);

    // Weighted-Bessel limits at y = 1e-4: y K_1 -> 1, y^2 K_2 -> 2, and
    // K_0(y) = -log(y/2) - gamma_EM + O(y^2 log y).
    let y = 1e-4;
    let k1 = frak_k_real(1.0, y).unwrap();
    let k2 = frak_k_real(2.0, y).unwrap();
    let k0 = frak_k_real(0.0, y).unwrap();
    let k0_expected = -(y / 2.0).ln() - EULER_MASCHERONI;
    let worst = (k1 - 1.0)
        .abs()
        .max((k2 - 2.0).abs())
        .max((k0 - k0_expected).abs());
    c.gate("weighted-Bessel small-argument limits", worst, 1e-3);
    c.finish();
}

#[test]
fn criterion_7_special_function_floor() {
    let mut c = Criterion::new("criterion 7");

    // Gamma recurrence on a grid of 100 complex points with |z| <= 10.
    let mut worst = 0.0f64;
    for i in 0..10 {
        for j in 0..10 {
            let z = Complex64::new(-6.3 + 1.4 * i as f64 + 0.55, -6.0 + 1.33 * j as f64 + 0.41);
            if z.norm() > 10.0 {
                continue;
            }
            let lhs = gamma(z + 1.0).unwrap();
            let rhs = z * gamma(z).unwrap();
            worst = worst.max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()));
        }
    }
    c.gate("gamma recurrence", worst, 1e-12);

    // Half-integer closed form of the Bessel function.
    let mut worst = 0.0f64;
    for y in [1e-3, 0.05, 0.3, 1.0, 4.0, 15.0, 50.0] {
        let k = bessel_k(c64(0.5), y).unwrap().re;
        let closed = (std::f64::consts::PI / (2.0 * y)).sqrt() * (-y).exp();
        worst = worst.max((k - closed).abs() / closed);
    }
    c.gate("half-integer Bessel closed form", worst, 1e-10);

    // Series, continued fraction and quadrature routes to exp-e.
    let tol = ToleranceSpec::new(1e-12, 1e-300, 4000).unwrap();
    let mut worst = 0.0f64;
    for rho in [0.5, 1.0, 2.0, 5.0] {
        let production = exp_e(rho).unwrap();
        let series = exp_e_series(rho, 60).unwrap().0;
        let quad = integrate_half_line(|v| Ok((-rho * v).exp() / (v + 1.0)), &tol)
            .unwrap()
            .check()
            .unwrap()
            .value;
        worst = worst.max((production - series).abs() / production);
        worst = worst.max((production - quad).abs() / production);
    }
    c.gate("exp-e cross-algorithm agreement", worst, 1e-11);

    // Integration-by-parts identities.
    let mut worst = 0.0f64;
    for rho in [0.1, 1.0, 10.0] {
        let e = exp_e(rho).unwrap();
        let log_side = integrate_half_line(|v| Ok((-rho * v).exp() * (v + 1.0).ln()), &tol)
            .unwrap()
            .value;
        let square_side = integrate_half_line(|v| Ok((-rho * v).exp() / (v + 1.0).powi(2)), &tol)
            .unwrap()
            .value;
        worst = worst.max((log_side - e / rho).abs() / (e / rho));
        worst = worst.max((square_side - (1.0 - rho * e)).abs() / (1.0 - rho * e).abs());
    }
    c.gate("integration-by-parts identities", worst, 1e-9);
    c.finish();
}

#[test]
fn criterion_8_figure_sweeps() {
    let mut c = Criterion::new("criterion 8");
    // All six panels over rho in [0.05, 50] evaluate without failure.
    for component in ALL_COMPONENTS {
        for part in ALL_PARTS {
            let mut ok = true;
            let mut bad = String::new();
            for i in 0..200 {
                let rho = 0.05 * (50.0f64 / 0.05).powf(i as f64 / 199.0);
                let q = SphericalPoint::new(0.5 * rho, std::f64::consts::FRAC_PI_2, 1.0).unwrap();
                match conformal_parts(&q, 1.0) {
                    Ok(split) => {
                        let tensor = match part {
                            Part::Conformal => split.conformal,
                            Part::Nonconformal => split.nonconformal,
                        };
                        let v = match component {
                            Component::T00 => tensor.t00,
                            Component::Trr => tensor.trr,
                            Component::Tthth => tensor.tthth,
                        };
                        if !v.is_finite() {
                            ok = false;
                            bad = format!("non-finite value at rho = {rho}");
                            break;
                        }
                    }
                    Err(e) => {
                        ok = false;
                        bad = format!("evaluation failed at rho = {rho}: {e}");
                        break;
                    }
                }
            }
            c.check(
                &format!("sweep {component:?}/{part:?}"),
                ok,
                if ok {
                    "200 points, no failures".into()
                } else {
                    bad
                },
            );
        }
    }
    c.finish();
}

// EXPECTED FAIL. The acceptance gate asks the dimensionless conformal energy
// density to be negative at rho = 0.05 and to cross zero exactly once before
// rho = 50. The closed form is positive on the whole half-line: its bracket
// rho + (1 - rho - rho^2) E(rho) tends to -(log rho + gamma_EM) > 0 as
// rho -> 0 (the logarithm is negative there) and to 3 rho^{-2} > 0 as
// rho -> infinity, staying positive in between (minimum ~0.078 near
// rho ~ 3.9). A sign change would contradict the closed forms pinned to
// 1e-12 by criterion 4, so this expectation cannot be met; the scan is kept
// here verbatim and left red.
#[test]
fn criterion_8_sign_pattern_of_the_conformal_energy_density() {
    let mut c = Criterion::new("criterion 8 (sign pattern)");
    let value = |rho: f64| {
        let q = SphericalPoint::new(0.5 * rho, std::f64::consts::FRAC_PI_2, 1.0).unwrap();
        conformal_parts(&q, 1.0).unwrap().conformal.t00
    };
    let at_low = value(0.05);
    let at_high = value(50.0);
    c.check(
        "negative at rho = 0.05",
        at_low < 0.0,
        format!("value {at_low:.6e}"),
    );
    c.check(
        "positive at rho = 50",
        at_high > 0.0,
        format!("value {at_high:.6e}"),
    );

    // Bisection-based crossing count over a fine log grid.
    let mut crossings = Vec::new();
    let mut prev_rho = 0.05f64;
    let mut prev_val = at_low;
    for i in 1..=400 {
        let rho = 0.05 * (50.0f64 / 0.05).powf(i as f64 / 400.0);
        let v = value(rho);
        if v.signum() != prev_val.signum() {
            let (mut lo, mut hi) = (prev_rho, rho);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if value(mid).signum() == prev_val.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            crossings.push(0.5 * (lo + hi));
        }
        prev_rho = rho;
        prev_val = v;
    }
    c.check(
        "exactly one sign change",
        crossings.len() == 1,
        format!("found {} crossings: {crossings:?}", crossings.len()),
    );
    c.finish();
}
