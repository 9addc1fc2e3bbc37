//! The `verify` subcommand: runs the cross-pipeline invariants end to end
//! and prints one pass/fail row per check.

use std::path::Path;

use num_complex::Complex64;

use crate::asymptotics::{
    bracket_asymptotic_coefficient, closed_form_brackets, t_small_rho, Component, ExpansionRequest,
    Part, ALL_COMPONENTS, ALL_PARTS,
};
use crate::kernels::{
    dirichlet_kernel, heat_kernel, heat_kernel_spherical, vev_from_dirichlet_oracle,
    CartesianPoint, ImpurityConfig, SphericalPoint,
};
use crate::quadrature::{integrate_half_line, ToleranceSpec};
use crate::specfun::{bessel_k, exp_e, exp_e_series, frak_k_real, gamma, EULER_MASCHERONI};
use crate::stress::{
    conformal_parts, t00_continuation, t00_laurent_at_zero, t_regularized, t_renormalized,
    XI_CONFORMAL,
};

use super::{profile_value, sci, sweep_grid};

type CheckResult = Result<String, String>;

struct Row {
    name: &'static str,
    outcome: CheckResult,
}

fn run_check(rows: &mut Vec<Row>, name: &'static str, f: impl FnOnce() -> CheckResult) {
    let outcome = f();
    rows.push(Row { name, outcome });
}

pub(super) fn run(fast: bool, golden: Option<&Path>) -> i32 {
    let mut rows = Vec::new();

    run_check(&mut rows, "gamma recurrence on a complex grid", || {
        let mut worst = 0.0f64;
        for i in 0..10 {
            for j in 0..10 {
                let z = Complex64::new(-9.3 + 2.0 * i as f64 + 0.55, -9.0 + 2.0 * j as f64 + 0.4);
                let lhs = gamma(z + 1.0).map_err(|e| e.to_string())?;
                let rhs = z * gamma(z).map_err(|e| e.to_string())?;
                worst = worst.max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()));
            }
        }
        gate(worst, 1e-12)
    });

    run_check(&mut rows, "half-integer Bessel closed form", || {
        let mut worst = 0.0f64;
        for y in [1e-3, 0.03, 0.7, 1.0, 5.0, 20.0, 50.0] {
            let k = bessel_k(Complex64::new(0.5, 0.0), y).map_err(|e| e.to_string())?;
            let closed = (std::f64::consts::PI / (2.0 * y)).sqrt() * (-y).exp();
            worst = worst.max((k.re - closed).abs() / closed);
        }
        gate(worst, 1e-10)
    });

    run_check(&mut rows, "exp-e cross-algorithm agreement", || {
        let tol = ToleranceSpec::new(1e-12, 1e-300, 4000).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        for rho in [0.5, 1.0, 2.0, 5.0] {
            let production = exp_e(rho).map_err(|e| e.to_string())?;
            let series = exp_e_series(rho, 60).map_err(|e| e.to_string())?.0;
            let quad = integrate_half_line(|v| Ok((-rho * v).exp() / (v + 1.0)), &tol)
                .map_err(|e| e.to_string())?
                .value;
            worst = worst.max((production - series).abs() / production);
            worst = worst.max((production - quad).abs() / production);
        }
        gate(worst, 1e-11)
    });

    run_check(&mut rows, "integration-by-parts identities", || {
        let tol = ToleranceSpec::new(1e-12, 1e-300, 4000).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        for rho in [0.1, 1.0, 10.0] {
            let e = exp_e(rho).map_err(|e| e.to_string())?;
            let log_side = integrate_half_line(|v| Ok((-rho * v).exp() * (v + 1.0).ln()), &tol)
                .map_err(|e| e.to_string())?
                .value;
            let square_side =
                integrate_half_line(|v| Ok((-rho * v).exp() / (v + 1.0).powi(2)), &tol)
                    .map_err(|e| e.to_string())?
                    .value;
            worst = worst.max((log_side - e / rho).abs() / (e / rho));
            worst = worst.max((square_side - (1.0 - rho * e)).abs() / (1.0 - rho * e).abs());
        }
        gate(worst, 1e-9)
    });

    run_check(&mut rows, "weighted-Bessel small-argument limits", || {
        let k1 = frak_k_real(1.0, 1e-4).map_err(|e| e.to_string())?;
        let k2 = frak_k_real(2.0, 1e-4).map_err(|e| e.to_string())?;
        let k0 = frak_k_real(0.0, 1e-4).map_err(|e| e.to_string())?;
        // K_0(y) = -log(y/2) - gamma_EM + O(y^2 log y).
        let k0_expected = -(5e-5f64).ln() - EULER_MASCHERONI;
        let worst = (k1 - 1.0)
            .abs()
            .max((k2 - 2.0).abs())
            .max((k0 - k0_expected).abs());
        gate(worst, 1e-3)
    });

    let grid = sweep_grid(1e-2, 1e2, 50, true);

    run_check(
        &mut rows,
        "renormalized t00 equals the split recombination",
        || {
            let mut worst = 0.0f64;
            for &rho in &grid {
                for xi in [0.0, XI_CONFORMAL, 0.25] {
                    let q = point(0.5 * rho);
                    let direct = t_renormalized(&q, 1.0, xi).map_err(|e| e.to_string())?.t00;
                    let split = conformal_parts(&q, 1.0)
                        .map_err(|e| e.to_string())?
                        .at_xi(xi)
                        .t00;
                    let scale = direct.abs().max(bracket_scale(rho, q.r)?);
                    worst = worst.max((direct - split).abs() / scale);
                }
            }
            gate(worst, 1e-12)
        },
    );

    run_check(&mut rows, "conformal trace identity", || {
        let mut worst = 0.0f64;
        for &rho in &grid {
            let q = point(0.5 * rho);
            let (residual, scale) =
                crate::stress::conformal_trace_residual(&q, 1.0).map_err(|e| e.to_string())?;
            worst = worst.max(residual.abs() / scale);
        }
        gate(worst, 1e-12)
    });

    run_check(&mut rows, "covariant conservation residual", || {
        let mut worst = 0.0f64;
        for &rho in &[0.5, 1.0, 2.0, 10.0] {
            for xi in [0.0, 0.3] {
                let r = 0.5 * rho;
                let h = 1e-3 * r;
                let trr_at = |rr: f64| -> Result<f64, String> {
                    Ok(t_renormalized(&point(rr), 1.0, xi)
                        .map_err(|e| e.to_string())?
                        .trr)
                };
                let d_trr = (-trr_at(r + 2.0 * h)? + 8.0 * trr_at(r + h)? - 8.0 * trr_at(r - h)?
                    + trr_at(r - 2.0 * h)?)
                    / (12.0 * h);
                let t = t_renormalized(&point(r), 1.0, xi).map_err(|e| e.to_string())?;
                let residual = d_trr + (2.0 / r) * t.trr - (2.0 / r) * (t.tthth / (r * r));
                let scale = d_trr
                    .abs()
                    .max((2.0 / r * t.trr).abs())
                    .max((2.0 / r * t.tthth / (r * r)).abs());
                worst = worst.max(residual.abs() / scale);
            }
        }
        gate(worst, 1e-6)
    });

    run_check(&mut rows, "conformal decomposition prescriptions", || {
        let mut worst = 0.0f64;
        for &rho in &grid {
            let q = point(0.5 * rho);
            let split = conformal_parts(&q, 1.0).map_err(|e| e.to_string())?;
            let at_c = t_renormalized(&q, 1.0, XI_CONFORMAL).map_err(|e| e.to_string())?;
            let at_0 = t_renormalized(&q, 1.0, 0.0).map_err(|e| e.to_string())?;
            let r2 = q.r * q.r;
            let scale4 = bracket_scale(rho, q.r)?;
            for (c, n, tc, t0, scale) in [
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
                worst = worst.max((c - tc).abs() / tc.abs().max(scale));
                let n_presc = 6.0 * (c - t0);
                worst = worst.max((n - n_presc).abs() / n.abs().max(scale));
            }
        }
        gate(worst, 1e-12)
    });

    run_check(
        &mut rows,
        "asymptotic tables against the closed forms",
        || {
            let mut worst = 0.0f64;
            for component in ALL_COMPONENTS {
                for part in ALL_PARTS {
                    let (_, b_poly, bracket_pref, _) = closed_form_brackets(component, part);
                    let req = ExpansionRequest {
                        component,
                        part,
                        order: 4,
                    };
                    // Reconstruct each table coefficient by differencing
                    // successive truncations at rho = 2 (exact arithmetic).
                    for order in 1..=4usize {
                        let hi = crate::asymptotics::t_large_rho(
                            2.0,
                            1.0,
                            &ExpansionRequest { order, ..req },
                        )
                        .map_err(|e| e.to_string())?;
                        let lo = if order == 1 {
                            0.0
                        } else {
                            crate::asymptotics::t_large_rho(
                                2.0,
                                1.0,
                                &ExpansionRequest {
                                    order: order - 1,
                                    ..req
                                },
                            )
                            .map_err(|e| e.to_string())?
                        };
                        // Exponent of the differenced term.
                        let lead = match part {
                            Part::Conformal => 2,
                            Part::Nonconformal => 1,
                        };
                        let n = lead + order as i32 - 1;
                        let r = 1.0f64; // lambda = 1, rho = 2 -> r = 1
                        let power = match component {
                            Component::Tthth => 2,
                            _ => 4,
                        };
                        let table_coeff = (hi - lo)
                            * 2.0f64.powi(n)
                            * std::f64::consts::PI.powi(2)
                            * r.powi(power);
                        let exact = bracket_asymptotic_coefficient(&b_poly, n) * bracket_pref;
                        worst = worst.max((table_coeff - exact).abs() / exact.abs().max(1e-12));
                    }
                }
            }
            gate(worst, 1e-10)
        },
    );

    run_check(
        &mut rows,
        "small-rho expansions lead the closed forms",
        || {
            let mut worst_final = 0.0f64;
            for component in ALL_COMPONENTS {
                for part in ALL_PARTS {
                    let req = ExpansionRequest {
                        component,
                        part,
                        order: 1,
                    };
                    let mut rel = f64::INFINITY;
                    for k in 2..=6 {
                        let rho = 10f64.powi(-k);
                        let exact = split_component(rho, component, part)?;
                        let approx = t_small_rho(rho, 1.0, &req).map_err(|e| e.to_string())?;
                        let next = ((exact - approx) / exact).abs();
                        if next >= rel {
                            return Err(format!(
                                "{component:?} {part:?}: error not decreasing at rho = {rho:e}"
                            ));
                        }
                        rel = next;
                    }
                    worst_final = worst_final.max(rel);
                }
            }
            gate(worst_final, 1e-4)
        },
    );

    run_check(
        &mut rows,
        "suppression of all components at tiny coupling",
        || {
            let q = point(1.0);
            let tiny = t_renormalized(&q, 1e-6, 0.2).map_err(|e| e.to_string())?;
            let unit = t_renormalized(&q, 2.0, 0.2).map_err(|e| e.to_string())?;
            let mut worst = 0.0f64;
            for (small, reference) in [
                (tiny.t00, unit.t00),
                (tiny.trr, unit.trr),
                (tiny.tthth, unit.tthth),
            ] {
                worst = worst.max(small.abs() / reference.abs());
            }
            gate(worst, 1e-3)
        },
    );

    run_check(&mut rows, "heat kernel tends to the free kernel", || {
        let cfg = ImpurityConfig::new(1e-8, 0.3, 1.0, 0.0).map_err(|e| e.to_string())?;
        let x = CartesianPoint::new(0.8, 0.0, 0.6).map_err(|e| e.to_string())?;
        let y = CartesianPoint::new(-0.1, 0.5, 0.2).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        for t in [0.05, 0.5, 2.0] {
            let k = heat_kernel(&x, &y, t, &cfg).map_err(|e| e.to_string())?;
            let d2 = (0.8f64 + 0.1).powi(2) + 0.5f64.powi(2) + (0.6f64 - 0.2).powi(2);
            let free = (-0.09 * t).exp() / (4.0 * std::f64::consts::PI * t).powf(1.5)
                * (-d2 / (4.0 * t)).exp();
            worst = worst.max((k - free).abs() / free);
        }
        gate(worst, 1e-6)
    });

    run_check(&mut rows, "pole law of the continuation", || {
        let q = point(1.0);
        let mut worst = 0.0f64;
        for xi in [0.0, XI_CONFORMAL, 0.25] {
            let cfg = ImpurityConfig::new(1.0, 0.5, 1.0, xi).map_err(|e| e.to_string())?;
            let delta = 1e-4;
            let plus = t00_continuation(Complex64::new(delta, 0.0), &q, &cfg)
                .map_err(|e| e.to_string())?;
            let minus = t00_continuation(Complex64::new(-delta, 0.0), &q, &cfg)
                .map_err(|e| e.to_string())?;
            let residue = 0.5 * (delta * plus - delta * minus).re;
            let expected =
                0.5f64.powi(4) * (1.0 - 8.0 * xi) / (32.0 * std::f64::consts::PI.powi(2));
            worst = worst.max((residue - expected).abs() / expected.abs());
        }
        // And the pole disappears at xi = 1/8.
        let cfg = ImpurityConfig::new(1.0, 0.5, 1.0, 0.125).map_err(|e| e.to_string())?;
        let near = t00_continuation(Complex64::new(1e-4, 0.0), &q, &cfg)
            .map_err(|e| e.to_string())?
            .re;
        let regular = t00_laurent_at_zero(&q, &cfg)
            .map_err(|e| e.to_string())?
            .regular_value;
        if (near - regular).abs() > 1e-3 * regular.abs().max(1.0) {
            return Err(format!(
                "continuation not bounded at xi = 1/8: {near} vs regular part {regular}"
            ));
        }
        gate(worst, 1e-6)
    });

    run_check(&mut rows, "infrared-cutoff removal", || {
        let q = point(1.0);
        let closed = t_renormalized(&q, 1.0, 0.0).map_err(|e| e.to_string())?.t00;
        let mut deviations = Vec::new();
        for k in 1..=3 {
            let eps = 10f64.powi(-k);
            let cfg = ImpurityConfig::new(1.0, eps, 1.0, 0.0).map_err(|e| e.to_string())?;
            let reg = t00_laurent_at_zero(&q, &cfg)
                .map_err(|e| e.to_string())?
                .regular_value;
            deviations.push((reg - closed).abs() / closed.abs());
        }
        if deviations[0] / deviations[1] < 10.0 || deviations[1] / deviations[2] < 10.0 {
            return Err(format!(
                "empirical order below one: deviations {:?}",
                deviations
            ));
        }
        // kappa independence of the epsilon -> 0 trend.
        let cfg_a = ImpurityConfig::new(1.0, 1e-3, 1.0, 0.0).map_err(|e| e.to_string())?;
        let cfg_b = ImpurityConfig::new(1.0, 1e-3, 2.0, 0.0).map_err(|e| e.to_string())?;
        let a = t00_laurent_at_zero(&q, &cfg_a)
            .map_err(|e| e.to_string())?
            .regular_value;
        let b = t00_laurent_at_zero(&q, &cfg_b)
            .map_err(|e| e.to_string())?
            .regular_value;
        if (a - b).abs() > 1e-10 * a.abs() {
            return Err(format!("kappa dependence survives: {a} vs {b}"));
        }
        gate(deviations[2], 1e-4)
    });

    run_check(
        &mut rows,
        "regular part matches the symmetric average",
        || {
            let q = point(1.0);
            let cfg = ImpurityConfig::new(1.0, 0.5, 1.0, 0.0).map_err(|e| e.to_string())?;
            let delta = 1e-3;
            let plus = t00_continuation(Complex64::new(delta, 0.0), &q, &cfg)
                .map_err(|e| e.to_string())?;
            let minus = t00_continuation(Complex64::new(-delta, 0.0), &q, &cfg)
                .map_err(|e| e.to_string())?;
            let average = 0.5 * (plus + minus).re;
            let regular = t00_laurent_at_zero(&q, &cfg)
                .map_err(|e| e.to_string())?
                .regular_value;
            gate((average - regular).abs() / regular.abs(), 1e-5)
        },
    );

    if !fast {
        run_check(&mut rows, "continuation vs integral form at u = 5", || {
            let q = point(1.0);
            let cfg = ImpurityConfig::new(1.0, 0.5, 1.0, 0.0).map_err(|e| e.to_string())?;
            let u = Complex64::new(5.0, 0.0);
            let integral = t_regularized(u, &q, &cfg).map_err(|e| e.to_string())?.t00;
            let continued = t00_continuation(u, &q, &cfg).map_err(|e| e.to_string())?;
            gate((integral - continued).norm() / continued.norm(), 1e-8)
        });

        run_check(
            &mut rows,
            "Dirichlet oracle vs integral form at u = 7",
            || {
                let q = point(1.0);
                let cfg = ImpurityConfig::new(1.0, 0.5, 1.0, 0.0).map_err(|e| e.to_string())?;
                let u = Complex64::new(7.0, 0.0);
                let oracle = vev_from_dirichlet_oracle(u, &q, &cfg).map_err(|e| e.to_string())?;
                let integral = t_regularized(u, &q, &cfg).map_err(|e| e.to_string())?;
                let mut worst = 0.0f64;
                for (a, b) in [
                    (oracle.t00, integral.t00),
                    (oracle.trr, integral.trr),
                    (oracle.tthth, integral.tthth),
                    (oracle.tphph, integral.tphph),
                ] {
                    worst = worst.max((a - b).norm() / b.norm());
                }
                gate(worst, 1e-4)
            },
        );

        run_check(&mut rows, "Dirichlet kernel symmetry", || {
            let cfg = ImpurityConfig::new(0.8, 0.6, 1.0, 0.0).map_err(|e| e.to_string())?;
            let q = SphericalPoint::new(0.9, 1.3, 1.0).map_err(|e| e.to_string())?;
            let p = SphericalPoint::new(1.7, 0.7, 4.0).map_err(|e| e.to_string())?;
            let s = Complex64::new(2.2, 0.4);
            let qp = dirichlet_kernel(s, &q, &p, &cfg).map_err(|e| e.to_string())?;
            let pq = dirichlet_kernel(s, &p, &q, &cfg).map_err(|e| e.to_string())?;
            gate((qp - pq).norm() / qp.norm(), 1e-10)
        });

        run_check(
            &mut rows,
            "spherical chart agrees with the Cartesian one",
            || {
                let cfg = ImpurityConfig::new(0.7, 0.4, 1.0, 0.0).map_err(|e| e.to_string())?;
                let q = SphericalPoint::new(1.1, 0.9, 2.2).map_err(|e| e.to_string())?;
                let p = SphericalPoint::new(0.6, 1.9, 5.0).map_err(|e| e.to_string())?;
                let t = 0.37;
                let spherical =
                    heat_kernel_spherical(&q, &p, t, &cfg).map_err(|e| e.to_string())?;
                let cartesian = heat_kernel(&q.to_cartesian(), &p.to_cartesian(), t, &cfg)
                    .map_err(|e| e.to_string())?;
                gate((spherical - cartesian).abs() / cartesian.abs(), 1e-12)
            },
        );
    }

    // Informational rows: the sign scan and the empirical windows are
    // reported, not asserted.
    let sign_info = sign_scan();
    let windows = window_scan();

    let mut failures = 0;
    println!("{:<55} {:>6}  detail", "check", "status");
    println!("{}", "-".repeat(100));
    for row in &rows {
        match &row.outcome {
            Ok(detail) => println!("{:<55} {:>6}  {detail}", row.name, "PASS"),
            Err(detail) => {
                failures += 1;
                println!("{:<55} {:>6}  {detail}", row.name, "FAIL");
            }
        }
    }
    println!(
        "{:<55} {:>6}  {sign_info}",
        "sign scan of the conformal energy density", "INFO"
    );
    for (label, small, large) in &windows {
        println!(
            "{:<55} {:>6}  1% windows: rho <= {} and rho >= {}",
            format!("asymptotic windows for {label}"),
            "INFO",
            sci(*small),
            sci(*large)
        );
    }

    if let Some(path) = golden {
        match golden_compare(path, &windows) {
            Ok(detail) => println!(
                "{:<55} {:>6}  {detail}",
                "asymptotic-window golden file", "PASS"
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "{:<55} {:>6}  {detail}",
                    "asymptotic-window golden file", "FAIL"
                );
            }
        }
    }

    println!("{}", "-".repeat(100));
    if failures == 0 {
        println!("all {} checks passed", rows.len());
        0
    } else {
        println!("{failures} of {} checks failed", rows.len());
        1
    }
}

// Magnitude of the closed-form bracket terms at this rho; identities among
// the closed forms hold to 1e-12 of this scale (at large rho the components
// themselves emerge from cancellations of terms of size rho^2 E(rho), so a
// comparison relative to the component value alone would demand more than
// f64 can represent).
fn bracket_scale(rho: f64, r: f64) -> Result<f64, String> {
    let ee = exp_e(rho).map_err(|e| e.to_string())?;
    Ok((1.0 + rho + rho * rho * ee) / (8.0 * std::f64::consts::PI.powi(2) * r.powi(4)))
}

fn gate(worst: f64, tolerance: f64) -> CheckResult {
    if worst <= tolerance {
        Ok(format!("worst {} <= {}", sci(worst), sci(tolerance)))
    } else {
        Err(format!("worst {} > {}", sci(worst), sci(tolerance)))
    }
}

fn point(r: f64) -> SphericalPoint {
    SphericalPoint::new(r, std::f64::consts::FRAC_PI_2, 1.0).unwrap()
}

fn split_component(rho: f64, component: Component, part: Part) -> Result<f64, String> {
    profile_value(component, part, rho).map_err(|e| e.to_string())
}

// Scans the dimensionless conformal energy density for sign changes over
// [0.05, 50]; the closed form is positive throughout, so the report records
// the location of the minimum instead of a crossing.
fn sign_scan() -> String {
    let grid = sweep_grid(0.05, 50.0, 400, true);
    let values: Vec<f64> = grid
        .iter()
        .map(|&rho| profile_value(Component::T00, Part::Conformal, rho).unwrap())
        .collect();
    let mut crossings = Vec::new();
    for i in 1..grid.len() {
        if values[i - 1].signum() != values[i].signum() {
            // Bisect the bracketing interval.
            let (mut lo, mut hi) = (grid[i - 1], grid[i]);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let v = profile_value(Component::T00, Part::Conformal, mid).unwrap();
                if v.signum() == values[i - 1].signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            crossings.push(0.5 * (lo + hi));
        }
    }
    if crossings.is_empty() {
        let (idx, min) = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .unwrap();
        format!(
            "no sign change on [0.05, 50]; minimum |value| {} at rho = {}",
            sci(min.abs()),
            sci(grid[idx])
        )
    } else {
        format!(
            "sign changes at rho = {}",
            crossings
                .iter()
                .map(|c| sci(*c))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

// Empirical 1%-agreement windows of the printed expansions, per component
// and part: the largest rho the small-rho form holds below, and the smallest
// rho the four-term large-rho form holds above.
fn window_scan() -> Vec<(String, f64, f64)> {
    let mut out = Vec::new();
    for component in ALL_COMPONENTS {
        for part in ALL_PARTS {
            let label = format!("{component:?}/{part:?}").to_lowercase();
            let small_req = ExpansionRequest {
                component,
                part,
                order: 1,
            };
            let large_req = ExpansionRequest {
                component,
                part,
                order: 4,
            };
            // profile_value and the expansions are both evaluated at
            // lambda = 1, r = rho/2, so they compare directly.
            let small_grid = sweep_grid(1e-4, 1.0, 120, true);
            let mut small_window = small_grid[0];
            for &rho in &small_grid {
                let exact = profile_value(component, part, rho).unwrap();
                let approx = t_small_rho(rho, 1.0, &small_req).unwrap();
                if ((exact - approx) / exact).abs() <= 0.01 {
                    small_window = rho;
                } else {
                    break;
                }
            }
            let large_grid = sweep_grid(1.0, 1e4, 120, true);
            let mut large_window = f64::INFINITY;
            for &rho in large_grid.iter().rev() {
                let exact = profile_value(component, part, rho).unwrap();
                let approx = crate::asymptotics::t_large_rho(rho, 1.0, &large_req).unwrap();
                if ((exact - approx) / exact).abs() <= 0.01 {
                    large_window = rho;
                } else {
                    break;
                }
            }
            out.push((label, small_window, large_window));
        }
    }
    out
}

fn golden_compare(path: &Path, windows: &[(String, f64, f64)]) -> Result<String, String> {
    let rendered = {
        let entries: Vec<String> = windows
            .iter()
            .map(|(label, small, large)| {
                format!(
                    "  {:?}: {{ \"small_rho_max\": {}, \"large_rho_min\": {} }}",
                    label,
                    sci(*small),
                    sci(*large)
                )
            })
            .collect();
        format!("{{\n{}\n}}\n", entries.join(",\n"))
    };
    if !path.exists() {
        std::fs::write(path, &rendered).map_err(|e| e.to_string())?;
        return Ok(format!("written to {}", path.display()));
    }
    let existing = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    if existing == rendered {
        Ok("matches the recorded windows".into())
    } else {
        Err(format!(
            "windows drifted from the golden file {}",
            path.display()
        ))
    }
}
