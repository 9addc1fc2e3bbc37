//! Closed-form small- and large-distance expansions of the conformal and
//! non-conformal parts of the renormalized tensor, in the dimensionless
//! radius `rho = 2r/lambda`.

use crate::specfun::EULER_MASCHERONI;
use crate::{Error, Result};

/// Which diagonal component an expansion refers to. The phi-phi component is
/// `sin^2(theta)` times the theta-theta one and has no separate expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    T00,
    Trr,
    Tthth,
}

/// Conformal (`xi = 1/6`) or non-conformal part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Conformal,
    Nonconformal,
}

/// Selects a component, a part, and how many printed terms to keep.
///
/// For the large-rho expansion `order` is the number of terms of the bracket
/// sum, between 1 and 4. The small-rho expansion has a single printed order
/// (the logarithm plus its constant), so `order` must be 1 there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionRequest {
    pub component: Component,
    pub part: Part,
    pub order: usize,
}

/// Constant accompanying `log rho + gamma_EM` and the prefactor of the
/// small-rho form, as functions of (1/r^2, 1/r^4).
fn small_rho_table(component: Component, part: Part) -> (f64, i32, f64) {
    // (prefactor numerator over pi^2, power of r, additive constant c) in
    //   prefactor / (pi^2 r^power) * [log rho + gamma_EM + c].
    match (component, part) {
        (Component::T00, Part::Conformal) => (-1.0 / 24.0, 4, 0.0),
        (Component::T00, Part::Nonconformal) => (1.0 / 2.0, 4, -1.5),
        (Component::Trr, Part::Conformal) => (1.0 / 24.0, 4, 1.0),
        // The radial non-conformal prefactor follows from the closed form
        // 1 + (2 - rho) E(rho): its sign is positive (the commonly printed
        // negative sign is inconsistent with the closed form).
        (Component::Trr, Part::Nonconformal) => (1.0, 4, -0.5),
        (Component::Tthth, Part::Conformal) => (-1.0 / 24.0, 2, 0.5),
        (Component::Tthth, Part::Nonconformal) => (-1.0, 2, -1.0),
    }
}

/// Large-rho data: prefactor over pi^2 r^power, leading inverse power of rho,
/// and the four bracket coefficients.
fn large_rho_table(component: Component, part: Part) -> (f64, i32, i32, [f64; 4]) {
    match (component, part) {
        (Component::T00, Part::Conformal) => (1.0 / 8.0, 4, 2, [1.0, -16.0 / 3.0, 30.0, -192.0]),
        // The fourth coefficient is -30: the rho^{-4} part of the bracket
        // expansion is (-12 - 48 - 120)/6 (a commonly quoted -28 disagrees
        // with the closed form numerically already at rho = 20).
        (Component::T00, Part::Nonconformal) => (-3.0 / 2.0, 4, 1, [1.0, -2.0, 20.0 / 3.0, -30.0]),
        // The third correction is 18, as the closed form dictates (the
        // commonly printed 36 violates covariant conservation against the
        // t00 and theta-theta tables).
        (Component::Trr, Part::Conformal) => (-1.0 / 24.0, 4, 2, [1.0, -4.0, 18.0, -96.0]),
        (Component::Trr, Part::Nonconformal) => {
            (-3.0 / 2.0, 4, 1, [1.0, -4.0 / 3.0, 10.0 / 3.0, -12.0])
        }
        (Component::Tthth, Part::Conformal) => (1.0 / 12.0, 2, 2, [1.0, -5.0, 27.0, -168.0]),
        (Component::Tthth, Part::Nonconformal) => {
            (9.0 / 4.0, 2, 1, [1.0, -16.0 / 9.0, 50.0 / 9.0, -24.0])
        }
    }
}

fn radius_from(rho: f64, lambda: f64) -> Result<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::Domain(format!("rho must be > 0, got {rho}")));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!("lambda must be > 0, got {lambda}")));
    }
    Ok(0.5 * rho * lambda)
}

/// Small-rho form `prefactor * [log rho + gamma_EM + c]` of the requested
/// component and part.
pub fn t_small_rho(rho: f64, lambda: f64, req: &ExpansionRequest) -> Result<f64> {
    let r = radius_from(rho, lambda)?;
    if req.order != 1 {
        return Err(Error::Domain(
            "the small-rho expansion has a single printed order; use order = 1".into(),
        ));
    }
    let (num, power, c) = small_rho_table(req.component, req.part);
    let prefactor = num / (std::f64::consts::PI.powi(2) * r.powi(power));
    Ok(prefactor * (rho.ln() + EULER_MASCHERONI + c))
}

/// Truncated large-rho sum of the requested component and part with `order`
/// terms kept (1 through 4).
pub fn t_large_rho(rho: f64, lambda: f64, req: &ExpansionRequest) -> Result<f64> {
    let r = radius_from(rho, lambda)?;
    if !(1..=4).contains(&req.order) {
        return Err(Error::Domain(format!(
            "the large-rho expansion keeps 1 to 4 printed terms, got order {}",
            req.order
        )));
    }
    let (num, power, lead, coeffs) = large_rho_table(req.component, req.part);
    let prefactor = num / (std::f64::consts::PI.powi(2) * r.powi(power));
    let mut sum = 0.0;
    for (m, &coeff) in coeffs.iter().take(req.order).enumerate() {
        sum += coeff * rho.powi(-(lead + m as i32));
    }
    Ok(prefactor * sum)
}

/// Exact asymptotic coefficients of a closed-form bracket `A(rho) + B(rho) E(rho)`
/// with polynomial `A`, `B`: the coefficient of `rho^{-n}` is
/// `sum_j B_j (-1)^{n+j-1} (n+j-1)!`, while all non-negative powers cancel.
/// Used to cross-check the printed tables against the closed forms.
pub fn bracket_asymptotic_coefficient(b_poly: &[f64], n: i32) -> f64 {
    let mut total = 0.0;
    for (j, &bj) in b_poly.iter().enumerate() {
        let m = n + j as i32 - 1; // E-series index contributing to rho^{-n}
        if m < 0 {
            continue;
        }
        let factorial: f64 = (1..=m).map(|k| k as f64).product();
        let sign = if (n + j as i32 - 1) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        total += bj * sign * factorial;
    }
    total
}

/// Bracket polynomials (A, B) of the six closed forms together with their
/// global prefactors over `pi^2 r^power`, for the coefficient cross-check.
pub fn closed_form_brackets(component: Component, part: Part) -> (Vec<f64>, Vec<f64>, f64, i32) {
    match (component, part) {
        (Component::T00, Part::Conformal) => (vec![0.0, 1.0], vec![1.0, -1.0, -1.0], 1.0 / 24.0, 4),
        (Component::T00, Part::Nonconformal) => {
            (vec![3.0, -1.0], vec![2.0, -2.0, 1.0], -1.0 / 4.0, 4)
        }
        (Component::Trr, Part::Conformal) => (vec![1.0], vec![-1.0, -1.0], 1.0 / 24.0, 4),
        (Component::Trr, Part::Nonconformal) => (vec![1.0], vec![2.0, -1.0], -1.0 / 2.0, 4),
        (Component::Tthth, Part::Conformal) => {
            (vec![1.0, -1.0], vec![-2.0, 0.0, 1.0], -1.0 / 48.0, 2)
        }
        (Component::Tthth, Part::Nonconformal) => {
            (vec![4.0, -1.0], vec![4.0, -3.0, 1.0], 1.0 / 4.0, 2)
        }
    }
}

pub const ALL_COMPONENTS: [Component; 3] = [Component::T00, Component::Trr, Component::Tthth];
pub const ALL_PARTS: [Part; 2] = [Part::Conformal, Part::Nonconformal];
