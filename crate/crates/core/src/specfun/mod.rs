//! Special functions: complex-argument Gamma, modified Bessel functions of
//! complex order, the weighted Bessel map `y^sigma K_sigma(y)`, and the
//! exponential-integral combination `e^rho E1(rho)`.
//!
//! Each function has at least one independent evaluation route exercised in
//! the tests (quadrature of an integral representation, closed forms at
//! half-integer order, or a second series).

mod bessel;
mod expint;
mod gamma;

pub use bessel::{bessel_k, frak_k, frak_k_real};
pub use expint::{exp_e, exp_e_asymptotic, exp_e_series, SeriesTruncation};
pub use gamma::{gamma, gamma_reciprocal};

/// Euler–Mascheroni constant, 20 significant digits.
#[allow(clippy::excessive_precision)]
pub const EULER_MASCHERONI: f64 = 0.57721566490153286061;

pub(crate) fn harmonic_number(n: usize) -> f64 {
    // Exact rational arithmetic up to n = 20, then f64 accumulation.
    const EXACT_LIMIT: usize = 20;
    let exact = |m: usize| -> f64 {
        let mut num: i128 = 0;
        let mut den: i128 = 1;
        for k in 1..=m as i128 {
            num = num * k + den;
            den *= k;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        num as f64 / den as f64
    };
    if n <= EXACT_LIMIT {
        exact(n)
    } else {
        let mut h = exact(EXACT_LIMIT);
        for k in EXACT_LIMIT + 1..=n {
            h += 1.0 / k as f64;
        }
        h
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
