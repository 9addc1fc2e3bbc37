//! Euler Gamma for complex arguments via a 15-term Lanczos approximation
//! (g = 607/128) with reflection for Re z < 1/2.

use num_complex::Complex64;

use crate::{Error, Result};

const LANCZOS_G: f64 = 4.7421875;
#[allow(clippy::excessive_precision)]
const LANCZOS_C: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
];
#[allow(clippy::excessive_precision)]
const SQRT_TWO_PI: f64 = 2.5066282746310005024;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

// sin(pi z) with the real part reduced to the nearest integer first, so the
// result stays accurate next to the poles of Gamma.
fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let reduced = Complex64::new(z.re - n, z.im);
    let s = (reduced * std::f64::consts::PI).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn lanczos_positive(z: Complex64) -> Complex64 {
    // Valid for Re z >= 0.5.
    let x = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let w = x + LANCZOS_G + 0.5;
    SQRT_TWO_PI * w.powc(x + 0.5) * (-w).exp() * acc
}

/// Euler Gamma. Errors on the poles at z in {0, -1, -2, ...}.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole(z.re));
    }
    let value = if z.re < 0.5 {
        let denom = sin_pi(z) * lanczos_positive(Complex64::new(1.0, 0.0) - z);
        std::f64::consts::PI / denom
    } else {
        lanczos_positive(z)
    };
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("gamma"));
    }
    Ok(value)
}

/// 1 / Gamma(z), entire in z: returns 0 at the poles of Gamma.
pub fn gamma_reciprocal(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        sin_pi(z) * lanczos_positive(Complex64::new(1.0, 0.0) - z) / std::f64::consts::PI
    } else {
        1.0 / lanczos_positive(z)
    }
}
