//! C ABI over the casimir-point library: an opaque evaluator handle carrying
//! the model parameters, status codes instead of Rust errors, and plain
//! `double` outputs.
//!
//! The matching header lives in `include/casimir_point.h` and is maintained
//! by hand (a test checks that every exported symbol appears in it). All
//! functions are safe to call from any thread; the handle is immutable after
//! construction.

use std::ffi::c_char;

use num_complex::Complex64;

use casimir_point::kernels::{ImpurityConfig, SphericalPoint};
use casimir_point::specfun::exp_e;
use casimir_point::stress::{
    conformal_parts, t00_continuation, t00_laurent_at_zero, t_renormalized,
};
use casimir_point::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    InvalidArgument = 1,
    Pole = 2,
    NoConvergence = 3,
    Overflow = 4,
    NullPointer = 5,
}

fn status_of(err: &Error) -> PcStatus {
    match err {
        Error::Domain(_) | Error::StepUnderflow(_) => PcStatus::InvalidArgument,
        Error::GammaPole(_) | Error::PoleProximity { .. } => PcStatus::Pole,
        Error::QuadratureNotConverged { .. } => PcStatus::NoConvergence,
        Error::Overflow(_) | Error::NonFiniteIntegrand { .. } => PcStatus::Overflow,
    }
}

/// The four non-vanishing diagonal components in the spherical coordinate
/// basis.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PcStress {
    pub t00: f64,
    pub trr: f64,
    pub t_theta_theta: f64,
    pub t_phi_phi: f64,
}

/// Opaque evaluator owning the model parameters.
pub struct PcEvaluator {
    cfg: ImpurityConfig,
}

fn point(r: f64, theta: f64) -> Result<SphericalPoint, Error> {
    SphericalPoint::new(r, theta, 1.0)
}

/// Creates an evaluator for the given parameters. Returns `Ok` and writes the
/// handle to `out`, which must later be released with `pc_evaluator_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_new(
    lambda: f64,
    epsilon: f64,
    kappa: f64,
    xi: f64,
    out: *mut *mut PcEvaluator,
) -> PcStatus {
    if out.is_null() {
        return PcStatus::NullPointer;
    }
    match ImpurityConfig::new(lambda, epsilon, kappa, xi) {
        Ok(cfg) => {
            *out = Box::into_raw(Box::new(PcEvaluator { cfg }));
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases an evaluator created by `pc_evaluator_new`. A null pointer is a
/// no-op.
///
/// # Safety
/// `ev` must be null or a pointer previously returned by `pc_evaluator_new`
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_free(ev: *mut PcEvaluator) {
    if !ev.is_null() {
        drop(Box::from_raw(ev));
    }
}

/// Renormalized stress-energy tensor at radius `r` and polar angle `theta`,
/// using the evaluator's `lambda` and `xi`.
///
/// # Safety
/// `ev` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_renormalized(
    ev: *const PcEvaluator,
    r: f64,
    theta: f64,
    out: *mut PcStress,
) -> PcStatus {
    if ev.is_null() || out.is_null() {
        return PcStatus::NullPointer;
    }
    let cfg = &(*ev).cfg;
    let result = point(r, theta).and_then(|q| t_renormalized(&q, cfg.lambda, cfg.xi));
    match result {
        Ok(t) => {
            *out = PcStress {
                t00: t.t00,
                trr: t.trr,
                t_theta_theta: t.tthth,
                t_phi_phi: t.tphph,
            };
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Conformal and non-conformal parts of the renormalized tensor; for any
/// coupling, renormalized = conformal + (xi - 1/6) * nonconformal.
///
/// # Safety
/// `ev`, `conformal` and `nonconformal` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_conformal_parts(
    ev: *const PcEvaluator,
    r: f64,
    theta: f64,
    conformal: *mut PcStress,
    nonconformal: *mut PcStress,
) -> PcStatus {
    if ev.is_null() || conformal.is_null() || nonconformal.is_null() {
        return PcStatus::NullPointer;
    }
    let cfg = &(*ev).cfg;
    let result = point(r, theta).and_then(|q| conformal_parts(&q, cfg.lambda));
    match result {
        Ok(split) => {
            *conformal = PcStress {
                t00: split.conformal.t00,
                trr: split.conformal.trr,
                t_theta_theta: split.conformal.tthth,
                t_phi_phi: split.conformal.tphph,
            };
            *nonconformal = PcStress {
                t00: split.nonconformal.t00,
                trr: split.nonconformal.trr,
                t_theta_theta: split.nonconformal.tthth,
                t_phi_phi: split.nonconformal.tphph,
            };
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Pole coefficient and regular value at the origin of the regulating
/// parameter for the continued energy density.
///
/// # Safety
/// `ev`, `pole_coefficient` and `regular_value` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_t00_regular_part(
    ev: *const PcEvaluator,
    r: f64,
    pole_coefficient: *mut f64,
    regular_value: *mut f64,
) -> PcStatus {
    if ev.is_null() || pole_coefficient.is_null() || regular_value.is_null() {
        return PcStatus::NullPointer;
    }
    let cfg = &(*ev).cfg;
    let result = point(r, std::f64::consts::FRAC_PI_2).and_then(|q| t00_laurent_at_zero(&q, cfg));
    match result {
        Ok(laurent) => {
            *pole_coefficient = laurent.pole_coefficient;
            *regular_value = laurent.regular_value;
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Analytic continuation of the regularized energy density at complex
/// `u = u_re + i u_im`.
///
/// # Safety
/// `ev`, `out_re` and `out_im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_evaluator_t00_continuation(
    ev: *const PcEvaluator,
    u_re: f64,
    u_im: f64,
    r: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> PcStatus {
    if ev.is_null() || out_re.is_null() || out_im.is_null() {
        return PcStatus::NullPointer;
    }
    let cfg = &(*ev).cfg;
    let result = point(r, std::f64::consts::FRAC_PI_2)
        .and_then(|q| t00_continuation(Complex64::new(u_re, u_im), &q, cfg));
    match result {
        Ok(v) => {
            *out_re = v.re;
            *out_im = v.im;
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// `e^rho E1(rho)` for rho > 0.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_exp_e(rho: f64, out: *mut f64) -> PcStatus {
    if out.is_null() {
        return PcStatus::NullPointer;
    }
    match exp_e(rho) {
        Ok(v) => {
            *out = v;
            PcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pc_status_message(status: PcStatus) -> *const c_char {
    let message: &'static [u8] = match status {
        PcStatus::Ok => b"ok\0",
        PcStatus::InvalidArgument => b"invalid argument\0",
        PcStatus::Pole => b"evaluation at or next to a pole\0",
        PcStatus::NoConvergence => b"quadrature did not converge\0",
        PcStatus::Overflow => b"result not representable\0",
        PcStatus::NullPointer => b"null pointer argument\0",
    };
    message.as_ptr() as *const c_char
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
