//! Adaptive Gauss–Kronrod integration over half-lines and products of
//! half-lines.
//!
//! The half-line `(0, inf)` is mapped onto `(0, 1)` by `t = x / (1 - x)` and
//! integrated with adaptive 15-point Gauss–Kronrod panels, bisecting the
//! segment with the largest error estimate first. The initial segment list is
//! split at `x = 1/2` (the image of `t = 1`), which resolves integrands
//! carrying the essential singularity `e^{-1/t}` on the left and an
//! exponential tail on the right. Complex integrands are integrated in a
//! single pass over shared nodes.

use num_complex::Complex64;

use crate::{Error, Result};

/// Value plus error estimate plus convergence flag from adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    /// Estimated absolute error of `value`.
    pub error_estimate: f64,
    /// True when `error_estimate <= max(tol.absolute, tol.relative * |value|)`.
    pub converged: bool,
    /// Number of integrand evaluations.
    pub evaluations: usize,
}

impl<T> QuadratureResult<T> {
    /// Turns a non-converged result into an error, for callers that cannot
    /// use a partial value.
    pub fn check(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::QuadratureNotConverged {
                subdivisions: self.evaluations / 15,
                error_estimate: self.error_estimate,
            })
        }
    }
}

/// Requested accuracy and subdivision budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceSpec {
    pub relative: f64,
    pub absolute: f64,
    pub max_subdivisions: usize,
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec {
            relative: 1e-10,
            absolute: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl ToleranceSpec {
    pub fn new(relative: f64, absolute: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = ToleranceSpec {
            relative,
            absolute,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relative >= 1e-14) {
            return Err(Error::Domain(format!(
                "relative tolerance must be >= 1e-14, got {:e}",
                self.relative
            )));
        }
        if !(self.absolute >= 0.0) {
            return Err(Error::Domain(format!(
                "absolute tolerance must be >= 0, got {:e}",
                self.absolute
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be >= 1".to_string()));
        }
        Ok(())
    }

    fn target(&self, magnitude: f64) -> f64 {
        self.absolute.max(self.relative * magnitude)
    }
}

/// Scalar kinds the panel rule can accumulate: `f64` and `Complex64`.
pub trait IntegrandValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, k: f64) -> Self;
    fn norm(self) -> f64;
    fn is_finite_value(self) -> bool;
}

impl IntegrandValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl IntegrandValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn is_finite_value(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule
// (QUADPACK values).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut scaled = err.abs();
    if resasc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / resasc).powf(1.5);
        scaled = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * resabs);
    }
    scaled
}

#[derive(Debug, Clone, Copy)]
struct Segment<V> {
    a: f64,
    b: f64,
    value: V,
    err: f64,
}

impl<V: IntegrandValue> Segment<V> {
    fn refinable(&self) -> bool {
        let width = self.b - self.a;
        width > 4.0 * f64::EPSILON * self.a.abs().max(self.b.abs()).max(1.0e-30)
    }
}

fn gk15_segment<V, F>(f: &mut F, a: f64, b: f64, evals: &mut usize) -> Result<Segment<V>>
where
    V: IntegrandValue,
    F: FnMut(f64) -> Result<V>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut call = |x: f64| -> Result<V> {
        *evals += 1;
        let v = f(x)?;
        if !v.is_finite_value() {
            return Err(Error::NonFiniteIntegrand { at: x });
        }
        Ok(v)
    };

    let fc = call(center)?;
    let mut kronrod = fc.scale(WGK[7]);
    let mut gauss = fc.scale(WG[3]);
    let mut resabs = fc.norm() * WGK[7];
    let mut fv1 = [V::zero(); 7];
    let mut fv2 = [V::zero(); 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = call(center - dx)?;
        let f2 = call(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1.add(f2);
        kronrod = kronrod.add(sum.scale(WGK[j]));
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss = gauss.add(sum.scale(WG[j / 2]));
        }
    }

    let mean = kronrod.scale(0.5);
    let mut resasc = WGK[7] * fc.add(mean.scale(-1.0)).norm();
    for j in 0..7 {
        resasc +=
            WGK[j] * (fv1[j].add(mean.scale(-1.0)).norm() + fv2[j].add(mean.scale(-1.0)).norm());
    }

    let raw_err = kronrod.add(gauss.scale(-1.0)).norm() * half.abs();
    Ok(Segment {
        a,
        b,
        value: kronrod.scale(half),
        err: rescale_error(raw_err, resabs * half.abs(), resasc * half.abs()),
    })
}

fn totals<V: IntegrandValue>(segments: &[Segment<V>]) -> (V, f64) {
    let mut value = V::zero();
    let mut err = 0.0;
    for s in segments {
        value = value.add(s.value);
        err += s.err;
    }
    (value, err)
}

fn adapt<V, F>(f: &mut F, seeds: &[(f64, f64)], tol: &ToleranceSpec) -> Result<QuadratureResult<V>>
where
    V: IntegrandValue,
    F: FnMut(f64) -> Result<V>,
{
    tol.validate()?;
    let mut evals = 0usize;
    let mut segments = Vec::with_capacity(seeds.len() + tol.max_subdivisions);
    for &(a, b) in seeds {
        segments.push(gk15_segment(f, a, b, &mut evals)?);
    }

    let mut subdivisions = 0usize;
    let mut converged = false;
    loop {
        let (value, err) = totals(&segments);
        if err <= tol.target(value.norm()) {
            converged = true;
            break;
        }
        if subdivisions >= tol.max_subdivisions {
            break;
        }
        let mut worst: Option<usize> = None;
        for (i, s) in segments.iter().enumerate() {
            if !s.refinable() {
                continue;
            }
            worst = match worst {
                None => Some(i),
                Some(w) => {
                    let sw = &segments[w];
                    if s.err > sw.err || (s.err == sw.err && s.a < sw.a) {
                        Some(i)
                    } else {
                        Some(w)
                    }
                }
            };
        }
        let Some(w) = worst else {
            // Nothing left to refine; report the best available estimate.
            break;
        };
        let (a, b) = (segments[w].a, segments[w].b);
        let mid = 0.5 * (a + b);
        let left = gk15_segment(f, a, mid, &mut evals)?;
        let right = gk15_segment(f, mid, b, &mut evals)?;
        segments[w] = left;
        segments.push(right);
        subdivisions += 1;
    }

    // Deterministic summation order, independent of the refinement history.
    segments.sort_by(|x, y| x.a.partial_cmp(&y.a).unwrap());
    let (value, error_estimate) = totals(&segments);
    let converged = converged || error_estimate <= tol.target(value.norm());
    Ok(QuadratureResult {
        value,
        error_estimate,
        converged,
        evaluations: evals,
    })
}

fn adapt_half_line<V, F>(f: &mut F, tol: &ToleranceSpec) -> Result<QuadratureResult<V>>
where
    V: IntegrandValue,
    F: FnMut(f64) -> Result<V>,
{
    let mut g = |x: f64| -> Result<V> {
        let om = 1.0 - x;
        let t = x / om;
        Ok(f(t)?.scale(1.0 / (om * om)))
    };
    adapt(&mut g, &[(0.0, 0.5), (0.5, 1.0)], tol)
}

/// Integrates `f` over `(0, inf)`.
pub fn integrate_half_line<F>(mut f: F, tol: &ToleranceSpec) -> Result<QuadratureResult<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    adapt_half_line(&mut f, tol)
}

/// Integrates a complex-valued `f` over `(0, inf)`, sharing nodes between the
/// real and imaginary parts.
pub fn integrate_half_line_complex<F>(
    mut f: F,
    tol: &ToleranceSpec,
) -> Result<QuadratureResult<Complex64>>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    adapt_half_line(&mut f, tol)
}

/// Integrates `f` over the finite interval `(a, b)`.
pub fn integrate_finite<F>(
    mut f: F,
    a: f64,
    b: f64,
    tol: &ToleranceSpec,
) -> Result<QuadratureResult<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    adapt(&mut f, &[(a, b)], tol)
}

/// Complex-valued counterpart of [`integrate_finite`].
pub fn integrate_finite_complex<F>(
    mut f: F,
    a: f64,
    b: f64,
    tol: &ToleranceSpec,
) -> Result<QuadratureResult<Complex64>>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    adapt(&mut f, &[(a, b)], tol)
}

fn product_impl<V, F>(f2: F, tol: &ToleranceSpec) -> Result<QuadratureResult<V>>
where
    V: IntegrandValue,
    F: Fn(f64, f64) -> Result<V>,
{
    tol.validate()?;
    // Inner integrals run 10x tighter so their error stays subordinate to the
    // outer estimate; the outer pass gets 0.9x of the budget so the combined
    // estimate still meets the requested tolerance.
    let inner_tol = ToleranceSpec {
        relative: (tol.relative / 10.0).max(1e-14),
        absolute: tol.absolute / 10.0,
        max_subdivisions: tol.max_subdivisions,
    };
    let outer_tol = ToleranceSpec {
        relative: 0.9 * tol.relative,
        absolute: 0.9 * tol.absolute,
        ..*tol
    };

    let mut inner_evals = 0usize;
    let mut inner_converged = true;
    let outer = {
        let mut g = |x: f64| -> Result<V> {
            let inner = adapt_half_line(&mut |y: f64| f2(x, y), &inner_tol)?;
            inner_evals += inner.evaluations;
            inner_converged &= inner.converged;
            Ok(inner.value)
        };
        adapt_half_line(&mut g, tol)?
    };

    let error_estimate = outer.error_estimate + 0.1 * outer_tol.target(outer.value.norm());
    let converged =
        outer.converged && inner_converged && error_estimate <= tol.target(outer.value.norm());
    Ok(QuadratureResult {
        value: outer.value,
        error_estimate,
        converged,
        evaluations: inner_evals,
    })
}

/// Iterated adaptive integration of `f2(x, y)` over `(0, inf)^2`, inner in
/// `y` then outer in `x`, with the inner tolerance tightened by 10x.
pub fn integrate_product_half_lines<F>(f2: F, tol: &ToleranceSpec) -> Result<QuadratureResult<f64>>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    product_impl(f2, tol)
}

/// Complex-valued counterpart of [`integrate_product_half_lines`].
pub fn integrate_product_half_lines_complex<F>(
    f2: F,
    tol: &ToleranceSpec,
) -> Result<QuadratureResult<Complex64>>
where
    F: Fn(f64, f64) -> Result<Complex64>,
{
    product_impl(f2, tol)
}
