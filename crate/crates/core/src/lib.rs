//! Vacuum stress-energy of a massless scalar field around a point impurity.
//!
//! The library follows the computation from the heat kernel of the perturbed
//! Laplacian on R^3 minus a point, through the Mellin transform to complex
//! powers (Dirichlet kernels) and the regularized stress-energy tensor, to the
//! analytic continuation in the regulating parameter, its regular part at the
//! origin, and finally the closed-form renormalized tensor together with its
//! small- and large-distance expansions. Every stage is cross-validated
//! against its neighbours; see the `acceptance` integration test and the
//! `verify` CLI subcommand.
//!
//! Module map:
//!
//! - [`specfun`] — complex Gamma, modified Bessel K of complex order, the
//!   weighted Bessel map, and the exponential-integral combination `e^rho E1(rho)`.
//! - [`quadrature`] — adaptive Gauss–Kronrod integration on half-lines and
//!   products of half-lines.
//! - [`kernels`] — heat and Dirichlet kernels of the perturbed operator plus a
//!   finite-difference oracle for the regularized stress-energy tensor.
//! - [`stress`] — the four-stage stress-energy pipeline and its closed forms.
//! - [`asymptotics`] — small- and large-distance expansions.
//! - [`cli`] — `eval`, `figure` and `verify` subcommands.

// Guards written as !(x > 0.0) intentionally reject NaN along with the
// out-of-domain values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod cli;
pub mod kernels;
pub mod quadrature;
pub mod specfun;
pub mod stress;

mod error;

pub use error::{Error, Result};
pub use kernels::{CartesianPoint, ImpurityConfig, SphericalPoint};
pub use quadrature::{QuadratureResult, ToleranceSpec};
pub use stress::{ConformalSplit, LaurentAtOrigin, StressTensorDiagonal};
