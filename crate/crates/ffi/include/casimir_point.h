/* C interface of the casimir-point library.
 *
 * Maintained by hand; crates/ffi/src/lib.rs is the source of truth and a
 * test checks that every exported symbol is declared here.
 *
 * Build the library with
 *     cargo build --release -p casimir-point-ffi
 * and link against target/release/libcasimir_point_ffi.{a,so}.
 */

#ifndef CASIMIR_POINT_H
#define CASIMIR_POINT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible entry point. */
typedef enum pc_status {
  PC_OK = 0,
  PC_INVALID_ARGUMENT = 1,
  PC_POLE = 2,
  PC_NO_CONVERGENCE = 3,
  PC_OVERFLOW = 4,
  PC_NULL_POINTER = 5,
} pc_status;

/* The four non-vanishing diagonal components of the stress-energy tensor in
 * the spherical coordinate basis (t_theta_theta carries a factor r^2 with
 * respect to the orthonormal frame; t_phi_phi = sin^2(theta) t_theta_theta).
 */
typedef struct pc_stress {
  double t00;
  double trr;
  double t_theta_theta;
  double t_phi_phi;
} pc_stress;

/* Opaque evaluator owning the model parameters
 * (lambda, epsilon, kappa, xi). */
typedef struct pc_evaluator pc_evaluator;

/* Creates an evaluator; writes the handle to *out on PC_OK. lambda >= 0,
 * epsilon >= 0, kappa > 0. Release with pc_evaluator_free. */
pc_status pc_evaluator_new(double lambda, double epsilon, double kappa,
                           double xi, pc_evaluator **out);

/* Releases an evaluator; a null handle is a no-op. */
void pc_evaluator_free(pc_evaluator *ev);

/* Renormalized stress-energy tensor at radius r > 0 and polar angle
 * theta in (0, pi), using the evaluator's lambda (> 0 required) and xi. */
pc_status pc_evaluator_renormalized(const pc_evaluator *ev, double r,
                                    double theta, pc_stress *out);

/* Conformal and non-conformal parts; for any coupling,
 * renormalized = conformal + (xi - 1/6) * nonconformal. */
pc_status pc_evaluator_conformal_parts(const pc_evaluator *ev, double r,
                                       double theta, pc_stress *conformal,
                                       pc_stress *nonconformal);

/* Pole coefficient and regular value at the origin of the regulating
 * parameter for the continued energy density (epsilon > 0 required). */
pc_status pc_evaluator_t00_regular_part(const pc_evaluator *ev, double r,
                                        double *pole_coefficient,
                                        double *regular_value);

/* Analytic continuation of the regularized energy density at complex
 * u = u_re + i u_im, away from the poles {4, 2, 0, -2, ...}. */
pc_status pc_evaluator_t00_continuation(const pc_evaluator *ev, double u_re,
                                        double u_im, double r, double *out_re,
                                        double *out_im);

/* e^rho E1(rho) for rho > 0. */
pc_status pc_exp_e(double rho, double *out);

/* Static description of a status code. */
const char *pc_status_message(pc_status status);

/* Library version as a static NUL-terminated string. */
const char *pc_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CASIMIR_POINT_H */
