#pragma once

#include "dsw/types.hpp"

// Scattering data of the two-sided plane-wave step: the fourth-root symbols
// beta, the reflection coefficient r = b/a, and the real densities derived
// from them that enter every phase integral.

namespace dsw::scattering {

// beta(z; lp, lm) = ((z - lp)/(z - lm))^{1/4}, branch cut on [lm, lp],
// beta -> 1 at infinity (principal branch).
complexd beta(complexd z, double lp, double lm);

// r(z) = -i (beta_l^2 - beta_r^2) / (beta_l^2 + beta_r^2) off the bands;
// evaluate at Im z != 0 or at real z outside the closed bands.
complexd reflection(const Invariants& v, complexd z);

// boundary value r_+(z) from the upper half plane (any real z)
complexd reflection_plus(const Invariants& v, double z);

// ln(1 - |r(z)|^2) for real z strictly outside both bands (equals -2 ln|a|).
double log_one_minus_r2(const Invariants& v, double z);

// a_+(z) a_-^*(z) = |a_+(z)|^2 for z on Ir \ Il.
double a_plus_a_minus_star(const Invariants& v, double z);
// -ln(a_+ a_-^*), the density used on Ir \ Il.
double minus_log_apam(const Invariants& v, double z);

// arg r_+(z) on Il \ Ir, continuous along the band (no winding occurs:
// the closed form stays within (-pi/2, pi/2]).
double arg_r_plus(const Invariants& v, double z);

// scan-based continuity check of arg r_+ along an interval of Il \ Ir;
// throws accuracy_error if any adjacent jump exceeds pi.
void verify_arg_unwrap(const Invariants& v, double a, double b,
                       int n = 2048);

// membership helpers
bool in_Il(const Invariants& v, double z);
bool in_Ir(const Invariants& v, double z);

// Distance-based variants of the three densities: the caller supplies the
// exact signed offsets z - llp, z - llm, z - lrp, z - lrm. Quadrature nodes
// cluster so tightly at interval endpoints that z itself can round onto a
// branch point; the transformed offsets stay exact.
double log_one_minus_r2_dist(double dllp, double dllm, double dlrp,
                             double dlrm);
double minus_log_apam_dist(double dllp, double dllm, double dlrp, double dlrm);
double arg_r_plus_dist(double dllp, double dllm, double dlrp, double dlrm);

void check_not_zero_reflection(const StepData& s);

// Vacuum-region data (case B): nu at z0 = -xi/2 and the regularized
// chi-tilde(z0) (purely imaginary; chi_im is its imaginary part), plus
// arg r(z0).
struct VacuumData {
    double nu;
    double chi_im;
    double arg_r;
};
VacuumData vacuum_nu_chi(const Invariants& v, double xi, double tol = 1e-10);

// nu(z) = -(1/2 pi) ln(1 - |r(z)|^2) at a real point off the bands
double nu_at(const Invariants& v, double z);

}  // namespace dsw::scattering
