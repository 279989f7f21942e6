#pragma once

#include <array>
#include <utility>

#include "dsw/types.hpp"

// Genus-one machinery: Whitham velocities, soft-edge solves, the polynomials
// entering the two/three-band g-function, its band constants, and the
// elliptic parameters (modulus, periods, Abel map) of the oscillation.

namespace dsw::genus1 {

// Four branch points sorted descending: l1 > l2 > l3 > l4. The spectral bands
// are [l2, l1] and [l4, l3]; (l3, l2) is the gap.
struct Lam {
    double l1, l2, l3, l4;
};

// elliptic modulus m = sqrt((l1-l2)(l3-l4) / ((l1-l3)(l2-l4)))
double modulus(const Lam& lam);

// characteristic velocities v_1..v_4 of the genus-one Whitham system
double whitham_velocity(int k, const Lam& lam);

// Soft-edge equations: solve v2(lrp, s, llp, llm) = xi for s in (llp, lrp)
// (left DSW) and v3(lrp, lrm, s, llm) = xi for s in (llm, lrm) (right DSW).
double solve_soft_edge_v2(double xi, double lrp, double llp, double llm);
double solve_soft_edge_v3(double xi, double lrp, double lrm, double llm);

// Independently coded closed-form soft-edge relations (the single-fraction
// E/K forms) used as cross-check oracles for the general velocities above.
double soft_edge_v2_direct(double s, double lrp, double llp, double llm);
double soft_edge_v3_direct(double s, double lrp, double lrm, double llm);

// rarefaction soft edges: lam_s(xi) on the left/right fans
inline double rare_edge_left(double llm, double xi) { return -(llm + 2.0 * xi) / 3.0; }
inline double rare_edge_right(double lrp, double xi) { return -(lrp + 2.0 * xi) / 3.0; }

// Coefficients of P0(z) = z^2 - s1 z / 2 + gamma0 and
// P1(z) = z^3 - s1 z^2 / 2 + (s2/2 - s1^2/8) z + gamma1, the unique monic
// polynomials whose a-periods over the band [l4, l3] vanish.
struct PQ {
    double s1, s2;
    double gamma0, gamma1;
};
PQ pq_polynomials(const Lam& lam);

double eval_P0(const PQ& pq, double z);
double eval_P1(const PQ& pq, double z);

// Roots of the cubic 2 P1(z) + xi P0(z), sorted descending (ep >= e0 >= em).
// ep sits in [l2, l1], em in [l4, l3]; e0 is in the gap for the unmodulated
// configuration and pinned to a band edge at a soft edge.
struct Eta {
    double ep, e0, em;
};
Eta eta_points(const Lam& lam, double xi);

// g_inf: the constant in g(z) = z^2 + xi z + g_inf + O(1/z) as z -> inf.
double g_infinity(const Lam& lam, double xi);

// ghat_inf = phi1 * ghat_infinity_unit(lam)
double ghat_infinity_unit(const Lam& lam);

// b-period constants: gamma_unit = b-period of dg (multiplies t in the theta
// argument) and bper_P0 = b-period of P0/R dz (multiplies phi1 to give the
// hat-gamma constant). Both are real with the branch conventions used here.
struct BandConstants {
    double gamma_unit;
    double bper_P0;
};
BandConstants band_constants(const Lam& lam, double xi);

// d = i * d_imag normalizes the a-period of d dz / R to one
double d_imag(const Lam& lam);
// tau = i * tau_imag = i K'(m)/K(m)
double tau_imag(const Lam& lam);
// Abel map of infinity: A(inf) = i * abel_inf_imag
double abel_inf_imag(const Lam& lam);

// squared envelope extrema of the elliptic oscillation:
// r1 >= r2 >= r3, density oscillates in [r3, r2], modulus
// m = sqrt((r2-r3)/(r1-r3)).
struct Rho {
    double r1, r2, r3;
};
Rho rho_triple(const Lam& lam);

// plane-wave stationary points eta_{+,-} of the pair (lp, lm) at slope xi
std::pair<double, double> pw_eta(double lp, double lm, double xi);

// middle-plane-wave gap point
inline double mp_eta0(double lrp, double llm, double xi) {
    return -(lrp + llm + 2.0 * xi) / 2.0;
}

// the real branch of R(z; lam) = sqrt(prod (z - l_j)) continued from above:
// positive outside [l4, l1], negative in the gap (l3, l2); |R| on the bands.
double R_abs(const Lam& lam, double z);
double R_signed_offband(const Lam& lam, double z);

}  // namespace dsw::genus1
