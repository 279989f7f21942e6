#pragma once

#include "dsw/types.hpp"

namespace dsw::specfun {

// Complete elliptic integrals in the *modulus* convention:
//   K(m) = int_0^{pi/2} dt / sqrt(1 - m^2 sin^2 t),  0 <= m < 1.
double ellip_K(double m);
double ellip_E(double m);

struct Jacobi {
    double sn;
    double cn;
    double dn;
};

// Jacobi elliptic functions, modulus convention (cn(u,m) has real period
// 4K(m)). Computed by the descending Landen transformation.
Jacobi jacobi_cn_sn_dn(double u, double m);

// Classical theta functions theta_j(z | tau), j = 1..4, nome q = exp(i pi tau),
// Im tau > 0.
complexd theta_j(int j, complexd z, complexd tau);

// Genus-one Riemann theta: Theta(z; tau) = sum_n exp(2 pi i n z + pi i n^2 tau)
//                                        = theta_3(pi z | tau).
complexd riemann_theta(complexd z, complexd tau);

// Principal branch of log Gamma for complex argument (Lanczos).
complexd log_gamma(complexd z);

// arg Gamma(i y) for real y.
double log_gamma_arg(double y);

}  // namespace dsw::specfun
