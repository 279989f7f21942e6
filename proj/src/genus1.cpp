#include "dsw/genus1.hpp"

#include <algorithm>
#include <cmath>

#include "dsw/quad.hpp"
#include "dsw/specfun.hpp"

namespace dsw::genus1 {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_sorted(const Lam& lam) {
    if (!(lam.l1 > lam.l2 && lam.l2 > lam.l3 && lam.l3 > lam.l4))
        throw degenerate_error("genus1: branch points must satisfy l1>l2>l3>l4");
}

struct KE {
    double K, E;
};

KE ke_of(const Lam& lam) {
    const double m = modulus(lam);
    return {specfun::ellip_K(m), specfun::ellip_E(m)};
}

// coefficients of N(z) = 2 P1(z) + xi P0(z) = 2 z^3 + c2 z^2 + c1 z + c0
struct Cubic {
    double c2, c1, c0;
};

Cubic n_coeffs(const PQ& pq, double xi) {
    Cubic c;
    c.c2 = xi - pq.s1;
    c.c1 = pq.s2 - 0.25 * pq.s1 * pq.s1 - 0.5 * xi * pq.s1;
    c.c0 = 2.0 * pq.gamma1 + xi * pq.gamma0;
    return c;
}

double eval_N(const Cubic& c, double z) {
    return ((2.0 * z + c.c2) * z + c.c1) * z + c.c0;
}

// elementary symmetric functions of the branch points
struct Sig {
    double s1, s2, s3, s4;
};

Sig sigmas(const Lam& lam) {
    const double l1 = lam.l1, l2 = lam.l2, l3 = lam.l3, l4 = lam.l4;
    Sig s;
    s.s1 = l1 + l2 + l3 + l4;
    s.s2 = l1 * l2 + l1 * l3 + l1 * l4 + l2 * l3 + l2 * l4 + l3 * l4;
    s.s3 = l1 * l2 * l3 + l1 * l2 * l4 + l1 * l3 * l4 + l2 * l3 * l4;
    s.s4 = l1 * l2 * l3 * l4;
    return s;
}

}  // namespace

double modulus(const Lam& lam) {
    check_sorted(lam);
    return std::sqrt((lam.l1 - lam.l2) * (lam.l3 - lam.l4) /
                     ((lam.l1 - lam.l3) * (lam.l2 - lam.l4)));
}

double whitham_velocity(int k, const Lam& lam) {
    check_sorted(lam);
    const auto [K, E] = ke_of(lam);
    const double l1 = lam.l1, l2 = lam.l2, l3 = lam.l3, l4 = lam.l4;
    const double half = -0.5 * (l1 + l2 + l3 + l4);
    switch (k) {
        case 1:
            return half - (l1 - l4) * (l1 - l2) * K /
                              ((l1 - l4) * K + (l4 - l2) * E);
        case 2:
            return half + (l2 - l3) * (l1 - l2) * K /
                              ((l2 - l3) * K + (l3 - l1) * E);
        case 3:
            return half - (l2 - l3) * (l3 - l4) * K /
                              ((l2 - l3) * K + (l4 - l2) * E);
        case 4:
            return half + (l1 - l4) * (l3 - l4) * K /
                              ((l1 - l4) * K + (l3 - l1) * E);
    }
    throw config_error("whitham_velocity: k must be 1..4");
}

double soft_edge_v2_direct(double s, double lrp, double llp, double llm) {
    const double m = std::sqrt((lrp - s) * (llp - llm) /
                               ((lrp - llp) * (s - llm)));
    const double K = specfun::ellip_K(m);
    const double E = specfun::ellip_E(m);
    return -0.5 * (lrp + s + llp + llm) +
           (lrp - s) / (1.0 - ((lrp - llp) / (s - llp)) * E / K);
}

double soft_edge_v3_direct(double s, double lrp, double lrm, double llm) {
    const double m = std::sqrt((lrp - lrm) * (s - llm) /
                               ((lrp - s) * (lrm - llm)));
    const double K = specfun::ellip_K(m);
    const double E = specfun::ellip_E(m);
    return -0.5 * (lrp + lrm + s + llm) -
           (s - llm) / (1.0 - ((lrm - llm) / (lrm - s)) * E / K);
}

double solve_soft_edge_v2(double xi, double lrp, double llp, double llm) {
    const double eps = 1e-12 * (lrp - llp);
    const double a = llp + eps, b = lrp - eps;
    return quad::brent(
        [&](double s) {
            return whitham_velocity(2, {lrp, s, llp, llm}) - xi;
        },
        a, b, 1e-15 * (1.0 + std::abs(lrp)));
}

double solve_soft_edge_v3(double xi, double lrp, double lrm, double llm) {
    const double eps = 1e-12 * (lrm - llm);
    const double a = llm + eps, b = lrm - eps;
    return quad::brent(
        [&](double s) {
            return whitham_velocity(3, {lrp, lrm, s, llm}) - xi;
        },
        a, b, 1e-15 * (1.0 + std::abs(lrp)));
}

PQ pq_polynomials(const Lam& lam) {
    check_sorted(lam);
    const auto [K, E] = ke_of(lam);
    const auto sg = sigmas(lam);
    const double l1 = lam.l1, l2 = lam.l2, l3 = lam.l3, l4 = lam.l4;
    const double cross = (l1 - l3) * (l2 - l4) * E / K;
    PQ pq;
    pq.s1 = sg.s1;
    pq.s2 = sg.s2;
    pq.gamma0 = 0.5 * (l1 * l2 + l3 * l4) - 0.5 * cross;
    pq.gamma1 = 0.125 * (l1 * l2 - l3 * l4) * (l1 + l2 - l3 - l4) -
                0.125 * sg.s1 * cross;
    return pq;
}

double eval_P0(const PQ& pq, double z) {
    return (z - 0.5 * pq.s1) * z + pq.gamma0;
}

double eval_P1(const PQ& pq, double z) {
    return ((z - 0.5 * pq.s1) * z + (0.5 * pq.s2 - 0.125 * pq.s1 * pq.s1)) * z +
           pq.gamma1;
}

Eta eta_points(const Lam& lam, double xi) {
    const PQ pq = pq_polynomials(lam);
    const Cubic nc = n_coeffs(pq, xi);
    // monic form z^3 + a z^2 + b z + c
    const double a = 0.5 * nc.c2, b = 0.5 * nc.c1, c = 0.5 * nc.c0;
    const double p = b - a * a / 3.0;
    const double qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    double r[3];
    if (p >= 0.0) {
        // only possible (up to rounding) when roots nearly coincide
        r[0] = r[1] = r[2] = -a / 3.0;
    } else {
        const double rad = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * qq / (p * rad);
        arg = std::clamp(arg, -1.0, 1.0);
        const double th = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; k++)
            r[k] = rad * std::cos(th - 2.0 * pi * k / 3.0) - a / 3.0;
    }
    // one Newton polish per root
    for (int k = 0; k < 3; k++) {
        const double f = ((r[k] + a) * r[k] + b) * r[k] + c;
        const double fp = (3.0 * r[k] + 2.0 * a) * r[k] + b;
        if (fp != 0.0) r[k] -= f / fp;
    }
    std::sort(r, r + 3);
    return {r[2], r[1], r[0]};
}

double R_abs(const Lam& lam, double z) {
    return std::sqrt(std::abs((z - lam.l1) * (z - lam.l2) * (z - lam.l3) *
                              (z - lam.l4)));
}

double R_signed_offband(const Lam& lam, double z) {
    const double r = R_abs(lam, z);
    if (z > lam.l3 && z < lam.l2) return -r;  // gap
    return r;  // outside [l4, l1]
}

double g_infinity(const Lam& lam, double xi) {
    check_sorted(lam);
    const PQ pq = pq_polynomials(lam);
    const Cubic nc = n_coeffs(pq, xi);
    const auto sg = sigmas(lam);
    // D = N^2 - (2z+xi)^2 prod(z - l_j) collapses to a cubic:
    const double D3 = 2.0 * nc.c2 * nc.c1 + 4.0 * nc.c0 + xi * xi * sg.s1 -
                      4.0 * xi * sg.s2 + 4.0 * sg.s3;
    const double D2 = nc.c1 * nc.c1 + 2.0 * nc.c2 * nc.c0 - xi * xi * sg.s2 +
                      4.0 * xi * sg.s3 - 4.0 * sg.s4;
    const double D1 = 2.0 * nc.c1 * nc.c0 + xi * xi * sg.s3 - 4.0 * xi * sg.s4;
    const double D0 = nc.c0 * nc.c0 - xi * xi * sg.s4;
    const double l1 = lam.l1;
    const double big = std::max({std::abs(xi), std::abs(l1), std::abs(lam.l4),
                                 1.0});
    const double integral = quad::integrate_upper(
        [&](double z, double da) {
            const double lin = 2.0 * z + xi;
            if (z > 2.0 * big) {
                // rationalized tail form, free of cancellation; scaled by
                // powers of 1/z so nothing overflows at extreme nodes
                const double iz = 1.0 / z;
                const double Rs = std::sqrt(
                    (1.0 - lam.l1 * iz) * (1.0 - lam.l2 * iz) *
                    (1.0 - lam.l3 * iz) * (1.0 - lam.l4 * iz));
                const double Ds =
                    ((D0 * iz + D1) * iz + D2) * iz + D3;  // D / z^3
                const double Ns =
                    ((nc.c0 * iz + nc.c1) * iz + nc.c2) * iz + 2.0;
                const double lins = 2.0 + xi * iz;
                return Ds / (Rs * (Ns + lins * Rs)) * (iz * iz);
            }
            const double R = std::sqrt(da * (z - lam.l2) * (z - lam.l3) *
                                       (z - lam.l4));
            return eval_N(nc, z) / R - lin;
        },
        l1, 1e-11);
    return integral - (l1 * l1 + xi * l1);
}

double ghat_infinity_unit(const Lam& lam) {
    check_sorted(lam);
    const PQ pq = pq_polynomials(lam);
    const auto sg = sigmas(lam);
    // P0^2 - prod(z - l_j) is a quadratic:
    const double Q2 = 2.0 * pq.gamma0 + 0.25 * sg.s1 * sg.s1 - sg.s2;
    const double Q1 = sg.s3 - sg.s1 * pq.gamma0;
    const double Q0 = pq.gamma0 * pq.gamma0 - sg.s4;
    const double l1 = lam.l1;
    const double big = std::max({std::abs(l1), std::abs(lam.l4), 1.0});
    const double integral = quad::integrate_upper(
        [&](double z, double da) {
            if (z > 2.0 * big) {
                const double iz = 1.0 / z;
                const double Rs = std::sqrt(
                    (1.0 - lam.l1 * iz) * (1.0 - lam.l2 * iz) *
                    (1.0 - lam.l3 * iz) * (1.0 - lam.l4 * iz));
                const double Qs = (Q0 * iz + Q1) * iz + Q2;  // Q / z^2
                const double P0s = (pq.gamma0 * iz - 0.5 * pq.s1) * iz + 1.0;
                return Qs / (Rs * (P0s + Rs)) * (iz * iz);
            }
            const double R = std::sqrt(da * (z - lam.l2) * (z - lam.l3) *
                                       (z - lam.l4));
            return eval_P0(pq, z) / R - 1.0;
        },
        l1, 1e-11);
    return integral - l1;
}

BandConstants band_constants(const Lam& lam, double xi) {
    check_sorted(lam);
    const PQ pq = pq_polynomials(lam);
    const Cubic nc = n_coeffs(pq, xi);
    // b-period as twice the gap integral (Schwarz symmetry); the branch of R
    // in the gap is -|R|, and the orientation is fixed so that the constants
    // agree with the reciprocity values -4 pi d_imag (xi - V) and
    // -4 pi d_imag (checked in tests).
    BandConstants bc;
    bc.gamma_unit = 2.0 * quad::integrate_finite(
                              [&](double z, double da, double db) {
                                  const double R = std::sqrt(
                                      (lam.l1 - z) * db * da * (z - lam.l4));
                                  return eval_N(nc, z) / R;
                              },
                              lam.l3, lam.l2, 1e-11);
    bc.bper_P0 = 2.0 * quad::integrate_finite(
                           [&](double z, double da, double db) {
                               const double R = std::sqrt(
                                   (lam.l1 - z) * db * da * (z - lam.l4));
                               return eval_P0(pq, z) / R;
                           },
                           lam.l3, lam.l2, 1e-11);
    return bc;
}

double d_imag(const Lam& lam) {
    check_sorted(lam);
    const double m = modulus(lam);
    return std::sqrt((lam.l1 - lam.l3) * (lam.l2 - lam.l4)) /
           (4.0 * specfun::ellip_K(m));
}

double tau_imag(const Lam& lam) {
    const double m = modulus(lam);
    const double mp = std::sqrt((1.0 - m) * (1.0 + m));
    return specfun::ellip_K(mp) / specfun::ellip_K(m);
}

double abel_inf_imag(const Lam& lam) {
    check_sorted(lam);
    // factored square roots: the product da * (z - l2) underflows to zero at
    // deep quadrature nodes when l1 - l2 is itself small (near a degenerate
    // edge), turning the integrand into inf
    const double l12 = lam.l1 - lam.l2;
    const double integral = quad::integrate_upper(
        [&](double z, double da) {
            return 1.0 / (std::sqrt(da) * std::sqrt(da + l12) *
                          std::sqrt(z - lam.l3) * std::sqrt(z - lam.l4));
        },
        lam.l1, 1e-12);
    return d_imag(lam) * integral;
}

Rho rho_triple(const Lam& lam) {
    check_sorted(lam);
    const double a = lam.l1 + lam.l2 - lam.l3 - lam.l4;
    const double b = lam.l1 - lam.l2 + lam.l3 - lam.l4;
    const double c = lam.l1 - lam.l2 - lam.l3 + lam.l4;
    return {0.25 * a * a, 0.25 * b * b, 0.25 * c * c};
}

std::pair<double, double> pw_eta(double lp, double lm, double xi) {
    const double s = lp + lm;
    const double disc = std::sqrt((s + xi) * (s + xi) +
                                  2.0 * (lp - lm) * (lp - lm));
    return {0.25 * (s - xi + disc), 0.25 * (s - xi - disc)};
}

}  // namespace dsw::genus1
