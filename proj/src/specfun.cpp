#include "dsw/specfun.hpp"

#include <cmath>

namespace dsw::specfun {

namespace {

constexpr double pi = 3.14159265358979323846;

}  // namespace

double ellip_K(double m) {
    if (!(m >= 0.0 && m < 1.0))
        throw config_error("ellip_K: modulus must lie in [0,1)");
    // AGM iteration: K = pi / (2 agm(1, sqrt(1-m^2))).
    double a = 1.0;
    double b = std::sqrt((1.0 - m) * (1.0 + m));
    for (int i = 0; i < 64; i++) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-17 * a) break;
    }
    return pi / (2.0 * a);
}

double ellip_E(double m) {
    if (!(m >= 0.0 && m < 1.0))
        throw config_error("ellip_E: modulus must lie in [0,1)");
    // E = K (1 - sum_{n>=0} 2^{n-1} c_n^2) with c_0 = m.
    double a = 1.0;
    double b = std::sqrt((1.0 - m) * (1.0 + m));
    double sum = 0.5 * m * m;
    double p2 = 0.5;
    for (int i = 0; i < 64; i++) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        p2 *= 2.0;
        sum += p2 * c * c;
        if (std::abs(c) <= 1e-17 * a) break;
    }
    return pi / (2.0 * a) * (1.0 - sum);
}

Jacobi jacobi_cn_sn_dn(double u, double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw config_error("jacobi_cn_sn_dn: modulus must lie in [0,1]");
    if (m < 1e-12) {
        // sn ~ sin, cn ~ cos, dn ~ 1 with O(m^2) error below tolerance.
        return {std::sin(u), std::cos(u), 1.0};
    }
    if (m > 1.0 - 1e-15) {
        const double s = std::tanh(u);
        const double c = 1.0 / std::cosh(u);
        return {s, c, c};
    }
    // Descending Landen (AGM) ladder.
    double a[32], c[32];
    a[0] = 1.0;
    c[0] = m;
    double b = std::sqrt((1.0 - m) * (1.0 + m));
    int n = 0;
    while (n < 31) {
        c[n + 1] = 0.5 * (a[n] - b);
        const double an = 0.5 * (a[n] + b);
        b = std::sqrt(a[n] * b);
        a[n + 1] = an;
        n++;
        if (std::abs(c[n]) <= 1e-17 * a[n]) break;
    }
    double phi = std::ldexp(a[n] * u, n);
    double phi1 = phi;
    for (int k = n; k > 0; k--) {
        phi1 = phi;
        phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
    }
    Jacobi j;
    j.sn = std::sin(phi);
    j.cn = std::cos(phi);
    j.dn = j.cn / std::cos(phi1 - phi);
    return j;
}

complexd theta_j(int j, complexd z, complexd tau) {
    if (j < 1 || j > 4) throw config_error("theta_j: j must be 1..4");
    if (tau.imag() <= 0.0) throw config_error("theta_j: Im tau must be positive");
    const complexd I(0.0, 1.0);
    const complexd lnq = I * pi * tau;  // log nome
    const double decay = pi * tau.imag();
    const double grow = 2.0 * std::abs(z.imag());
    complexd sum(0.0, 0.0);
    if (j == 3 || j == 4) {
        sum = 1.0;
        for (int n = 1;; n++) {
            if (n > 10000)
                throw accuracy_error("theta_j: series did not converge");
            complexd term = std::exp(lnq * double(n) * double(n)) *
                            2.0 * std::cos(2.0 * double(n) * z);
            if (j == 4 && (n & 1)) term = -term;
            sum += term;
            if (2.0 * double(n) * decay > grow &&
                std::exp(-double(n) * double(n) * decay + double(n) * grow) < 1e-18)
                break;
        }
        return sum;
    }
    for (int n = 0;; n++) {
        if (n > 10000)
            throw accuracy_error("theta_j: series did not converge");
        const double h = double(n) + 0.5;
        complexd term = std::exp(lnq * h * h);
        if (j == 1) {
            term *= 2.0 * std::sin((2.0 * double(n) + 1.0) * z);
            if (n & 1) term = -term;
        } else {
            term *= 2.0 * std::cos((2.0 * double(n) + 1.0) * z);
        }
        sum += term;
        if (h * decay > std::abs(z.imag()) &&
            std::exp(-h * h * decay + (2.0 * double(n) + 1.0) * std::abs(z.imag())) < 1e-18)
            break;
    }
    return sum;
}

complexd riemann_theta(complexd z, complexd tau) {
    if (tau.imag() <= 0.0)
        throw accuracy_error("riemann_theta: Im tau must be positive");
    const complexd I(0.0, 1.0);
    const double decay = pi * tau.imag();
    const double grow = 2.0 * pi * std::abs(z.imag());
    complexd sum = 1.0;
    for (int n = 1;; n++) {
        if (n > 10000)
            throw accuracy_error("riemann_theta: series did not converge");
        const complexd e = std::exp(I * pi * tau * double(n) * double(n));
        sum += e * (std::exp(2.0 * pi * I * double(n) * z) +
                    std::exp(-2.0 * pi * I * double(n) * z));
        if (2.0 * double(n) * decay > grow &&
            std::exp(-double(n) * double(n) * decay + double(n) * grow) < 1e-18)
            break;
    }
    return sum;
}

complexd log_gamma(complexd z) {
    // Lanczos approximation, g = 7, 9 terms; reflection for Re z < 0.5.
    static const double coef[9] = {
        0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const complexd I(0.0, 1.0);
    if (z.real() < 0.5) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    complexd x = coef[0];
    for (int i = 1; i < 9; i++) x += coef[i] / (z + double(i));
    const complexd t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double log_gamma_arg(double y) {
    if (y == 0.0) return 0.0;
    return log_gamma(complexd(0.0, y)).imag();
}

}  // namespace dsw::specfun

namespace dsw {

const char* case_name(Case c) {
    switch (c) {
        case Case::A: return "A";
        case Case::B: return "B";
        case Case::C: return "C";
        case Case::D: return "D";
        case Case::E: return "E";
        case Case::F: return "F";
    }
    return "?";
}

const char* region_name(RegionKind k) {
    switch (k) {
        case RegionKind::LeftPlane: return "left_plane";
        case RegionKind::RightPlane: return "right_plane";
        case RegionKind::LeftDSW: return "left_dsw";
        case RegionKind::RightDSW: return "right_dsw";
        case RegionKind::LeftRare: return "left_rarefaction";
        case RegionKind::RightRare: return "right_rarefaction";
        case RegionKind::Vacuum: return "vacuum";
        case RegionKind::MiddlePlane: return "middle_plane";
        case RegionKind::Unmodulated: return "unmodulated";
    }
    return "?";
}

}  // namespace dsw
