#include "dsw/scattering.hpp"

#include <cmath>

#include "dsw/quad.hpp"

namespace dsw::scattering {

namespace {

constexpr double pi = 3.14159265358979323846;

double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

// 0.5 ln|dp/dm|, stable when dp and dm are nearly equal huge numbers (far
// tail of the phase integrals, where the direct log difference is all noise)
double half_log_ratio(double dp, double dm) {
    const double x = (dp - dm) / dm;
    if (std::abs(x) < 0.5) return 0.5 * std::log1p(x);
    return 0.5 * (std::log(std::abs(dp)) - std::log(std::abs(dm)));
}

// d/dz ln(1-|r|^2) at real z off the bands
double dlog1mr2(const Invariants& v, double z) {
    const double lwp = 0.5 * (1.0 / (z - v.llp) - 1.0 / (z - v.llm) -
                              1.0 / (z - v.lrp) + 1.0 / (z - v.lrm));
    const double lw = 0.5 * (std::log(std::abs(z - v.llp)) -
                             std::log(std::abs(z - v.llm)) -
                             std::log(std::abs(z - v.lrp)) +
                             std::log(std::abs(z - v.lrm)));
    const double sig = 1.0 / (1.0 + std::exp(-lw));
    return lwp * (1.0 - 2.0 * sig);
}

}  // namespace

double log_one_minus_r2_dist(double dllp, double dllm, double dlrp,
                             double dlrm) {
    const double lw =
        half_log_ratio(dllp, dllm) - half_log_ratio(dlrp, dlrm);
    return std::log(4.0) + lw - 2.0 * softplus(lw);
}

// Re of -ln(a+ a-*) on Ir \ Il. A point there lies inside Ir and outside
// Il, so beta_l is real while beta_r,+ = e^{i pi/4} |beta_r|; writing
// L = ln(beta_l^2 / |beta_r^2|) gives |a+|^2 = cosh(L) / 2, hence
// -ln|a+ a-*| = ln 2 - ln cosh L, evaluated in the log domain.
double minus_log_apam_dist(double dllp, double dllm, double dlrp,
                           double dlrm) {
    const double L =
        half_log_ratio(dllp, dllm) - half_log_ratio(dlrp, dlrm);
    const double a = std::abs(L);
    return 2.0 * std::log(2.0) - a - std::log1p(std::exp(-2.0 * a));
}

double arg_r_plus_dist(double dllp, double dllm, double dlrp, double dlrm) {
    const double a = std::sqrt(-dllp / dllm);  // |beta_l+|^2
    const double b = std::sqrt(dlrp / dlrm);   // beta_r^2 > 0 off Ir
    return 0.5 * pi - 2.0 * std::atan2(a, b);
}

complexd beta(complexd z, double lp, double lm) {
    return std::pow((z - lp) / (z - lm), 0.25);
}

complexd reflection(const Invariants& v, complexd z) {
    const complexd bl2 = std::sqrt((z - v.llp) / (z - v.llm));
    const complexd br2 = std::sqrt((z - v.lrp) / (z - v.lrm));
    const complexd I(0.0, 1.0);
    return -I * (bl2 - br2) / (bl2 + br2);
}

complexd reflection_plus(const Invariants& v, double z) {
    const complexd I(0.0, 1.0);
    complexd bl2, br2;
    if (in_Il(v, z))
        bl2 = I * std::sqrt((v.llp - z) / (z - v.llm));
    else
        bl2 = std::sqrt((z - v.llp) / (z - v.llm));
    if (in_Ir(v, z))
        br2 = I * std::sqrt((v.lrp - z) / (z - v.lrm));
    else
        br2 = std::sqrt((z - v.lrp) / (z - v.lrm));
    return -I * (bl2 - br2) / (bl2 + br2);
}

bool in_Il(const Invariants& v, double z) { return z > v.llm && z < v.llp; }
bool in_Ir(const Invariants& v, double z) { return z > v.lrm && z < v.lrp; }

double log_one_minus_r2(const Invariants& v, double z) {
    if (in_Il(v, z) != in_Ir(v, z))
        throw internal_error("log_one_minus_r2: point lies on a band");
    return log_one_minus_r2_dist(z - v.llp, z - v.llm, z - v.lrp, z - v.lrm);
}

double minus_log_apam(const Invariants& v, double z) {
    if (!in_Ir(v, z) || in_Il(v, z))
        throw internal_error("minus_log_apam: point not on Ir \\ Il");
    return minus_log_apam_dist(z - v.llp, z - v.llm, z - v.lrp, z - v.lrm);
}

double a_plus_a_minus_star(const Invariants& v, double z) {
    return std::exp(-minus_log_apam(v, z));
}

double arg_r_plus(const Invariants& v, double z) {
    if (!in_Il(v, z) || in_Ir(v, z))
        throw internal_error("arg_r_plus: point not on Il \\ Ir");
    const double a = std::sqrt((v.llp - z) / (z - v.llm));  // |beta_l+|^2
    const double b = std::sqrt((z - v.lrp) / (z - v.lrm));  // beta_r^2 > 0
    return 0.5 * pi - 2.0 * std::atan2(a, b);
}

void verify_arg_unwrap(const Invariants& v, double a, double b, int n) {
    double prev = 0.0;
    bool have = false;
    for (int k = 1; k < n; k++) {
        const double z = a + (b - a) * double(k) / double(n);
        if (!in_Il(v, z) || in_Ir(v, z)) continue;
        const double cur = arg_r_plus(v, z);
        if (have && std::abs(cur - prev) > pi)
            throw accuracy_error("arg_r_plus: unwrap jump exceeds pi");
        prev = cur;
        have = true;
    }
}

void check_not_zero_reflection(const StepData& s) {
    if (s.Al == s.Ar && s.mul == s.mur)
        throw zero_reflection_error(
            "identical steps: reflection coefficient vanishes identically");
}

double nu_at(const Invariants& v, double z) {
    return -log_one_minus_r2(v, z) / (2.0 * pi);
}

VacuumData vacuum_nu_chi(const Invariants& v, double xi, double tol) {
    // case B geometry: Ir = (lrm, lrp) below z0 = -xi/2 below Il = (llm, llp)
    const double z0 = -0.5 * xi;
    if (!(z0 > v.lrp && z0 < v.llm))
        throw config_error("vacuum_nu_chi: -xi/2 outside the vacuum bracket");
    VacuumData out;
    const double F0 = log_one_minus_r2(v, z0);
    out.nu = -F0 / (2.0 * pi);
    out.arg_r = std::arg(reflection_plus(v, z0));
    const double dF0 = dlog1mr2(v, z0);

    // chi-tilde(z0), regularized: the printed Stieltjes form integrated by
    // parts, with the log-divergent boundary pieces at the band edges
    // cancelled analytically. chi = (A + B + C)/(2 pi i) - i nu ln|lrp - z0|.
    const double A = quad::integrate_lower(
        [&](double zeta, double db) {
            const double F = log_one_minus_r2_dist(zeta - v.llp, zeta - v.llm,
                                          zeta - v.lrp, -db);
            return F / (zeta - z0);
        },
        v.lrm, tol);
    const double B = quad::integrate_finite(
        [&](double zeta, double da, double db) {
            if (db < 1e-9 * (1.0 + std::abs(z0))) return dF0;
            const double F = log_one_minus_r2_dist(zeta - v.llp, zeta - v.llm, da,
                                          zeta - v.lrm);
            return (F - F0) / (-db);
        },
        v.lrp, z0, tol);
    const double C = quad::integrate_finite(
        [&](double zeta, double da, double db) {
            const double G = minus_log_apam_dist(zeta - v.llp, zeta - v.llm, -db,
                                            da);
            return G / (zeta - z0);
        },
        v.lrm, v.lrp, tol);
    out.chi_im = -(A + B + C) / (2.0 * pi) -
                 out.nu * std::log(std::abs(v.lrp - z0));
    return out;
}

}  // namespace dsw::scattering
