#pragma once

#include <cmath>
#include <vector>

#include "dsw/types.hpp"

// tanh-sinh (double exponential) quadrature. Integrands are called as
// f(x, da, db) where da = x - a and db = b - x are computed in transformed
// arithmetic, so inverse square-root endpoint singularities can be evaluated
// without catastrophic cancellation even when x rounds to an endpoint.

namespace dsw::quad {

namespace detail {

struct Node {
    double sigma;   // near-endpoint distance fraction in (0, 1/2]
    double weight;  // d sigma / dt; the step factor is applied by the caller
};

// Abscissas for one half-axis of the tanh-sinh rule at step h, offset o
// (o = 0 for the initial level, o = h/2 when refining a previous level of
// step 2h). sigma is the distance to the NEARER endpoint, kept in exact
// small-number arithmetic: the naive (1+tanh u)/2 rounds to 1 already at
// u ~ 18, silently dropping endpoint contributions that integrable
// singularities still need. Nodes with negligible weight are dropped.
inline void nodes(double h, double o, std::vector<Node>& out) {
    out.clear();
    constexpr double tmax = 6.5;
    for (double t = o; t <= tmax; t += h) {
        const double u = 1.5707963267948966 * std::sinh(t);
        const double e = std::exp(-2.0 * u);  // u >= 0 here
        const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        const double w = 0.25 * 3.14159265358979323846 * std::cosh(t) * sech2;
        if (w < 1e-320) break;
        const double sig = e / (1.0 + e);  // (1 - tanh u)/2, exact when tiny
        if (sig <= 0.0) break;
        out.push_back({sig, w});
    }
}

}  // namespace detail

// Integrate f(x, da, db) over (a, b). Refines until successive levels agree
// to tol (relative to max(1,|I|)) or max_level halvings have been spent, in
// which case an accuracy_error is thrown.
template <class F, class V = double>
V integrate_finite(F&& f, double a, double b, double tol = 1e-10,
                   int max_level = 12) {
    const double len = b - a;
    if (!(len > 0.0)) throw config_error("integrate_finite: need a < b");
    std::vector<detail::Node> nd;
    double h = 1.0;
    detail::nodes(h, 0.0, nd);
    V sum{};
    for (const auto& n : nd) {
        const double da = len * n.sigma;
        const double db = len - da;
        // symmetric pair (t and -t); t = 0 contributes once
        sum += V(n.weight) * f(a + da, da, db);
        if (n.sigma != 0.5) sum += V(n.weight) * f(b - da, db, da);
    }
    V prev = sum * V(len * h);
    for (int lev = 1; lev <= max_level; lev++) {
        detail::nodes(h, h / 2.0, nd);
        V add{};
        for (const auto& n : nd) {
            const double da = len * n.sigma;
            const double db = len - da;
            add += V(n.weight) * f(a + da, da, db);
            add += V(n.weight) * f(b - da, db, da);
        }
        h /= 2.0;
        sum += add;
        const V cur = sum * V(len * h);
        const double err = std::abs(cur - prev);
        prev = cur;
        if (lev >= 3 && err <= tol * std::max(1.0, std::abs(cur))) return cur;
    }
    throw accuracy_error("integrate_finite: tolerance not reached");
}

template <class F>
complexd integrate_finite_c(F&& f, double a, double b, double tol = 1e-10,
                            int max_level = 12) {
    return integrate_finite<F, complexd>(static_cast<F&&>(f), a, b, tol,
                                         max_level);
}

// Integral over (-inf, b); f is called as f(x, db) with db = b - x exact.
template <class F>
double integrate_lower(F&& f, double b, double tol = 1e-10) {
    // x = b - (1-u)/u maps u in (0,1) onto (-inf, b); dx = du / u^2.
    return integrate_finite(
        [&](double u, double du_a, double du_b) {
            const double dist = du_b / u;  // b - x
            // beyond representable x the contribution of any convergent
            // integrand is below the weight cutoff
            if (!std::isfinite(dist)) return 0.0;
            const double fu = f(b - dist, dist);
            if (fu == 0.0) return 0.0;  // avoid 0 * inf when u underflows
            return (fu / u) / u;
        },
        0.0, 1.0, tol);
}

// Integral over (a, inf); f is called as f(x, da) with da = x - a exact.
template <class F>
double integrate_upper(F&& f, double a, double tol = 1e-10) {
    return integrate_finite(
        [&](double u, double du_a, double du_b) {
            const double dist = du_b / u;  // x - a
            if (!std::isfinite(dist)) return 0.0;
            const double fu = f(a + dist, dist);
            if (fu == 0.0) return 0.0;  // avoid 0 * inf when u underflows
            return (fu / u) / u;
        },
        0.0, 1.0, tol);
}

// Contour integral of a complex integrand along the straight segments of a
// polyline. Endpoint singularities are not supported (keep the contour away
// from branch points).
template <class F>
complexd integrate_contour(F&& f, const std::vector<complexd>& pts,
                           double tol = 1e-10) {
    if (pts.size() < 2) throw config_error("integrate_contour: need >= 2 points");
    complexd total{};
    for (size_t k = 0; k + 1 < pts.size(); k++) {
        const complexd z0 = pts[k], z1 = pts[k + 1];
        const complexd dir = z1 - z0;
        total += dir * integrate_finite_c(
                           [&](double s, double, double) {
                               return f(z0 + s * dir);
                           },
                           0.0, 1.0, tol);
    }
    return total;
}

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
template <class F>
double brent(F&& f, double a, double b, double xtol = 1e-14) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw accuracy_error("brent: root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < 200; it++) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1.1102230246251565e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw accuracy_error("brent: too many iterations");
}

}  // namespace dsw::quad
