#include "doctest.h"

#include <cmath>

#include "dsw/quad.hpp"

using namespace dsw;
namespace q = dsw::quad;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("smooth finite integrals") {
    const double i1 = q::integrate_finite(
        [](double x, double, double) { return std::exp(-x * x); }, -4.0, 4.0,
        1e-12);
    CHECK(std::abs(i1 - std::sqrt(pi) * std::erf(4.0)) < 1e-12);
    const double i2 = q::integrate_finite(
        [](double x, double, double) { return std::sin(x); }, 0.0, pi, 1e-12);
    CHECK(std::abs(i2 - 2.0) < 1e-12);
}

TEST_CASE("inverse square-root endpoint singularities") {
    // int_0^1 dx / sqrt(x (1-x)) = pi
    const double i1 = q::integrate_finite(
        [](double x, double da, double db) {
            return 1.0 / std::sqrt(da * db);
        },
        0.0, 1.0, 1e-12);
    CHECK(std::abs(i1 - pi) < 1e-11);
    // int_{-1}^{1} sqrt(1-x^2) dx = pi/2
    const double i2 = q::integrate_finite(
        [](double x, double da, double db) { return std::sqrt(da * db); },
        -1.0, 1.0, 1e-12);
    CHECK(std::abs(i2 - pi / 2) < 1e-12);
    // logarithmic singularity: int_0^1 ln x dx = -1
    const double i3 = q::integrate_finite(
        [](double x, double da, double db) { return std::log(da); }, 0.0, 1.0,
        1e-12);
    CHECK(std::abs(i3 + 1.0) < 1e-12);
}

TEST_CASE("band-edge model integral") {
    // int_a^b dx / sqrt((x-a)(b-x)(c-x)) with c > b, against substitution
    // oracle evaluated by a different rule (midpoint on the angular variable)
    const double a = -1.0, b = 0.5, c = 2.0;
    const double i1 = q::integrate_finite(
        [&](double x, double da, double db) {
            return 1.0 / std::sqrt(da * db * (c - x));
        },
        a, b, 1e-12);
    // x = a + (b-a) sin^2(t)
    double o = 0.0;
    const int n = 20000;
    for (int k = 0; k < n; k++) {
        const double t = (k + 0.5) * (pi / 2) / n;
        const double x = a + (b - a) * std::sin(t) * std::sin(t);
        o += 2.0 / std::sqrt(c - x);
    }
    o *= (pi / 2) / n;
    CHECK(std::abs(i1 - o) < 1e-9);
}

TEST_CASE("semi-infinite maps") {
    const double i1 = q::integrate_lower(
        [](double x, double db) { return std::exp(x); }, 0.0, 1e-12);
    CHECK(std::abs(i1 - 1.0) < 1e-12);
    const double i2 = q::integrate_upper(
        [](double x, double da) { return 1.0 / (1.0 + x * x); }, 0.0, 1e-12);
    CHECK(std::abs(i2 - pi / 2) < 1e-11);
    // algebraic decay with endpoint singularity at the finite end:
    // int_1^inf dx / (x^2 sqrt(x-1)) = pi/2
    const double i3 = q::integrate_upper(
        [](double x, double da) { return 1.0 / (x * x * std::sqrt(da)); }, 1.0,
        1e-12);
    CHECK(std::abs(i3 - pi / 2) < 1e-10);
}

TEST_CASE("contour integration") {
    // closed rectangle around z = 0 of 1/z gives 2 pi i
    std::vector<complexd> rect = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {1, 1}};
    const complexd v = q::integrate_contour(
        [](complexd z) { return 1.0 / z; }, rect, 1e-12);
    CHECK(std::abs(v - complexd(0, 2 * pi)) < 1e-11);
}

TEST_CASE("brent root finding") {
    const double r1 = q::brent([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(std::abs(r1 - std::sqrt(2.0)) < 1e-13);
    const double r2 =
        q::brent([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
    CHECK(std::abs(std::cos(r2) - r2) < 1e-13);
    CHECK_THROWS_AS(q::brent([](double x) { return 1.0 + x * x; }, 0.0, 1.0),
                    accuracy_error);
}
