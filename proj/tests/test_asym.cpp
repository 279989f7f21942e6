#include "doctest.h"

#include <cmath>
#include <complex>

#include "dsw/asym.hpp"
#include "dsw/hydro.hpp"

using namespace dsw;
using asym::Context;

namespace {
StepData preset_step(char c) {
    switch (c) {
        case 'a': return {0.5, -0.5, 0.5, 1.5};
        case 'b': return {0.5, 0.5, 0.5, -1.5};
        case 'c': return {1.0, 0.0, 1.0, 1.0};
        case 'd': return {1.0, 0.0, 1.0, -1.0};
        case 'e': return {0.5, -0.5, 2.0, 0.0};
        default:  return {1.5, -0.5, 0.5, -0.5};
    }
}
}  // namespace

TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_AS(Context(StepData{1.0, 0.3, 1.0, 0.3}),
                    zero_reflection_error);
    CHECK_THROWS_AS(Context(StepData{1.0, 0.0, 1.0, 0.0}),
                    zero_reflection_error);
    CHECK_THROWS_AS(Context(StepData{-1.0, 0.0, 1.0, 0.5}), config_error);
}

TEST_CASE("eval requires positive time") {
    Context ctx(preset_step('c'));
    CHECK_THROWS_AS(ctx.eval(1.0, 0.0), config_error);
    CHECK_THROWS_AS(ctx.eval(1.0, -2.0), config_error);
}

TEST_CASE("dispatch agrees with the layout everywhere") {
    for (char p : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        Context ctx(preset_step(p));
        const auto& lay = ctx.layout();
        const double t = 20.0;
        for (int i = 0; i <= 200; i++) {
            const double xi = -6.0 + 12.0 * i / 200.0;
            const auto s = ctx.eval(xi * t, t);
            CHECK(s.region == hydro::region_at(lay, xi));
            CHECK(std::isfinite(s.q.real()));
            CHECK(std::isfinite(s.q.imag()));
            CHECK(s.density ==
                  doctest::Approx(std::norm(s.q)).epsilon(1e-12).scale(1.0));
        }
        // exact boundary hits must evaluate too (degenerate-edge limits)
        for (double xib : lay.xi) {
            const auto s = ctx.eval(xib * t, t);
            CHECK(std::isfinite(std::abs(s.q)));
        }
    }
}

TEST_CASE("plane-wave regions reproduce the backgrounds") {
    for (char p : {'a', 'c', 'e'}) {
        const StepData st = preset_step(p);
        Context ctx(st);
        const double t = 25.0;
        const double xl = (ctx.layout().xi[0] - 2.0) * t;
        const double xr = (ctx.layout().xi[3] + 2.0) * t;
        const auto sl = ctx.eval(xl, t);
        CHECK(sl.region == RegionKind::LeftPlane);
        CHECK(std::abs(std::abs(sl.q) - st.Al) < 1e-12);
        const auto sr = ctx.eval(xr, t);
        CHECK(sr.region == RegionKind::RightPlane);
        CHECK(std::abs(std::abs(sr.q) - st.Ar) < 1e-12);
        // local wavenumber: d arg(q) / dx = -2 mu
        const double h = 1e-5;
        auto karg = [&](double x) {
            const auto a = ctx.eval(x - h, t), b = ctx.eval(x + h, t);
            return std::arg(b.q / a.q) / (2.0 * h);
        };
        CHECK(std::abs(karg(xl) + 2.0 * st.mul) < 1e-6);
        CHECK(std::abs(karg(xr) + 2.0 * st.mur) < 1e-6);
    }
}

TEST_CASE("rarefaction amplitude follows the fan") {
    // preset d: left and right rarefactions around a middle plane wave
    const StepData st = preset_step('d');
    Context ctx(st);
    const auto& lay = ctx.layout();
    const double t = 30.0;
    for (int i = 1; i < 8; i++) {
        const double xi =
            lay.xi[0] + (lay.xi[1] - lay.xi[0]) * i / 8.0;
        const auto s = ctx.eval(xi * t, t);
        CHECK(s.region == RegionKind::LeftRare);
        const Invariants& v = ctx.inv();
        CHECK(std::abs(std::abs(s.q) - (-(xi + 2.0 * v.llm) / 3.0)) < 1e-10);
    }
    for (int i = 1; i < 8; i++) {
        const double xi =
            lay.xi[2] + (lay.xi[3] - lay.xi[2]) * i / 8.0;
        const auto s = ctx.eval(xi * t, t);
        CHECK(s.region == RegionKind::RightRare);
        const Invariants& v = ctx.inv();
        CHECK(std::abs(std::abs(s.q) - (xi + 2.0 * v.lrp) / 3.0) < 1e-10);
    }
}

TEST_CASE("vacuum decays like 1/sqrt(t)") {
    Context ctx(preset_step('b'));
    const auto& lay = ctx.layout();
    const double xi = 0.5 * (lay.xi[1] + lay.xi[2]);
    const auto s1 = ctx.eval(xi * 30.0, 30.0);
    const auto s2 = ctx.eval(xi * 120.0, 120.0);
    CHECK(s1.region == RegionKind::Vacuum);
    CHECK(std::abs(std::abs(s2.q) / std::abs(s1.q) - 0.5) < 1e-12);
    CHECK(std::abs(s1.q) > 0.0);
}

TEST_CASE("DSW density stays within the elliptic envelope") {
    for (char p : {'a', 'c', 'e', 'f'}) {
        Context ctx(preset_step(p));
        const auto& lay = ctx.layout();
        const double t = 20.0;
        for (int k = 0; k < 5; k++) {
            if (lay.kinds[size_t(k)] != RegionKind::LeftDSW &&
                lay.kinds[size_t(k)] != RegionKind::RightDSW)
                continue;
            const double a = (k == 0) ? lay.xi[0] - 1 : lay.xi[size_t(k - 1)];
            const double b = (k == 4) ? lay.xi[3] + 1 : lay.xi[size_t(k)];
            for (int i = 1; i < 40; i++) {
                const double xi = a + (b - a) * i / 40.0;
                const auto pd = ctx.phase(xi);
                if (pd.pw_limit) continue;
                const auto s = ctx.eval(xi * t, t);
                CHECK(s.density >= pd.rho.r3 - 1e-9);
                CHECK(s.density <= pd.rho.r2 + 1e-9);
            }
        }
    }
}

TEST_CASE("theta form against the cn form across both DSWs") {
    // the cross-check runs inside eval_dsw at theta_cn_rtol = 1e-6 and throws
    // internal_error on disagreement; sweep many points and several times
    for (char p : {'a', 'c'}) {
        Context ctx(preset_step(p));
        const auto& lay = ctx.layout();
        for (double t : {5.0, 20.0, 80.0}) {
            for (int i = 1; i < 50; i++) {
                const double xi1 =
                    lay.xi[0] + (lay.xi[1] - lay.xi[0]) * i / 50.0;
                CHECK_NOTHROW(ctx.eval(xi1 * t, t));
                const double xi2 =
                    lay.xi[2] + (lay.xi[3] - lay.xi[2]) * i / 50.0;
                CHECK_NOTHROW(ctx.eval(xi2 * t, t));
            }
        }
    }
}

TEST_CASE("envelope limits match across every boundary") {
    for (char p : {'a', 'b', 'c', 'd', 'e', 'f'}) {
        Context ctx(preset_step(p));
        for (int b = 0; b < 4; b++) {
            const double from_l = ctx.envelope_limit(b, true);
            const double from_r = ctx.envelope_limit(b, false);
            CHECK(std::abs(from_l - from_r) < 1e-6);
        }
    }
}

TEST_CASE("full field is continuous across the DSW boundaries") {
    // approach each boundary from both sides; the theta form must limit to
    // the adjacent plane-wave formula, phase included
    for (char p : {'a', 'c'}) {
        Context ctx(preset_step(p));
        const auto& lay = ctx.layout();
        const double t = 10.0;
        const double d = 1e-7;
        for (int b = 0; b < 4; b++) {
            const double xib = lay.xi[size_t(b)];
            const auto sl = ctx.eval((xib - d) * t, t);
            const auto sr = ctx.eval((xib + d) * t, t);
            CHECK(std::abs(sl.q - sr.q) < 2e-2);
        }
    }
}

TEST_CASE("mirror symmetry of the asymptotics") {
    for (char p : {'a', 'b', 'c', 'e'}) {
        const StepData st = preset_step(p);
        Context ctx(st);
        Context mtx(hydro::mirrored(st));
        const double t = 20.0;
        for (double xi : {-4.3, -1.7, -0.31, 0.42, 1.23, 3.7, 5.1}) {
            const auto s = ctx.eval(xi * t, t);
            const auto m = mtx.eval(-xi * t, t);
            CHECK(std::abs(m.q - std::conj(s.q)) < 1e-9);
        }
    }
}

TEST_CASE("error orders by region") {
    Context ca(preset_step('a'));
    const auto& la = ca.layout();
    CHECK(std::string(ca.eval((la.xi[0] - 1) * 9, 9.0).err_order) == "t^-1/2");
    CHECK(std::string(
              ca.eval(0.5 * (la.xi[0] + la.xi[1]) * 9, 9.0).err_order) ==
          "t^-1");
    CHECK(std::string(
              ca.eval(0.5 * (la.xi[1] + la.xi[2]) * 9, 9.0).err_order) ==
          "t^-1/2");
    Context cb(preset_step('b'));
    const auto& lb = cb.layout();
    CHECK(std::string(
              cb.eval(0.5 * (lb.xi[1] + lb.xi[2]) * 9, 9.0).err_order) ==
          "o(t^-1/2)");
    Context cc(preset_step('c'));
    const auto& lc = cc.layout();
    CHECK(std::string(
              cc.eval(0.5 * (lc.xi[1] + lc.xi[2]) * 9, 9.0).err_order) ==
          "e^-ct");
}

TEST_CASE("phase cache returns identical values") {
    Context ctx(preset_step('e'));
    const double t = 17.0;
    for (double x : {-31.0, 4.2, 26.0}) {
        const auto s1 = ctx.eval(x, t);
        const auto s2 = ctx.eval(x, t);
        CHECK(s1.q == s2.q);
        CHECK(s1.density == s2.density);
    }
}
