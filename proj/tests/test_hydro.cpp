#include "doctest.h"

#include <cmath>

#include "dsw/hydro.hpp"

using namespace dsw;

namespace {
StepData make(double Al, double mul, double Ar, double mur) {
    StepData s;
    s.Al = Al;
    s.mul = mul;
    s.Ar = Ar;
    s.mur = mur;
    return s;
}
}  // namespace

TEST_CASE("invariants from step data") {
    const auto v = hydro::invariants(make(0.5, -0.5, 2.0, 0.0));
    CHECK(v.llp == 0.0);
    CHECK(v.llm == doctest::Approx(-1.0));
    CHECK(v.lrp == doctest::Approx(2.0));
    CHECK(v.lrm == doctest::Approx(-2.0));
}

TEST_CASE("six case orderings") {
    CHECK(hydro::classify(hydro::invariants(make(0.5, -0.5, 0.5, 1.5))) ==
          Case::A);
    CHECK(hydro::classify(hydro::invariants(make(0.5, 0.5, 0.5, -1.5))) ==
          Case::B);
    CHECK(hydro::classify(hydro::invariants(make(1.0, 0.0, 1.0, 1.0))) ==
          Case::C);
    CHECK(hydro::classify(hydro::invariants(make(1.0, 0.0, 1.0, -1.0))) ==
          Case::D);
    CHECK(hydro::classify(hydro::invariants(make(0.5, -0.5, 2.0, 0.0))) ==
          Case::E);
    CHECK(hydro::classify(hydro::invariants(make(1.5, -0.5, 0.5, -0.5))) ==
          Case::F);
}

TEST_CASE("degenerate data are rejected") {
    // exact tie of two invariants
    CHECK_THROWS_AS(hydro::classify(hydro::invariants(make(1.0, 0.0, 1.0, 0.0))),
                    degenerate_error);
    // llp = lrm tie
    CHECK_THROWS_AS(hydro::classify(hydro::invariants(make(1.0, 0.0, 1.0, 2.0))),
                    degenerate_error);
    // non-positive amplitude
    CHECK_THROWS_AS(hydro::invariants(make(0.0, 0.0, 1.0, 1.0)), config_error);
    CHECK_THROWS_AS(hydro::invariants(make(1.0, 0.0, -0.5, 1.0)), config_error);
}

TEST_CASE("region layouts by case") {
    using K = RegionKind;

    const auto la = hydro::region_layout(hydro::invariants(make(0.5, -0.5, 0.5, 1.5)));
    CHECK(la.cs == Case::A);
    CHECK(la.kinds[0] == K::LeftPlane);
    CHECK(la.kinds[1] == K::LeftDSW);
    CHECK(la.kinds[2] == K::Unmodulated);
    CHECK(la.kinds[3] == K::RightDSW);
    CHECK(la.kinds[4] == K::RightPlane);

    const auto lb = hydro::region_layout(hydro::invariants(make(0.5, 0.5, 0.5, -1.5)));
    CHECK(lb.kinds[1] == K::LeftRare);
    CHECK(lb.kinds[2] == K::Vacuum);
    CHECK(lb.kinds[3] == K::RightRare);
    // vacuum edges: -2 llp and -2 lrm
    CHECK(lb.xi[1] == doctest::Approx(0.0).scale(1));
    CHECK(lb.xi[2] == doctest::Approx(2.0));

    const auto lc = hydro::region_layout(hydro::invariants(make(1.0, 0.0, 1.0, 1.0)));
    CHECK(lc.kinds[1] == K::LeftDSW);
    CHECK(lc.kinds[2] == K::MiddlePlane);
    CHECK(lc.kinds[3] == K::RightDSW);

    const auto ld = hydro::region_layout(hydro::invariants(make(1.0, 0.0, 1.0, -1.0)));
    CHECK(ld.kinds[1] == K::LeftRare);
    CHECK(ld.kinds[2] == K::MiddlePlane);
    CHECK(ld.kinds[3] == K::RightRare);

    const auto le = hydro::region_layout(hydro::invariants(make(0.5, -0.5, 2.0, 0.0)));
    CHECK(le.kinds[1] == K::LeftDSW);
    CHECK(le.kinds[2] == K::MiddlePlane);
    CHECK(le.kinds[3] == K::RightRare);

    const auto lf = hydro::region_layout(hydro::invariants(make(1.5, -0.5, 0.5, -0.5)));
    CHECK(lf.kinds[1] == K::LeftRare);
    CHECK(lf.kinds[2] == K::MiddlePlane);
    CHECK(lf.kinds[3] == K::RightDSW);
}

TEST_CASE("boundaries are sorted and dispatch half-open") {
    for (auto s : {make(0.5, -0.5, 0.5, 1.5), make(0.5, 0.5, 0.5, -1.5),
                   make(1.0, 0.0, 1.0, 1.0), make(1.0, 0.0, 1.0, -1.0),
                   make(0.5, -0.5, 2.0, 0.0), make(1.5, -0.5, 0.5, -0.5)}) {
        const auto lay = hydro::region_layout(hydro::invariants(s));
        for (int k = 0; k < 3; k++) CHECK(lay.xi[size_t(k)] < lay.xi[size_t(k) + 1]);
        CHECK(hydro::region_index(lay, lay.xi[0] - 1.0) == 0);
        CHECK(hydro::region_index(lay, lay.xi[3] + 1.0) == 4);
        // exact hits go to the region on the right
        for (int k = 0; k < 4; k++)
            CHECK(hydro::region_index(lay, lay.xi[size_t(k)]) == k + 1);
        // just below a boundary stays left
        for (int k = 0; k < 4; k++) {
            const double xi = lay.xi[size_t(k)] - 1e-9;
            CHECK(hydro::region_index(lay, xi) == k);
        }
    }
}

TEST_CASE("frozen layout regressions") {
    // case A preset: the inner boundaries come from the soft-edge equations
    const auto la = hydro::region_layout(hydro::invariants(make(0.5, -0.5, 0.5, 1.5)));
    CHECK(std::abs(la.xi[0] - (-3.9)) < 1e-12);
    CHECK(std::abs(la.xi[1] - (-2.3494919591871062)) < 1e-9);
    CHECK(std::abs(la.xi[2] - 0.34949195918710596) < 1e-9);
    CHECK(std::abs(la.xi[3] - 1.9) < 1e-12);

    const auto lc = hydro::region_layout(hydro::invariants(make(1.0, 0.0, 1.0, 1.0)));
    CHECK(std::abs(lc.xi[0] - (-3.5)) < 1e-12);
    CHECK(std::abs(lc.xi[1] - (-1.5)) < 1e-12);
    CHECK(std::abs(lc.xi[2] - (-0.5)) < 1e-12);
    CHECK(std::abs(lc.xi[3] - 1.5) < 1e-12);

    const auto lf = hydro::region_layout(hydro::invariants(make(1.5, -0.5, 0.5, -0.5)));
    CHECK(std::abs(lf.xi[0] - (-0.5)) < 1e-12);
    CHECK(std::abs(lf.xi[1] - 1.0) < 1e-12);
    CHECK(std::abs(lf.xi[2] - 2.0) < 1e-12);
    CHECK(std::abs(lf.xi[3] - (23.0 / 6.0)) < 1e-9);
}

TEST_CASE("mirror map swaps and negates") {
    const auto s = make(0.5, -0.5, 2.0, 0.0);
    const auto ms = hydro::mirrored(s);
    CHECK(ms.Al == 2.0);
    CHECK(ms.mul == 0.0);
    CHECK(ms.Ar == 0.5);
    CHECK(ms.mur == 0.5);
    // mirrored case pairs: A<->A, B<->B, C<->D, E<->F
    CHECK(hydro::classify(hydro::invariants(ms)) == Case::F);
    const auto lay = hydro::region_layout(hydro::invariants(s));
    const auto mlay = hydro::region_layout(hydro::invariants(ms));
    for (int k = 0; k < 4; k++)
        CHECK(std::abs(mlay.xi[size_t(k)] + lay.xi[size_t(3 - k)]) < 1e-12);
}
