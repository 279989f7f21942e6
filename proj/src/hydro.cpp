#include "dsw/hydro.hpp"

#include <algorithm>
#include <cmath>

#include "dsw/genus1.hpp"

namespace dsw::hydro {

namespace {

// harmonic edge of a left DSW: the v2 velocity degenerated at s -> lrp
double left_harmonic_edge(double lrp, double llp, double llm) {
    return -0.5 * (2.0 * lrp + llp + llm) +
           2.0 * (lrp - llp) * (lrp - llm) / (-2.0 * lrp + llp + llm);
}

// harmonic edge of a right DSW: the v3 velocity degenerated at s -> llm
double right_harmonic_edge(double lrp, double lrm, double llm) {
    return -0.5 * (lrp + lrm + 2.0 * llm) +
           2.0 * (lrp - llm) * (lrm - llm) / (lrp + lrm - 2.0 * llm);
}

}  // namespace

Invariants invariants(const StepData& s) {
    if (!(s.Al > 0.0) || !(s.Ar > 0.0))
        throw degenerate_error("invariants: amplitudes must be positive");
    return {s.mul + s.Al, s.mul - s.Al, s.mur + s.Ar, s.mur - s.Ar};
}

Case classify(const Invariants& v) {
    const double a[4] = {v.llp, v.llm, v.lrp, v.lrm};
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (a[i] == a[j])
                throw degenerate_error(
                    "classify: coincident Riemann invariants");
    if (v.lrp > v.lrm && v.lrm > v.llp && v.llp > v.llm) return Case::A;
    if (v.llp > v.llm && v.llm > v.lrp && v.lrp > v.lrm) return Case::B;
    if (v.lrp > v.llp && v.llp > v.lrm && v.lrm > v.llm) return Case::C;
    if (v.llp > v.lrp && v.lrp > v.llm && v.llm > v.lrm) return Case::D;
    if (v.lrp > v.llp && v.llp > v.llm && v.llm > v.lrm) return Case::E;
    if (v.llp > v.lrp && v.lrp > v.lrm && v.lrm > v.llm) return Case::F;
    throw degenerate_error("classify: invariants do not match any ordering");
}

RegionLayout region_layout(const Invariants& v) {
    RegionLayout lay;
    lay.cs = classify(v);
    const double llp = v.llp, llm = v.llm, lrp = v.lrp, lrm = v.lrm;
    using RK = RegionKind;
    switch (lay.cs) {
        case Case::A:
            lay.xi = {left_harmonic_edge(lrp, llp, llm),
                      genus1::whitham_velocity(2, {lrp, lrm, llp, llm}),
                      genus1::whitham_velocity(3, {lrp, lrm, llp, llm}),
                      right_harmonic_edge(lrp, lrm, llm)};
            lay.kinds = {RK::LeftPlane, RK::LeftDSW, RK::Unmodulated,
                         RK::RightDSW, RK::RightPlane};
            break;
        case Case::B:
            lay.xi = {-0.5 * (3.0 * llp + llm), -2.0 * llm, -2.0 * lrp,
                      -0.5 * (lrp + 3.0 * lrm)};
            lay.kinds = {RK::LeftPlane, RK::LeftRare, RK::Vacuum,
                         RK::RightRare, RK::RightPlane};
            break;
        case Case::C:
            lay.xi = {left_harmonic_edge(lrp, llp, llm),
                      -0.5 * (lrp + 2.0 * llp + llm),
                      -0.5 * (lrp + 2.0 * lrm + llm),
                      right_harmonic_edge(lrp, lrm, llm)};
            lay.kinds = {RK::LeftPlane, RK::LeftDSW, RK::MiddlePlane,
                         RK::RightDSW, RK::RightPlane};
            break;
        case Case::D:
            lay.xi = {-0.5 * (3.0 * llp + llm), -0.5 * (3.0 * lrp + llm),
                      -0.5 * (lrp + 3.0 * llm), -0.5 * (lrp + 3.0 * lrm)};
            lay.kinds = {RK::LeftPlane, RK::LeftRare, RK::MiddlePlane,
                         RK::RightRare, RK::RightPlane};
            break;
        case Case::E:
            lay.xi = {left_harmonic_edge(lrp, llp, llm),
                      -0.5 * (lrp + 2.0 * llp + llm),
                      -0.5 * (lrp + 3.0 * llm), -0.5 * (lrp + 3.0 * lrm)};
            lay.kinds = {RK::LeftPlane, RK::LeftDSW, RK::MiddlePlane,
                         RK::RightRare, RK::RightPlane};
            break;
        case Case::F:
            lay.xi = {-0.5 * (3.0 * llp + llm), -0.5 * (3.0 * lrp + llm),
                      -0.5 * (lrp + 2.0 * lrm + llm),
                      right_harmonic_edge(lrp, lrm, llm)};
            lay.kinds = {RK::LeftPlane, RK::LeftRare, RK::MiddlePlane,
                         RK::RightDSW, RK::RightPlane};
            break;
    }
    if (!(lay.xi[0] < lay.xi[1] && lay.xi[1] < lay.xi[2] &&
          lay.xi[2] < lay.xi[3]))
        throw degenerate_error("region_layout: boundaries are not ordered");
    return lay;
}

int region_index(const RegionLayout& lay, double xi) {
    int k = 0;
    while (k < 4 && xi >= lay.xi[k]) k++;
    return k;
}

RegionKind region_at(const RegionLayout& lay, double xi) {
    return lay.kinds[size_t(region_index(lay, xi))];
}

StepData mirrored(const StepData& s) {
    return {s.Ar, -s.mur, s.Al, -s.mul};
}

}  // namespace dsw::hydro
