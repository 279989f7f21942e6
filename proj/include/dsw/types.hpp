#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace dsw {

using complexd = std::complex<double>;

// User-facing configuration problems (bad step data, incommensurate grids,
// degenerate classification ties). CLI maps these to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step data whose Riemann invariants are not strictly ordered, so no case
// applies. Also raised for exact boundary ties elsewhere.
struct degenerate_error : config_error {
    using config_error::config_error;
};

// Identical left/right steps: the reflection coefficient vanishes identically
// and the scattering-based phase formulas are meaningless.
struct zero_reflection_error : config_error {
    using config_error::config_error;
};

// A numerical routine could not reach its requested tolerance.
// CLI maps these (and internal_error) to exit code 3.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (e.g. theta-form vs cn-form densities).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step-like initial data: q -> Al exp(-2i mul x) as x -> -inf and
// q -> Ar exp(-2i mur x) as x -> +inf.
struct StepData {
    double Al = 1.0;
    double mul = 0.0;
    double Ar = 1.0;
    double mur = 0.0;
};

// The four constant Riemann invariants of the dispersionless hydrodynamics,
// lam = mu +/- A on each side.
struct Invariants {
    double llp;  // left  plus:  mul + Al
    double llm;  // left  minus: mul - Al
    double lrp;  // right plus:  mur + Ar
    double lrm;  // right minus: mur - Ar
};

enum class Case { A, B, C, D, E, F };

enum class RegionKind {
    LeftPlane,
    RightPlane,
    LeftDSW,
    RightDSW,
    LeftRare,
    RightRare,
    Vacuum,
    MiddlePlane,
    Unmodulated,
};

const char* case_name(Case c);
const char* region_name(RegionKind k);

// The five-region decomposition of the (x,t) half plane by xi = x/t.
// kinds[0] is always LeftPlane (xi < xi[0]) and kinds[4] RightPlane
// (xi >= xi[3]); boundaries dispatch half-open to the right.
struct RegionLayout {
    Case cs = Case::A;
    std::array<double, 4> xi{};
    std::array<RegionKind, 5> kinds{};
};

}  // namespace dsw
