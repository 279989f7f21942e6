#pragma once

#include <memory>
#include <vector>

#include "dsw/types.hpp"

// Direct split-step spectral solver for i q_t + q_xx / 2 - |q|^2 q = 0 on the
// periodic box [-L, L). Step data are periodized with a compensating seam at
// +-L; the contaminated margin is excluded by a shrinking trust window.

namespace dsw::nlssim {

struct SimConfig {
    double L = 200.0 * 3.14159265358979323846;  // half-domain
    std::size_t N = std::size_t(1) << 16;       // grid size, power of two
    double dt = 2.5e-4;
    double smooth_w = -1.0;  // seam smoothing width; < 0 means 5 * dx
    double t_end = 20.0;
    std::vector<double> snapshot_ts;  // defaults to {t_end} when empty
};

// margin subtracted from the trust window on top of vmax * t
constexpr double trust_pad = 5.0;

class FourierEngine;  // owns the FFTW plans for a fixed grid

struct SimState {
    SimConfig cfg;
    StepData step;
    std::vector<double> x;
    std::vector<complexd> q;
    double t = 0.0;
    double mass0 = 0.0;  // initial discrete L2 norm (conserved)
    double vmax = 0.0;   // bound on every boundary speed, plus margin
    std::shared_ptr<FourierEngine> engine;

    // half-width of the uncontaminated window at time tt
    double trust_halfwidth(double tt) const {
        return cfg.L - vmax * tt - trust_pad;
    }
};

// Periodized initial data: left wave for x < 0, right wave for x > 0, with
// smoothstep amplitude blending and phase-matched transitions of width
// smooth_w at x = 0 and across the wrap seam x = +-L. Requires both
// backgrounds to fit the box exactly: 2 mu L / pi integer for mu_l, mu_r.
SimState init_step(const SimConfig& cfg, const StepData& s);

// one Strang step of size dt (half nonlinear, full linear, half nonlinear)
void step(SimState& st, double dt);

// relative drift of the discrete L2 norm from mass0
double norm_drift(const SimState& st);

struct Snapshot {
    double t = 0.0;        // actual time reached (nearest dt multiple)
    double t_requested = 0.0;
    double trust = 0.0;    // trust-window half-width at t
    std::vector<complexd> q;
};

struct RunResult {
    std::vector<double> x;
    std::vector<Snapshot> snapshots;
    double norm_drift = 0.0;  // relative, at the final time
    double vmax = 0.0;
};

// Integrate to t_end, capturing snapshots at the requested times (rounded to
// the nearest step). Throws config_error when the final trust window would
// be empty, naming the admissible bound.
RunResult run(const SimConfig& cfg, const StepData& s);

}  // namespace dsw::nlssim
