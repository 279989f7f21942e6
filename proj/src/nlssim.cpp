#include "dsw/nlssim.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dsw::nlssim {

namespace {

constexpr double pi = 3.14159265358979323846;

double smoothstep(double u) {
    u = std::clamp(u, 0.0, 1.0);
    return u * u * (3.0 - 2.0 * u);
}

void check_commensurate(double mu, double L, const char* side) {
    const double n = 2.0 * mu * L / pi;
    if (std::abs(n - std::nearbyint(n)) > 1e-9) {
        std::ostringstream os;
        os << "init_step: 2*mu*L/pi = " << n << " is not an integer for the "
           << side << " background; adjust L so both plane waves are "
              "periodic on [-L, L)";
        throw config_error(os.str());
    }
}

double l2_norm(const SimState& st) {
    const double dx = 2.0 * st.cfg.L / double(st.cfg.N);
    double acc = 0.0;
    for (const complexd& v : st.q) acc += std::norm(v);
    return acc * dx;
}

}  // namespace

// Unaligned plans executed through the new-array interface, so states can be
// copied (or their buffers reallocated) without invalidating the engine.
class FourierEngine {
public:
    FourierEngine(std::size_t n, double L) : n_(n), k2_(n) {
        std::vector<complexd> scratch(n_);
        auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
        fwd_ = fftw_plan_dft_1d(int(n_), data, data, FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        bwd_ = fftw_plan_dft_1d(int(n_), data, data, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        for (std::size_t j = 0; j < n_; j++) {
            const double jj =
                (j < n_ / 2) ? double(j) : double(j) - double(n_);
            const double k = pi * jj / L;
            k2_[j] = k * k;
        }
    }
    ~FourierEngine() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    FourierEngine(const FourierEngine&) = delete;
    FourierEngine& operator=(const FourierEngine&) = delete;

    // q <- IFFT( e^{-i k^2 dt / 2} FFT(q) ), in place
    void linear_step(std::vector<complexd>& q, double dt) {
        auto* data = reinterpret_cast<fftw_complex*>(q.data());
        fftw_execute_dft(fwd_, data, data);
        const double inv = 1.0 / double(n_);
        for (std::size_t j = 0; j < n_; j++)
            q[j] *= inv * std::polar(1.0, -0.5 * k2_[j] * dt);
        fftw_execute_dft(bwd_, data, data);
    }

private:
    std::size_t n_;
    std::vector<double> k2_;
    fftw_plan fwd_, bwd_;
};

SimState init_step(const SimConfig& cfg, const StepData& s) {
    if (!(cfg.L > 0.0) || cfg.N < 4 || (cfg.N & (cfg.N - 1)) != 0)
        throw config_error("init_step: need L > 0 and N a power of two >= 4");
    if (!(cfg.dt > 0.0)) throw config_error("init_step: dt must be positive");
    check_commensurate(s.mul, cfg.L, "left");
    check_commensurate(s.mur, cfg.L, "right");

    SimState st;
    st.cfg = cfg;
    st.step = s;
    const double dx = 2.0 * cfg.L / double(cfg.N);
    const double w = (cfg.smooth_w >= 0.0) ? cfg.smooth_w : 5.0 * dx;
    st.cfg.smooth_w = w;

    st.x.resize(cfg.N);
    st.q.resize(cfg.N);
    const double dmu = s.mur - s.mul;
    for (std::size_t j = 0; j < cfg.N; j++) {
        const double x = -cfg.L + dx * double(j);
        st.x[j] = x;
        // chi = weight of the right wave: up-ramp at x = 0, down-ramp
        // centered on the wrap seam x = +-L (unwrapped coordinate y)
        double chi, y = x;
        if (w > 0.0) {
            if (x <= -cfg.L + w) {
                y = x + 2.0 * cfg.L;
                chi = 1.0 - smoothstep((y - (cfg.L - w)) / (2.0 * w));
            } else if (x >= cfg.L - w) {
                chi = 1.0 - smoothstep((x - (cfg.L - w)) / (2.0 * w));
            } else {
                chi = smoothstep((x + w) / (2.0 * w));
            }
        } else {
            chi = (x >= 0.0) ? 1.0 : 0.0;
        }
        const double amp = (1.0 - chi) * s.Al + chi * s.Ar;
        const double ph = -2.0 * s.mul * x + chi * (-2.0 * dmu * y);
        st.q[j] = amp * std::polar(1.0, ph);
    }

    // every region boundary is a convex-type combination of the invariants
    // with weights summing to two, so 2 max|lambda| bounds them all
    const double lmax =
        std::max({std::abs(s.mul + s.Al), std::abs(s.mul - s.Al),
                  std::abs(s.mur + s.Ar), std::abs(s.mur - s.Ar)});
    st.vmax = 2.0 * lmax + 2.0;

    st.engine = std::make_shared<FourierEngine>(cfg.N, cfg.L);
    st.mass0 = l2_norm(st);
    return st;
}

void step(SimState& st, double dt) {
    auto half_nonlinear = [&] {
        for (complexd& v : st.q)
            v *= std::polar(1.0, -0.5 * std::norm(v) * dt);
    };
    half_nonlinear();
    st.engine->linear_step(st.q, dt);
    half_nonlinear();
    st.t += dt;
    if (!std::isfinite(st.q[0].real()))
        throw accuracy_error("step: field blew up (NaN/inf encountered)");
}

double norm_drift(const SimState& st) {
    return std::abs(l2_norm(st) - st.mass0) / st.mass0;
}

RunResult run(const SimConfig& cfg, const StepData& s) {
    SimState st = init_step(cfg, s);

    std::vector<double> ts = cfg.snapshot_ts;
    if (ts.empty()) ts.push_back(cfg.t_end);
    std::sort(ts.begin(), ts.end());
    const double t_last = std::max(cfg.t_end, ts.back());
    const double t_adm = (cfg.L - trust_pad) / st.vmax;
    if (t_last > t_adm) {
        std::ostringstream os;
        os << "run: trust window empty at t = " << t_last
           << "; with L = " << cfg.L << " and vmax = " << st.vmax
           << " the largest admissible final time is " << t_adm;
        throw config_error(os.str());
    }

    RunResult out;
    out.x = st.x;
    out.vmax = st.vmax;
    long done = 0;
    for (double treq : ts) {
        const long target = std::lround(treq / cfg.dt);
        for (; done < target; done++) step(st, cfg.dt);
        Snapshot snap;
        snap.t = st.t;
        snap.t_requested = treq;
        snap.trust = st.trust_halfwidth(st.t);
        snap.q = st.q;
        out.snapshots.push_back(std::move(snap));
    }
    out.norm_drift = norm_drift(st);
    return out;
}

}  // namespace dsw::nlssim
