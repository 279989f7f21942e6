#pragma once

#include <list>
#include <map>
#include <mutex>

#include "dsw/genus1.hpp"
#include "dsw/types.hpp"

// Leading-order long-time evaluator: dispatches (x, t) by xi = x/t to the
// five regions of the classified layout and assembles the closed-form
// leading term of q(x, t), including the scattering phase shifts.

namespace dsw::asym {

struct AsymSample {
    double x = 0.0;
    double t = 0.0;
    double xi = 0.0;
    RegionKind region = RegionKind::LeftPlane;
    complexd q;
    double density = 0.0;       // |q|^2
    const char* err_order = ""; // decay rate of the dropped remainder
};

// Everything about a region that depends on xi only (phase integrals, the
// soft edge, elliptic data). Cached per xi: an x-sweep at fixed t revisits
// the same xi grid through eval() many times.
struct PhaseData {
    RegionKind region = RegionKind::LeftPlane;

    // Set when xi hits a DSW boundary exactly (dispatch is half-open, so a
    // boundary sample can land on a degenerate edge where the elliptic data
    // blow up): the field is evaluated as the continuous plane-wave limit of
    // the given kind instead, with phi holding that wave's phase shift.
    bool pw_limit = false;
    RegionKind limit_kind = RegionKind::LeftPlane;

    // plane-wave / rarefaction / middle-plane shift (the 1/pi integral)
    double phi = 0.0;

    // vacuum data
    double nu = 0.0;
    double chi_im = 0.0;
    double arg_r = 0.0;

    // genus-one regions (DSW, unmodulated)
    genus1::Lam lam{};
    double amp = 0.0;       // theta-ratio prefactor = sqrt(rho2)
    double phi1 = 0.0;
    double phi0 = 0.0;
    double g_inf = 0.0;
    double ghat_inf = 0.0;
    double V = 0.0;
    double dimag = 0.0;
    double tau_im = 0.0;
    double abel_im = 0.0;   // Im A(inf)
    genus1::Rho rho{};
    double m = 0.0;
};

class Context {
public:
    explicit Context(const StepData& s, double tol = 1e-10,
                     std::size_t cache_cap = 256);

    const StepData& step() const { return step_; }
    const Invariants& inv() const { return inv_; }
    const RegionLayout& layout() const { return lay_; }

    // region dispatch by xi = x/t (half-open boundaries, ties go right)
    AsymSample eval(double x, double t) const;

    // region-specific entry points; throw internal_error when xi = x/t does
    // not fall in the matching region of the layout
    AsymSample eval_left_plane(double x, double t) const;
    AsymSample eval_right_plane(double x, double t) const;
    AsymSample eval_rarefaction(double x, double t) const;
    AsymSample eval_vacuum(double x, double t) const;
    AsymSample eval_middle_plane(double x, double t) const;
    AsymSample eval_dsw(double x, double t) const;
    AsymSample eval_unmodulated(double x, double t) const;

    // xi-only data, cached (LRU keyed by xi quantized to 1e-12); returned by
    // value so concurrent callers never hold references into the cache
    PhaseData phase(double xi) const;

    // limiting envelope |q| at layout boundary j in {0..3}, approached from
    // the region on the given side; closed degenerate-limit formulas are
    // used on the DSW side
    double envelope_limit(int boundary, bool from_left) const;

    // relative tolerance of the theta-form vs cn-form density cross-check
    // performed inside eval_dsw / eval_unmodulated
    static constexpr double theta_cn_rtol = 1e-6;

private:
    PhaseData compute_phase(double xi) const;
    void fill_genus1(PhaseData& pd, double xi, double cut) const;
    void fill_pw_limit(PhaseData& pd, RegionKind kind, double xi) const;
    AsymSample pw_sample(RegionKind formula, double phi, double x,
                         double t) const;
    AsymSample theta_sample(const PhaseData& pd, double x, double t,
                            const char* err) const;

    StepData step_;
    Invariants inv_;
    RegionLayout lay_;
    double tol_;

    // LRU cache of PhaseData keyed by quantized xi
    std::size_t cache_cap_;
    mutable std::mutex cache_mu_;
    mutable std::list<std::pair<long long, PhaseData>> lru_;
    mutable std::map<long long, decltype(lru_)::iterator> index_;
};

}  // namespace dsw::asym
