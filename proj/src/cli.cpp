#include "dsw/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsw/asym.hpp"
#include "dsw/hydro.hpp"

namespace dsw::cli {

using nlohmann::json;

StepData preset(char letter) {
    switch (letter) {
        case 'a': return {0.5, -0.5, 0.5, 1.5};
        case 'b': return {0.5, 0.5, 0.5, -1.5};
        case 'c': return {1.0, 0.0, 1.0, 1.0};
        case 'd': return {1.0, 0.0, 1.0, -1.0};
        case 'e': return {0.5, -0.5, 2.0, 0.0};
        case 'f': return {1.5, -0.5, 0.5, -0.5};
        default:
            throw config_error(std::string("unknown preset '") + letter +
                               "' (expected a..f)");
    }
}

int num_threads() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("DSW_NUM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

namespace {

// run f(i) for i in [0, n), work-stealing over num_threads() workers;
// the first exception wins and is rethrown on the caller
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const int nt = std::min<std::size_t>(std::size_t(num_threads()), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; i++) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < nt; k++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(err);
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    const std::string path = dir.empty() ? name : dir + "/" + name;
    std::ofstream os(path);
    if (!os) throw config_error("cannot open output file: " + path);
    os << std::setprecision(17);
    std::cout << path << "\n";
    return os;
}

json layout_json(const Invariants& v, const RegionLayout& lay) {
    json j;
    j["invariants"] = {{"llp", v.llp}, {"llm", v.llm},
                       {"lrp", v.lrp}, {"lrm", v.lrm}};
    j["case"] = case_name(lay.cs);
    j["boundaries"] = {lay.xi[0], lay.xi[1], lay.xi[2], lay.xi[3]};
    json regions = json::array();
    for (RegionKind k : lay.kinds) regions.push_back(region_name(k));
    j["regions"] = regions;
    return j;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i++)
        out[std::size_t(i)] = a + (b - a) * double(i) / double(n - 1);
    return out;
}

void check_scenario(const Scenario& sc) {
    if (sc.nx < 2) throw config_error("scenario: need nx >= 2");
    if (!(sc.xmin < sc.xmax))
        throw config_error("scenario: need xmin < xmax");
    for (double t : sc.times)
        if (!(t > 0.0)) throw config_error("scenario: times must be > 0");
    if (sc.times.empty()) throw config_error("scenario: no times given");
}

std::string time_tag(double t) {
    std::ostringstream os;
    os << t;
    std::string s = os.str();
    for (char& c : s)
        if (c == '.' || c == '-') c = '_';
    return s;
}

// accumulated density-error statistics of one region at one time
struct RegionErr {
    double linf = 0.0;
    double sum2 = 0.0;  // sum of squared errors times dx
    long n = 0;
};

}  // namespace

void cmd_classify(const StepData& s, std::ostream& os) {
    const Invariants v = hydro::invariants(s);
    const RegionLayout lay = hydro::region_layout(v);
    os << layout_json(v, lay).dump(2) << "\n";
}

void cmd_asym(const Scenario& sc, const std::string& out_dir) {
    check_scenario(sc);
    const asym::Context ctx(sc.step);
    std::ofstream os = open_out(out_dir, "asym_" + sc.label + ".csv");
    os << "x,t,xi,region,re_q,im_q,density,err_order\n";
    const std::vector<double> xs = linspace(sc.xmin, sc.xmax, sc.nx);
    for (double t : sc.times) {
        std::vector<asym::AsymSample> row(xs.size());
        parallel_for(xs.size(),
                     [&](std::size_t i) { row[i] = ctx.eval(xs[i], t); });
        for (const auto& sm : row)
            os << sm.x << ',' << sm.t << ',' << sm.xi << ','
               << region_name(sm.region) << ',' << sm.q.real() << ','
               << sm.q.imag() << ',' << sm.density << ',' << sm.err_order
               << "\n";
    }
}

void cmd_simulate(const Scenario& sc, const std::string& out_dir) {
    check_scenario(sc);
    nlssim::SimConfig cfg = sc.sim;
    cfg.snapshot_ts = sc.times;
    cfg.t_end = *std::max_element(sc.times.begin(), sc.times.end());
    const nlssim::RunResult res = nlssim::run(cfg, sc.step);

    json manifest;
    manifest["label"] = sc.label;
    manifest["step"] = {{"Al", sc.step.Al}, {"mul", sc.step.mul},
                        {"Ar", sc.step.Ar}, {"mur", sc.step.mur}};
    manifest["config"] = {{"L", cfg.L}, {"N", cfg.N}, {"dt", cfg.dt},
                          {"smooth_w", cfg.smooth_w}, {"t_end", cfg.t_end}};
    manifest["vmax"] = res.vmax;
    manifest["norm_drift"] = res.norm_drift;
    manifest["snapshots"] = json::array();

    for (std::size_t k = 0; k < res.snapshots.size(); k++) {
        const nlssim::Snapshot& snap = res.snapshots[k];
        std::ofstream os = open_out(
            out_dir,
            "sim_" + sc.label + "_t" + time_tag(snap.t_requested) + ".csv");
        os << "x,re_q,im_q\n";
        for (std::size_t j = 0; j < res.x.size(); j++)
            os << res.x[j] << ',' << snap.q[j].real() << ','
               << snap.q[j].imag() << "\n";
        manifest["snapshots"].push_back({{"t_requested", snap.t_requested},
                                         {"t", snap.t},
                                         {"trust_halfwidth", snap.trust}});
    }
    open_out(out_dir, "sim_" + sc.label + "_manifest.json")
        << manifest.dump(2) << "\n";
}

void cmd_compare(const Scenario& sc, const std::string& out_dir) {
    check_scenario(sc);
    const asym::Context ctx(sc.step);

    nlssim::SimConfig cfg = sc.sim;
    cfg.snapshot_ts = sc.times;
    cfg.t_end = *std::max_element(sc.times.begin(), sc.times.end());
    const nlssim::RunResult res = nlssim::run(cfg, sc.step);
    const double dx = 2.0 * cfg.L / double(cfg.N);

    json summary;
    summary["label"] = sc.label;
    summary["norm_drift"] = res.norm_drift;
    summary["snapshots"] = json::array();
    // Linf per plane-wave region per time, for the decay-ratio report
    std::map<std::string, std::map<double, double>> pw_linf;

    for (const nlssim::Snapshot& snap : res.snapshots) {
        const double t = snap.t;
        const double lo = std::max(sc.xmin, -snap.trust);
        const double hi = std::min(sc.xmax, snap.trust);
        if (!(lo < hi))
            throw config_error(
                "compare: x-range does not intersect the trust window");

        // sample on sim grid points nearest to an even subdivision
        std::vector<std::size_t> idx;
        idx.reserve(std::size_t(sc.nx));
        long prev = -1;
        for (double x : linspace(lo, hi, sc.nx)) {
            const long j = std::lround((x + cfg.L) / dx);
            if (j != prev && j >= 0 && j < long(cfg.N))
                idx.push_back(std::size_t(j));
            prev = j;
        }

        std::vector<double> da(idx.size());
        parallel_for(idx.size(), [&](std::size_t i) {
            da[i] = ctx.eval(res.x[idx[i]], t).density;
        });

        std::ofstream os = open_out(
            out_dir,
            "compare_" + sc.label + "_t" + time_tag(snap.t_requested) +
                ".csv");
        os << "x,density_num,density_asym,abs_err,region\n";
        std::map<std::string, RegionErr> stats;
        const double ds = (hi - lo) / double(sc.nx - 1);
        for (std::size_t i = 0; i < idx.size(); i++) {
            const double x = res.x[idx[i]];
            const double dn = std::norm(snap.q[idx[i]]);
            const double err = std::abs(dn - da[i]);
            const char* reg =
                region_name(hydro::region_at(ctx.layout(), x / t));
            os << x << ',' << dn << ',' << da[i] << ',' << err << ',' << reg
               << "\n";
            RegionErr& re = stats[reg];
            re.linf = std::max(re.linf, err);
            re.sum2 += err * err * ds;
            re.n++;
        }

        json jsnap;
        jsnap["t"] = t;
        jsnap["trust_halfwidth"] = snap.trust;
        for (const auto& [name, re] : stats) {
            jsnap["regions"][name] = {{"linf", re.linf},
                                      {"l2", std::sqrt(re.sum2)},
                                      {"samples", re.n}};
            if (name == std::string("left_plane") ||
                name == std::string("right_plane"))
                pw_linf[name][snap.t_requested] = re.linf;
        }
        summary["snapshots"].push_back(jsnap);
    }

    summary["decay"] = json::array();
    for (const auto& [name, by_t] : pw_linf)
        for (const auto& [t1, e1] : by_t) {
            const auto it = by_t.find(2.0 * t1);
            if (it != by_t.end() && it->second > 0.0)
                summary["decay"].push_back({{"region", name},
                                            {"t", t1},
                                            {"t2", it->first},
                                            {"ratio", e1 / it->second}});
        }
    open_out(out_dir, "compare_" + sc.label + "_summary.json")
        << summary.dump(2) << "\n";
}

int run_main(int argc, char** argv) {
    CLI::App app{"Riemann-problem asymptotics for the defocusing NLS "
                 "equation: classification, closed-form long-time profiles, "
                 "split-step simulation, and comparisons"};
    app.require_subcommand(1);

    Scenario sc;
    std::string preset_name, out_dir;
    double t_end = -1.0;

    auto add_step = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name,
                        "built-in step preset a..f");
        cmd->add_option("--Al", sc.step.Al, "left amplitude");
        cmd->add_option("--mul", sc.step.mul, "left wavenumber parameter");
        cmd->add_option("--Ar", sc.step.Ar, "right amplitude");
        cmd->add_option("--mur", sc.step.mur, "right wavenumber parameter");
    };
    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--t", sc.times, "evaluation times");
        cmd->add_option("--xmin", sc.xmin, "left end of the x range");
        cmd->add_option("--xmax", sc.xmax, "right end of the x range");
        cmd->add_option("--nx", sc.nx, "number of x samples");
        cmd->add_option("--out", out_dir, "output directory");
    };
    auto add_sim = [&](CLI::App* cmd) {
        cmd->add_option("--L", sc.sim.L, "half-domain length");
        cmd->add_option("--N", sc.sim.N, "grid size (power of two)");
        cmd->add_option("--dt", sc.sim.dt, "time step");
        cmd->add_option("--t-end", t_end, "final time");
    };

    CLI::App* c_classify = app.add_subcommand(
        "classify", "classify the step and print the region layout");
    add_step(c_classify);

    CLI::App* c_asym = app.add_subcommand(
        "asym", "sample the leading-order asymptotic solution");
    add_step(c_asym);
    add_range(c_asym);

    CLI::App* c_sim = app.add_subcommand(
        "simulate", "run the split-step simulation and save snapshots");
    add_step(c_sim);
    add_range(c_sim);
    add_sim(c_sim);

    CLI::App* c_cmp = app.add_subcommand(
        "compare", "compare simulated and asymptotic densities");
    add_step(c_cmp);
    add_range(c_cmp);
    add_sim(c_cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!preset_name.empty()) {
            if (preset_name.size() != 1)
                throw config_error("preset must be a single letter a..f");
            sc.step = preset(preset_name[0]);
            sc.label = preset_name;
        }
        if (t_end > 0.0 && sc.times == std::vector<double>{20.0})
            sc.times = {t_end};
        std::cout << std::setprecision(17);
        if (c_classify->parsed())
            cmd_classify(sc.step, std::cout);
        else if (c_asym->parsed())
            cmd_asym(sc, out_dir);
        else if (c_sim->parsed())
            cmd_simulate(sc, out_dir);
        else
            cmd_compare(sc, out_dir);
        return 0;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace dsw::cli
