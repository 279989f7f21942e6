#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsw/nlssim.hpp"
#include "dsw/types.hpp"

// Command-line front end: classification reports, asymptotic sampling,
// simulation snapshots, and asymptotics-vs-simulation comparison tables,
// emitted as CSV plus JSON manifests.

namespace dsw::cli {

struct Scenario {
    StepData step;
    std::vector<double> times{20.0};  // all > 0
    double xmin = -100.0;
    double xmax = 100.0;
    int nx = 2001;
    nlssim::SimConfig sim;
    std::string label = "custom";
};

// built-in step presets 'a'..'f' (one per classification case)
StepData preset(char letter);

// worker count: min(DSW_NUM_THREADS, hardware), at least 1
int num_threads();

// Subcommand bodies. classify writes its JSON report to the stream; the
// others write CSV/JSON files into out_dir and print the file list.
void cmd_classify(const StepData& s, std::ostream& os);
void cmd_asym(const Scenario& sc, const std::string& out_dir);
void cmd_simulate(const Scenario& sc, const std::string& out_dir);
void cmd_compare(const Scenario& sc, const std::string& out_dir);

// Full argument parsing and dispatch; returns the process exit code
// (0 success, 2 configuration error, 3 internal consistency failure).
int run_main(int argc, char** argv);

}  // namespace dsw::cli
