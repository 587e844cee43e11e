#pragma once

#include "trajsimp/fitting.hpp"
#include "trajsimp/metrics.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace trajsimp {

// raw-operb and raw-operb-a run the one-pass algorithms with every
// optimization off, whatever the configured flags say.
enum class Algorithm { Dp, Opw, Fbqs, Operb, OperbA, RawOperb, RawOperbA };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algo);
const std::vector<Algorithm>& all_algorithms();

struct RunConfig {
    std::vector<Algorithm> algorithms;
    std::vector<double> zetas;
    double gamma_m = kPi / 3.0;
    Optimizations opts;
    int threads = 1;
    std::string corpus_name;

    // Throws ConfigError on empty lists, non-positive zeta, bad gamma_m or
    // threads < 1.
    void validate() const;
};

FitConfig fit_config_for(Algorithm algo, double zeta, double gamma_m, const Optimizations& opts);

Representation compress(Algorithm algo, const Trajectory& traj, const FitConfig& cfg);

// Reference kernel: one trajectory after another on the calling thread.
std::vector<Representation> compress_corpus_serial(Algorithm algo, const std::vector<Trajectory>& corpus,
                                                   const FitConfig& cfg);

// One task per trajectory across `threads` OpenMP workers. Results are
// identical to the serial kernel; only the schedule differs.
std::vector<Representation> compress_corpus_parallel(Algorithm algo, const std::vector<Trajectory>& corpus,
                                                     const FitConfig& cfg, int threads);

struct CompareResult {
    Algorithm algo;
    double zeta;
    CompressionStats stats;
};

struct CompareReport {
    std::string corpus;
    RunConfig config;
    std::vector<CompareResult> results;
};

// Runs every (algorithm, zeta) pair over the corpus. wall_time covers the
// compression loop only.
CompareReport run_compare(const std::vector<Trajectory>& corpus, const RunConfig& cfg);

// JSON object {corpus, config, results: [{algo, zeta, stats...}]}.
std::string report_json(const CompareReport& report, bool include_timing = true);

void print_table(std::ostream& out, const CompareReport& report);

} // namespace trajsimp
