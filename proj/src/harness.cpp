#include "trajsimp/harness.hpp"

#include "trajsimp/baselines.hpp"
#include "trajsimp/errors.hpp"
#include "trajsimp/onepass.hpp"

#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>

namespace trajsimp {

namespace {

struct AlgoName {
    Algorithm algo;
    const char* name;
};

constexpr AlgoName kNames[] = {
    {Algorithm::Dp, "dp"},
    {Algorithm::Opw, "opw"},
    {Algorithm::Fbqs, "fbqs"},
    {Algorithm::Operb, "operb"},
    {Algorithm::OperbA, "operb-a"},
    {Algorithm::RawOperb, "raw-operb"},
    {Algorithm::RawOperbA, "raw-operb-a"},
};

} // namespace

Algorithm parse_algorithm(const std::string& name)
{
    for (const AlgoName& a : kNames)
        if (name == a.name)
            return a.algo;
    throw ConfigError("unknown algorithm '" + name + "' (expected dp, opw, fbqs, operb, operb-a, raw-operb or raw-operb-a)");
}

std::string to_string(Algorithm algo)
{
    for (const AlgoName& a : kNames)
        if (algo == a.algo)
            return a.name;
    return "unknown";
}

const std::vector<Algorithm>& all_algorithms()
{
    static const std::vector<Algorithm> all{Algorithm::Dp,     Algorithm::Opw,      Algorithm::Fbqs,
                                            Algorithm::Operb,  Algorithm::OperbA,   Algorithm::RawOperb,
                                            Algorithm::RawOperbA};
    return all;
}

void RunConfig::validate() const
{
    if (algorithms.empty())
        throw ConfigError("no algorithms selected");
    if (zetas.empty())
        throw ConfigError("no error bounds given");
    for (double z : zetas)
        if (!(z > 0.0) || !std::isfinite(z))
            throw ConfigError("error bounds must be positive");
    if (!(gamma_m >= 0.0 && gamma_m <= kPi))
        throw ConfigError("gamma_m must lie in [0, pi]");
    if (threads < 1)
        throw ConfigError("threads must be at least 1");
}

FitConfig fit_config_for(Algorithm algo, double zeta, double gamma_m, const Optimizations& opts)
{
    FitConfig cfg;
    cfg.zeta = zeta;
    cfg.gamma_m = gamma_m;
    cfg.opts = (algo == Algorithm::RawOperb || algo == Algorithm::RawOperbA) ? Optimizations::none() : opts;
    cfg.validate();
    return cfg;
}

Representation compress(Algorithm algo, const Trajectory& traj, const FitConfig& cfg)
{
    switch (algo) {
    case Algorithm::Dp:
        return dp_simplify(traj, cfg.zeta);
    case Algorithm::Opw:
        return opw_simplify(traj, cfg.zeta);
    case Algorithm::Fbqs:
        return fbqs_simplify(traj, cfg.zeta);
    case Algorithm::Operb:
    case Algorithm::RawOperb:
        return simplify(traj, cfg, Mode::Operb);
    case Algorithm::OperbA:
    case Algorithm::RawOperbA:
        return simplify(traj, cfg, Mode::OperbA);
    }
    throw ConfigError("unknown algorithm");
}

std::vector<Representation> compress_corpus_serial(Algorithm algo, const std::vector<Trajectory>& corpus,
                                                   const FitConfig& cfg)
{
    std::vector<Representation> out;
    out.reserve(corpus.size());
    for (const Trajectory& t : corpus)
        out.push_back(compress(algo, t, cfg));
    return out;
}

std::vector<Representation> compress_corpus_parallel(Algorithm algo, const std::vector<Trajectory>& corpus,
                                                     const FitConfig& cfg, int threads)
{
    if (threads < 1)
        throw ConfigError("threads must be at least 1");
    std::vector<Representation> out(corpus.size());
    const long n = static_cast<long>(corpus.size());
    // Exceptions may not cross the parallel region; keep the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = compress(algo, corpus[static_cast<std::size_t>(i)], cfg);
        } catch (...) {
#pragma omp critical(trajsimp_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

CompareReport run_compare(const std::vector<Trajectory>& corpus, const RunConfig& cfg)
{
    cfg.validate();
    if (corpus.empty())
        throw DataError("corpus has no trajectories");
    CompareReport report;
    report.corpus = cfg.corpus_name;
    report.config = cfg;
    for (Algorithm algo : cfg.algorithms) {
        for (double zeta : cfg.zetas) {
            const FitConfig fc = fit_config_for(algo, zeta, cfg.gamma_m, cfg.opts);
            const auto t0 = std::chrono::steady_clock::now();
            const std::vector<Representation> reps = cfg.threads == 1
                                                         ? compress_corpus_serial(algo, corpus, fc)
                                                         : compress_corpus_parallel(algo, corpus, fc, cfg.threads);
            const auto t1 = std::chrono::steady_clock::now();
            CompareResult r{algo, zeta, summarize(reps, corpus)};
            r.stats.wall_time = std::chrono::duration<double>(t1 - t0).count();
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

std::string report_json(const CompareReport& report, bool include_timing)
{
    using nlohmann::ordered_json;
    ordered_json cfg;
    ordered_json algos = ordered_json::array();
    for (Algorithm a : report.config.algorithms)
        algos.push_back(to_string(a));
    cfg["algorithms"] = algos;
    cfg["zetas"] = report.config.zetas;
    cfg["gamma_m"] = report.config.gamma_m;
    cfg["opts"] = report.config.opts.to_string();
    cfg["threads"] = report.config.threads;
    cfg["ratio_unit"] = "segments / input points";

    ordered_json results = ordered_json::array();
    for (const CompareResult& r : report.results) {
        const CompressionStats& s = r.stats;
        ordered_json hist = ordered_json::object();
        for (const auto& [k, z] : s.histogram)
            hist[std::to_string(k)] = z;
        ordered_json block;
        block["algo"] = to_string(r.algo);
        block["zeta"] = r.zeta;
        block["trajectories"] = s.trajectories;
        block["input_points"] = s.input_points;
        block["output_segments"] = s.output_segments;
        block["output_points"] = s.output_points;
        block["ratio"] = s.ratio;
        block["avg_error"] = s.avg_error;
        block["max_error"] = s.max_error;
        block["anomalous"] = s.anomalous;
        block["anomalous_candidates"] = s.anomalous_candidates;
        block["patched"] = s.patched;
        block["patching_ratio"] = s.patching_ratio;
        block["histogram"] = hist;
        if (include_timing)
            block["wall_time"] = s.wall_time;
        results.push_back(block);
    }

    ordered_json doc;
    doc["corpus"] = report.corpus;
    doc["config"] = cfg;
    doc["results"] = results;
    return doc.dump(2) + "\n";
}

void print_table(std::ostream& out, const CompareReport& report)
{
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %8s %10s %10s %10s %10s %8s %8s %10s\n", "algo", "zeta", "segments",
                  "ratio", "avg_err", "max_err", "N_a", "N_p", "time_s");
    out << line;
    for (const CompareResult& r : report.results) {
        const CompressionStats& s = r.stats;
        std::snprintf(line, sizeof line, "%-12s %8.3g %10zu %10.4f %10.4f %10.4f %8zu %8zu %10.4f\n",
                      to_string(r.algo).c_str(), r.zeta, s.output_segments, s.ratio, s.avg_error, s.max_error,
                      s.anomalous_candidates, s.patched, s.wall_time);
        out << line;
    }
}

} // namespace trajsimp
