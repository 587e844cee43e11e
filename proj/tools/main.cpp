#include "trajsimp/datagen.hpp"
#include "trajsimp/errors.hpp"
#include "trajsimp/harness.hpp"
#include "trajsimp/io.hpp"
#include "trajsimp/metrics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace trajsimp;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInvariant = 3;

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::vector<Algorithm> parse_algorithms(const std::string& text)
{
    if (text == "all")
        return {Algorithm::Dp, Algorithm::Opw, Algorithm::Fbqs, Algorithm::Operb, Algorithm::OperbA};
    std::vector<Algorithm> out;
    for (const std::string& name : split_list(text))
        out.push_back(parse_algorithm(name));
    if (out.empty())
        throw ConfigError("no algorithms given");
    return out;
}

std::vector<double> parse_zetas(const std::string& text)
{
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw ConfigError("'" + item + "' is not a number");
        out.push_back(v);
    }
    return out;
}

struct CorpusOptions {
    std::string input;
    bool geo = false;
    std::string kind = "random_walk";
    std::size_t n = 1000;
    std::size_t count = 10;
    std::uint64_t seed = 1;
    double step = 5.0;
};

void add_generator_flags(CLI::App* cmd, CorpusOptions& o)
{
    cmd->add_option("--kind", o.kind, "Generator: random_walk, grid_route or stepwise_adversarial");
    cmd->add_option("--n", o.n, "Points per generated trajectory");
    cmd->add_option("--count", o.count, "Number of generated trajectories");
    cmd->add_option("--seed", o.seed, "Generator seed");
    cmd->add_option("--step", o.step, "Generator step length in meters");
}

std::vector<NamedTrajectory> generate_corpus(const CorpusOptions& o, double zeta)
{
    GenSpec spec;
    spec.kind = parse_gen_kind(o.kind);
    spec.n = o.n;
    spec.step = o.step;
    spec.zeta = zeta;
    std::vector<NamedTrajectory> out;
    SplitMix64 seeds(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) {
        spec.seed = seeds();
        out.push_back({to_string(spec.kind) + "_" + std::to_string(i), generate(spec)});
    }
    return out;
}

std::vector<NamedTrajectory> load_corpus(const CorpusOptions& o)
{
    if (!o.input.empty())
        return ingest_csv(o.input, o.geo);
    return generate_corpus(o, 10.0);
}

std::vector<Trajectory> points_of(const std::vector<NamedTrajectory>& named)
{
    std::vector<Trajectory> out;
    out.reserve(named.size());
    for (const NamedTrajectory& nt : named)
        out.push_back(nt.points);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Error-bounded trajectory simplification"};
    app.require_subcommand(1);

    std::string algo = "operb";
    std::string algos = "all";
    double epsilon = 40.0;
    std::string epsilon_list = "5,20,40,100";
    double gamma_m = kPi / 3.0;
    std::string opts = "all";
    std::string output;
    std::string segments;
    int threads = 1;
    CorpusOptions corpus;

    CLI::App* compress_cmd = app.add_subcommand("compress", "Compress a CSV of trajectories into segments");
    compress_cmd->add_option("--input", corpus.input, "Input CSV (traj_id,t,x,y)")->required();
    compress_cmd->add_option("--output", output, "Output segment CSV (default stdout)");
    compress_cmd->add_option("--algo", algo, "dp, opw, fbqs, operb, operb-a, raw-operb or raw-operb-a");
    compress_cmd->add_option("--epsilon", epsilon, "Error bound zeta in meters");
    compress_cmd->add_option("--gamma-m", gamma_m, "Patching angle gamma_m in radians");
    compress_cmd->add_option("--opts", opts, "Optimizations: all, none, or five 0/1 digits O1..O5");
    compress_cmd->add_flag("--geo", corpus.geo, "Input x/y are longitude/latitude degrees");
    compress_cmd->add_option("--threads", threads, "Worker threads");

    CLI::App* compare_cmd = app.add_subcommand("compare", "Compare algorithms over a corpus");
    compare_cmd->add_option("--input", corpus.input, "Input CSV; a generated corpus is used when omitted");
    compare_cmd->add_option("--output", output, "JSON report path");
    compare_cmd->add_option("--algo", algos, "Comma-separated algorithms or 'all'");
    compare_cmd->add_option("--epsilon-list", epsilon_list, "Comma-separated error bounds in meters");
    compare_cmd->add_option("--gamma-m", gamma_m, "Patching angle gamma_m in radians");
    compare_cmd->add_option("--opts", opts, "Optimizations: all, none, or five 0/1 digits O1..O5");
    compare_cmd->add_flag("--geo", corpus.geo, "Input x/y are longitude/latitude degrees");
    compare_cmd->add_option("--threads", threads, "Worker threads");
    add_generator_flags(compare_cmd, corpus);

    CLI::App* gen_cmd = app.add_subcommand("gen", "Write a synthetic corpus as CSV");
    gen_cmd->add_option("--output", output, "Output CSV (default stdout)");
    gen_cmd->add_option("--epsilon", epsilon, "Error bound for stepwise_adversarial");
    add_generator_flags(gen_cmd, corpus);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check segments against the error bound");
    verify_cmd->add_option("--input", corpus.input, "Original trajectories CSV")->required();
    verify_cmd->add_option("--segments", segments, "Segment CSV written by compress")->required();
    verify_cmd->add_option("--epsilon", epsilon, "Error bound zeta in meters");
    verify_cmd->add_flag("--geo", corpus.geo, "Input x/y are longitude/latitude degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compress_cmd) {
            const Algorithm a = parse_algorithm(algo);
            const FitConfig cfg = fit_config_for(a, epsilon, gamma_m, Optimizations::parse(opts));
            if (threads < 1)
                throw ConfigError("threads must be at least 1");
            const std::vector<NamedTrajectory> named = ingest_csv(corpus.input, corpus.geo);
            const std::vector<Representation> reps = compress_corpus_parallel(a, points_of(named), cfg, threads);
            std::vector<NamedRepresentation> out;
            for (std::size_t i = 0; i < named.size(); ++i)
                out.push_back({named[i].id, reps[i]});
            if (output.empty())
                emit_segments(std::cout, out);
            else
                emit_segments(output, out);
        } else if (*compare_cmd) {
            RunConfig cfg;
            cfg.algorithms = parse_algorithms(algos);
            cfg.zetas = parse_zetas(epsilon_list);
            cfg.gamma_m = gamma_m;
            cfg.opts = Optimizations::parse(opts);
            cfg.threads = threads;
            cfg.validate();
            cfg.corpus_name = corpus.input.empty() ? "generated:" + corpus.kind : corpus.input;
            const std::vector<NamedTrajectory> named = load_corpus(corpus);
            const CompareReport report = run_compare(points_of(named), cfg);
            print_table(std::cout, report);
            if (!output.empty()) {
                std::ofstream f(output);
                if (!(f << report_json(report)))
                    throw DataError("cannot write report to '" + output + "'");
            }
        } else if (*gen_cmd) {
            const std::vector<NamedTrajectory> named = generate_corpus(corpus, epsilon);
            if (output.empty())
                write_trajectories_csv(std::cout, named);
            else
                write_trajectories_csv(output, named);
        } else if (*verify_cmd) {
            if (!(epsilon > 0.0))
                throw ConfigError("error bound must be positive");
            const std::vector<NamedTrajectory> named = ingest_csv(corpus.input, corpus.geo);
            const std::vector<NamedRepresentation> reps = read_segments(segments);
            std::size_t bad = 0;
            for (const NamedTrajectory& nt : named) {
                const NamedRepresentation* match = nullptr;
                for (const NamedRepresentation& nr : reps)
                    if (nr.id == nt.id)
                        match = &nr;
                if (!match)
                    throw DataError("no segments for trajectory '" + nt.id + "'");
                const BoundCheck check = verify_error_bound(match->rep, nt.points, epsilon);
                for (const BoundViolation& v : check.violations)
                    std::cout << nt.id << ": point " << v.index << " is " << format_number(v.distance)
                              << " m from its segment\n";
                bad += check.violations.size();
            }
            std::cout << (bad == 0 ? "ok" : "violations: " + std::to_string(bad)) << '\n';
            if (bad != 0)
                return kExitInvariant;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const PreconditionError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
