/**
 * @file alcs_main.cpp
 * @brief Command-line front end: ingest strings, dispatch a solver, emit a
 *        report. Exit codes: 0 solved (or generation done), 3 no solution
 *        within the budget, 2 usage or runtime error.
 */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "alcs/gadgets.hpp"
#include "alcs/indeterminate.hpp"
#include "alcs/io.hpp"
#include "alcs/oracle.hpp"
#include "alcs/solver.hpp"

namespace {

struct RunConfig {
    std::string input;
    std::string format = "lines";
    bool indeterminate = false;
    bool no_lowercase = false;
    std::string problem = "rkt-lcs";
    std::string metric = "hamming";
    std::string costs;
    long long k = 0;
    int t = -1; ///< -1 = default to m
    std::string solver = "lengthstat";
    int threads = 1;
    std::string output = "human";
};

struct GadgetConfig {
    std::string kind;
    int sets = 2;
    int nv = 2;
    int dim = 2;
    int q = 1;
    unsigned long long seed = 1;
    bool plant = false;
    std::string out = "gadget.txt";
    std::string sidecar;
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return 2;
}

alcs::oracle::OracleBudget budget_from_env() {
    alcs::oracle::OracleBudget b;
    if (const char* v = std::getenv("ALCS_ORACLE_MAX_ELL")) b.max_ell = std::atoi(v);
    if (const char* v = std::getenv("ALCS_ORACLE_MAX_M")) b.max_m = std::atoi(v);
    if (const char* v = std::getenv("ALCS_ORACLE_MAX_K")) b.max_k = std::atoll(v);
    if (const char* v = std::getenv("ALCS_ORACLE_MAX_ENUM"))
        b.max_enum = std::atoll(v);
    return b;
}

alcs::Problem problem_tag(const std::string& name) {
    if (name == "rk-lcs") return alcs::Problem::RkLCS;
    if (name == "rk-lcss") return alcs::Problem::RkLCSS;
    if (name == "elcs") return alcs::Problem::ELCS;
    return alcs::Problem::RktLCS;
}

std::optional<alcs::Solution> oracle_rkt(const alcs::StringSet& S, long long k,
                                         int t, const alcs::DistanceMetric& metric,
                                         alcs::Problem tag) {
    const auto budget = budget_from_env();
    const auto b = alcs::oracle::brute_rkt_lcs(S, k, t, metric, budget);
    if (!b) return std::nullopt;
    alcs::Solution s;
    s.problem = tag;
    s.length = b->length;
    s.answers = {b->answer};
    s.source_index = b->source_index;
    s.source_offset = b->source_offset;
    s.k = k;
    s.t = t;
    s.metric = metric.kind();
    s.support = b->support;
    for (int j : b->members) {
        const auto w = alcs::oracle::brute_k_approx_occurs(
            b->answer, S.strings[static_cast<size_t>(j - 1)], k, metric);
        s.witnesses.push_back(alcs::Witness{j, w->start, w->end, w->distance,
                                            w->start > w->end});
    }
    return s;
}

std::optional<alcs::Solution> oracle_lcss(const alcs::StringSet& S, long long k) {
    const auto budget = budget_from_env();
    const auto b = alcs::oracle::brute_rk_lcss(S, k, budget);
    if (!b) return std::nullopt;
    alcs::Solution s;
    s.problem = alcs::Problem::RkLCSS;
    s.length = b->length;
    s.answers = b->members;
    s.k = k;
    s.t = S.m;
    s.metric = alcs::MetricKind::Hamming;
    s.support = S.m;
    s.source_index = 1;
    s.source_offset = b->offsets[0];
    for (int i = 0; i < S.m; ++i) {
        long long worst = 0;
        for (int j = 0; j < S.m; ++j)
            if (j != i)
                worst = std::max(
                    worst, alcs::hamming_distance(
                               b->members[static_cast<size_t>(i)],
                               b->members[static_cast<size_t>(j)]));
        s.witnesses.push_back(
            alcs::Witness{i + 1, b->offsets[static_cast<size_t>(i)],
                          b->offsets[static_cast<size_t>(i)] + b->length - 1,
                          worst, false});
    }
    return s;
}

int emit_report(const alcs::io::RunReport& report, const std::string& format) {
    if (format == "json")
        std::cout << alcs::io::report_json(report);
    else if (format == "tsv")
        std::cout << alcs::io::report_tsv(report);
    else
        std::cout << alcs::io::report_human(report);
    return report.solved ? 0 : 3;
}

int run_solve(const RunConfig& cfg) {
    if (cfg.input.empty()) return usage_error("--input is required");
    if (cfg.k < 0) return usage_error("--k must be >= 0");
    if (cfg.threads < 1) return usage_error("--threads must be >= 1");
    if (cfg.problem == "elcs" && cfg.k != 0)
        return usage_error("elcs is the exact problem; --k must stay 0");
    if (cfg.metric == "weighted" && cfg.costs.empty())
        return usage_error("--metric weighted requires --costs");
    if (!cfg.costs.empty() && cfg.metric != "weighted")
        return usage_error("--costs only applies to --metric weighted");

    alcs::DistanceMetric metric = alcs::DistanceMetric::hamming();
    if (cfg.metric == "edit") metric = alcs::DistanceMetric::edit();
    if (cfg.metric == "weighted") metric = alcs::io::load_cost_table(cfg.costs);

    std::vector<std::string> raw;
    std::vector<std::string> names;
    if (cfg.format == "fasta") {
        for (auto& rec : alcs::io::read_fasta(cfg.input, !cfg.no_lowercase)) {
            names.push_back(rec.name);
            raw.push_back(std::move(rec.sequence));
        }
    } else {
        raw = alcs::io::read_lines(cfg.input);
    }
    const int m = static_cast<int>(raw.size());
    const int t = cfg.t < 0 ? m : cfg.t;
    if (cfg.problem == "rk-lcs" && t != m)
        return usage_error("rk-lcs requires an occurrence in every string; "
                           "omit --t or pass --t " + std::to_string(m));

    alcs::io::RunReport report;
    report.problem = cfg.problem;
    report.metric = cfg.metric;
    report.solver = cfg.solver;
    report.k = cfg.k;
    report.t = t;
    report.m = m;
    report.threads = cfg.threads;
    report.string_names = names;

    const alcs::Problem tag = problem_tag(cfg.problem);
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<alcs::Solution> sol;

    if (cfg.indeterminate) {
        if (cfg.metric != "hamming")
            return usage_error("degenerate sequences support mismatch "
                               "counting only");
        if (cfg.problem == "rk-lcss")
            return usage_error("rk-lcss is not defined on degenerate "
                               "sequences here");
        if (cfg.solver != "lengthstat")
            return usage_error("degenerate sequences run on the lengthstat "
                               "solver only");
        const alcs::Alphabet alpha("acgt");
        std::vector<alcs::IndeterminateString> tilde;
        for (const auto& s : raw)
            tilde.push_back(
                alcs::make_indeterminate(alcs::io::expand_iupac(s), alpha));
        sol = alcs::solve_rkt_lcs_indet(tilde, alpha, cfg.k, t, tag);
    } else if (cfg.problem == "rk-lcss") {
        if (cfg.solver == "maxlcp" || cfg.solver == "subsets")
            return usage_error("rk-lcss runs on the clique solver or the "
                               "oracle");
        alcs::StringSet S = alcs::validate_string_set(
            raw, alcs::Alphabet::from_used_letters(raw));
        sol = cfg.solver == "oracle" ? oracle_lcss(S, cfg.k)
                                     : alcs::solve_rk_lcss(S, cfg.k, metric);
    } else {
        alcs::StringSet S = alcs::validate_string_set(
            raw, alcs::Alphabet::from_used_letters(raw));
        alcs::SolverOptions options;
        options.threads = cfg.threads;
        if (cfg.solver == "lengthstat") {
            sol = alcs::solve_rkt_lcs(S, cfg.k, t, metric, options);
        } else if (cfg.solver == "maxlcp") {
            if (t != S.m)
                return usage_error("the maxlcp solver answers the "
                                   "all-strings problem; --t must equal m");
            sol = alcs::solve_rk_lcs_maxlcp(S, cfg.k, metric, options);
        } else if (cfg.solver == "subsets") {
            sol = alcs::solve_rkt_lcs_via_subsets(S, cfg.k, t, metric, options);
        } else if (cfg.solver == "oracle") {
            sol = oracle_rkt(S, cfg.k, t, metric, tag);
        } else {
            return usage_error("unknown solver '" + cfg.solver + "'");
        }
        if (sol) sol->problem = tag;
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.solved = sol.has_value();
    report.solution = std::move(sol);
    return emit_report(report, cfg.output);
}

int run_gen(const GadgetConfig& cfg) {
    if (cfg.dim < 1) return usage_error("--d must be >= 1");
    if (cfg.nv < 1) return usage_error("--nv must be >= 1");
    if (cfg.q < 1) return usage_error("--q must be >= 1");
    const int min_sets = cfg.kind == "rklcss" ? 2 : 1;
    if (cfg.sets < min_sets)
        return usage_error("--M must be >= " + std::to_string(min_sets) +
                           " for " + cfg.kind);

    alcs::oracle::VecFamily X = alcs::gadgets::random_family(
        cfg.sets, cfg.nv, cfg.dim, cfg.seed);
    if (cfg.plant) {
        if (cfg.kind == "rklcs")
            alcs::gadgets::plant_zero_vector(X, 1);
        else
            alcs::gadgets::plant_zero_everywhere(X);
    }
    const alcs::gadgets::GadgetInstance inst =
        cfg.kind == "rklcs" ? alcs::gadgets::build_rklcs_instance(X, cfg.q)
                            : alcs::gadgets::build_rklcss_instance(X, cfg.q);
    alcs::io::write_lines(cfg.out, inst.strings);

    nlohmann::json j;
    j["schema_version"] = 1;
    j["command"] = "gen-gadget";
    j["kind"] = cfg.kind;
    j["sets"] = cfg.sets;
    j["vectors_per_set"] = cfg.nv;
    j["dim"] = cfg.dim;
    j["q"] = cfg.q;
    j["seed"] = cfg.seed;
    j["planted"] = cfg.plant;
    j["m"] = inst.m;
    j["k"] = inst.k;
    j["threshold_yes_at_least"] = inst.yes_at_least;
    j["threshold_no_below"] = inst.no_below;
    if (inst.yes_at_least == inst.no_below) j["threshold"] = inst.yes_at_least;
    j["strings_file"] = cfg.out;
    long long total = 0;
    for (const auto& s : inst.strings) total += static_cast<long long>(s.size());
    j["total_length"] = total;

    const std::string sidecar =
        cfg.sidecar.empty() ? cfg.out + ".json" : cfg.sidecar;
    {
        std::ofstream out(sidecar);
        if (!out)
            return usage_error("cannot open '" + sidecar + "' for writing");
        out << j.dump(2) << '\n';
    }
    std::cout << "wrote " << inst.m << " strings (" << total << " letters) to "
              << cfg.out << ", sidecar " << sidecar << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate longest-common-substring toolkit"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.add_option("--input", cfg.input, "path to the strings file");
    app.add_option("--format", cfg.format, "input format (default lines)")
        ->check(CLI::IsMember({"lines", "fasta"}));
    app.add_flag("--indeterminate", cfg.indeterminate,
                 "expand degenerate nucleotide codes into letter-sets");
    app.add_flag("--no-lowercase", cfg.no_lowercase,
                 "keep FASTA sequences as written");
    app.add_option("--problem", cfg.problem, "problem to solve")
        ->check(CLI::IsMember({"rk-lcs", "rkt-lcs", "rk-lcss", "elcs"}));
    app.add_option("--metric", cfg.metric, "distance metric")
        ->check(CLI::IsMember({"hamming", "edit", "weighted"}));
    app.add_option("--costs", cfg.costs, "weighted-edit cost table (TSV)");
    app.add_option("--k", cfg.k, "distance budget (default 0)");
    app.add_option("--t", cfg.t, "occurrence threshold (default: all strings)");
    app.add_option("--solver", cfg.solver, "solver backend")
        ->check(CLI::IsMember({"lengthstat", "maxlcp", "subsets", "oracle"}));
    app.add_option("--threads", cfg.threads, "worker count (default 1)");
    app.add_option("--output", cfg.output, "report format (default human)")
        ->check(CLI::IsMember({"json", "tsv", "human"}));

    GadgetConfig gcfg;
    CLI::App* gen = app.add_subcommand(
        "gen-gadget", "write a vector-search encoding and its sidecar");
    gen->add_option("kind", gcfg.kind, "encoding kind")
        ->required()
        ->check(CLI::IsMember({"rklcs", "rklcss"}));
    gen->add_option("--M,--m", gcfg.sets, "number of vector sets");
    gen->add_option("--nv", gcfg.nv, "vectors per set");
    gen->add_option("--d", gcfg.dim, "vector dimension");
    gen->add_option("--q", gcfg.q, "separator multiplicity (default 1)");
    gen->add_option("--seed", gcfg.seed, "random seed (default 1)");
    gen->add_flag("--plant", gcfg.plant,
                  "plant zero vectors so the encoded answer is yes");
    gen->add_option("--out", gcfg.out, "strings file (default gadget.txt)");
    gen->add_option("--sidecar", gcfg.sidecar,
                    "sidecar path (default <out>.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gcfg);
        return run_solve(cfg);
    } catch (const alcs::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
