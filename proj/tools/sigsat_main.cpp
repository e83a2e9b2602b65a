// Command-line front end: analysis, bounding, decision, counting, oracle
// verification, and instance generation over DIMACS CNF files.
//
// Machine-readable JSON goes to stdout, a one-line human summary to stderr.
// Exit codes: 0 ok / non-decision, 10 satisfiable, 20 unsatisfiable,
// 30 candidate budget exceeded, 2 oracle mismatch, 1 error.

#include "sigsat/blocks.hpp"
#include "sigsat/counting.hpp"
#include "sigsat/decision.hpp"
#include "sigsat/dimacs.hpp"
#include "sigsat/errors.hpp"
#include "sigsat/formula.hpp"
#include "sigsat/generators.hpp"
#include "sigsat/hardness.hpp"
#include "sigsat/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace sigsat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitBudget = 30;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string big_str(const BigCount& v) { return to_decimal_string(v); }

/// Doubles can be infinite (log2 of an empty bound); JSON has no literal for
/// that, so emit null instead of letting the serializer decide.
ordered_json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

ordered_json instance_json(const Formula& f) {
    return ordered_json{{"variables", f.num_variables},
                        {"clauses", f.num_clauses()},
                        {"literals", f.num_literals()},
                        {"max_clause_width", f.max_clause_width()}};
}

ordered_json blocks_json(const BlockDecomposition& d, bool with_variables) {
    ordered_json table = ordered_json::array();
    for (const auto& blk : d.blocks) {
        ordered_json row{{"imbalance", blk.imbalance},
                         {"size", blk.size()},
                         {"literals", blk.literal_count}};
        if (with_variables) {
            ordered_json vars = ordered_json::array();
            for (int s : blk.variables) vars.push_back(s + 1);
            row["variables"] = std::move(vars);
        }
        table.push_back(std::move(row));
    }
    return ordered_json{{"sigma_min", d.sigma_min},
                        {"sigma_max", d.sigma_max},
                        {"balanced_variables", d.balanced_count()},
                        {"table", std::move(table)}};
}

ordered_json hardness_json(const HardnessReport& r) {
    return ordered_json{{"sigma0", r.sigma0},
                        {"bound", big_str(r.bound)},
                        {"log2_bound", finite_or_null(r.log2_bound)},
                        {"variables", r.num_variables},
                        {"log2_per_n", finite_or_null(r.log2_per_n)},
                        {"log2_per_sqrt_n", finite_or_null(r.log2_per_sqrt_n)},
                        {"threshold", r.threshold},
                        {"classification", r.classification}};
}

void emit(ordered_json& report, const Timer& timer) {
    report["timing"] = ordered_json{{"seconds", timer.seconds()}};
    std::cout << report.dump(2) << "\n";
}

Formula load(const std::string& path) { return parse_dimacs_file(path); }

PartitionSpec parse_spec_string(const std::string& text) {
    PartitionSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            spec.mu.push_back(static_cast<Count>(v));
        } catch (const std::exception&) {
            throw ValidationError("invalid partition spec entry '" + item +
                                  "' in \"" + text + "\"");
        }
    }
    if (spec.mu.empty() && !text.empty())
        throw ValidationError("empty partition spec \"" + text + "\"");
    return spec;
}

ordered_json spec_json(const PartitionSpec& spec) {
    ordered_json mu = ordered_json::array();
    for (Count v : spec.mu) mu.push_back(v);
    return mu;
}

int oracle_limit_from_env() {
    const char* raw = std::getenv("PSEUDOMODEL_ORACLE_LIMIT");
    if (raw == nullptr) return kDefaultOracleLimit;
    try {
        std::size_t used = 0;
        const int v = std::stoi(raw, &used);
        if (used != std::string(raw).size() || v < 1)
            throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(
            "PSEUDOMODEL_ORACLE_LIMIT must be a positive integer, got \"" +
            std::string(raw) + "\"");
    }
}

bool histogram_equals(const std::vector<Count>& hist, const std::vector<Count>& mu) {
    const std::size_t n = std::max(hist.size(), mu.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Count a = i < hist.size() ? hist[i] : 0;
        const Count b = i < mu.size() ? mu[i] : 0;
        if (a != b) return false;
    }
    return true;
}

enum class Mode { sigma, xsat, sat, part };

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::sigma: return "sigma";
        case Mode::xsat: return "xsat";
        case Mode::sat: return "sat";
        case Mode::part: return "part";
    }
    return "?";
}

/// Independent check that a claimed witness actually decides the query; the
/// tool refuses to exit 10 on the engine's word alone.
bool verify_witness(const Formula& f, Mode mode, const PartitionSpec& spec,
                    const Assignment& y) {
    const auto hist = clause_true_counts(f, y);
    if (mode == Mode::sat) return hist.empty() || hist[0] == 0;
    return histogram_equals(hist, spec.mu);
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::string& path, std::optional<Count> sigma_override,
                double threshold_constant) {
    Timer timer;
    const Formula f = load(path);
    const auto d = decompose(occurrence_profile(f));
    const auto gs = ground_assignment(occurrence_profile(f));
    const Count sigma0 = sigma_override.value_or(f.num_clauses());
    const auto hardness = hardness_report(f, sigma0, threshold_constant);

    ordered_json free_vars = ordered_json::array();
    for (int s : gs.free_indices) free_vars.push_back(s + 1);

    ordered_json report{
        {"command", "analyze"},
        {"input", path},
        {"instance", instance_json(f)},
        {"blocks", blocks_json(d, /*with_variables=*/true)},
        {"ground_state", ordered_json{{"assignment", assignment_to_string(gs.base)},
                                      {"sigma", d.sigma_min},
                                      {"free_variables", std::move(free_vars)}}},
        {"hardness", hardness_json(hardness)},
    };
    emit(report, timer);

    std::cerr << "analyze " << path << ": n=" << f.num_variables
              << " m=" << f.num_clauses() << " N=" << f.num_literals()
              << " | sigma in [" << d.sigma_min << ", " << d.sigma_max << "] | "
              << d.blocks.size() << " blocks + " << d.balanced_count()
              << " balanced | " << hardness.classification << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------ bound --

int run_bound(const std::string& path, Mode mode, std::optional<Count> sigma_arg,
              const std::string& part_arg) {
    Timer timer;
    const Formula f = load(path);
    const auto d = decompose(occurrence_profile(f));

    PartitionSpec spec;
    Count target = 0;
    BigCount value;
    if (mode == Mode::sigma) {
        target = *sigma_arg;
        value = count_pseudomodels(d, target);
    } else if (mode == Mode::xsat) {
        target = f.num_clauses();
        value = count_pseudomodels(d, target);
    } else if (mode == Mode::part) {
        spec = parse_spec_string(part_arg);
        validate_spec(f, spec);
        target = target_sigma(spec);
        value = count_pseudomodels(d, target);
    } else {
        target = f.num_clauses();
        value = sat_bound(d, target);
    }

    ordered_json bound{{"mode", mode_name(mode)},
                       {"target_sigma", target},
                       {"value", big_str(value)},
                       {"log2", finite_or_null(log2_big(value))}};
    if (mode == Mode::part) bound["spec"] = spec_json(spec);
    if (mode != Mode::sat && d.blocks.size() == 1) {
        const auto shortcut = single_block_bound(d, target);
        ordered_json sb{{"applicable", true}};
        if (std::holds_alternative<BigCount>(shortcut)) {
            sb["reachable"] = true;
            sb["value"] = big_str(std::get<BigCount>(shortcut));
        } else {
            sb["reachable"] = false;
            sb["certificate"] = std::get<XUnsatCertificate>(shortcut).reason;
        }
        bound["single_block"] = std::move(sb);
    }

    ordered_json report{{"command", "bound"},
                        {"input", path},
                        {"instance", instance_json(f)},
                        {"blocks", blocks_json(d, /*with_variables=*/false)},
                        {"bound", std::move(bound)}};
    emit(report, timer);

    std::cerr << "bound " << path << " [" << mode_name(mode)
              << "]: target sigma " << target << ", bound " << big_str(value)
              << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- decide --

int run_decide(const std::string& path, Mode mode, const std::string& part_arg,
               bool count_mode, std::uint64_t max_candidates, int jobs) {
    Timer timer;
    const Formula f = load(path);

    PartitionSpec spec;
    if (mode == Mode::part) {
        spec = parse_spec_string(part_arg);
        validate_spec(f, spec);
    } else if (mode == Mode::xsat) {
        spec = xsat_spec(f);
    }

    SearchOptions opts;
    opts.max_candidates = max_candidates;
    opts.jobs = jobs;

    const char* sat_label = mode == Mode::xsat   ? "XSAT"
                            : mode == Mode::part ? "PART-SAT"
                                                 : "SAT";
    const char* unsat_label = mode == Mode::xsat   ? "x-UNSAT"
                              : mode == Mode::part ? "part-UNSAT"
                                                   : "UNSAT";

    ordered_json report{{"command", "decide"},
                        {"input", path},
                        {"instance", instance_json(f)},
                        {"mode", mode_name(mode)}};
    if (mode == Mode::part) report["spec"] = spec_json(spec);

    if (count_mode) {
        CountResult r;
        if (mode == Mode::sat) {
            r = count_sat_models(f, opts);
        } else if (mode == Mode::xsat) {
            // degenerate all-empty-clause instances bypass spec validation
            r.bound = 0;
            if (!(f.num_clauses() > 0 && f.max_clause_width() == 0))
                r = count_part_models(f, spec, opts);
        } else {
            r = count_part_models(f, spec, opts);
        }

        report["count"] = ordered_json{{"models", big_str(r.models)},
                                       {"pseudomodels_examined", big_str(r.examined)},
                                       {"bound", big_str(r.bound)},
                                       {"budget_exceeded", r.budget_exceeded}};
        if (r.budget_exceeded) {
            report["verdict"] = ordered_json{{"status", "budget-exceeded"}};
            emit(report, timer);
            std::cerr << "decide --count " << path << " [" << mode_name(mode)
                      << "]: budget of " << max_candidates
                      << " candidates exceeded\n";
            return kExitBudget;
        }
        std::string label = unsat_label;
        int exit_code = kExitUnsat;
        ordered_json verdict{{"status", "unsatisfiable"}};
        if (r.models > 0) {
            // The count already proves satisfiability; rerun the sequential
            // search for the first witness so exit 10 carries evidence.
            const Verdict v = mode == Mode::sat ? decide_sat(f, opts)
                              : mode == Mode::xsat
                                  ? decide_xsat(f, opts)
                                  : decide_part_sat(f, spec, opts);
            if (!v.witness || !verify_witness(f, mode, spec, *v.witness))
                throw Error("internal: counted models but found no verifiable witness");
            verdict = ordered_json{{"status", "satisfiable"},
                                   {"witness", assignment_to_string(*v.witness)}};
            label = sat_label;
            exit_code = kExitSat;
        }
        report["verdict"] = std::move(verdict);
        emit(report, timer);
        std::cerr << "decide --count " << path << " [" << mode_name(mode)
                  << "]: " << label << ", " << big_str(r.models) << " models of "
                  << big_str(r.bound) << " pseudomodels\n";
        return exit_code;
    }

    const Verdict v = mode == Mode::sat    ? decide_sat(f, opts)
                      : mode == Mode::xsat ? decide_xsat(f, opts)
                                           : decide_part_sat(f, spec, opts);

    ordered_json verdict;
    int exit_code = kExitUnsat;
    std::string label = unsat_label;
    if (v.status == DecisionStatus::satisfiable) {
        if (!v.witness || !verify_witness(f, mode, spec, *v.witness))
            throw Error("internal: satisfiable verdict without verifiable witness");
        verdict["status"] = "satisfiable";
        verdict["witness"] = assignment_to_string(*v.witness);
        exit_code = kExitSat;
        label = sat_label;
    } else if (v.status == DecisionStatus::budget_exceeded) {
        verdict["status"] = "budget-exceeded";
        exit_code = kExitBudget;
        label = "budget exceeded";
    } else {
        verdict["status"] = "unsatisfiable";
    }
    verdict["label"] = label;
    verdict["pseudomodels_examined"] = big_str(v.pseudomodels_examined);
    verdict["bound"] = big_str(v.bound);
    report["verdict"] = std::move(verdict);
    emit(report, timer);

    std::cerr << "decide " << path << " [" << mode_name(mode) << "]: " << label
              << " after " << big_str(v.pseudomodels_examined) << " of "
              << big_str(v.bound) << " candidates\n";
    return exit_code;
}

// ----------------------------------------------------------------- oracle --

int run_oracle(const std::string& path, Mode mode, bool sweep,
               std::optional<Count> sigma_arg, const std::string& part_arg,
               bool corrupt) {
    Timer timer;
    const Formula f = load(path);
    const int limit = oracle_limit_from_env();
    const auto d = decompose(occurrence_profile(f));

    // Deliberate off-by-one on the engine side, so the mismatch path is
    // testable; reachable only through a hidden flag.
    const auto warp = [corrupt](BigCount v) { return corrupt ? v + 1 : v; };

    ordered_json oracle{{"mode", sweep ? "sweep" : mode_name(mode)},
                        {"limit", limit}};
    bool match = true;

    if (sweep) {
        const auto hist = brute_sigma_histogram(f, limit);
        ordered_json rows = ordered_json::array();
        for (Count s = d.sigma_min - 1; s <= d.sigma_max + 1; ++s) {
            const BigCount engine = warp(count_pseudomodels(d, s));
            const BigCount reference = hist.at(s);
            match = match && engine == reference;
            rows.push_back(ordered_json{{"sigma", s},
                                        {"engine", big_str(engine)},
                                        {"reference", big_str(reference)}});
        }
        oracle["rows"] = std::move(rows);
    } else {
        BigCount engine, reference;
        if (mode == Mode::sigma) {
            engine = count_pseudomodels(d, *sigma_arg);
            reference = brute_sigma_histogram(f, limit).at(*sigma_arg);
            oracle["sigma"] = *sigma_arg;
        } else if (mode == Mode::sat) {
            engine = count_sat_models(f).models;
            reference = brute_sat(f, limit).models;
        } else {
            PartitionSpec spec;
            if (mode == Mode::part) {
                spec = parse_spec_string(part_arg);
                validate_spec(f, spec);
            } else {
                spec = xsat_spec(f);
            }
            oracle["spec"] = spec_json(spec);
            if (mode == Mode::xsat && f.num_clauses() > 0 &&
                f.max_clause_width() == 0) {
                // no assignment can put one true literal into an empty clause
                engine = count_xsat_models(f);
                reference = 0;
            } else {
                engine = count_part_models(f, spec).models;
                reference = brute_count_models(f, spec, limit).models;
            }
        }
        engine = warp(engine);
        match = engine == reference;
        oracle["engine"] = big_str(engine);
        oracle["reference"] = big_str(reference);
    }
    oracle["match"] = match;

    ordered_json report{{"command", "oracle"},
                        {"input", path},
                        {"instance", instance_json(f)},
                        {"oracle", std::move(oracle)}};
    emit(report, timer);

    std::cerr << "oracle " << path << " [" << (sweep ? "sweep" : mode_name(mode))
              << "]: " << (match ? "match" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------------- gen --

int run_gen(const std::string& family, int n, int l, int m, int p_prime,
            int lambda, int width_min, int width_max, std::uint64_t seed,
            const std::string& out_path) {
    Formula f;
    std::string params;
    if (family == "regular") {
        f = gen_monotone_l_regular(n, l, m, seed);
        params = "n=" + std::to_string(n) + " l=" + std::to_string(l) +
                 " m=" + std::to_string(m);
    } else if (family == "staircase") {
        f = gen_staircase(n, p_prime, lambda, seed);
        params = "n=" + std::to_string(n) + " p_prime=" + std::to_string(p_prime) +
                 " lambda=" + std::to_string(lambda);
    } else if (family == "random") {
        f = gen_random(n, m, width_min, width_max, seed);
        params = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                 " width_min=" + std::to_string(width_min) +
                 " width_max=" + std::to_string(width_max);
    } else {
        throw ValidationError("unknown generator family \"" + family +
                              "\"; expected regular, staircase, or random");
    }

    const auto comments = generator_comments(family, params, seed);
    if (out_path.empty()) {
        write_dimacs(f, std::cout, comments);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file " + out_path);
        write_dimacs(f, out, comments);
    }

    std::cerr << "gen " << family << " (" << params << ", seed " << seed << "): "
              << f.num_variables << " variables, " << f.num_clauses()
              << " clauses"
              << (out_path.empty() ? std::string{}
                                   : std::string{" -> "} + out_path)
              << "\n";
    return kExitOk;
}

/// Exactly one of the target-selection flags must be set.
Mode resolve_mode(bool xsat, bool sat, bool part, bool has_sigma, bool sweep,
                  const char* command) {
    const int selected = static_cast<int>(xsat) + static_cast<int>(sat) +
                         static_cast<int>(part) + static_cast<int>(has_sigma) +
                         static_cast<int>(sweep);
    if (selected != 1)
        throw ValidationError(std::string(command) +
                              " needs exactly one mode flag, got " +
                              std::to_string(selected));
    if (xsat) return Mode::xsat;
    if (sat) return Mode::sat;
    if (part) return Mode::part;
    return Mode::sigma; // --sigma or --sweep (sweep handled by the caller)
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudomodel counting and decision engine for CNF formulas"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sigsat 0.1.0");

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "block decomposition, sigma extrema, ground state, hardness");
    std::string analyze_path;
    Count analyze_sigma = 0;
    double analyze_threshold = 4.0;
    analyze->add_option("path", analyze_path, "DIMACS CNF file")->required();
    auto* analyze_sigma_opt = analyze->add_option(
        "--sigma", analyze_sigma, "hardness target sigma (default: clause count)");
    analyze->add_option("--threshold-constant", analyze_threshold,
                        "additive constant in the hardness threshold");

    // bound
    auto* bound = app.add_subcommand("bound", "pseudomodel bounds for one target");
    std::string bound_path, bound_part;
    Count bound_sigma = 0;
    bool bound_xsat = false, bound_sat = false;
    bound->add_option("path", bound_path, "DIMACS CNF file")->required();
    auto* bound_sigma_opt =
        bound->add_option("--sigma", bound_sigma, "count assignments at this sigma");
    bound->add_flag("--xsat", bound_xsat, "bound for the XSAT target sigma = m");
    bound->add_flag("--sat", bound_sat, "upper bound on satisfying assignments");
    auto* bound_part_opt = bound->add_option(
        "--part", bound_part, "partition spec mu_0,mu_1,... for PART-SAT");

    // decide
    auto* decide = app.add_subcommand("decide", "decide or count by filtration");
    std::string decide_path, decide_part;
    bool decide_xsat_flag = false, decide_sat_flag = false, decide_count = false;
    std::uint64_t decide_budget = 100000000; // 10^8
    int decide_jobs = 1;
    decide->add_option("path", decide_path, "DIMACS CNF file")->required();
    decide->add_flag("--xsat", decide_xsat_flag, "exactly one true literal per clause");
    decide->add_flag("--sat", decide_sat_flag, "ordinary satisfiability");
    auto* decide_part_opt = decide->add_option(
        "--part", decide_part, "partition spec mu_0,mu_1,... for PART-SAT");
    decide->add_flag("--count", decide_count, "exhaustive model count");
    decide->add_option("--max-candidates", decide_budget,
                       "abort after this many candidates (0 = unlimited)");
    decide->add_option("--jobs", decide_jobs, "worker threads for --count")
        ->check(CLI::PositiveNumber);

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "run engine and brute-force reference, compare");
    std::string oracle_path, oracle_part;
    Count oracle_sigma = 0;
    bool oracle_sweep = false, oracle_xsat = false, oracle_sat = false;
    bool oracle_corrupt = false;
    oracle->add_option("path", oracle_path, "DIMACS CNF file")->required();
    oracle->add_flag("--sweep", oracle_sweep, "compare the full sigma histogram");
    auto* oracle_sigma_opt =
        oracle->add_option("--sigma", oracle_sigma, "compare one sigma count");
    oracle->add_flag("--xsat", oracle_xsat, "compare XSAT model counts");
    oracle->add_flag("--sat", oracle_sat, "compare SAT model counts");
    auto* oracle_part_opt = oracle->add_option(
        "--part", oracle_part, "compare PART-SAT model counts for this spec");
    oracle
        ->add_flag("--selftest-corrupt-engine", oracle_corrupt,
                   "perturb the engine value to exercise the mismatch path")
        ->group(""); // hidden
    oracle->footer("The sweep refuses n above the limit; set "
                   "PSEUDOMODEL_ORACLE_LIMIT to override.");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seed-deterministic instance");
    std::string gen_family, gen_out;
    int gen_n = 0, gen_l = 0, gen_m = 0, gen_p_prime = 0, gen_lambda = 0;
    int gen_wmin = 1, gen_wmax = 3;
    std::uint64_t gen_seed = 1;
    gen->add_option("family", gen_family, "regular | staircase | random")->required();
    gen->add_option("-n,--variables", gen_n, "number of variables")->required();
    gen->add_option("-l,--occurrences", gen_l, "occurrences per variable (regular)");
    gen->add_option("-m,--clauses", gen_m, "number of clauses (regular, random)");
    gen->add_option("--p-prime", gen_p_prime, "minority occurrences (staircase)");
    gen->add_option("--lambda", gen_lambda, "clauses per variable (staircase)");
    gen->add_option("--width-min", gen_wmin, "minimum clause width (random)");
    gen->add_option("--width-max", gen_wmax, "maximum clause width (random)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--out", gen_out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            std::optional<Count> sigma;
            if (*analyze_sigma_opt) sigma = analyze_sigma;
            return run_analyze(analyze_path, sigma, analyze_threshold);
        }
        if (*bound) {
            const Mode mode = resolve_mode(
                bound_xsat, bound_sat, static_cast<bool>(*bound_part_opt),
                static_cast<bool>(*bound_sigma_opt), false, "bound");
            std::optional<Count> sigma;
            if (*bound_sigma_opt) sigma = bound_sigma;
            return run_bound(bound_path, mode, sigma, bound_part);
        }
        if (*decide) {
            const Mode mode = resolve_mode(
                decide_xsat_flag, decide_sat_flag,
                static_cast<bool>(*decide_part_opt), false, false, "decide");
            return run_decide(decide_path, mode, decide_part, decide_count,
                              decide_budget, decide_jobs);
        }
        if (*oracle) {
            Mode mode = Mode::sigma;
            if (!oracle_sweep)
                mode = resolve_mode(oracle_xsat, oracle_sat,
                                    static_cast<bool>(*oracle_part_opt),
                                    static_cast<bool>(*oracle_sigma_opt), false,
                                    "oracle");
            else if (oracle_xsat || oracle_sat || *oracle_part_opt ||
                     *oracle_sigma_opt)
                throw ValidationError("oracle --sweep excludes other mode flags");
            std::optional<Count> sigma;
            if (*oracle_sigma_opt) sigma = oracle_sigma;
            return run_oracle(oracle_path, mode, oracle_sweep, sigma, oracle_part,
                              oracle_corrupt);
        }
        if (*gen)
            return run_gen(gen_family, gen_n, gen_l, gen_m, gen_p_prime,
                           gen_lambda, gen_wmin, gen_wmax, gen_seed, gen_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError; // unreachable: require_subcommand(1)
}
