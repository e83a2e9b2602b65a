#include "sigsat/oracle.hpp"

#include "sigsat/errors.hpp"

#include <algorithm>
#include <bit>

namespace sigsat {

namespace {

void check_limit(const Formula& f, int max_variables) {
    // 62 is a hard ceiling regardless of the configured limit; the sweep
    // counter is a 64-bit word and 2^62 steps is not a sweep anyone finishes
    max_variables = std::min(max_variables, 62);
    if (f.num_variables > max_variables)
        throw OracleLimitError("oracle refuses n = " + std::to_string(f.num_variables) +
                               " > limit " + std::to_string(max_variables) +
                               " (a partial sweep would be worse than none)");
}

/// Walks all 2^n assignments in reflected Gray-code order. step(s) receives
/// the variable index flipped since the previous assignment; visit() runs on
/// every assignment including the initial all-zeros one.
template <typename Step, typename Visit>
void gray_sweep(int n, Step step, Visit visit) {
    visit();
    const std::uint64_t total = n >= 64 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t t = 1; t != total; ++t) {
        step(std::countr_zero(t));
        visit();
    }
}

} // namespace

SigmaHistogram brute_sigma_histogram(const Formula& f, int max_variables) {
    check_limit(f, max_variables);
    const auto profile = occurrence_profile(f);

    Assignment y(static_cast<std::size_t>(f.num_variables), 0);
    Count s = 0;
    for (const auto& v : profile.vars) s += v.neg; // all-zeros sigma

    SigmaHistogram hist;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(profile.total_literals) + 1,
                                      0);
    gray_sweep(
        f.num_variables,
        [&](int var) {
            auto& bit = y[static_cast<std::size_t>(var)];
            const auto& v = profile.vars[static_cast<std::size_t>(var)];
            const Count delta = v.pos - v.neg;
            bit ^= 1;
            s += bit ? delta : -delta;
        },
        [&] { counts[static_cast<std::size_t>(s)] += 1; });
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) hist.counts[static_cast<Count>(i)] = counts[i];
    return hist;
}

namespace {

/// Shared machinery for the model-counting sweeps: tracks the per-clause
/// true-literal counts incrementally as Gray-code flips arrive.
struct ClauseTracker {
    std::vector<std::vector<int>> pos_occurrences; // clause indices, per variable
    std::vector<std::vector<int>> neg_occurrences;
    std::vector<Count> clause_true; // current true-literal count per clause
    std::vector<Count> histogram;   // mu'_alpha
    Count zero_clauses = 0;

    explicit ClauseTracker(const Formula& f)
        : pos_occurrences(static_cast<std::size_t>(f.num_variables)),
          neg_occurrences(static_cast<std::size_t>(f.num_variables)),
          clause_true(f.clauses.size(), 0),
          histogram(static_cast<std::size_t>(f.max_clause_width()) + 1, 0) {
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            Count t = 0;
            for (const auto& lit : f.clauses[j]) {
                auto& list = lit.positive ? pos_occurrences : neg_occurrences;
                list[static_cast<std::size_t>(lit.variable - 1)].push_back(
                    static_cast<int>(j));
                if (!lit.positive) ++t; // all-zeros start satisfies negated literals
            }
            clause_true[j] = t;
            histogram[static_cast<std::size_t>(t)] += 1;
            if (t == 0) ++zero_clauses;
        }
    }

    void adjust(int clause, Count delta) {
        auto& t = clause_true[static_cast<std::size_t>(clause)];
        histogram[static_cast<std::size_t>(t)] -= 1;
        if (t == 0) --zero_clauses;
        t += delta;
        histogram[static_cast<std::size_t>(t)] += 1;
        if (t == 0) ++zero_clauses;
    }

    /// Applies a flip of variable var (0-based) to new value.
    void flip(int var, bool new_value) {
        const Count dpos = new_value ? 1 : -1;
        for (int j : pos_occurrences[static_cast<std::size_t>(var)]) adjust(j, dpos);
        for (int j : neg_occurrences[static_cast<std::size_t>(var)]) adjust(j, -dpos);
    }
};

template <typename Predicate>
BruteForceResult sweep_models(const Formula& f, Predicate match) {
    ClauseTracker tracker(f);
    Assignment y(static_cast<std::size_t>(f.num_variables), 0);
    BruteForceResult r;
    gray_sweep(
        f.num_variables,
        [&](int var) {
            auto& bit = y[static_cast<std::size_t>(var)];
            bit ^= 1;
            tracker.flip(var, bit != 0);
        },
        [&] {
            if (match(tracker)) {
                r.models += 1;
                r.witnesses.push_back(y);
            }
        });
    return r;
}

} // namespace

BruteForceResult brute_count_models(const Formula& f, const PartitionSpec& spec,
                                    int max_variables) {
    check_limit(f, max_variables);
    validate_spec(f, spec);
    std::vector<Count> target(static_cast<std::size_t>(f.max_clause_width()) + 1, 0);
    std::copy(spec.mu.begin(), spec.mu.end(), target.begin());
    return sweep_models(f,
                        [&](const ClauseTracker& t) { return t.histogram == target; });
}

BruteForceResult brute_sat(const Formula& f, int max_variables) {
    check_limit(f, max_variables);
    return sweep_models(f, [](const ClauseTracker& t) { return t.zero_clauses == 0; });
}

} // namespace sigsat
