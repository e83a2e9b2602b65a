#include "sigsat/decision.hpp"

#include "sigsat/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace sigsat {

Count target_sigma(const PartitionSpec& spec) {
    Count t = 0;
    for (std::size_t alpha = 1; alpha < spec.mu.size(); ++alpha)
        t += static_cast<Count>(alpha) * spec.mu[alpha];
    return t;
}

void validate_spec(const Formula& f, const PartitionSpec& spec) {
    Count sum = 0;
    for (Count v : spec.mu) {
        if (v < 0) throw ValidationError("partition spec entries must be nonnegative");
        sum += v;
    }
    if (sum != f.num_clauses())
        throw ValidationError("partition spec sums to " + std::to_string(sum) +
                              ", formula has " + std::to_string(f.num_clauses()) +
                              " clauses");
    if (!spec.mu.empty() &&
        static_cast<int>(spec.mu.size()) - 1 > f.max_clause_width())
        throw ValidationError("partition spec length " + std::to_string(spec.mu.size()) +
                              " exceeds max clause width " +
                              std::to_string(f.max_clause_width()) + " + 1");
}

PartitionSpec xsat_spec(const Formula& f) {
    if (f.clauses.empty()) return {};
    return PartitionSpec{{0, static_cast<Count>(f.num_clauses())}};
}

namespace {

/// Compares histograms with implicit zero-padding on the right.
bool histogram_matches(const std::vector<Count>& a, const std::vector<Count>& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Count av = i < a.size() ? a[i] : 0;
        const Count bv = i < b.size() ? b[i] : 0;
        if (av != bv) return false;
    }
    return true;
}

bool all_clauses_satisfied(const Formula& f, const Assignment& y) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (const auto& lit : c) {
            if ((y[static_cast<std::size_t>(lit.variable - 1)] != 0) == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

/// Expands one flip vector into concrete assignments: lexicographic w_b-subsets
/// of each block are flipped in the minimal assignment, then the balanced
/// variables run through all completions in binary-counting order (lowest
/// index as least significant bit).
class PseudomodelExpander {
public:
    PseudomodelExpander(const BlockDecomposition& d, const GroundState& gs,
                        std::function<bool(const Assignment&)> visit)
        : d_(d), free_(gs.free_indices), y_(gs.base), visit_(std::move(visit)) {}

    /// false when the visitor halted the stream.
    bool expand(const FlipVector& fv) {
        fv_ = &fv;
        return choose_block(0);
    }

private:
    bool choose_block(std::size_t block) {
        if (block == d_.blocks.size()) return run_completions();
        return choose_subset(block, 0, fv_->flips[block]);
    }

    bool choose_subset(std::size_t block, std::size_t start, int remaining) {
        if (remaining == 0) return choose_block(block + 1);
        const auto& vars = d_.blocks[block].variables;
        for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= vars.size();
             ++i) {
            const auto v = static_cast<std::size_t>(vars[i]);
            y_[v] ^= 1;
            const bool keep_going = choose_subset(block, i + 1, remaining - 1);
            y_[v] ^= 1;
            if (!keep_going) return false;
        }
        return true;
    }

    bool run_completions() {
        // balanced variables enter at their canonical 0 and leave reset to 0
        while (true) {
            if (!visit_(y_)) {
                for (int v : free_) y_[static_cast<std::size_t>(v)] = 0;
                return false;
            }
            std::size_t j = 0;
            for (; j < free_.size(); ++j) {
                auto& bit = y_[static_cast<std::size_t>(free_[j])];
                if (bit == 0) {
                    bit = 1;
                    break;
                }
                bit = 0;
            }
            if (j == free_.size()) return true; // odometer wrapped
        }
    }

    const BlockDecomposition& d_;
    const std::vector<int>& free_;
    Assignment y_;
    std::function<bool(const Assignment&)> visit_; // owned: expand() may outlive the caller's temporary
    const FlipVector* fv_ = nullptr;
};

struct Instance {
    OccurrenceProfile profile;
    BlockDecomposition d;
    GroundState gs;

    explicit Instance(const Formula& f)
        : profile(occurrence_profile(f)), d(decompose(profile)),
          gs(ground_assignment(profile)) {}
};

bool stream_pseudomodels(const Instance& inst, Count sigma0,
                         const std::function<bool(const Assignment&)>& visit) {
    if (sigma0 < inst.d.sigma_min || sigma0 > inst.d.sigma_max) return true;
    PseudomodelExpander expander(inst.d, inst.gs, visit);
    return for_each_flip_vector(inst.d, sigma0 - inst.d.sigma_min,
                                [&](const FlipVector& fv) { return expander.expand(fv); });
}

/// Sequential filtered search: tests candidates at sigma0 against a predicate,
/// stopping at the first hit (decide mode) or exhausting (count mode).
struct FilterRun {
    BigCount examined = 0;
    BigCount matches = 0;
    std::optional<Assignment> first_match;
    bool exceeded = false;

    void run(const Instance& inst, Count sigma0,
             const std::function<bool(const Assignment&)>& predicate, bool stop_at_first,
             std::uint64_t budget) {
        stream_pseudomodels(inst, sigma0, [&](const Assignment& y) {
            if (budget != 0 && examined >= budget) {
                exceeded = true;
                return false;
            }
            ++examined;
            if (predicate(y)) {
                ++matches;
                if (!first_match) first_match = y;
                if (stop_at_first) return false;
            }
            return true;
        });
    }
};

/// Parallel exhaustive count: flip vectors are striped across workers; each
/// candidate is generated and tested by exactly one worker, partial sums are
/// merged at the end. Order-independent by construction.
void parallel_count(const Instance& inst, const Formula& f, Count sigma0,
                    const std::function<bool(const Formula&, const Assignment&)>& predicate,
                    int jobs, std::uint64_t budget, BigCount& models, BigCount& examined,
                    bool& exceeded) {
    if (sigma0 < inst.d.sigma_min || sigma0 > inst.d.sigma_max) return;
    const auto flip_vectors =
        enumerate_flip_vectors(inst.d, sigma0 - inst.d.sigma_min);
    if (flip_vectors.empty()) return;
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(flip_vectors.size())));

    std::atomic<std::uint64_t> tested{0};
    std::atomic<bool> abort{false};
    std::mutex merge_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));

    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            BigCount local_models = 0, local_examined = 0;
            PseudomodelExpander expander(
                inst.d, inst.gs, [&](const Assignment& y) {
                    if (abort.load(std::memory_order_relaxed)) return false;
                    if (budget != 0) {
                        if (tested.fetch_add(1, std::memory_order_relaxed) >= budget) {
                            abort.store(true, std::memory_order_relaxed);
                            return false;
                        }
                    }
                    ++local_examined;
                    if (predicate(f, y)) ++local_models;
                    return true;
                });
            for (std::size_t i = static_cast<std::size_t>(w); i < flip_vectors.size();
                 i += static_cast<std::size_t>(jobs)) {
                if (!expander.expand(flip_vectors[i])) break;
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            models += local_models;
            examined += local_examined;
        });
    }
    for (auto& t : workers) t.join();
    if (abort.load()) exceeded = true;
}

} // namespace

bool for_each_pseudomodel(const Formula& f, Count sigma0,
                          const std::function<bool(const Assignment&)>& visit) {
    return stream_pseudomodels(Instance(f), sigma0, visit);
}

std::vector<Assignment> enumerate_pseudomodels(const Formula& f, Count sigma0) {
    std::vector<Assignment> out;
    for_each_pseudomodel(f, sigma0, [&](const Assignment& y) {
        out.push_back(y);
        return true;
    });
    return out;
}

Verdict decide_part_sat(const Formula& f, const PartitionSpec& spec,
                        const SearchOptions& opts) {
    validate_spec(f, spec);
    const Count sigma0 = target_sigma(spec);
    Instance inst(f);

    Verdict v;
    v.bound = count_pseudomodels(inst.d, sigma0);
    FilterRun run;
    run.run(
        inst, sigma0,
        [&](const Assignment& y) {
            return histogram_matches(clause_true_counts(f, y), spec.mu);
        },
        /*stop_at_first=*/true, opts.max_candidates);
    v.pseudomodels_examined = run.examined;
    if (run.first_match) {
        v.status = DecisionStatus::satisfiable;
        v.witness = std::move(run.first_match);
    } else {
        v.status = run.exceeded ? DecisionStatus::budget_exceeded
                                : DecisionStatus::unsatisfiable;
    }
    return v;
}

Verdict decide_xsat(const Formula& f, const SearchOptions& opts) {
    if (f.num_clauses() > 0 && f.max_clause_width() == 0) {
        // every clause is empty; none can ever hold one true literal
        Verdict v;
        v.status = DecisionStatus::unsatisfiable;
        v.bound = 0;
        return v;
    }
    return decide_part_sat(f, xsat_spec(f), opts);
}

Verdict decide_sat(const Formula& f, const SearchOptions& opts) {
    Instance inst(f);
    const Count m = f.num_clauses();

    Verdict v;
    v.bound = sat_bound(inst.d, m);
    for (Count l = std::max(m, inst.d.sigma_min); l <= inst.d.sigma_max; ++l) {
        const std::uint64_t budget = opts.max_candidates;
        FilterRun run;
        run.examined = v.pseudomodels_examined;
        run.run(
            inst, l, [&](const Assignment& y) { return all_clauses_satisfied(f, y); },
            /*stop_at_first=*/true, budget);
        v.pseudomodels_examined = run.examined;
        if (run.first_match) {
            v.status = DecisionStatus::satisfiable;
            v.witness = std::move(run.first_match);
            return v;
        }
        if (run.exceeded) {
            v.status = DecisionStatus::budget_exceeded;
            return v;
        }
    }
    v.status = DecisionStatus::unsatisfiable;
    return v;
}

CountResult count_part_models(const Formula& f, const PartitionSpec& spec,
                              const SearchOptions& opts) {
    validate_spec(f, spec);
    const Count sigma0 = target_sigma(spec);
    Instance inst(f);

    CountResult r;
    r.bound = count_pseudomodels(inst.d, sigma0);
    if (opts.jobs > 1) {
        parallel_count(
            inst, f, sigma0,
            [&spec](const Formula& ff, const Assignment& y) {
                return histogram_matches(clause_true_counts(ff, y), spec.mu);
            },
            opts.jobs, opts.max_candidates, r.models, r.examined, r.budget_exceeded);
        return r;
    }
    FilterRun run;
    run.run(
        inst, sigma0,
        [&](const Assignment& y) {
            return histogram_matches(clause_true_counts(f, y), spec.mu);
        },
        /*stop_at_first=*/false, opts.max_candidates);
    r.models = run.matches;
    r.examined = run.examined;
    r.budget_exceeded = run.exceeded;
    return r;
}

CountResult count_sat_models(const Formula& f, const SearchOptions& opts) {
    Instance inst(f);
    const Count m = f.num_clauses();

    CountResult r;
    r.bound = sat_bound(inst.d, m);
    for (Count l = std::max(m, inst.d.sigma_min); l <= inst.d.sigma_max; ++l) {
        if (opts.jobs > 1) {
            std::uint64_t remaining = 0;
            if (opts.max_candidates != 0) {
                // budget is cumulative across sigma levels
                if (r.examined >= opts.max_candidates) {
                    r.budget_exceeded = true;
                    return r;
                }
                remaining =
                    opts.max_candidates - r.examined.convert_to<std::uint64_t>();
            }
            parallel_count(
                inst, f, l,
                [](const Formula& ff, const Assignment& y) {
                    return all_clauses_satisfied(ff, y);
                },
                opts.jobs, remaining, r.models, r.examined, r.budget_exceeded);
            if (r.budget_exceeded) return r;
            continue;
        }
        FilterRun run;
        run.examined = r.examined;
        run.run(
            inst, l, [&](const Assignment& y) { return all_clauses_satisfied(f, y); },
            /*stop_at_first=*/false, opts.max_candidates);
        r.models += run.matches;
        r.examined = run.examined;
        if (run.exceeded) {
            r.budget_exceeded = true;
            return r;
        }
    }
    return r;
}

BigCount count_xsat_models(const Formula& f) {
    if (f.num_clauses() > 0 && f.max_clause_width() == 0) return 0;
    return count_part_models(f, xsat_spec(f)).models;
}

} // namespace sigsat
