#ifndef SIGSAT_DECISION_HPP
#define SIGSAT_DECISION_HPP

#include "sigsat/bigint.hpp"
#include "sigsat/counting.hpp"
#include "sigsat/formula.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sigsat {

/// Clause-demand vector (mu_0, mu_1, ..., mu_k): a satisfying assignment must
/// leave exactly mu_alpha clauses with alpha true literals. A spec shorter
/// than the widest clause + 1 demands zero clauses at the missing positions.
struct PartitionSpec {
    std::vector<Count> mu;

    bool operator==(const PartitionSpec&) const = default;
};

/// The sigma value every model of a partition spec must attain:
/// sum alpha * mu_alpha.
Count target_sigma(const PartitionSpec& spec);

/// Checks sum mu == m, k <= max clause width, entries >= 0.
/// Throws ValidationError naming the violated constraint.
void validate_spec(const Formula& f, const PartitionSpec& spec);

/// PartitionSpec demanding exactly one true literal per clause (mu_1 = m).
PartitionSpec xsat_spec(const Formula& f);

enum class DecisionStatus {
    satisfiable,
    unsatisfiable,
    budget_exceeded, // candidate budget ran out before a verdict
};

struct Verdict {
    DecisionStatus status = DecisionStatus::unsatisfiable;
    std::optional<Assignment> witness;  // present iff satisfiable
    BigCount pseudomodels_examined = 0; // candidates actually tested
    BigCount bound;                     // pseudomodel count for the target
};

/// Decision / counting limits. max_candidates == 0 means unlimited. jobs > 1
/// enables the parallel counting path; decisions always run sequentially so
/// the first witness is deterministic.
struct SearchOptions {
    std::uint64_t max_candidates = 0;
    int jobs = 1;
};

/// Streams every assignment with sigma == sigma0, each exactly once:
/// per flip vector (ascending lexicographic, blocks keyed by decreasing b),
/// per lexicographic choice of w_b block variables to flip in the minimal
/// assignment, per completion of the balanced variables (binary counting,
/// lowest index first). Visitor returning false halts; returns false on halt.
bool for_each_pseudomodel(const Formula& f, Count sigma0,
                          const std::function<bool(const Assignment&)>& visit);

/// Materialized pseudomodel list, same order as the stream.
std::vector<Assignment> enumerate_pseudomodels(const Formula& f, Count sigma0);

/// Tests pseudomodels at the partition spec's target sigma against the
/// clause-demand histogram until a model appears or the space is exhausted.
Verdict decide_part_sat(const Formula& f, const PartitionSpec& spec,
                        const SearchOptions& opts = {});

/// XSAT: exactly one true literal per clause.
Verdict decide_xsat(const Formula& f, const SearchOptions& opts = {});

/// SAT: scans sigma targets m..sigma_max for an assignment with no
/// zero-true clause.
Verdict decide_sat(const Formula& f, const SearchOptions& opts = {});

/// Exhaustive counting by pseudomodel filtration.
struct CountResult {
    BigCount models = 0;
    BigCount examined = 0;
    bool budget_exceeded = false;
    BigCount bound; // pseudomodel bound for the counted target(s)
};

CountResult count_part_models(const Formula& f, const PartitionSpec& spec,
                              const SearchOptions& opts = {});
CountResult count_sat_models(const Formula& f, const SearchOptions& opts = {});

/// Exact number of XSAT models.
BigCount count_xsat_models(const Formula& f);

} // namespace sigsat

#endif
