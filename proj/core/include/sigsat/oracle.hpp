#ifndef SIGSAT_ORACLE_HPP
#define SIGSAT_ORACLE_HPP

#include "sigsat/bigint.hpp"
#include "sigsat/decision.hpp"
#include "sigsat/formula.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sigsat {

/// Default refusal limit for the 2^n sweeps. Callers may raise it explicitly;
/// the CLI honors PSEUDOMODEL_ORACLE_LIMIT.
inline constexpr int kDefaultOracleLimit = 20;

/// Exact count of assignments per sigma value.
struct SigmaHistogram {
    std::map<Count, std::uint64_t> counts;

    std::uint64_t at(Count s) const {
        auto it = counts.find(s);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Full 2^n sweep in Gray-code order with incremental sigma updates.
/// Throws OracleLimitError when n exceeds the limit.
SigmaHistogram brute_sigma_histogram(const Formula& f,
                                     int max_variables = kDefaultOracleLimit);

/// Exhaustive model count plus every witness.
struct BruteForceResult {
    BigCount models = 0;
    std::vector<Assignment> witnesses;
};

/// All assignments whose clause-true histogram equals the partition spec
/// (zero-padded).
BruteForceResult brute_count_models(const Formula& f, const PartitionSpec& spec,
                                    int max_variables = kDefaultOracleLimit);

/// All assignments satisfying every clause.
BruteForceResult brute_sat(const Formula& f, int max_variables = kDefaultOracleLimit);

} // namespace sigsat

#endif
