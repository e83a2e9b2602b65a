#ifndef SIGSAT_GENERATORS_HPP
#define SIGSAT_GENERATORS_HPP

#include "sigsat/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sigsat {

/// Monotone formula in which every variable occurs exactly l times, all
/// positive, spread over m clauses of near-equal width. The decomposition of
/// any output is the single block {l} with sigma_min = 0.
/// Feasible iff l <= m <= n*l; throws GenerationError otherwise.
Formula gen_monotone_l_regular(int n, int l, int m, std::uint64_t seed);

/// Instance family in which variable s has min(pos, neg) = p_prime and
/// max(pos, neg) = s + p_prime, with m = lambda * n clauses. Every imbalance
/// 1..n occurs exactly once, so flip targets become integer partitions of
/// m - sigma_min = (lambda - p_prime) * n. The majority polarity of each
/// variable is drawn from the seed. Requires lambda > p_prime >= 0; throws
/// GenerationError when the occurrence multiset cannot be packed.
Formula gen_staircase(int n, int p_prime, int lambda, std::uint64_t seed);

/// m clauses of uniform random width in [width_min, width_max], distinct
/// variables per clause, uniform polarity. Fully determined by the seed.
Formula gen_random(int n, int m, int width_min, int width_max, std::uint64_t seed);

/// Provenance comment lines for DIMACS output: generator class, parameters,
/// seed, plus a note that the realization is one of many with this profile.
std::vector<std::string> generator_comments(const std::string& class_name,
                                            const std::string& params,
                                            std::uint64_t seed);

} // namespace sigsat

#endif
