#ifndef SIGSAT_COUNTING_HPP
#define SIGSAT_COUNTING_HPP

#include "sigsat/bigint.hpp"
#include "sigsat/blocks.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace sigsat {

/// How many variables to flip in each block, aligned with
/// BlockDecomposition::blocks (decreasing imbalance). Solves
/// sum_b b * w_b = rho with 0 <= w_b <= n_b for the rho it was generated for.
struct FlipVector {
    std::vector<int> flips;

    bool operator==(const FlipVector&) const = default;
};

/// Streams every bounded solution of sum b*w_b = rho. Tuples are keyed by
/// decreasing b and emitted in ascending lexicographic order; enumeration is
/// a depth-first search pruned by the residual capacity of the remaining
/// blocks. Visitor returning false stops the stream. Returns false when the
/// visitor stopped early.
///
/// rho < 0 or rho > sum b*n_b yields nothing; rho == 0 yields the all-zero
/// tuple alone (the empty tuple when there are no blocks).
bool for_each_flip_vector(const BlockDecomposition& d, Count rho,
                          const std::function<bool(const FlipVector&)>& visit);

/// Materialized flip-vector list, same order as the stream.
std::vector<FlipVector> enumerate_flip_vectors(const BlockDecomposition& d, Count rho);

/// Number of assignments with sigma == sigma0:
/// 2^{n_0} * sum over flip vectors of prod_b C(n_b, w_b).
/// Zero outside [sigma_min, sigma_max].
BigCount count_pseudomodels(const BlockDecomposition& d, Count sigma0);

/// Upper bound on the number of satisfying assignments: the total count of
/// assignments with sigma in [m, sigma_max]. Zero when m > sigma_max.
BigCount sat_bound(const BlockDecomposition& d, Count m);

/// Why a single-block instance is exactly-unsatisfiable at target m.
struct XUnsatCertificate {
    std::string reason;
};

/// Count, or a certificate that no assignment reaches sigma == m.
using SingleBlockBound = std::variant<BigCount, XUnsatCertificate>;

/// Specialization for decompositions with exactly one block {l}: the target is
/// reachable iff l divides m - sigma_min and the quotient is within 0..n_l,
/// in which case the count collapses to 2^{n_0} * C(n_l, (m - sigma_min)/l).
/// Throws ValidationError when the decomposition has != 1 block.
SingleBlockBound single_block_bound(const BlockDecomposition& d, Count m);

/// Integer-partition count p(rho), exact, by O(rho^2) dynamic programming.
BigCount partition_count_exact(Count rho);

/// Leading-order asymptotic of p(rho): exp(pi*sqrt(2*rho/3)) / (4*sqrt(3)*rho).
/// An approximation only; use partition_count_exact for exact work.
double partition_asymptotic(Count rho);

} // namespace sigsat

#endif
