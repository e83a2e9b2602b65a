#ifndef SIGSAT_BLOCKS_HPP
#define SIGSAT_BLOCKS_HPP

#include "sigsat/formula.hpp"

#include <vector>

namespace sigsat {

/// Variables sharing one imbalance value b = |pos - neg| > 0.
/// Flipping any of them moves sigma by exactly b.
struct VariableBlock {
    Count imbalance = 0;        // b
    std::vector<int> variables; // 0-based indices, ascending
    Count literal_count = 0;    // N_b, total occurrences inside the block

    int size() const { return static_cast<int>(variables.size()); }
};

/// Partition of the variables by occurrence imbalance. Balanced variables
/// (pos == neg, including unused ones) sit outside the block list; each of
/// them doubles every pseudomodel count but never moves sigma.
struct BlockDecomposition {
    std::vector<VariableBlock> blocks; // b > 0, sorted by decreasing b
    std::vector<int> balanced;         // 0-based indices with b == 0, ascending
    std::vector<int> signs;            // per-variable majority sign (+1/-1/0)
    int num_variables = 0;
    Count total_literals = 0; // N
    Count sigma_min = 0;
    Count sigma_max = 0;

    int balanced_count() const { return static_cast<int>(balanced.size()); } // n_0

    /// sum of b * n_b over all blocks; sigma_max - sigma_min.
    Count weight() const {
        Count w = 0;
        for (const auto& blk : blocks) w += blk.imbalance * static_cast<Count>(blk.size());
        return w;
    }
};

/// One canonical assignment attaining sigma_min, plus the balanced indices
/// whose values do not affect sigma. Every completion of the free indices
/// also attains sigma_min.
struct GroundState {
    Assignment base;
    std::vector<int> free_indices; // 0-based, ascending
};

/// Groups variables by imbalance and computes the sigma extrema:
/// sigma_min = (N - sum b*n_b)/2 = sum_s min(pos, neg), sigma_max = N - sigma_min.
BlockDecomposition decompose(const OccurrenceProfile& profile);

/// Canonical minimal assignment: 0 where positives dominate, 1 where negatives
/// do, 0 on balanced variables (which are reported as free).
GroundState ground_assignment(const OccurrenceProfile& profile);

} // namespace sigsat

#endif
