#include "sigsat/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace sigsat {

BlockDecomposition decompose(const OccurrenceProfile& profile) {
    BlockDecomposition d;
    d.num_variables = profile.num_variables();
    d.total_literals = profile.total_literals;
    d.signs.resize(profile.vars.size());

    std::map<Count, VariableBlock, std::greater<Count>> by_imbalance;
    Count min_sum = 0;
    for (std::size_t i = 0; i < profile.vars.size(); ++i) {
        const auto& v = profile.vars[i];
        d.signs[i] = v.majority_sign();
        min_sum += std::min(v.pos, v.neg);
        const Count b = v.imbalance();
        if (b == 0) {
            d.balanced.push_back(static_cast<int>(i));
            continue;
        }
        auto& blk = by_imbalance[b];
        blk.imbalance = b;
        blk.variables.push_back(static_cast<int>(i));
        blk.literal_count += v.total();
    }
    d.blocks.reserve(by_imbalance.size());
    for (auto& [b, blk] : by_imbalance) d.blocks.push_back(std::move(blk));

    d.sigma_min = min_sum;
    d.sigma_max = d.total_literals - min_sum;
    // Half-difference form must agree with the min-sum form; the weight
    // N - 2*sigma_min is even by construction.
    assert(d.total_literals - d.weight() == 2 * d.sigma_min);
    return d;
}

GroundState ground_assignment(const OccurrenceProfile& profile) {
    GroundState g;
    g.base.assign(profile.vars.size(), 0);
    for (std::size_t i = 0; i < profile.vars.size(); ++i) {
        const auto& v = profile.vars[i];
        if (v.pos < v.neg)
            g.base[i] = 1;
        else if (v.pos == v.neg)
            g.free_indices.push_back(static_cast<int>(i)); // canonical value 0
    }
    return g;
}

} // namespace sigsat
