#include "sigsat/counting.hpp"

#include "sigsat/errors.hpp"

#include <cmath>
#include <numbers>

namespace sigsat {

namespace {

struct FlipSearch {
    const BlockDecomposition& d;
    const std::function<bool(const FlipVector&)>& visit;
    std::vector<Count> suffix_capacity; // sum of b*n_b over blocks[i..]
    FlipVector current;
    bool stopped = false;

    FlipSearch(const BlockDecomposition& d_,
               const std::function<bool(const FlipVector&)>& visit_)
        : d(d_), visit(visit_) {
        suffix_capacity.assign(d.blocks.size() + 1, 0);
        for (std::size_t i = d.blocks.size(); i-- > 0;) {
            const auto& blk = d.blocks[i];
            suffix_capacity[i] =
                suffix_capacity[i + 1] + blk.imbalance * static_cast<Count>(blk.size());
        }
        current.flips.assign(d.blocks.size(), 0);
    }

    void run(std::size_t i, Count residual) {
        if (stopped) return;
        if (residual < 0 || residual > suffix_capacity[i]) return;
        if (i == d.blocks.size()) {
            // residual == 0 here, by the capacity check above
            if (!visit(current)) stopped = true;
            return;
        }
        const auto& blk = d.blocks[i];
        const Count w_max =
            std::min<Count>(blk.size(), residual / blk.imbalance);
        for (Count w = 0; w <= w_max && !stopped; ++w) {
            current.flips[i] = static_cast<int>(w);
            run(i + 1, residual - w * blk.imbalance);
        }
        current.flips[i] = 0;
    }
};

} // namespace

bool for_each_flip_vector(const BlockDecomposition& d, Count rho,
                          const std::function<bool(const FlipVector&)>& visit) {
    if (rho < 0) return true;
    FlipSearch search(d, visit);
    search.run(0, rho);
    return !search.stopped;
}

std::vector<FlipVector> enumerate_flip_vectors(const BlockDecomposition& d, Count rho) {
    std::vector<FlipVector> out;
    for_each_flip_vector(d, rho, [&](const FlipVector& fv) {
        out.push_back(fv);
        return true;
    });
    return out;
}

BigCount count_pseudomodels(const BlockDecomposition& d, Count sigma0) {
    if (sigma0 < d.sigma_min || sigma0 > d.sigma_max) return 0;
    BigCount sum = 0;
    for_each_flip_vector(d, sigma0 - d.sigma_min, [&](const FlipVector& fv) {
        BigCount prod = 1;
        for (std::size_t i = 0; i < fv.flips.size(); ++i)
            prod *= binomial(d.blocks[i].size(), fv.flips[i]);
        sum += prod;
        return true;
    });
    return sum << d.balanced_count();
}

BigCount sat_bound(const BlockDecomposition& d, Count m) {
    if (m < 0) throw ValidationError("sat_bound requires m >= 0");
    BigCount total = 0;
    for (Count l = std::max(m, d.sigma_min); l <= d.sigma_max; ++l)
        total += count_pseudomodels(d, l);
    return total;
}

SingleBlockBound single_block_bound(const BlockDecomposition& d, Count m) {
    if (d.blocks.size() != 1)
        throw ValidationError("single_block_bound requires exactly one block, got " +
                              std::to_string(d.blocks.size()));
    const auto& blk = d.blocks.front();
    const Count l = blk.imbalance;
    const Count rho = m - d.sigma_min;
    if (rho < 0)
        return XUnsatCertificate{"target m = " + std::to_string(m) +
                                 " is below sigma_min = " + std::to_string(d.sigma_min)};
    if (rho > l * static_cast<Count>(blk.size()))
        return XUnsatCertificate{"target m = " + std::to_string(m) +
                                 " exceeds sigma_max = " + std::to_string(d.sigma_max)};
    if (rho % l != 0)
        return XUnsatCertificate{"m - sigma_min = " + std::to_string(rho) +
                                 " is not a multiple of l = " + std::to_string(l)};
    return binomial(blk.size(), rho / l) << d.balanced_count();
}

BigCount partition_count_exact(Count rho) {
    if (rho < 0) throw ValidationError("partition count requires rho >= 0");
    // ways[j] = partitions of j into parts <= k, k growing outer
    std::vector<BigCount> ways(static_cast<std::size_t>(rho) + 1);
    ways[0] = 1;
    for (Count k = 1; k <= rho; ++k)
        for (Count j = k; j <= rho; ++j)
            ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - k)];
    return ways[static_cast<std::size_t>(rho)];
}

double partition_asymptotic(Count rho) {
    if (rho < 1) throw ValidationError("partition asymptotic requires rho >= 1");
    const double r = static_cast<double>(rho);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * r / 3.0)) /
           (4.0 * std::numbers::sqrt3 * r);
}

} // namespace sigsat
