#include "sigsat/generators.hpp"

#include "sigsat/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace sigsat {

namespace {

/// Uniform integer in [0, n), portable across platforms (mt19937_64 output is
/// fully specified by the standard; library distributions are not).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0};
    if ((n & (n - 1)) == 0) return rng() & (n - 1);
    const int bits = 64 - std::countl_zero(n - 1);
    mask = bits >= 64 ? mask : ((std::uint64_t{1} << bits) - 1);
    for (;;) {
        const std::uint64_t r = rng() & mask;
        if (r < n) return r;
    }
}

/// Deals a variable-major occurrence list round-robin into m clauses.
/// Occurrences of one variable occupy consecutive slots, so they land in
/// distinct clauses whenever its occurrence count is <= m; callers check that
/// before dealing. Clause widths come out within 1 of each other.
Formula deal_round_robin(int n, int m, const std::vector<Literal>& occurrences) {
    Formula f;
    f.num_variables = n;
    f.clauses.assign(static_cast<std::size_t>(m), {});
    for (std::size_t t = 0; t < occurrences.size(); ++t)
        f.clauses[t % static_cast<std::size_t>(m)].push_back(occurrences[t]);
    validate_formula(f); // packing contract; cannot fire when p_s <= m holds
    return f;
}

} // namespace

Formula gen_monotone_l_regular(int n, int l, int m, std::uint64_t seed) {
    if (n < 1 || l < 1 || m < 1)
        throw GenerationError("monotone l-regular generator requires n, l, m >= 1");
    if (m > n * l)
        throw GenerationError("infeasible: m = " + std::to_string(m) +
                              " clauses exceed n*l = " + std::to_string(n * l) +
                              " literal occurrences");
    if (m < l)
        throw GenerationError("infeasible: some clause would repeat a variable "
                              "(every variable occurs l = " +
                              std::to_string(l) + " times but only m = " +
                              std::to_string(m) + " clauses exist)");

    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[bounded(rng, i)]);

    std::vector<Literal> occurrences;
    occurrences.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(l));
    for (int v : order)
        for (int k = 0; k < l; ++k) occurrences.push_back(Literal{v, true});
    return deal_round_robin(n, m, occurrences);
}

Formula gen_staircase(int n, int p_prime, int lambda, std::uint64_t seed) {
    if (n < 1) throw GenerationError("staircase generator requires n >= 1");
    if (p_prime < 0 || lambda <= p_prime)
        throw GenerationError("staircase generator requires lambda > p_prime >= 0");

    const int m = lambda * n;
    Count total = 0;
    for (int s = 1; s <= n; ++s) {
        const Count p_s = static_cast<Count>(s) + 2 * p_prime;
        if (p_s > m)
            throw GenerationError(
                "infeasible packing: variable " + std::to_string(s) + " occurs " +
                std::to_string(p_s) + " times but only m = " + std::to_string(m) +
                " clauses exist; retry with larger lambda");
        total += p_s;
    }
    if (total < m)
        throw GenerationError("infeasible packing: m = " + std::to_string(m) +
                              " clauses but only " + std::to_string(total) +
                              " literal occurrences; some clause would be empty");

    std::mt19937_64 rng(seed);
    std::vector<Literal> occurrences;
    occurrences.reserve(static_cast<std::size_t>(total));
    for (int s = 1; s <= n; ++s) {
        const bool majority_positive = (rng() & 1) != 0;
        // p_prime minority occurrences first, then s + p_prime majority ones
        for (int k = 0; k < p_prime; ++k)
            occurrences.push_back(Literal{s, !majority_positive});
        for (int k = 0; k < s + p_prime; ++k)
            occurrences.push_back(Literal{s, majority_positive});
    }
    return deal_round_robin(n, m, occurrences);
}

Formula gen_random(int n, int m, int width_min, int width_max, std::uint64_t seed) {
    if (n < 1 || m < 0)
        throw GenerationError("random generator requires n >= 1, m >= 0");
    if (width_min < 1 || width_min > width_max || width_max > n)
        throw GenerationError("random generator requires 1 <= width_min <= width_max <= n");

    std::mt19937_64 rng(seed);
    Formula f;
    f.num_variables = n;
    f.clauses.reserve(static_cast<std::size_t>(m));
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) {
        const int width =
            width_min + static_cast<int>(bounded(
                            rng, static_cast<std::uint64_t>(width_max - width_min + 1)));
        std::iota(pool.begin(), pool.end(), 1);
        Clause clause;
        clause.reserve(static_cast<std::size_t>(width));
        for (int k = 0; k < width; ++k) {
            // partial Fisher-Yates: draw without replacement
            const auto pick =
                static_cast<std::size_t>(k) +
                bounded(rng, static_cast<std::uint64_t>(n - k));
            std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
            clause.push_back(Literal{pool[static_cast<std::size_t>(k)], false});
        }
        std::sort(clause.begin(), clause.end(),
                  [](const Literal& a, const Literal& b) { return a.variable < b.variable; });
        for (auto& lit : clause) lit.positive = (rng() & 1) != 0;
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

std::vector<std::string> generator_comments(const std::string& class_name,
                                            const std::string& params,
                                            std::uint64_t seed) {
    return {
        "generator: " + class_name + " " + params + " seed=" + std::to_string(seed),
        "one realization of this occurrence profile; clause packing is not unique",
    };
}

} // namespace sigsat
