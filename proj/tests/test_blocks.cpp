#include "sigsat/blocks.hpp"
#include "sigsat/generators.hpp"
#include "sigsat/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace sigsat;
using namespace sigsat::testutil;

TEST_CASE("golden decomposition") {
    const auto d = decompose(occurrence_profile(golden_formula()));

    REQUIRE(d.blocks.size() == 3);
    CHECK(d.blocks[0].imbalance == 3);
    CHECK(d.blocks[0].variables == std::vector<int>{1});
    CHECK(d.blocks[0].literal_count == 3);
    CHECK(d.blocks[1].imbalance == 2);
    CHECK(d.blocks[1].variables == std::vector<int>{4});
    CHECK(d.blocks[1].literal_count == 2);
    CHECK(d.blocks[2].imbalance == 1);
    CHECK(d.blocks[2].variables == std::vector<int>{0, 2});
    CHECK(d.blocks[2].literal_count == 6);

    CHECK(d.balanced == std::vector<int>{3});
    CHECK(d.signs == std::vector<int>{+1, +1, -1, 0, -1});
    CHECK(d.num_variables == 5);
    CHECK(d.total_literals == 13);
    CHECK(d.sigma_min == 3);
    CHECK(d.sigma_max == 10);
    CHECK(d.weight() == 7);
    CHECK(d.balanced_count() == 1);
}

TEST_CASE("golden ground state") {
    const auto gs = ground_assignment(occurrence_profile(golden_formula()));
    CHECK(gs.base == bits({0, 0, 1, 0, 1}));
    CHECK(gs.free_indices == std::vector<int>{3});
}

TEST_CASE("empty formula decomposes to balanced variables only") {
    SUBCASE("no variables") {
        const auto d = decompose(occurrence_profile(Formula{0, {}}));
        CHECK(d.blocks.empty());
        CHECK(d.balanced.empty());
        CHECK(d.sigma_min == 0);
        CHECK(d.sigma_max == 0);
    }
    SUBCASE("unused variables") {
        const auto d = decompose(occurrence_profile(Formula{3, {}}));
        CHECK(d.blocks.empty());
        CHECK(d.balanced == std::vector<int>{0, 1, 2});
        CHECK(d.sigma_min == 0);
        CHECK(d.sigma_max == 0);
        const auto gs = ground_assignment(occurrence_profile(Formula{3, {}}));
        CHECK(gs.base == bits({0, 0, 0}));
        CHECK(gs.free_indices == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("fully balanced instance pins sigma") {
    const int n = 4;
    const auto d = decompose(occurrence_profile(balanced_ring(n)));
    CHECK(d.blocks.empty());
    CHECK(d.balanced_count() == n);
    CHECK(d.sigma_min == d.sigma_max);
    CHECK(d.sigma_min == 2 * n);

    const auto hist = brute_sigma_histogram(balanced_ring(n));
    REQUIRE(hist.counts.size() == 1);
    CHECK(hist.counts.begin()->first == 2 * n);
    CHECK(hist.counts.begin()->second == std::uint64_t{1} << n);
}

TEST_CASE("monotone regular instance is a single block at sigma_min zero") {
    const Formula f = gen_monotone_l_regular(6, 3, 9, 5);
    const auto d = decompose(occurrence_profile(f));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].imbalance == 3);
    CHECK(d.blocks[0].size() == 6);
    CHECK(d.balanced_count() == 0);
    CHECK(d.sigma_min == 0);
    CHECK(d.sigma_max == 18);

    const auto gs = ground_assignment(occurrence_profile(f));
    CHECK(gs.base == Assignment(6, 0));
    CHECK(gs.free_indices.empty());
}

TEST_CASE("staircase instance has one variable per imbalance") {
    const Formula f = gen_staircase(5, 1, 3, 9);
    const auto d = decompose(occurrence_profile(f));
    REQUIRE(d.blocks.size() == 5);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        CHECK(d.blocks[i].imbalance == 5 - static_cast<Count>(i));
        CHECK(d.blocks[i].size() == 1);
    }
    CHECK(d.sigma_min == 5); // p_prime per variable
    CHECK(d.weight() == 15);
}

TEST_CASE("decomposition structure invariants on random instances") {
    std::mt19937_64 seeds(57);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 9);
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto p = occurrence_profile(f);
        const auto d = decompose(p);

        // Blocks strictly decreasing in imbalance, indices ascending inside.
        for (std::size_t j = 0; j + 1 < d.blocks.size(); ++j)
            CHECK(d.blocks[j].imbalance > d.blocks[j + 1].imbalance);
        std::vector<int> seen;
        for (const auto& blk : d.blocks) {
            CHECK(blk.imbalance > 0);
            CHECK(std::is_sorted(blk.variables.begin(), blk.variables.end()));
            Count lits = 0;
            for (int s : blk.variables) {
                CHECK(p.vars[static_cast<std::size_t>(s)].imbalance() == blk.imbalance);
                lits += p.vars[static_cast<std::size_t>(s)].total();
                seen.push_back(s);
            }
            CHECK(lits == blk.literal_count);
        }
        // Blocks plus balanced variables partition the index range.
        seen.insert(seen.end(), d.balanced.begin(), d.balanced.end());
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) all[static_cast<std::size_t>(s)] = s;
        CHECK(seen == all);

        // Both extrema formulas agree and have consistent parity.
        Count min_sum = 0;
        for (const auto& v : p.vars) min_sum += std::min(v.pos, v.neg);
        CHECK(d.sigma_min == min_sum);
        CHECK((d.total_literals - d.weight()) % 2 == 0);
        CHECK(d.sigma_min == (d.total_literals - d.weight()) / 2);
        CHECK(d.sigma_max == d.total_literals - d.sigma_min);
    }
}

TEST_CASE("sigma extrema match the brute-force sweep") {
    std::mt19937_64 seeds(61);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 11); // n in [2, 12]
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto d = decompose(occurrence_profile(f));
        const auto hist = brute_sigma_histogram(f);
        REQUIRE(!hist.counts.empty());
        CHECK(hist.counts.begin()->first == d.sigma_min);
        CHECK(hist.counts.rbegin()->first == d.sigma_max);
    }
}

TEST_CASE("ground assignment attains sigma_min and free flips preserve it") {
    std::mt19937_64 seeds(67);
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 9);
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto p = occurrence_profile(f);
        const auto d = decompose(p);
        const auto gs = ground_assignment(p);

        CHECK(sigma(p, gs.base) == d.sigma_min);
        CHECK(gs.free_indices == d.balanced);
        Assignment y = gs.base;
        for (int s : gs.free_indices) {
            y[static_cast<std::size_t>(s)] ^= 1;
            CHECK(sigma(p, y) == d.sigma_min);
        }
        // Flipping any blocked variable moves sigma up by its imbalance.
        for (const auto& blk : d.blocks) {
            for (int s : blk.variables) {
                Assignment z = gs.base;
                z[static_cast<std::size_t>(s)] ^= 1;
                CHECK(sigma(p, z) == d.sigma_min + blk.imbalance);
            }
        }
    }
}
