#include "sigsat/bigint.hpp"
#include "sigsat/counting.hpp"
#include "sigsat/errors.hpp"
#include "sigsat/generators.hpp"
#include "sigsat/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace sigsat;
using namespace sigsat::testutil;

namespace {

BlockDecomposition golden_decomposition() {
    return decompose(occurrence_profile(golden_formula()));
}

std::vector<FlipVector> vectors(std::initializer_list<std::vector<int>> vs) {
    std::vector<FlipVector> out;
    for (const auto& v : vs) out.push_back(FlipVector{v});
    return out;
}

} // namespace

TEST_CASE("big integer helpers") {
    CHECK(big_pow2(0) == 1);
    CHECK(big_pow2(70) == BigCount{1} << 70);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == BigCount{"118264581564861424"});
    CHECK(to_decimal_string(big_pow2(10)) == "1024");

    CHECK(log2_big(BigCount{1}) == doctest::Approx(0.0));
    CHECK(log2_big(big_pow2(100)) == doctest::Approx(100.0));
    CHECK(log2_big(BigCount{6}) == doctest::Approx(std::log2(6.0)));
    CHECK(log2_big(BigCount{0}) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("flip vectors of the golden instance") {
    const auto d = golden_decomposition();
    // Tuples keyed (w_3, w_2, w_1).
    CHECK(enumerate_flip_vectors(d, 0) == vectors({{0, 0, 0}}));
    CHECK(enumerate_flip_vectors(d, 1) == vectors({{0, 0, 1}}));
    CHECK(enumerate_flip_vectors(d, 2) == vectors({{0, 0, 2}, {0, 1, 0}}));
    CHECK(enumerate_flip_vectors(d, 3) == vectors({{0, 1, 1}, {1, 0, 0}}));
    CHECK(enumerate_flip_vectors(d, 7) == vectors({{1, 1, 2}}));
    CHECK(enumerate_flip_vectors(d, -1).empty());
    CHECK(enumerate_flip_vectors(d, 8).empty());
}

TEST_CASE("flip vector stream halts on visitor request") {
    const auto d = golden_decomposition();
    int seen = 0;
    const bool completed = for_each_flip_vector(d, 2, [&](const FlipVector&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);
    CHECK(!completed);
    CHECK(for_each_flip_vector(d, 2, [](const FlipVector&) { return true; }));
}

TEST_CASE("flip vectors with no blocks") {
    const auto d = decompose(occurrence_profile(balanced_ring(3)));
    REQUIRE(d.blocks.empty());
    const auto at_zero = enumerate_flip_vectors(d, 0);
    REQUIRE(at_zero.size() == 1);
    CHECK(at_zero[0].flips.empty());
    CHECK(enumerate_flip_vectors(d, 1).empty());
}

TEST_CASE("flip vector stream properties on random instances") {
    std::mt19937_64 seeds(73);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 9);
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto d = decompose(occurrence_profile(f));
        for (Count rho = 0; rho <= d.weight(); ++rho) {
            const auto vs = enumerate_flip_vectors(d, rho);
            std::set<std::vector<int>> dedup;
            for (const auto& fv : vs) {
                REQUIRE(fv.flips.size() == d.blocks.size());
                Count total = 0;
                for (std::size_t j = 0; j < fv.flips.size(); ++j) {
                    CHECK(fv.flips[j] >= 0);
                    CHECK(fv.flips[j] <= d.blocks[j].size());
                    total += d.blocks[j].imbalance * fv.flips[j];
                }
                CHECK(total == rho);
                dedup.insert(fv.flips);
            }
            CHECK(dedup.size() == vs.size()); // no duplicates
            // Ascending lexicographic emission order.
            for (std::size_t j = 0; j + 1 < vs.size(); ++j)
                CHECK(vs[j].flips < vs[j + 1].flips);
        }
    }
}

TEST_CASE("golden pseudomodel histogram") {
    const auto d = golden_decomposition();
    const Count expected[] = {2, 4, 4, 6, 6, 4, 4, 2}; // sigma = 3..10
    for (Count s = 3; s <= 10; ++s)
        CHECK(count_pseudomodels(d, s) == expected[s - 3]);
    CHECK(count_pseudomodels(d, 2) == 0);
    CHECK(count_pseudomodels(d, 11) == 0);
}

TEST_CASE("pseudomodel counts match the brute-force histogram") {
    std::mt19937_64 seeds(79);
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 11);
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto d = decompose(occurrence_profile(f));
        const auto hist = brute_sigma_histogram(f);
        for (Count s = d.sigma_min - 1; s <= d.sigma_max + 1; ++s)
            CHECK(count_pseudomodels(d, s) == hist.at(s));
    }
}

TEST_CASE("pseudomodel counts sum to the full assignment space") {
    std::mt19937_64 seeds(83);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 12); // n in [2, 13]
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto d = decompose(occurrence_profile(f));
        BigCount total = 0;
        for (Count s = d.sigma_min; s <= d.sigma_max; ++s)
            total += count_pseudomodels(d, s);
        CHECK(total == big_pow2(n));
    }
}

TEST_CASE("sat bound on the golden instance") {
    const auto d = golden_decomposition();
    CHECK(sat_bound(d, 4) == 30);
    CHECK(sat_bound(d, 0) == 32);  // whole space
    CHECK(sat_bound(d, 10) == 2);  // sigma_max only
    CHECK(sat_bound(d, 11) == 0);  // above sigma_max
    CHECK_THROWS_AS(sat_bound(d, -1), ValidationError);
}

TEST_CASE("single-block shortcut on monotone instances") {
    const Formula f = gen_monotone_l_regular(4, 2, 4, 3);
    const auto d = decompose(occurrence_profile(f));
    REQUIRE(d.blocks.size() == 1);

    SUBCASE("reachable target collapses to one binomial") {
        const auto r = single_block_bound(d, 4);
        REQUIRE(std::holds_alternative<BigCount>(r));
        CHECK(std::get<BigCount>(r) == 6); // C(4, 2)
    }
    SUBCASE("indivisible target yields a certificate") {
        const auto r = single_block_bound(d, 5);
        REQUIRE(std::holds_alternative<XUnsatCertificate>(r));
        CHECK(std::get<XUnsatCertificate>(r).reason.find("not a multiple") !=
              std::string::npos);
    }
    SUBCASE("target above the reachable range yields a certificate") {
        const auto r = single_block_bound(d, 10);
        REQUIRE(std::holds_alternative<XUnsatCertificate>(r));
        CHECK(std::get<XUnsatCertificate>(r).reason.find("exceeds") !=
              std::string::npos);
    }
}

TEST_CASE("single-block shortcut with balanced variables present") {
    // Variable 2 never occurs and variable 3 is balanced; only variable 1
    // carries imbalance, so sigma_min = 1 comes from the balanced pair.
    const Formula f = make_formula(3, {{1, 3}, {1, -3}});
    const auto d = decompose(occurrence_profile(f));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].imbalance == 2);
    CHECK(d.balanced_count() == 2);
    CHECK(d.sigma_min == 1);

    const auto reachable = single_block_bound(d, 3);
    REQUIRE(std::holds_alternative<BigCount>(reachable));
    CHECK(std::get<BigCount>(reachable) == 4); // C(1,1) * 2^2
    CHECK(std::get<BigCount>(reachable) == count_pseudomodels(d, 3));

    const auto below = single_block_bound(d, 0);
    REQUIRE(std::holds_alternative<XUnsatCertificate>(below));
    CHECK(std::get<XUnsatCertificate>(below).reason.find("below") !=
          std::string::npos);
}

TEST_CASE("single-block shortcut agrees with the general count") {
    std::mt19937_64 seeds(89);
    for (int i = 0; i < 15; ++i) {
        const int n = 3 + static_cast<int>(seeds() % 6);
        const int l = 1 + static_cast<int>(seeds() % 3);
        const int m = l + static_cast<int>(seeds() % (n * l - l + 1));
        const Formula f = gen_monotone_l_regular(n, l, m, seeds());
        const auto d = decompose(occurrence_profile(f));
        REQUIRE(d.blocks.size() == 1);
        for (Count target = 0; target <= d.sigma_max + 1; ++target) {
            const auto r = single_block_bound(d, target);
            const BigCount general = count_pseudomodels(d, target);
            if (std::holds_alternative<BigCount>(r))
                CHECK(std::get<BigCount>(r) == general);
            else
                CHECK(general == 0);
        }
    }
}

TEST_CASE("single-block shortcut rejects other decompositions") {
    CHECK_THROWS_AS(single_block_bound(golden_decomposition(), 4), ValidationError);
    const auto ring = decompose(occurrence_profile(balanced_ring(3)));
    CHECK_THROWS_AS(single_block_bound(ring, 6), ValidationError);
}

TEST_CASE("partition counts") {
    const Count known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (Count rho = 0; rho <= 10; ++rho)
        CHECK(partition_count_exact(rho) == known[rho]);
    CHECK(partition_count_exact(60) == 966467);
    CHECK(partition_count_exact(100) == 190569292);
    CHECK_THROWS_AS(partition_count_exact(-1), ValidationError);
}

TEST_CASE("partition count matches a naive enumerator") {
    // Count partitions with largest part <= cap by direct recursion.
    struct Naive {
        Count run(Count rho, Count cap) const {
            if (rho == 0) return 1;
            Count total = 0;
            for (Count part = std::min(rho, cap); part >= 1; --part)
                total += run(rho - part, part);
            return total;
        }
    } naive;
    for (Count rho = 0; rho <= 32; ++rho)
        CHECK(partition_count_exact(rho) == naive.run(rho, rho));
}

TEST_CASE("partition asymptotic approximates the exact count") {
    // Leading-order accuracy improves with rho; compare log values.
    const Count points[] = {200, 500, 1000};
    double prev_rel = 1e9;
    for (Count rho : points) {
        const double exact_log = log2_big(partition_count_exact(rho));
        const double approx_log = std::log2(partition_asymptotic(rho));
        const double rel = std::abs(approx_log - exact_log) / exact_log;
        CHECK(rel < 0.01);
        CHECK(rel < prev_rel);
        prev_rel = rel;
    }
    CHECK_THROWS_AS(partition_asymptotic(0), ValidationError);
}

TEST_CASE("staircase flip space is counted by integer partitions") {
    // One variable per imbalance 1..n and sigma targets m - sigma_min = rho:
    // flip vectors are exactly the partitions of rho into distinct parts <= n,
    // so the pseudomodel count at sigma_min + rho equals that partition count.
    const int n = 9;
    const Formula f = gen_staircase(n, 0, 1, 17);
    const auto d = decompose(occurrence_profile(f));
    REQUIRE(static_cast<int>(d.blocks.size()) == n);

    struct Distinct {
        Count run(Count rho, Count cap) const {
            if (rho == 0) return 1;
            Count total = 0;
            for (Count part = std::min(rho, cap); part >= 1; --part)
                total += run(rho - part, part - 1);
            return total;
        }
    } distinct;
    for (Count rho = 0; rho <= d.weight(); ++rho) {
        const BigCount engine = count_pseudomodels(d, d.sigma_min + rho) >>
                                d.balanced_count();
        CHECK(engine == distinct.run(rho, n));
    }
}
