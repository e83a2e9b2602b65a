#include "sigsat/blocks.hpp"
#include "sigsat/counting.hpp"
#include "sigsat/errors.hpp"
#include "sigsat/generators.hpp"
#include "sigsat/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace sigsat;
using namespace sigsat::testutil;

TEST_CASE("golden sigma histogram") {
    const auto hist = brute_sigma_histogram(golden_formula());
    const std::map<Count, std::uint64_t> expected{{3, 2}, {4, 4}, {5, 4}, {6, 6},
                                                  {7, 6}, {8, 4}, {9, 4}, {10, 2}};
    CHECK(hist.counts == expected);
    CHECK(hist.at(2) == 0);
    CHECK(hist.at(11) == 0);
}

TEST_CASE("sigma histogram edge cases") {
    SUBCASE("empty formula concentrates everything at zero") {
        const auto hist = brute_sigma_histogram(Formula{2, {}});
        CHECK(hist.counts == std::map<Count, std::uint64_t>{{0, 4}});
    }
    SUBCASE("no variables at all") {
        const auto hist = brute_sigma_histogram(Formula{0, {}});
        CHECK(hist.counts == std::map<Count, std::uint64_t>{{0, 1}});
    }
    SUBCASE("single unit clause splits the space") {
        const auto hist = brute_sigma_histogram(make_formula(1, {{1}}));
        CHECK(hist.counts == std::map<Count, std::uint64_t>{{0, 1}, {1, 1}});
    }
    SUBCASE("regular monotone instance gives a binomial histogram") {
        const auto hist = brute_sigma_histogram(gen_monotone_l_regular(5, 2, 5, 4));
        for (Count k = 0; k <= 5; ++k)
            CHECK(hist.at(2 * k) == static_cast<std::uint64_t>(binomial(5, k)));
        CHECK(hist.counts.size() == 6);
    }
}

TEST_CASE("histogram mass always covers the full space") {
    std::mt19937_64 seeds(127);
    for (int i = 0; i < 15; ++i) {
        const int n = 1 + static_cast<int>(seeds() % 12);
        const Formula f = gen_random(n, 1 + static_cast<int>(seeds() % 10), 1,
                                     std::min(n, 4), seeds());
        const auto hist = brute_sigma_histogram(f);
        std::uint64_t mass = 0;
        for (const auto& [s, c] : hist.counts) mass += c;
        CHECK(mass == std::uint64_t{1} << n);
    }
}

TEST_CASE("sweep limit is enforced and adjustable") {
    const Formula wide = gen_random(21, 4, 1, 4, 5);
    CHECK_THROWS_AS(brute_sigma_histogram(wide), OracleLimitError);
    CHECK_THROWS_AS(brute_sat(wide), OracleLimitError);
    CHECK_THROWS_AS(brute_count_models(wide, xsat_spec(wide)), OracleLimitError);
    // Raising the cap admits the instance.
    CHECK_NOTHROW(brute_sigma_histogram(wide, 21));
}

TEST_CASE("brute model counting on the golden instance") {
    const Formula f = golden_formula();

    SUBCASE("xsat has no models") {
        const auto r = brute_count_models(f, xsat_spec(f));
        CHECK(r.models == 0);
        CHECK(r.witnesses.empty());
    }
    SUBCASE("ground-state spec has exactly one model") {
        const auto r = brute_count_models(f, PartitionSpec{{1, 3, 0, 0}});
        CHECK(r.models == 1);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == bits({0, 0, 1, 0, 1}));
    }
    SUBCASE("sat models all check out") {
        const auto r = brute_sat(f);
        CHECK(r.models > 0);
        CHECK(BigCount(r.witnesses.size()) == r.models);
        for (const auto& y : r.witnesses)
            CHECK(clause_true_counts(f, y)[0] == 0);
    }
}

TEST_CASE("brute counting validates the partition spec first") {
    const Formula f = golden_formula();
    CHECK_THROWS_AS(brute_count_models(f, PartitionSpec{{1, 1}}), ValidationError);
    CHECK_THROWS_AS(brute_count_models(f, PartitionSpec{{-2, 6}}), ValidationError);
}

TEST_CASE("spec padding: trailing zero demands do not change the count") {
    const Formula f = golden_formula();
    const auto shorter = brute_count_models(f, PartitionSpec{{1, 3}});
    const auto padded = brute_count_models(f, PartitionSpec{{1, 3, 0, 0}});
    CHECK(shorter.models == padded.models);
    CHECK(shorter.witnesses == padded.witnesses);
}

TEST_CASE("brute witnesses match spec histograms exactly") {
    std::mt19937_64 seeds(131);
    for (int i = 0; i < 15; ++i) {
        const int n = 2 + static_cast<int>(seeds() % 7);
        const int m = 1 + static_cast<int>(seeds() % 6);
        const Formula f = gen_random(n, m, 1, std::min(n, 3), seeds());
        Assignment y(static_cast<std::size_t>(n));
        for (auto& b : y) b = seeds() & 1;
        const PartitionSpec spec{clause_true_counts(f, y)};
        const auto r = brute_count_models(f, spec);
        CHECK(r.models >= 1);
        bool found = false;
        for (const auto& w : r.witnesses) {
            CHECK(clause_true_counts(f, w) == spec.mu);
            found = found || w == y;
        }
        CHECK(found);
    }
}

TEST_CASE("sweep is deterministic") {
    const Formula f = gen_random(8, 6, 1, 4, 999);
    const auto a = brute_sat(f);
    const auto b = brute_sat(f);
    CHECK(a.models == b.models);
    CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("fully balanced ring pins the histogram to one column") {
    const auto hist = brute_sigma_histogram(balanced_ring(5));
    REQUIRE(hist.counts.size() == 1);
    CHECK(hist.at(10) == 32);
    const auto d = decompose(occurrence_profile(balanced_ring(5)));
    CHECK(count_pseudomodels(d, 10) == 32);
}
