#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermigraph/partition.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <numeric>

using namespace fermigraph;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("partition construction normalizes and validates") {
    CHECK(p({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK(p({3, 1}).n() == 4);
    CHECK_THROWS_AS(p({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(p({2, -1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
    CHECK(p({4, 3, 1}).to_string() == "[4,3,1]");
}

TEST_CASE("partitions_of matches the frozen small cases") {
    auto of4 = partitions_of(4);
    REQUIRE(of4.size() == 5);
    CHECK(of4[0] == p({4}));
    CHECK(of4[1] == p({3, 1}));
    CHECK(of4[2] == p({2, 2}));
    CHECK(of4[3] == p({2, 1, 1}));
    CHECK(of4[4] == p({1, 1, 1, 1}));

    CHECK(partitions_of(1) == std::vector<Partition>{p({1})});
    CHECK(partitions_of(5).size() == 7);

    CHECK_THROWS_AS(partitions_of(0), std::invalid_argument);
    CHECK_THROWS_AS(partitions_of(31), std::invalid_argument);
}

TEST_CASE("partitions_of agrees with the recursive oracle up to n=12") {
    for (int n = 1; n <= 12; ++n) {
        auto got = partitions_of(n);
        auto expect = oracle::partitions_desc(n);
        REQUIRE(got.size() == oracle::partition_count(n));
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i)
            CHECK(got[i].parts() == expect[i]);
    }
}

TEST_CASE("dominance order on the frozen examples") {
    CHECK(dominates(p({4, 3, 1}), p({3, 2, 1, 1, 1})));
    CHECK_FALSE(dominates(p({4, 1, 1}), p({3, 3})));
    CHECK_FALSE(dominates(p({3, 3}), p({4, 1, 1})));
    CHECK(dominates(p({2, 2}), p({2, 2})));
    CHECK_THROWS_AS(dominates(p({2}), p({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order, exhaustively to n=8") {
    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all) {
            CHECK(dominates(a, a));
            for (const auto& b : all) {
                if (dominates(a, b) && dominates(b, a))
                    CHECK(a == b);
                for (const auto& c : all)
                    if (dominates(a, b) && dominates(b, c))
                        CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("conjugate: frozen cases, involution, dominance reversal") {
    CHECK(conjugate(p({4, 3, 1})) == p({3, 2, 2, 1}));
    CHECK(conjugate(p({6})) == p({1, 1, 1, 1, 1, 1}));
    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all) {
            CHECK(conjugate(conjugate(a)) == a);
            for (const auto& b : all)
                CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
        }
    }
}

TEST_CASE("irrep_dimension: hook formula vs corner-removal oracle") {
    CHECK(irrep_dimension(p({2, 2})) == 2);
    CHECK(irrep_dimension(p({7})) == 1);
    CHECK(irrep_dimension(p({1, 1, 1, 1, 1})) == 1);
    CHECK(irrep_dimension(p({3, 2})) == 5);

    std::uint64_t sum_sq = 0;
    for (const auto& mu : partitions_of(4))
        sum_sq += irrep_dimension(mu) * irrep_dimension(mu);
    CHECK(sum_sq == 24); // regular representation of S_4

    for (int n = 1; n <= 8; ++n) {
        std::uint64_t factorial = 1;
        for (int k = 2; k <= n; ++k)
            factorial *= static_cast<std::uint64_t>(k);
        std::uint64_t total = 0;
        for (const auto& mu : partitions_of(n)) {
            std::uint64_t dim = irrep_dimension(mu);
            CHECK(dim == oracle::syt_count(mu));
            total += dim * dim;
        }
        CHECK(total == factorial);
    }
}

TEST_CASE("irrep_dimension handles the largest in-range shapes exactly") {
    // dim of the staircase [6,5,4,3,2,1] of n=21 is known to be large and
    // exactly representable; cross-check against the corner oracle
    Partition staircase({6, 5, 4, 3, 2, 1});
    CHECK(irrep_dimension(staircase) == oracle::syt_count(staircase));
}

TEST_CASE("standard_tableaux: order, content, counts") {
    auto t21 = standard_tableaux(p({2, 1}));
    REQUIRE(t21.size() == 2);
    CHECK(t21[0].entries == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(t21[1].entries == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK(standard_tableaux(p({3})).size() == 1);
    CHECK(standard_tableaux(p({3, 2})).size() == 5);

    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto tabs = standard_tableaux(mu);
            REQUIRE(tabs.size() == irrep_dimension(mu));
            std::vector<int> prev;
            for (const auto& t : tabs) {
                CHECK(t.is_standard());
                auto word = t.reading_word();
                if (!prev.empty())
                    CHECK(prev < word); // reading-word lexicographic order
                prev = word;
            }
        }

    CHECK_THROWS_AS(standard_tableaux(p({5, 4, 3, 2, 1}), 10), std::length_error);
}

TEST_CASE("kostka numbers: frozen cases and brute-force oracle") {
    CHECK(kostka_number(p({3, 1}), p({2, 1, 1})) == 2);
    CHECK(kostka_number(p({2, 2}), p({2, 2})) == 1);
    CHECK(kostka_number(p({2, 1, 1}), p({2, 2})) == 0);
    CHECK_THROWS_AS(kostka_number(p({2}), p({1, 1, 1})), std::invalid_argument);

    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n))
                CHECK(kostka_number(mu, nu) == oracle::ssyt_count_bruteforce(mu, nu));
}

TEST_CASE("Young's rule support and the permutation-module dimension, n<=8") {
    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        for (const auto& nu : all) {
            CHECK(kostka_number(nu, nu) == 1);
            std::uint64_t dim_m = 0;
            for (const auto& mu : all) {
                std::uint64_t k = kostka_number(mu, nu);
                CHECK((k > 0) == dominates(mu, nu));
                dim_m += k * irrep_dimension(mu);
            }
            CHECK(dim_m == multinomial(nu));
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(p({2, 2})) == 6);
    CHECK(multinomial(p({1, 1, 1, 1, 1})) == 120);
    CHECK(multinomial(p({9})) == 1);
    CHECK(multinomial(p({4, 3, 1})) == 280);
}
