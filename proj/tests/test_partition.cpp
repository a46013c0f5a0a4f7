#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsseq/counts.hpp"
#include "lsseq/partition.hpp"

using namespace lsseq;

TEST_CASE("first LS refinements match the worked partitions") {
    SUBCASE("L=S=1") {
        const LSParams p = solve_beta(1, 1);
        const double b = p.beta;
        const Partition pi1 = ls_partition(p, 1);
        REQUIRE(pi1.lefts.size() == 2);
        CHECK(pi1.lefts[1] == doctest::Approx(b).epsilon(1e-15));

        const Partition pi2 = ls_partition(p, 2);
        REQUIRE(pi2.lefts.size() == 3);
        CHECK(pi2.lefts[1] == doctest::Approx(b * b).epsilon(1e-12));
        CHECK(pi2.lefts[2] == doctest::Approx(b).epsilon(1e-12));
    }
    SUBCASE("L=2,S=1") {
        const LSParams p = solve_beta(2, 1);
        const Partition pi = ls_partition(p, 1);
        REQUIRE(pi.lefts.size() == 3);
        CHECK(pi.lefts[1] == doctest::Approx(p.beta).epsilon(1e-15));
        CHECK(pi.lefts[2] == doctest::Approx(2.0 * p.beta).epsilon(1e-15));
    }
    SUBCASE("L=1,S=2") {
        const LSParams p = solve_beta(1, 2);
        const Partition pi = ls_partition(p, 1);
        REQUIRE(pi.lefts.size() == 3);
        CHECK(pi.lefts[1] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(pi.lefts[2] == doctest::Approx(0.75).epsilon(1e-15));
    }
    SUBCASE("depth 0 is the trivial partition") {
        CHECK(ls_partition(solve_beta(3, 1), 0).lefts == std::vector<double>{0.0});
    }
}

TEST_CASE("identity rule copies the partition") {
    RefinementRule identity;
    identity.fractions = {1.0};
    Partition pi;
    pi.lefts = {0.0, 0.25, 0.7};
    CHECK(refine(pi, identity).lefts == pi.lefts);
}

TEST_CASE("rule validation") {
    Partition pi;
    RefinementRule bad;
    bad.fractions = {0.5, 0.6};
    CHECK_THROWS_AS(refine(pi, bad), std::domain_error);
    bad.fractions = {};
    CHECK_THROWS_AS(refine(pi, bad), std::domain_error);
    bad.fractions = {1.5, -0.5};
    CHECK_THROWS_AS(refine(pi, bad), std::domain_error);
}

TEST_CASE("kakutani refinement") {
    SUBCASE("alpha = 1/2 gives the dyadic partition") {
        const Partition pi = kakutani_partition(0.5, 3);
        REQUIRE(pi.lefts.size() == 8);
        for (int i = 0; i < 8; ++i) {
            CHECK(pi.lefts[i] == doctest::Approx(i / 8.0).epsilon(1e-15));
        }
    }
    SUBCASE("single split") {
        const Partition pi = kakutani_partition(0.3, 1);
        REQUIRE(pi.lefts.size() == 2);
        CHECK(pi.lefts[1] == doctest::Approx(0.3).epsilon(1e-15));
    }
    SUBCASE("alpha = beta(1,1) coincides with the LS partition at all depths") {
        const LSParams p = solve_beta(1, 1);
        for (int depth = 0; depth <= 16; ++depth) {
            const Partition a = kakutani_partition(p.beta, depth);
            const Partition b = ls_partition(p, depth);
            REQUIRE(a.lefts.size() == b.lefts.size());
            for (std::size_t i = 0; i < a.lefts.size(); ++i) {
                CHECK(a.lefts[i] == doctest::Approx(b.lefts[i]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("invalid alpha") {
        CHECK_THROWS_AS(kakutani_partition(0.0, 1), std::domain_error);
        CHECK_THROWS_AS(kakutani_partition(1.0, 1), std::domain_error);
    }
}

TEST_CASE("census: interval counts and lengths follow the recurrences") {
    for (const auto& [L, S] : {std::pair{1, 1}, {2, 1}, {1, 2}, {3, 1}}) {
        const LSParams p = solve_beta(L, S);
        for (int n = 0; n <= 12; ++n) {
            const CountTriple c = counts(p, n);
            if (c.total > 4'000'000) {
                break;
            }
            const Partition pi = ls_partition(p, n, 4'000'000);
            REQUIRE(pi.lefts.size() == c.total);
            CHECK(is_valid_partition(pi));

            const double long_len = std::pow(p.beta, n);
            const double short_len = std::pow(p.beta, n + 1);
            std::size_t longs = 0;
            std::size_t shorts = 0;
            for (double len : interval_lengths(pi)) {
                if (std::fabs(len - long_len) <= 1e-9) {
                    ++longs;
                } else if (std::fabs(len - short_len) <= 1e-9) {
                    ++shorts;
                } else {
                    FAIL("interval length " << len
                                            << " is neither beta^n nor beta^{n+1}");
                }
            }
            CHECK(longs == c.longs);
            CHECK(shorts == c.shorts);
        }
    }
}

TEST_CASE("nesting: each refinement keeps the previous endpoints") {
    const LSParams p = solve_beta(2, 1);
    Partition prev = ls_partition(p, 0);
    for (int n = 1; n <= 9; ++n) {
        const Partition next = ls_partition(p, n);
        for (double x : prev.lefts) {
            bool found = false;
            for (double y : next.lefts) {
                found = found || std::fabs(x - y) <= 1e-12;
            }
            CHECK(found);
        }
        prev = next;
    }
}

TEST_CASE("partition cap") {
    CHECK_THROWS_AS(ls_partition(solve_beta(1, 1), 40, 1000), std::length_error);
}

TEST_CASE("partition discrepancy") {
    SUBCASE("dyadic depth 3 has discrepancy 1/8") {
        CHECK(partition_discrepancy(kakutani_partition(0.5, 3)) ==
              doctest::Approx(0.125).epsilon(1e-15));
    }
    SUBCASE("trivial partition has discrepancy 1") {
        CHECK(partition_discrepancy(Partition{}) == doctest::Approx(1.0));
    }
    SUBCASE("deeper LS partitions have smaller discrepancy") {
        const LSParams p = solve_beta(1, 1);
        const double d4 = partition_discrepancy(ls_partition(p, 4));
        const double d8 = partition_discrepancy(ls_partition(p, 8));
        CHECK(d8 < d4);
    }
}
