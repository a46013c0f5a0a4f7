#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "lsseq/discrepancy.hpp"
#include "lsseq/generators.hpp"
#include "lsseq/ls_sequence.hpp"

using namespace lsseq;

namespace {

std::vector<double> random_points(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> xs(n);
    for (double& x : xs) {
        x = unit(rng);
    }
    return xs;
}

}  // namespace

TEST_CASE("star discrepancy 1D worked values") {
    SUBCASE("single point at 1/2") {
        const std::vector<double> xs{0.5};
        CHECK(*star_discrepancy_1d(xs).d_star == 0.5);
    }
    SUBCASE("centered equispaced points are optimal") {
        std::vector<double> xs;
        const std::size_t n = 10;
        for (std::size_t i = 1; i <= n; ++i) {
            xs.push_back((2.0 * i - 1.0) / (2.0 * n));
        }
        CHECK(*star_discrepancy_1d(xs).d_star == doctest::Approx(0.05).epsilon(1e-15));
    }
    SUBCASE("van der Corput satisfies the log bound and the oracle agrees") {
        const PointSet1D vdc = van_der_corput(100);
        const DiscrepancyReport fast = star_discrepancy_1d(vdc);
        CHECK(*fast.d_star <= std::log(101.0) / (100.0 * std::log(2.0)));
        CHECK(*fast.d_star == *naive::star_1d(vdc.xs).d_star);
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(star_discrepancy_1d(std::vector<double>{}),
                        std::domain_error);
        CHECK_THROWS_AS(star_discrepancy_1d(std::vector<double>{1.0}),
                        std::domain_error);
        CHECK_THROWS_AS(star_discrepancy_1d(std::vector<double>{-0.1}),
                        std::domain_error);
    }
}

TEST_CASE("extreme discrepancy 1D worked values") {
    SUBCASE("single point has extreme discrepancy 1") {
        const std::vector<double> xs{0.5};
        CHECK(*extreme_discrepancy_1d(xs).d_extreme == 1.0);
        CHECK(*naive::extreme_1d(xs).d_extreme == 1.0);
    }
    SUBCASE("left-anchored equispaced grid") {
        std::vector<double> xs;
        for (int i = 0; i < 10; ++i) {
            xs.push_back(i / 10.0);
        }
        CHECK(*extreme_discrepancy_1d(xs).d_extreme ==
              *naive::extreme_1d(xs).d_extreme);
        CHECK(*extreme_discrepancy_1d(xs).d_extreme ==
              doctest::Approx(0.1).epsilon(1e-15));
    }
}

TEST_CASE("1D oracle equivalence is exact") {
    std::mt19937_64 rng(123456);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 33u, 64u, 128u, 257u, 512u}) {
        const std::vector<double> xs = random_points(rng, n);
        CHECK(*star_discrepancy_1d(xs).d_star == *naive::star_1d(xs).d_star);
        CHECK(*extreme_discrepancy_1d(xs).d_extreme ==
              *naive::extreme_1d(xs).d_extreme);
    }
    // duplicated points and exact grid values stress the tie handling
    std::vector<double> ties{0.25, 0.25, 0.25, 0.5, 0.75, 0.75, 0.0, 0.0};
    CHECK(*star_discrepancy_1d(ties).d_star == *naive::star_1d(ties).d_star);
    CHECK(*extreme_discrepancy_1d(ties).d_extreme ==
          *naive::extreme_1d(ties).d_extreme);
}

TEST_CASE("sandwich inequalities on random sets") {
    std::mt19937_64 rng(987);
    std::uniform_int_distribution<std::size_t> size(1, 256);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = size(rng);
        const std::vector<double> xs = random_points(rng, n);
        const double d_star = *star_discrepancy_1d(xs).d_star;
        const double d = *extreme_discrepancy_1d(xs).d_extreme;
        CHECK(d_star <= d + 1e-12);
        CHECK(d <= 2.0 * d_star + 1e-12);
        CHECK(d >= 1.0 / static_cast<double>(n) - 1e-12);
        CHECK(d <= 1.0 + 1e-12);
    }
}

TEST_CASE("permutation invariance") {
    std::mt19937_64 rng(55);
    std::vector<double> xs = random_points(rng, 100);
    const double star = *star_discrepancy_1d(xs).d_star;
    const double extreme = *extreme_discrepancy_1d(xs).d_extreme;
    std::shuffle(xs.begin(), xs.end(), rng);
    CHECK(*star_discrepancy_1d(xs).d_star == star);
    CHECK(*extreme_discrepancy_1d(xs).d_extreme == extreme);
}

TEST_CASE("star discrepancy 2D worked values") {
    SUBCASE("single point at the centre") {
        PointSet2D pts;
        pts.xs = {0.5};
        pts.ys = {0.5};
        CHECK(*star_discrepancy_2d(pts).d_star == 0.75);
        CHECK(*naive::star_2d(pts).d_star == 0.75);
        const DiscrepancyReport report = star_discrepancy_2d(pts);
        CHECK(report.witness.closed);
        CHECK(report.witness.b == 0.5);
        CHECK(report.witness.d == 0.5);
    }
    SUBCASE("a point hugging the corner leaves an almost full empty box") {
        PointSet2D pts;
        pts.xs = {1e-9};
        pts.ys = {1e-9};
        CHECK(*star_discrepancy_2d(pts).d_star == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("halton(2,3) at N = 216 against the naive oracle") {
        const PointSet2D pts = to_2d(halton(216, {2, 3}));
        CHECK(*star_discrepancy_2d(pts).d_star == *naive::star_2d(pts).d_star);
    }
    SUBCASE("rejects coordinates outside the unit square") {
        PointSet2D pts;
        pts.xs = {1.0};
        pts.ys = {0.5};
        CHECK_THROWS_AS(star_discrepancy_2d(pts), std::domain_error);
        pts.closed_right_x = true;  // the flag legitimises the boundary point
        CHECK_NOTHROW(star_discrepancy_2d(pts));
    }
}

TEST_CASE("2D oracle equivalence is exact") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
        PointSet2D pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.xs.push_back(unit(rng));
            pts.ys.push_back(unit(rng));
        }
        CHECK(*star_discrepancy_2d(pts).d_star == *naive::star_2d(pts).d_star);
    }
    SUBCASE("with duplicated coordinates and boundary points") {
        PointSet2D pts;
        pts.closed_right_x = true;
        pts.xs = {0.25, 0.25, 0.5, 1.0, 1.0, 0.75};
        pts.ys = {0.1, 0.9, 0.5, 0.5, 0.25, 0.1};
        CHECK(*star_discrepancy_2d(pts).d_star == *naive::star_2d(pts).d_star);
    }
}

TEST_CASE("2D discrepancy of the flagged boundary convention") {
    // (n/N, phi_2(n)) keeps x = 1; the closed right edge must not inflate
    // the discrepancy beyond the sandwich bound of its anchored boxes.
    const PointSet2D pts = vdc_2d(64);
    const double d = *star_discrepancy_2d(pts).d_star;
    CHECK(d > 0.0);
    CHECK(d < 0.25);
}

TEST_CASE("weyl sums") {
    SUBCASE("equispaced points cancel exactly") {
        std::vector<double> xs;
        for (int i = 0; i < 8; ++i) {
            xs.push_back(i / 8.0);
        }
        CHECK(weyl_sum(xs, 1) <= 1e-12);
    }
    SUBCASE("constant points have unit modulus") {
        const std::vector<double> xs(16, 0.25);
        CHECK(weyl_sum(xs, 1) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("golden-ratio rotation nearly cancels") {
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        CHECK(weyl_sum(kronecker(golden, 10000), 1) <= 0.01);
    }
    SUBCASE("h = 0 is rejected") {
        const std::vector<double> xs{0.5};
        CHECK_THROWS_AS(weyl_sum(xs, 0), std::domain_error);
    }
}

TEST_CASE("LS point prefixes spread out as N grows") {
    const LSParams p = solve_beta(1, 1);
    const double d500 = *star_discrepancy_1d(ls_points(p, 500).points).d_star;
    const double d5000 = *star_discrepancy_1d(ls_points(p, 5000).points).d_star;
    CHECK(d5000 < d500);
}
