#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lsseq/counts.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/generators.hpp"

using namespace lsseq;

TEST_CASE("van der Corput prefix") {
    const PointSet1D set = van_der_corput(7);
    const double expected[] = {0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875};
    REQUIRE(set.size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(set.xs[i] == expected[i]);
    }
    CHECK(van_der_corput(1).xs == std::vector<double>{0.5});
}

TEST_CASE("vdc_2d conventions") {
    SUBCASE("one-based keeps and flags the x = 1 boundary point") {
        const PointSet2D set = vdc_2d(2);
        REQUIRE(set.size() == 2);
        CHECK(set.closed_right_x);
        CHECK(set.xs[0] == 0.5);
        CHECK(set.ys[0] == 0.5);
        CHECK(set.xs[1] == 1.0);
        CHECK(set.ys[1] == 0.25);
    }
    SUBCASE("single point") {
        const PointSet2D set = vdc_2d(1);
        CHECK(set.xs[0] == 1.0);
        CHECK(set.ys[0] == 0.5);
    }
    SUBCASE("zero-based starts at the origin and stays below 1") {
        const PointSet2D set = vdc_2d(4, IndexBase::zero);
        CHECK_FALSE(set.closed_right_x);
        CHECK(set.xs[0] == 0.0);
        CHECK(set.ys[0] == 0.0);
        CHECK(set.xs[3] == 0.75);
    }
}

TEST_CASE("halton") {
    SUBCASE("first point in bases 2,3") {
        const PointSetKD set = halton(1, {2, 3});
        CHECK(set.cols[0][0] == 0.5);
        CHECK(set.cols[1][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("non-coprime bases are rejected by name") {
        CHECK_THROWS_AS(halton(10, {2, 4}), non_coprime_error);
        CHECK_NOTHROW(halton(10, {2, 4}, /*allow_non_coprime=*/true));
    }
    SUBCASE("bases below 2 are invalid") {
        CHECK_THROWS_AS(halton(10, {1, 3}), std::domain_error);
    }
}

TEST_CASE("hammersley") {
    SUBCASE("dim 2 equals vdc_2d element-wise") {
        const PointSetKD h = hammersley(64, 2);
        const PointSet2D v = vdc_2d(64);
        REQUIRE(h.size() == 64);
        for (std::size_t i = 0; i < 64; ++i) {
            CHECK(h.cols[0][i] == v.xs[i]);
            CHECK(h.cols[1][i] == v.ys[i]);
        }
    }
    SUBCASE("dim 3 worked point") {
        const PointSetKD h = hammersley(4, 3);
        CHECK(h.cols[0][3] == 1.0);
        CHECK(h.cols[1][3] == 0.125);               // phi_2(4)
        CHECK(h.cols[2][3] == doctest::Approx(4.0 / 9.0).epsilon(1e-15));  // phi_3(4)
    }
    SUBCASE("single point") {
        const PointSetKD h = hammersley(1, 2);
        CHECK(h.cols[0][0] == 1.0);
        CHECK(h.cols[1][0] == 0.5);
    }
}

TEST_CASE("ls 2D generators") {
    const LSParams p11 = solve_beta(1, 1);
    SUBCASE("ls_vdc_2d starts the sequence at zero") {
        const PointSet2D set = ls_vdc_2d(p11, 1);
        CHECK(set.xs[0] == 1.0);
        CHECK(set.ys[0] == 0.0);
        CHECK(set.closed_right_x);
    }
    SUBCASE("ls_halton_2d starts at the origin") {
        const PointSet2D set = ls_halton_2d(p11, solve_beta(4, 1), 1);
        CHECK(set.xs[0] == 0.0);
        CHECK(set.ys[0] == 0.0);
        CHECK_FALSE(set.closed_right_x);
    }
    SUBCASE("coordinates never leave [0,1) except the flagged x = n/N edge") {
        const PointSet2D a = ls_vdc_2d(solve_beta(3, 1), 500);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.xs[i] <= 1.0);
            CHECK(a.ys[i] >= 0.0);
            CHECK(a.ys[i] < 1.0);
        }
        const PointSet2D b = ls_halton_2d(solve_beta(3, 1), solve_beta(4, 1), 500);
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b.xs[i] < 1.0);
            CHECK(b.ys[i] < 1.0);
        }
    }
}

TEST_CASE("kronecker sequence") {
    SUBCASE("worked value") {
        const PointSet1D set = kronecker(std::sqrt(2.0), 2);
        CHECK(set.xs[1] ==
              doctest::Approx(2.0 * std::sqrt(2.0) - 2.0).epsilon(1e-12));
    }
    SUBCASE("rational theta degenerates but is permitted") {
        const PointSet1D set = kronecker(0.5, 4);
        CHECK(set.xs == std::vector<double>{0.5, 0.0, 0.5, 0.0});
    }
    SUBCASE("golden ratio prefix is well distributed") {
        const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
        const auto report = star_discrepancy_1d(kronecker(golden, 1000));
        CHECK(*report.d_star < 0.01);
    }
}

TEST_CASE("census identity linking the (4,1) and (1,1) refinements") {
    const LSParams p41 = solve_beta(4, 1);
    const LSParams p11 = solve_beta(1, 1);
    for (int n = 0; n <= 25; ++n) {
        CHECK(counts(p41, n).total == counts(p11, 3 * n).total);
    }
}

TEST_CASE("no census subsequence exists for (5,1) inside (3,1)") {
    const LSParams p31 = solve_beta(3, 1);
    const std::uint64_t target = counts(solve_beta(5, 1), 1).total;  // 6
    CHECK(target == 6);
    bool found = false;
    for (int k = 0; counts(p31, k).total <= target; ++k) {
        found = found || (counts(p31, k).total == target);
    }
    CHECK_FALSE(found);  // the census jumps 1, 4, 13, ... straight over 6
}

TEST_CASE("rng baseline is reproducible per seed") {
    const PointSet2D a = rng_2d(100, 42);
    const PointSet2D b = rng_2d(100, 42);
    const PointSet2D c = rng_2d(100, 43);
    CHECK(a.xs == b.xs);
    CHECK(a.ys == b.ys);
    CHECK(a.xs != c.xs);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.xs[i] >= 0.0);
        CHECK(a.xs[i] < 1.0);
    }
}

TEST_CASE("generator spec labels and dispatch") {
    Generator2DSpec spec;
    spec.kind = Generator2DSpec::Kind::ls_halton;
    spec.ls_x = solve_beta(3, 1);
    spec.ls_y = solve_beta(4, 1);
    CHECK(spec.label() == "LS(3,1)xLS(4,1) a la Halton");
    const PointSet2D pts = spec.make(10);
    CHECK(pts.size() == 10);
    CHECK(pts.label == spec.label());
}
