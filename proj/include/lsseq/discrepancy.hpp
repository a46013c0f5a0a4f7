#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "lsseq/point_set.hpp"

namespace lsseq {

// Interval or box realizing the supremum. `closed` tells whether the
// deviation was realized with boundary points counted (the count exceeding
// the measure) or excluded (the measure exceeding the count).
struct WitnessBox {
    enum class Kind { anchored_interval, interval, box };
    Kind kind = Kind::anchored_interval;
    double a = 0.0, b = 1.0;  // 1D range, or x-range of the box
    double c = 0.0, d = 1.0;  // y-range of the box
    bool closed = false;
};

std::string format_witness(const WitnessBox& w);

struct DiscrepancyReport {
    std::size_t count = 0;
    std::optional<double> d_star;
    std::optional<double> d_extreme;
    WitnessBox witness;
};

namespace detail {

// Canonical deviation evaluators. Every discrepancy path (closed-form,
// sweep, naive oracle) funnels candidate intervals/boxes through these two
// expressions so that equal candidates produce bit-identical doubles.
inline double dev_count_over(std::size_t count, std::size_t n, double measure) {
    return static_cast<double>(count) / static_cast<double>(n) - measure;
}
inline double dev_measure_over(std::size_t count, std::size_t n, double measure) {
    return measure - static_cast<double>(count) / static_cast<double>(n);
}

}  // namespace detail

// Exact star discrepancy from the order statistics:
// D* = max_i max(i/N - x_(i), x_(i) - (i-1)/N).
DiscrepancyReport star_discrepancy_1d(std::span<const double> xs);

// Exact extreme discrepancy: supremum over all intervals [a,b), evaluated
// on the critical endpoint grid of the order statistics.
DiscrepancyReport extreme_discrepancy_1d(std::span<const double> xs);

// Exact star discrepancy over anchored boxes [0,b1)x[0,b2), via a sweep
// over critical x values with per-column y prefix counts. O(N^2)-ish.
DiscrepancyReport star_discrepancy_2d(const PointSet2D& pts);

inline DiscrepancyReport star_discrepancy_1d(const PointSet1D& p) {
    return star_discrepancy_1d(std::span<const double>(p.xs));
}
inline DiscrepancyReport extreme_discrepancy_1d(const PointSet1D& p) {
    return extreme_discrepancy_1d(std::span<const double>(p.xs));
}

// |(1/N) sum_n exp(2*pi*i*h*x_n)| for integer h != 0.
double weyl_sum(std::span<const double> xs, long long h);
inline double weyl_sum(const PointSet1D& p, long long h) {
    return weyl_sum(std::span<const double>(p.xs), h);
}

// Brute-force reference implementations: identical candidate grids, counts
// obtained by scanning the raw point list. Used as cross-check oracles and
// exposed through the CLI's --oracle flag. Deliberately independent of the
// fast paths above; keep it that way.
namespace naive {

DiscrepancyReport star_1d(std::span<const double> xs);
DiscrepancyReport extreme_1d(std::span<const double> xs);
DiscrepancyReport star_2d(const PointSet2D& pts);

}  // namespace naive

}  // namespace lsseq
