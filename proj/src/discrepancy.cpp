#include "lsseq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lsseq {

namespace {

using detail::dev_count_over;
using detail::dev_measure_over;

void require_unit_interval(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::domain_error("discrepancy: empty point set");
    }
    for (double x : xs) {
        if (!(x >= 0.0) || !(x < 1.0)) {
            throw std::domain_error("discrepancy: coordinate outside [0,1)");
        }
    }
}

std::string format_bound(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Distinct sorted values with strict/inclusive rank counts, bracketed by the
// pseudo-endpoints 0 and 1 so boundary intervals share the same candidate loop.
struct CriticalValue {
    double value;
    std::size_t count_less;
    std::size_t count_leq;
};

std::vector<CriticalValue> critical_grid_1d(std::vector<double> sorted) {
    std::vector<CriticalValue> crit;
    crit.reserve(sorted.size() + 2);
    if (sorted.front() != 0.0) {
        crit.push_back({0.0, 0, 0});
    }
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        crit.push_back({sorted[i], i, j});
        i = j;
    }
    crit.push_back({1.0, sorted.size(), sorted.size()});
    return crit;
}

}  // namespace

std::string format_witness(const WitnessBox& w) {
    switch (w.kind) {
        case WitnessBox::Kind::anchored_interval:
            return "[0, " + format_bound(w.b) + (w.closed ? "] (closed)" : ") (open)");
        case WitnessBox::Kind::interval:
            if (w.closed) {
                return "[" + format_bound(w.a) + ", " + format_bound(w.b) + "] (closed)";
            }
            return "(" + format_bound(w.a) + ", " + format_bound(w.b) + ") (open)";
        case WitnessBox::Kind::box:
            if (w.closed) {
                return "[0, " + format_bound(w.b) + "] x [0, " + format_bound(w.d) +
                       "] (closed)";
            }
            return "[0, " + format_bound(w.b) + ") x [0, " + format_bound(w.d) +
                   ") (open)";
    }
    return {};
}

DiscrepancyReport star_discrepancy_1d(std::span<const double> xs) {
    require_unit_interval(xs);
    const std::size_t n = xs.size();
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::anchored_interval, 0.0, 1.0, 0.0, 1.0, false};
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = sorted[i - 1];
        const double over = dev_count_over(i, n, x);          // c -> x from above
        const double under = dev_measure_over(i - 1, n, x);   // c = x, open count
        if (over > best) {
            best = over;
            witness = {WitnessBox::Kind::anchored_interval, 0.0, x, 0.0, 1.0, true};
        }
        if (under > best) {
            best = under;
            witness = {WitnessBox::Kind::anchored_interval, 0.0, x, 0.0, 1.0, false};
        }
    }
    report.d_star = best;
    report.witness = witness;
    return report;
}

DiscrepancyReport extreme_discrepancy_1d(std::span<const double> xs) {
    require_unit_interval(xs);
    const std::size_t n = xs.size();
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const std::vector<CriticalValue> crit = critical_grid_1d(std::move(sorted));

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::interval, 0.0, 1.0, 0.0, 1.0, false};
    for (std::size_t i = 0; i < crit.size(); ++i) {
        for (std::size_t j = i; j < crit.size(); ++j) {
            const double len = crit[j].value - crit[i].value;
            const double over =
                dev_count_over(crit[j].count_leq - crit[i].count_less, n, len);
            if (over > best) {
                best = over;
                witness = {WitnessBox::Kind::interval, crit[i].value, crit[j].value,
                           0.0, 1.0, true};
            }
            if (j > i) {
                const double under =
                    dev_measure_over(crit[j].count_less - crit[i].count_leq, n, len);
                if (under > best) {
                    best = under;
                    witness = {WitnessBox::Kind::interval, crit[i].value, crit[j].value,
                               0.0, 1.0, false};
                }
            }
        }
    }
    report.d_extreme = best;
    report.witness = witness;
    return report;
}

namespace {

void require_unit_square(const PointSet2D& pts) {
    if (pts.xs.size() != pts.ys.size()) {
        throw std::domain_error("discrepancy: ragged 2D point set");
    }
    if (pts.xs.empty()) {
        throw std::domain_error("discrepancy: empty point set");
    }
    if (pts.xs.size() > 20000) {
        throw std::length_error("discrepancy: 2D point sets are capped at 20000");
    }
    for (std::size_t i = 0; i < pts.xs.size(); ++i) {
        const double x = pts.xs[i];
        const double y = pts.ys[i];
        const bool x_ok = (x >= 0.0) && (x < 1.0 || (x == 1.0 && pts.closed_right_x));
        if (!x_ok || !(y >= 0.0) || !(y < 1.0)) {
            throw std::domain_error("discrepancy: coordinate outside the unit square");
        }
    }
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

DiscrepancyReport star_discrepancy_2d(const PointSet2D& pts) {
    require_unit_square(pts);
    const std::size_t n = pts.size();

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts.xs[a] < pts.xs[b]; });

    const std::vector<double> uy = sorted_unique(pts.ys);
    std::vector<double> ux = sorted_unique(pts.xs);
    if (ux.back() != 1.0) {
        ux.push_back(1.0);
    }

    // y ranks of the points in x order
    std::vector<std::size_t> y_rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        y_rank[i] = static_cast<std::size_t>(
            std::lower_bound(uy.begin(), uy.end(), pts.ys[order[i]]) - uy.begin());
    }

    std::vector<std::size_t> count_per_rank(uy.size(), 0);
    std::vector<std::size_t> prefix(uy.size() + 1, 0);  // prefix[j] = #(rank < j)
    const auto rebuild_prefix = [&] {
        for (std::size_t j = 0; j < uy.size(); ++j) {
            prefix[j + 1] = prefix[j] + count_per_rank[j];
        }
    };

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::box, 0.0, 1.0, 0.0, 1.0, false};
    const auto scan_devs = [&](double bx, bool closed_side) {
        const std::size_t total = prefix[uy.size()];
        for (std::size_t j = 0; j <= uy.size(); ++j) {
            const double by = (j < uy.size()) ? uy[j] : 1.0;
            const double measure = bx * by;
            // open box grid cell: count y < by ; closed: count y <= by
            std::size_t k;
            if (closed_side) {
                k = (j < uy.size()) ? prefix[j + 1] : total;
            } else {
                k = (j < uy.size()) ? prefix[j] : total;
            }
            const double dev = closed_side ? dev_count_over(k, n, measure)
                                           : dev_measure_over(k, n, measure);
            if (dev > best) {
                best = dev;
                witness = {WitnessBox::Kind::box, 0.0, bx, 0.0, by, closed_side};
            }
        }
    };

    std::size_t next = 0;
    const auto insert_x_equal = [&](double bx) {
        while (next < n && pts.xs[order[next]] == bx) {
            count_per_rank[y_rank[next]] += 1;
            ++next;
        }
    };
    for (double bx : ux) {
        if (bx == 1.0) {
            // points on the closed right edge count on both sides at b1 = 1
            insert_x_equal(1.0);
            rebuild_prefix();
            scan_devs(bx, /*closed_side=*/false);
            scan_devs(bx, /*closed_side=*/true);
        } else {
            rebuild_prefix();
            scan_devs(bx, /*closed_side=*/false);
            insert_x_equal(bx);
            rebuild_prefix();
            scan_devs(bx, /*closed_side=*/true);
        }
    }
    report.d_star = best;
    report.witness = witness;
    return report;
}

double weyl_sum(std::span<const double> xs, long long h) {
    if (h == 0) {
        throw std::domain_error("weyl_sum: h must be nonzero");
    }
    require_unit_interval(xs);
    double re = 0.0;
    double im = 0.0;
    const double factor = 2.0 * std::numbers::pi * static_cast<double>(h);
    for (double x : xs) {
        re += std::cos(factor * x);
        im += std::sin(factor * x);
    }
    return std::hypot(re, im) / static_cast<double>(xs.size());
}

namespace naive {

DiscrepancyReport star_1d(std::span<const double> xs) {
    require_unit_interval(xs);
    const std::size_t n = xs.size();
    std::vector<double> anchors(xs.begin(), xs.end());
    anchors.push_back(1.0);

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::anchored_interval, 0.0, 1.0, 0.0, 1.0, false};
    for (double c : anchors) {
        std::size_t below = 0;
        std::size_t at_or_below = 0;
        for (double x : xs) {
            below += (x < c) ? 1 : 0;
            at_or_below += (x <= c) ? 1 : 0;
        }
        const double over = dev_count_over(at_or_below, n, c);
        const double under = dev_measure_over(below, n, c);
        if (over > best) {
            best = over;
            witness = {WitnessBox::Kind::anchored_interval, 0.0, c, 0.0, 1.0, true};
        }
        if (under > best) {
            best = under;
            witness = {WitnessBox::Kind::anchored_interval, 0.0, c, 0.0, 1.0, false};
        }
    }
    report.d_star = best;
    report.witness = witness;
    return report;
}

DiscrepancyReport extreme_1d(std::span<const double> xs) {
    require_unit_interval(xs);
    const std::size_t n = xs.size();
    std::vector<double> lo(xs.begin(), xs.end());
    lo.push_back(0.0);
    std::vector<double> hi(xs.begin(), xs.end());
    hi.push_back(1.0);

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::interval, 0.0, 1.0, 0.0, 1.0, false};
    for (double a : lo) {
        for (double b : hi) {
            if (a > b) {
                continue;
            }
            std::size_t inside_closed = 0;
            std::size_t inside_open = 0;
            for (double x : xs) {
                inside_closed += (a <= x && x <= b) ? 1 : 0;
                inside_open += (a < x && x < b) ? 1 : 0;
            }
            const double len = b - a;
            const double over = dev_count_over(inside_closed, n, len);
            if (over > best) {
                best = over;
                witness = {WitnessBox::Kind::interval, a, b, 0.0, 1.0, true};
            }
            if (a < b) {
                const double under = dev_measure_over(inside_open, n, len);
                if (under > best) {
                    best = under;
                    witness = {WitnessBox::Kind::interval, a, b, 0.0, 1.0, false};
                }
            }
        }
    }
    report.d_extreme = best;
    report.witness = witness;
    return report;
}

DiscrepancyReport star_2d(const PointSet2D& pts) {
    require_unit_square(pts);
    const std::size_t n = pts.size();
    std::vector<double> bx_list = sorted_unique(pts.xs);
    if (bx_list.back() != 1.0) {
        bx_list.push_back(1.0);
    }
    std::vector<double> by_list = sorted_unique(pts.ys);
    by_list.push_back(1.0);

    DiscrepancyReport report;
    report.count = n;
    double best = -1.0;
    WitnessBox witness{WitnessBox::Kind::box, 0.0, 1.0, 0.0, 1.0, false};
    for (double bx : bx_list) {
        for (double by : by_list) {
            std::size_t k_open = 0;
            std::size_t k_closed = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = pts.xs[i];
                const double y = pts.ys[i];
                const bool x_open = (x < bx) || (bx == 1.0 && x == 1.0);
                k_open += (x_open && y < by) ? 1 : 0;
                k_closed += (x <= bx && y <= by) ? 1 : 0;
            }
            const double measure = bx * by;
            const double under = dev_measure_over(k_open, n, measure);
            const double over = dev_count_over(k_closed, n, measure);
            if (under > best) {
                best = under;
                witness = {WitnessBox::Kind::box, 0.0, bx, 0.0, by, false};
            }
            if (over > best) {
                best = over;
                witness = {WitnessBox::Kind::box, 0.0, bx, 0.0, by, true};
            }
        }
    }
    report.d_star = best;
    report.witness = witness;
    return report;
}

}  // namespace naive

}  // namespace lsseq
