#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsseq {

struct PointSet1D {
    std::vector<double> xs;
    std::string label;

    std::size_t size() const { return xs.size(); }
};

// closed_right_x marks sets generated with the x = n/N convention, whose
// last abscissa is exactly 1.0 and is treated as lying on a closed edge.
struct PointSet2D {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string label;
    bool closed_right_x = false;

    std::size_t size() const { return xs.size(); }
};

// Column-major s-dimensional point set (cols[j][i] = coordinate j of point i).
struct PointSetKD {
    std::vector<std::vector<double>> cols;
    std::string label;
    bool closed_right_x = false;

    std::size_t dim() const { return cols.size(); }
    std::size_t size() const { return cols.empty() ? 0 : cols.front().size(); }
};

inline PointSet2D to_2d(const PointSetKD& kd) {
    if (kd.dim() != 2) {
        throw std::invalid_argument("to_2d: point set is not two-dimensional");
    }
    return PointSet2D{kd.cols[0], kd.cols[1], kd.label, kd.closed_right_x};
}

}  // namespace lsseq
