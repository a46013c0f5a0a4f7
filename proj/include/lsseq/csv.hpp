#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsseq/partition.hpp"
#include "lsseq/point_set.hpp"

namespace lsseq {

// 17 significant digits: doubles survive the CSV round trip losslessly.
std::string format_sig17(double v);

// All writers emit UTF-8, comma separators, a header row and LF endings.
void write_csv(std::ostream& os, const PointSet1D& pts);   // index,x
void write_csv(std::ostream& os, const PointSet2D& pts);   // index,x,y
void write_partition_csv(std::ostream& os, const Partition& pi);  // index,left

struct csv_error : std::runtime_error {
    std::size_t line;

    csv_error(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

// Reads point CSV produced by the writers above (an optional leading index
// column is detected from the header). dim is 1 or 2.
struct CsvPoints {
    int dim = 1;
    std::vector<double> xs;
    std::vector<double> ys;
};

CsvPoints read_points_csv(std::istream& is);

}  // namespace lsseq
