#include "lsseq/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace lsseq {

std::string format_sig17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const PointSet1D& pts) {
    os << "index,x\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i + 1) << ',' << format_sig17(pts.xs[i]) << '\n';
    }
}

void write_csv(std::ostream& os, const PointSet2D& pts) {
    os << "index,x,y\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i + 1) << ',' << format_sig17(pts.xs[i]) << ','
           << format_sig17(pts.ys[i]) << '\n';
    }
}

void write_partition_csv(std::ostream& os, const Partition& pi) {
    os << "index,left\n";
    for (std::size_t i = 0; i < pi.lefts.size(); ++i) {
        os << (i + 1) << ',' << format_sig17(pi.lefts[i]) << '\n';
    }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& field, std::size_t line_no) {
    if (field.empty()) {
        throw csv_error(line_no, "empty numeric field");
    }
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        throw csv_error(line_no, "malformed number '" + field + "'");
    }
    return v;
}

}  // namespace

CsvPoints read_points_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw csv_error(1, "missing header row");
    }
    const std::vector<std::string> header = split_fields(line);
    bool has_index = !header.empty() && header.front() == "index";
    const std::size_t coord_cols = header.size() - (has_index ? 1 : 0);
    if (coord_cols < 1 || coord_cols > 2) {
        throw csv_error(1, "expected 1 or 2 coordinate columns, found " +
                               std::to_string(coord_cols));
    }

    CsvPoints out;
    out.dim = static_cast<int>(coord_cols);
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw csv_error(line_no, "expected " + std::to_string(header.size()) +
                                         " fields, found " +
                                         std::to_string(fields.size()));
        }
        const std::size_t off = has_index ? 1 : 0;
        out.xs.push_back(parse_double(fields[off], line_no));
        if (coord_cols == 2) {
            out.ys.push_back(parse_double(fields[off + 1], line_no));
        }
    }
    if (out.xs.empty()) {
        throw csv_error(line_no, "no data rows");
    }
    return out;
}

}  // namespace lsseq
