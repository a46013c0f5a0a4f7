#include "lsseq/svg.hpp"

#include <cstdio>
#include <stdexcept>

namespace lsseq {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string scatter_svg(const PointSet2D& pts) {
    if (pts.xs.size() != pts.ys.size()) {
        throw std::invalid_argument("scatter_svg: ragged point set");
    }
    std::string svg;
    svg.reserve(64 * pts.size() + 256);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 1000 1000\">\n";
    svg += "<title>" + xml_escape(pts.label) + "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        svg += "<circle cx=\"" + coord(pts.xs[i] * 1000.0) + "\" cy=\"" +
               coord((1.0 - pts.ys[i]) * 1000.0) + "\" r=\"1.2\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace lsseq
