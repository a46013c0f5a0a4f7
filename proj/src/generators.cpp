#include "lsseq/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lsseq/digits.hpp"
#include "lsseq/ls_sequence.hpp"

namespace lsseq {

namespace {

void require_count(std::size_t count, const char* who) {
    if (count == 0) {
        throw std::domain_error(std::string(who) + ": count must be positive");
    }
}

std::string ls_label(const LSParams& p) {
    return "LS(" + std::to_string(p.L) + "," + std::to_string(p.S) + ")";
}

}  // namespace

PointSet1D van_der_corput(std::size_t count) {
    require_count(count, "van_der_corput");
    PointSet1D set;
    set.label = "van der Corput";
    set.xs.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        set.xs.push_back(radical_inverse(n, 2));
    }
    return set;
}

PointSet2D vdc_2d(std::size_t order, IndexBase base) {
    require_count(order, "vdc_2d");
    PointSet2D set;
    set.label = "van der Corput 2D";
    set.closed_right_x = (base == IndexBase::one);
    set.xs.reserve(order);
    set.ys.reserve(order);
    const std::uint64_t lo = (base == IndexBase::one) ? 1 : 0;
    for (std::uint64_t n = lo; n < lo + order; ++n) {
        set.xs.push_back(static_cast<double>(n) / static_cast<double>(order));
        set.ys.push_back(radical_inverse(n, 2));
    }
    return set;
}

PointSetKD halton(std::size_t count, const std::vector<std::uint32_t>& bases,
                  bool allow_non_coprime, IndexBase base) {
    require_count(count, "halton");
    if (bases.size() < 1) {
        throw std::domain_error("halton: at least one base required");
    }
    std::string label = "Halton (";
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i] < 2) {
            throw std::domain_error("halton: bases must be >= 2");
        }
        label += (i ? "," : "") + std::to_string(bases[i]);
    }
    label += ")";
    if (!allow_non_coprime) {
        for (std::size_t i = 0; i < bases.size(); ++i) {
            for (std::size_t j = i + 1; j < bases.size(); ++j) {
                if (std::gcd(bases[i], bases[j]) != 1) {
                    throw non_coprime_error("halton: bases " + std::to_string(bases[i]) +
                                            " and " + std::to_string(bases[j]) +
                                            " share a factor");
                }
            }
        }
    }
    PointSetKD set;
    set.label = label;
    set.cols.assign(bases.size(), {});
    const std::uint64_t lo = (base == IndexBase::one) ? 1 : 0;
    for (std::size_t j = 0; j < bases.size(); ++j) {
        set.cols[j].reserve(count);
        for (std::uint64_t n = lo; n < lo + count; ++n) {
            set.cols[j].push_back(radical_inverse(n, bases[j]));
        }
    }
    return set;
}

PointSetKD hammersley(std::size_t order, std::size_t dim, IndexBase base) {
    require_count(order, "hammersley");
    if (dim < 2 || dim > kFirstPrimes.size() + 1) {
        throw std::domain_error("hammersley: dimension out of range");
    }
    PointSetKD set;
    set.label = "Hammersley dim=" + std::to_string(dim);
    set.closed_right_x = (base == IndexBase::one);
    set.cols.assign(dim, {});
    const std::uint64_t lo = (base == IndexBase::one) ? 1 : 0;
    for (std::uint64_t n = lo; n < lo + order; ++n) {
        set.cols[0].push_back(static_cast<double>(n) / static_cast<double>(order));
        for (std::size_t j = 1; j < dim; ++j) {
            set.cols[j].push_back(radical_inverse(n, kFirstPrimes[j - 1]));
        }
    }
    return set;
}

PointSet2D ls_vdc_2d(const LSParams& params, std::size_t order, IndexBase base) {
    require_count(order, "ls_vdc_2d");
    PointSet2D set;
    set.label = ls_label(params) + " a la van der Corput";
    set.closed_right_x = (base == IndexBase::one);
    set.xs.reserve(order);
    set.ys = ls_points(params, order).points;
    const std::uint64_t lo = (base == IndexBase::one) ? 1 : 0;
    for (std::uint64_t n = lo; n < lo + order; ++n) {
        set.xs.push_back(static_cast<double>(n) / static_cast<double>(order));
    }
    return set;
}

PointSet2D ls_halton_2d(const LSParams& px, const LSParams& py, std::size_t count) {
    require_count(count, "ls_halton_2d");
    PointSet2D set;
    set.label = ls_label(px) + "x" + ls_label(py) + " a la Halton";
    set.xs = ls_points(px, count).points;
    set.ys = ls_points(py, count).points;
    return set;
}

PointSet1D kronecker(double theta, std::size_t count) {
    require_count(count, "kronecker");
    if (!std::isfinite(theta)) {
        throw std::domain_error("kronecker: theta must be finite");
    }
    PointSet1D set;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", theta);
    set.label = std::string("Kronecker theta=") + buf;
    set.xs.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        double frac = std::fmod(static_cast<double>(n) * theta, 1.0);
        if (frac < 0.0) {
            frac += 1.0;
        }
        if (frac >= 1.0) {
            frac = 0.0;
        }
        set.xs.push_back(frac);
    }
    return set;
}

XorShift64Star::XorShift64Star(std::uint64_t seed) : state(seed ? seed : 1) {}

std::uint64_t XorShift64Star::next_u64() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dULL;
}

double XorShift64Star::next_double() {
    // top 53 bits -> [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

PointSet2D rng_2d(std::size_t count, std::uint64_t seed) {
    require_count(count, "rng_2d");
    PointSet2D set;
    set.label = "xorshift64* seed=" + std::to_string(seed);
    set.xs.reserve(count);
    set.ys.reserve(count);
    XorShift64Star rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        set.xs.push_back(rng.next_double());
        set.ys.push_back(rng.next_double());
    }
    return set;
}

PointSet2D Generator2DSpec::make(std::size_t count, IndexBase base) const {
    switch (kind) {
        case Kind::vdc:
            return vdc_2d(count, base);
        case Kind::halton: {
            if (bases.size() != 2) {
                throw std::domain_error("halton generator spec needs two bases");
            }
            return to_2d(halton(count, bases, allow_non_coprime, base));
        }
        case Kind::hammersley:
            return to_2d(hammersley(count, 2, base));
        case Kind::ls_vdc:
            return ls_vdc_2d(ls_x, count, base);
        case Kind::ls_halton:
            return ls_halton_2d(ls_x, ls_y, count);
        case Kind::rng:
            return rng_2d(count, seed);
    }
    throw std::logic_error("Generator2DSpec: bad kind");
}

std::string Generator2DSpec::label() const {
    switch (kind) {
        case Kind::vdc:
            return "van der Corput 2D";
        case Kind::halton:
            return "Halton (" + std::to_string(bases.at(0)) + "," +
                   std::to_string(bases.at(1)) + ")";
        case Kind::hammersley:
            return "Hammersley dim=2";
        case Kind::ls_vdc:
            return ls_label(ls_x) + " a la van der Corput";
        case Kind::ls_halton:
            return ls_label(ls_x) + "x" + ls_label(ls_y) + " a la Halton";
        case Kind::rng:
            return "xorshift64* seed=" + std::to_string(seed);
    }
    return {};
}

}  // namespace lsseq
