#include "lsseq/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lsseq/counts.hpp"
#include "lsseq/discrepancy.hpp"

namespace lsseq {

RefinementRule ls_rule(const LSParams& params) {
    RefinementRule rule;
    rule.fractions.reserve(static_cast<std::size_t>(params.base));
    for (int i = 0; i < params.L; ++i) {
        rule.fractions.push_back(params.beta);
    }
    for (int i = 0; i < params.S; ++i) {
        rule.fractions.push_back(params.beta * params.beta);
    }
    return rule;
}

namespace {

void validate_rule(const RefinementRule& rule) {
    if (rule.fractions.empty()) {
        throw std::domain_error("refine: empty refinement rule");
    }
    double sum = 0.0;
    for (double f : rule.fractions) {
        if (!(f > 0.0) || !(f < 1.0 + 1e-12)) {
            throw std::domain_error("refine: rule fractions must lie in (0,1)");
        }
        sum += f;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::domain_error("refine: rule fractions must sum to 1");
    }
}

}  // namespace

Partition refine(const Partition& pi, const RefinementRule& rule, double tie_tol) {
    validate_rule(rule);
    if (!(tie_tol > 0.0)) {
        throw std::domain_error("refine: tie tolerance must be positive");
    }
    const std::vector<double>& lefts = pi.lefts;
    const std::size_t k = lefts.size();

    double max_len = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double right = (i + 1 < k) ? lefts[i + 1] : 1.0;
        max_len = std::max(max_len, right - lefts[i]);
    }
    const double threshold = max_len * (1.0 - tie_tol);

    Partition out;
    out.lefts.clear();
    out.lefts.reserve(k * rule.fractions.size());
    for (std::size_t i = 0; i < k; ++i) {
        const double left = lefts[i];
        const double right = (i + 1 < k) ? lefts[i + 1] : 1.0;
        const double len = right - left;
        out.lefts.push_back(left);
        if (len >= threshold) {
            double offset = 0.0;
            for (std::size_t j = 0; j + 1 < rule.fractions.size(); ++j) {
                offset += rule.fractions[j] * len;
                out.lefts.push_back(left + offset);
            }
        }
    }
    return out;
}

Partition ls_partition(const LSParams& params, int depth, std::size_t cap) {
    if (depth < 0) {
        throw std::domain_error("ls_partition: depth must be nonnegative");
    }
    const CountTriple census = counts(params, depth);  // also screens overflow
    if (census.total > cap) {
        throw std::length_error("ls_partition: t(" + std::to_string(depth) + ") = " +
                                std::to_string(census.total) + " exceeds cap " +
                                std::to_string(cap));
    }
    const RefinementRule rule = ls_rule(params);
    Partition pi;
    for (int n = 0; n < depth; ++n) {
        pi = refine(pi, rule);
    }
    return pi;
}

Partition kakutani_partition(double alpha, int depth, std::size_t cap) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::domain_error("kakutani_partition: alpha must lie in (0,1)");
    }
    if (depth < 0) {
        throw std::domain_error("kakutani_partition: depth must be nonnegative");
    }
    RefinementRule rule;
    rule.fractions = {alpha, 1.0 - alpha};
    Partition pi;
    for (int n = 0; n < depth; ++n) {
        if (pi.lefts.size() * 2 > cap) {
            throw std::length_error("kakutani_partition: census exceeds cap");
        }
        pi = refine(pi, rule);
    }
    return pi;
}

double partition_discrepancy(const Partition& pi) {
    return *extreme_discrepancy_1d(pi.lefts).d_extreme;
}

std::vector<double> interval_lengths(const Partition& pi) {
    const std::size_t k = pi.lefts.size();
    std::vector<double> lengths(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double right = (i + 1 < k) ? pi.lefts[i + 1] : 1.0;
        lengths[i] = right - pi.lefts[i];
    }
    return lengths;
}

bool is_valid_partition(const Partition& pi) {
    const std::vector<double>& lefts = pi.lefts;
    if (lefts.empty() || lefts.front() != 0.0) {
        return false;
    }
    for (std::size_t i = 0; i < lefts.size(); ++i) {
        if (lefts[i] >= 1.0 || (i > 0 && lefts[i] <= lefts[i - 1])) {
            return false;
        }
    }
    const std::vector<double> lengths = interval_lengths(pi);
    const double sum = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    return std::fabs(sum - 1.0) <= 1e-9;
}

}  // namespace lsseq
