#pragma once

#include <cstddef>
#include <vector>

#include "lsseq/ls_params.hpp"

namespace lsseq {

// Partition of [0,1) into half-open intervals, stored as the sorted left
// endpoints; the right endpoint 1 is implicit.
struct Partition {
    std::vector<double> lefts{0.0};
};

// Homothetic subdivision pattern: positive fractions summing to 1.
// For LS refinement this is L copies of beta followed by S copies of beta^2.
struct RefinementRule {
    std::vector<double> fractions;
};

RefinementRule ls_rule(const LSParams& params);

// Subdivides every interval of maximal length by the rule; intervals whose
// length falls below the maximum by more than tie_tol (relative) are copied
// unchanged. Subdivision in floats makes "equal maximal length" inexact,
// hence the tolerance.
Partition refine(const Partition& pi, const RefinementRule& rule,
                 double tie_tol = 1e-9);

inline constexpr std::size_t kDefaultPartitionCap = 1'000'000;

// depth-fold LS refinement of the trivial partition. Throws
// std::length_error once the interval census would exceed cap.
Partition ls_partition(const LSParams& params, int depth,
                       std::size_t cap = kDefaultPartitionCap);

// depth-fold refinement with the two-piece rule {alpha, 1-alpha}.
Partition kakutani_partition(double alpha, int depth,
                             std::size_t cap = kDefaultPartitionCap);

// Extreme discrepancy of the partition's left endpoints.
double partition_discrepancy(const Partition& pi);

std::vector<double> interval_lengths(const Partition& pi);

// Validity check used by tests and CSV ingestion: lefts start at 0,
// strictly increase, stay below 1, and lengths sum to 1 within 1e-9.
bool is_valid_partition(const Partition& pi);

}  // namespace lsseq
