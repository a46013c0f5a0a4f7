#pragma once

#include <cstdint>

#include "lsseq/ls_params.hpp"

namespace lsseq {

// Interval census of the n-th LS partition refinement.
struct CountTriple {
    std::uint64_t total = 1;   // t(n), all intervals
    std::uint64_t longs = 1;   // l(n), intervals of length beta^n
    std::uint64_t shorts = 0;  // s(n), intervals of length beta^{n+1}
    int depth = 0;

    friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

// Runs the recurrences l(n) = L*l(n-1) + s(n-1), s(n) = S*l(n-1) from
// (t,l,s)(0) = (1,1,0). All arithmetic is overflow-checked; a depth whose
// census exceeds the 64-bit range throws std::overflow_error.
CountTriple counts(const LSParams& params, int depth);

}  // namespace lsseq
