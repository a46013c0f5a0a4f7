#include "lsseq/counts.hpp"

#include <stdexcept>
#include <string>

namespace lsseq {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("counts: interval census exceeds 64-bit range");
    }
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("counts: interval census exceeds 64-bit range");
    }
    return r;
}

}  // namespace

CountTriple counts(const LSParams& params, int depth) {
    if (depth < 0) {
        throw std::domain_error("counts: depth must be nonnegative, got " +
                                std::to_string(depth));
    }
    const auto L = static_cast<std::uint64_t>(params.L);
    const auto S = static_cast<std::uint64_t>(params.S);
    CountTriple c;
    for (int n = 1; n <= depth; ++n) {
        const std::uint64_t longs = checked_add(checked_mul(L, c.longs), c.shorts);
        const std::uint64_t shorts = checked_mul(S, c.longs);
        c.longs = longs;
        c.shorts = shorts;
        c.total = checked_add(longs, shorts);
        c.depth = n;
    }
    return c;
}

}  // namespace lsseq
