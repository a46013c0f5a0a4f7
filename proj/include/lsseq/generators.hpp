#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lsseq/ls_params.hpp"
#include "lsseq/point_set.hpp"

namespace lsseq {

// Sequence indexing convention. `one` follows the written definitions
// (n = 1..N, so x = n/N reaches 1.0); `zero` starts at n = 0, which is what
// the reference Matlab runs behind the built-in comparison table used.
enum class IndexBase { one, zero };

struct non_coprime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::array<std::uint32_t, 16> kFirstPrimes{
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// phi_2(n) for n = 1..N.
PointSet1D van_der_corput(std::size_t count);

// (n/N, phi_2(n)). Under IndexBase::one the point x = 1.0 is kept and the
// set is flagged closed-right; IndexBase::zero runs n = 0..N-1 instead.
PointSet2D vdc_2d(std::size_t order, IndexBase base = IndexBase::one);

// Coordinatewise radical inverses in the given bases, which must be pairwise
// coprime unless allow_non_coprime is set (useful to reproduce the classic
// degradation patterns).
PointSetKD halton(std::size_t count, const std::vector<std::uint32_t>& bases,
                  bool allow_non_coprime = false, IndexBase base = IndexBase::one);

// (n/N, phi_{b_1}(n), ..., phi_{b_{dim-1}}(n)) with b_j the j-th prime.
PointSetKD hammersley(std::size_t order, std::size_t dim,
                      IndexBase base = IndexBase::one);

// (n/N, xi^n) where xi is the LS point sequence (xi^1 = 0).
PointSet2D ls_vdc_2d(const LSParams& params, std::size_t order,
                     IndexBase base = IndexBase::one);

// (xi^n_{L1,S1}, xi^n_{L2,S2}); infinite-sequence analogue of halton.
PointSet2D ls_halton_2d(const LSParams& px, const LSParams& py, std::size_t count);

// Fractional parts {n*theta}, n = 1..N. Rational theta is accepted; the
// equidistribution guarantee is simply void then.
PointSet1D kronecker(double theta, std::size_t count);

// Seeded xorshift64* baseline, the stand-in for the pseudo-random column.
struct XorShift64Star {
    std::uint64_t state;

    explicit XorShift64Star(std::uint64_t seed);
    std::uint64_t next_u64();
    double next_double();  // in [0,1)
};

inline constexpr std::uint64_t kDefaultRngSeed = 0x9e3779b97f4a7c15ULL;

PointSet2D rng_2d(std::size_t count, std::uint64_t seed = kDefaultRngSeed);

// Generator selection shared by the CLI and the integration harness.
struct Generator2DSpec {
    enum class Kind { vdc, halton, hammersley, ls_vdc, ls_halton, rng };

    Kind kind = Kind::vdc;
    std::vector<std::uint32_t> bases{2, 3};  // halton
    bool allow_non_coprime = false;
    LSParams ls_x{};  // ls_vdc and ls_halton
    LSParams ls_y{};  // ls_halton
    std::uint64_t seed = kDefaultRngSeed;

    PointSet2D make(std::size_t count, IndexBase base = IndexBase::one) const;
    std::string label() const;
};

}  // namespace lsseq
