#pragma once

#include <cstddef>
#include <vector>

#include "lsseq/beta_poly.hpp"
#include "lsseq/digits.hpp"
#include "lsseq/ls_params.hpp"
#include "lsseq/partition.hpp"

namespace lsseq {

// A base-(L+S) digit string survives iff no little-endian neighbour pair
// (a_i, a_{i+1}) has a_i >= L and a_{i+1} >= 1; those pairs correspond to the
// forbidden compositions of the short subdivision maps.
bool is_admissible(const DigitString& digits, const LSParams& params);

// Prefix of the LS point sequence, with the exact beta-polynomial kept next
// to each emitted double.
struct LSPointSeq {
    LSParams params;
    std::vector<double> points;
    std::vector<BetaPolynomial> exact;

    std::size_t size() const { return points.size(); }
};

// Block construction: the first t(1) points are the left endpoints of the
// first refinement in increasing order, and each further block appends the
// shift maps x -> x + i*beta^{k+1} (i = 1..L) and
// x -> x + L*beta^{k+1} + j*beta^{k+2} (j = 1..S-1) applied to the first
// l(k) points so far. Produces exactly t(depth) points.
LSPointSeq block_points(const LSParams& params, int depth,
                        std::size_t cap = kDefaultPartitionCap);

// Reference digit algorithm: walks the naturals in order, keeps the
// admissible base-(L+S) strings, and maps digits to beta-polynomial terms.
LSPointSeq fast_points(const LSParams& params, std::size_t count);

// Generates the admissible strings directly (digit-wise descent in numeric
// order), skipping the rejected naturals; element-wise equal to fast_points.
LSPointSeq direct_enumeration(const LSParams& params, std::size_t count);

// Dispatch used by the 2D generators: reject sampling thins out for long
// strings, so direct enumeration takes over past 1000 points.
LSPointSeq ls_points(const LSParams& params, std::size_t count);

}  // namespace lsseq
