#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsseq/digits.hpp"
#include "lsseq/ls_params.hpp"

namespace lsseq {

// Coefficient p + q*beta of one power of beta. Integer storage keeps point
// identity exact; floats appear only at evaluation.
struct BetaTerm {
    std::uint16_t p = 0;
    std::uint16_t q = 0;

    friend bool operator==(const BetaTerm&, const BetaTerm&) = default;
};

// Polynomial sum_i (p_i + q_i*beta) * beta^{i+1}. Canonical form has no
// trailing zero terms; the point 0 is the empty polynomial.
struct BetaPolynomial {
    std::vector<BetaTerm> coeffs;

    void trim();

    friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;
};

// Digit-substitution map of the fast algorithm: digit d <= L contributes
// (d, 0), digit L+k with k >= 1 contributes (L, k). The digit string must
// be in base L+S.
BetaPolynomial poly_from_digits(const DigitString& d, const LSParams& params);

// Same map over a bare little-endian digit span (assumed base L+S).
BetaPolynomial poly_from_digits(std::span<const std::uint32_t> little_endian,
                                const LSParams& params);

// sum_i (p_i + q_i*beta) * beta^{i+1}, accumulated in ascending i.
double eval_beta_poly(const BetaPolynomial& poly, const LSParams& params);

}  // namespace lsseq
