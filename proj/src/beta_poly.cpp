#include "lsseq/beta_poly.hpp"

#include <stdexcept>

namespace lsseq {

void BetaPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == BetaTerm{}) {
        coeffs.pop_back();
    }
}

BetaPolynomial poly_from_digits(const DigitString& d, const LSParams& params) {
    if (d.base != static_cast<std::uint32_t>(params.base)) {
        throw std::domain_error("poly_from_digits: digit base does not match L+S");
    }
    return poly_from_digits(std::span<const std::uint32_t>(d.digits), params);
}

BetaPolynomial poly_from_digits(std::span<const std::uint32_t> little_endian,
                                const LSParams& params) {
    BetaPolynomial poly;
    poly.coeffs.reserve(little_endian.size());
    const auto L = static_cast<std::uint32_t>(params.L);
    for (std::uint32_t digit : little_endian) {
        if (digit <= L) {
            poly.coeffs.push_back({static_cast<std::uint16_t>(digit), 0});
        } else {
            poly.coeffs.push_back({static_cast<std::uint16_t>(L),
                                   static_cast<std::uint16_t>(digit - L)});
        }
    }
    poly.trim();
    return poly;
}

double eval_beta_poly(const BetaPolynomial& poly, const LSParams& params) {
    const double beta = params.beta;
    double power = 1.0;
    double x = 0.0;
    for (const BetaTerm& term : poly.coeffs) {
        power *= beta;
        x += (static_cast<double>(term.p) + static_cast<double>(term.q) * beta) * power;
    }
    return x;
}

}  // namespace lsseq
