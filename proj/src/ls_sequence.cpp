#include "lsseq/ls_sequence.hpp"

#include <stdexcept>
#include <string>

#include "lsseq/counts.hpp"

namespace lsseq {

bool is_admissible(const DigitString& digits, const LSParams& params) {
    if (digits.base != static_cast<std::uint32_t>(params.base)) {
        throw std::domain_error("is_admissible: digit base does not match L+S");
    }
    const auto L = static_cast<std::uint32_t>(params.L);
    for (std::size_t i = 0; i + 1 < digits.digits.size(); ++i) {
        if (digits.digits[i] >= L && digits.digits[i + 1] >= 1) {
            return false;
        }
    }
    return true;
}

LSPointSeq block_points(const LSParams& params, int depth, std::size_t cap) {
    if (depth < 0) {
        throw std::domain_error("block_points: depth must be nonnegative");
    }
    const CountTriple census = counts(params, depth);
    if (census.total > cap) {
        throw std::length_error("block_points: t(" + std::to_string(depth) +
                                ") exceeds cap");
    }

    LSPointSeq seq;
    seq.params = params;
    seq.points.reserve(census.total);
    seq.exact.reserve(census.total);

    seq.points.push_back(0.0);
    seq.exact.push_back({});
    if (depth == 0) {
        return seq;
    }

    // First block: lefts of the first refinement, in increasing order.
    for (int d = 1; d < params.base; ++d) {
        DigitString ds;
        ds.base = static_cast<std::uint32_t>(params.base);
        ds.digits = {static_cast<std::uint32_t>(d)};
        BetaPolynomial poly = poly_from_digits(ds, params);
        seq.points.push_back(eval_beta_poly(poly, params));
        seq.exact.push_back(std::move(poly));
    }

    double power = params.beta;  // beta^k while extending block k to k+1
    for (int k = 1; k < depth; ++k) {
        power *= params.beta;    // beta^{k+1}
        const std::size_t longs = counts(params, k).longs;
        const auto extend = [&](std::uint16_t p, std::uint16_t q, double shift) {
            for (std::size_t j = 0; j < longs; ++j) {
                BetaPolynomial poly = seq.exact[j];
                poly.coeffs.resize(static_cast<std::size_t>(k), BetaTerm{});
                poly.coeffs.push_back({p, q});
                seq.points.push_back(seq.points[j] + shift);
                seq.exact.push_back(std::move(poly));
            }
        };
        for (int i = 1; i <= params.L; ++i) {
            extend(static_cast<std::uint16_t>(i), 0, i * power);
        }
        for (int j = 1; j < params.S; ++j) {
            extend(static_cast<std::uint16_t>(params.L), static_cast<std::uint16_t>(j),
                   params.L * power + j * power * params.beta);
        }
    }
    return seq;
}

LSPointSeq fast_points(const LSParams& params, std::size_t count) {
    if (count == 0) {
        throw std::domain_error("fast_points: count must be positive");
    }
    LSPointSeq seq;
    seq.params = params;
    seq.points.reserve(count);
    seq.exact.reserve(count);
    const auto base = static_cast<std::uint64_t>(params.base);
    const auto L = static_cast<std::uint32_t>(params.L);
    std::vector<std::uint32_t> scratch;
    for (std::uint64_t n = 0; seq.points.size() < count; ++n) {
        scratch.clear();
        for (std::uint64_t rest = n; rest > 0; rest /= base) {
            scratch.push_back(static_cast<std::uint32_t>(rest % base));
        }
        if (scratch.empty()) {
            scratch.push_back(0);
        }
        bool admissible = true;
        for (std::size_t i = 0; i + 1 < scratch.size() && admissible; ++i) {
            admissible = !(scratch[i] >= L && scratch[i + 1] >= 1);
        }
        if (!admissible) {
            continue;
        }
        BetaPolynomial poly = poly_from_digits(std::span(scratch), params);
        seq.points.push_back(eval_beta_poly(poly, params));
        seq.exact.push_back(std::move(poly));
    }
    return seq;
}

namespace {

// Digit-wise descent over big-endian strings of fixed length; ascending
// digit choice per position yields numeric order.
class AdmissibleEnumerator {
public:
    AdmissibleEnumerator(const LSParams& params, LSPointSeq& out, std::size_t count)
        : params_(params), out_(out), count_(count) {}

    void run() {
        const std::uint32_t zero[] = {0};
        emit(zero);
        std::vector<std::uint32_t> big;
        for (std::size_t len = 1; out_.points.size() < count_; ++len) {
            big.assign(len, 0);
            descend(big, 0);
        }
    }

private:
    void descend(std::vector<std::uint32_t>& big, std::size_t pos) {
        if (out_.points.size() >= count_) {
            return;
        }
        const auto base = static_cast<std::uint32_t>(params_.base);
        const auto L = static_cast<std::uint32_t>(params_.L);
        const std::uint32_t lo = (pos == 0) ? 1 : 0;
        const bool prev_nonzero = pos > 0 && big[pos - 1] >= 1;
        for (std::uint32_t d = lo; d < base; ++d) {
            if (prev_nonzero && d >= L) {
                break;  // (a_i >= L, a_{i+1} >= 1) pair would be forbidden
            }
            big[pos] = d;
            if (pos + 1 == big.size()) {
                little_.assign(big.rbegin(), big.rend());
                emit(little_);
                if (out_.points.size() >= count_) {
                    return;
                }
            } else {
                descend(big, pos + 1);
            }
        }
    }

    void emit(std::span<const std::uint32_t> little) {
        BetaPolynomial poly = poly_from_digits(little, params_);
        out_.points.push_back(eval_beta_poly(poly, params_));
        out_.exact.push_back(std::move(poly));
    }

    const LSParams& params_;
    LSPointSeq& out_;
    std::size_t count_;
    std::vector<std::uint32_t> little_;
};

}  // namespace

LSPointSeq direct_enumeration(const LSParams& params, std::size_t count) {
    if (count == 0) {
        throw std::domain_error("direct_enumeration: count must be positive");
    }
    LSPointSeq seq;
    seq.params = params;
    seq.points.reserve(count);
    seq.exact.reserve(count);
    AdmissibleEnumerator(params, seq, count).run();
    return seq;
}

LSPointSeq ls_points(const LSParams& params, std::size_t count) {
    return count > 1000 ? direct_enumeration(params, count) : fast_points(params, count);
}

}  // namespace lsseq
