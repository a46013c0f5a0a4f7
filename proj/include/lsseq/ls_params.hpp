#pragma once

namespace lsseq {

// Parameters of an LS subdivision: L long intervals of length beta and
// S short intervals of length beta^2, where L*beta + S*beta^2 = 1.
struct LSParams {
    int L = 1;
    int S = 1;
    double beta = 0.0;  // positive root of S*x^2 + L*x - 1 = 0
    int base = 2;       // L + S, the digit base of the fast algorithm

    friend bool operator==(const LSParams&, const LSParams&) = default;
};

// Computes beta from the closed-form quadratic root plus one Newton step.
// Throws std::domain_error unless L >= 1 and S >= 1 (and L+S fits a digit base).
LSParams solve_beta(int L, int S);

// |L*beta + S*beta^2 - 1|, used by validity checks.
double beta_residual(const LSParams& p);

}  // namespace lsseq
