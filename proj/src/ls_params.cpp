#include "lsseq/ls_params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lsseq {

LSParams solve_beta(int L, int S) {
    if (L < 1 || S < 1) {
        throw std::domain_error("solve_beta: L and S must be positive, got L=" +
                                std::to_string(L) + " S=" + std::to_string(S));
    }
    if (L + S > 65535) {
        throw std::domain_error("solve_beta: base L+S too large");
    }
    const double l = static_cast<double>(L);
    const double s = static_cast<double>(S);
    double beta = (-l + std::sqrt(l * l + 4.0 * s)) / (2.0 * s);
    // One Newton step on f(x) = s*x^2 + l*x - 1 pushes the closed form to
    // machine precision (f' > 0 on (0,1), so the step is well conditioned).
    beta -= (s * beta * beta + l * beta - 1.0) / (2.0 * s * beta + l);

    LSParams p{L, S, beta, L + S};
    if (beta_residual(p) > 1e-12) {
        throw std::domain_error("solve_beta: residual above 1e-12");
    }
    return p;
}

double beta_residual(const LSParams& p) {
    return std::fabs(p.L * p.beta + p.S * p.beta * p.beta - 1.0);
}

}  // namespace lsseq
