#include "voidcrack/material.hpp"

#include <cmath>
#include <string>

#include "voidcrack/errors.hpp"

namespace voidcrack {

namespace {

void require(bool ok, const char* constant, const std::string& condition) {
    if (!ok) {
        throw ParameterError(std::string(constant) + " violates " + condition);
    }
}

}  // namespace

PorousParams PorousParams::from_c2_N(double c2, double N) {
    require(std::isfinite(c2) && c2 > 0.0 && c2 < 1.0, "c2", "0 < c2 < 1");
    if (!(std::isfinite(N) && N >= 0.0 && N < 1.0)) {
        throw CouplingError("coupling number N must lie in [0, 1), got " + std::to_string(N));
    }
    // Lengths are not determined by (c2, N); use the l2-normalization the
    // solvers assume (all lengths measured in units of l2).
    return {c2, N, N, 1.0, 1.0};
}

PorousParams derive_dimensionless(double lambda, double mu, double alpha, double beta,
                                  double xi) {
    require(std::isfinite(mu) && mu > 0.0, "mu", "mu > 0");
    require(std::isfinite(lambda) && lambda + 2.0 * mu > 0.0, "lambda", "lambda + 2 mu > 0");
    require(std::isfinite(alpha) && alpha > 0.0, "alpha", "alpha > 0");
    require(std::isfinite(beta) && beta >= 0.0, "beta", "beta >= 0");
    require(std::isfinite(xi) && xi > 0.0, "xi", "xi > 0");

    const double c2 = mu / (lambda + 2.0 * mu);
    require(c2 < 1.0, "c2", "c2 = mu/(lambda+2mu) < 1");

    const double l2 = std::sqrt(alpha / xi);
    if (beta < 1e-12) {
        // decoupled limit: porosity field does not feed back on the elastic one
        return {c2, 0.0, 0.0, l2, l2};
    }
    const double H = beta / (lambda + 2.0 * mu);
    const double l1 = std::sqrt(alpha / beta);
    const double N = (l2 * l2) / (l1 * l1) * H;
    if (!(N < 1.0)) {
        throw CouplingError("derived coupling number N = " + std::to_string(N) +
                            " is outside the admissible range [0, 1)");
    }
    return {c2, N, H, l1, l2};
}

void validate(const CrackConfig& cfg) {
    require(std::isfinite(cfg.b) && cfg.b > 0.0, "b", "b > 0");
    require(std::isfinite(cfg.sigma0) && cfg.sigma0 > 0.0, "sigma0", "sigma0 > 0");
    require(std::isfinite(cfg.mu) && cfg.mu > 0.0, "mu", "mu > 0");
}

}  // namespace voidcrack
