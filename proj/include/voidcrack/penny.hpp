#ifndef VOIDCRACK_PENNY_HPP
#define VOIDCRACK_PENNY_HPP

#include <Eigen/Dense>

#include "voidcrack/kernels.hpp"
#include "voidcrack/material.hpp"
#include "voidcrack/numerics.hpp"
#include "voidcrack/plane.hpp"

namespace voidcrack {

/// Auxiliary density gamma on the uniform nodes xi_j = j b / m, j = 0..m
/// (both endpoints included; gamma(0) = 0 by oddness).  The crack opening
/// is recovered from gamma by an Abel-type transform.
struct GammaProfile {
    double b;
    Eigen::VectorXd nodes;  // m+1 points on [0, b]
    Eigen::VectorXd gamma;  // values at the nodes, gamma[0] = 0
};

/// Assembles the Nystrom system for the second-kind Fredholm equation of
/// the penny crack, folded to (0, b] through the odd extension of gamma:
///   A_ij = pi delta_ij + w_j [ K*(t_i - xi_j) - K*(t_i + xi_j) ],
///   rhs_i = -2 sigma0 t_i / ((1-c2) mu),
/// with composite-trapezoid weights w_j and t_i = xi_i, i, j = 1..m.
/// Requires m >= 8.
DenseSystem assemble_penny_system(const CrackConfig& cfg, const KernelContext& ctx, int m);

/// Solves for gamma on [0, b], endpoint included.
GammaProfile solve_penny(const CrackConfig& cfg, const KernelContext& ctx, int m);

/// Stress concentration factor k = |gamma(b)|/b with the classical
/// reference k0 = 2 sigma0 / (pi mu (1-c2)).
ScfResult scf_penny(const GammaProfile& gamma, const CrackConfig& cfg,
                    const KernelContext& ctx);

/// Crack opening g(r) = int_r^b gamma(xi) dxi / sqrt(xi^2 - r^2) for
/// r < b (0 for r >= b), computed with the substitution xi = sqrt(r^2+u^2)
/// that removes the integrable endpoint singularity.  gamma is interpolated
/// between nodes by cubic Hermite with finite-difference slopes.
double opening_from_gamma(const GammaProfile& gamma, double r);

/// Closed-form classical density gamma(t) = -2 sigma0 t / (pi (1-c2) mu),
/// valid at N = 0.  Throws DomainError for t outside [0, b].
double classical_penny_gamma(double b, double c2, double t, double sigma0, double mu);

}  // namespace voidcrack

#endif
