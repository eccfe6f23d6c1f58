#ifndef VOIDCRACK_PLANE_HPP
#define VOIDCRACK_PLANE_HPP

#include <Eigen/Dense>

#include "voidcrack/kernels.hpp"
#include "voidcrack/material.hpp"
#include "voidcrack/numerics.hpp"

namespace voidcrack {

/// Uniform collocation mesh on (-b, b): n cells of width h = 2b/n with
/// midpoint collocation nodes x_i = -b + (i-1/2)h and cell boundaries
/// t_j = -b + jh.  Every collocation node keeps distance h/2 from every
/// boundary node.
struct PlaneMesh {
    int n;
    double b;
    double h;
    Eigen::VectorXd x_nodes;  // n midpoints
    Eigen::VectorXd t_nodes;  // n+1 boundaries

    static PlaneMesh uniform(double b, int n);
};

/// Piecewise-constant crack opening on a plane mesh (value per cell, in
/// units of l2).
struct OpeningProfile {
    PlaneMesh mesh;
    Eigen::VectorXd g;
};

/// Stress concentration factor output.  k0 is the classical (N = 0)
/// reference for the same c2; est_error is the extrapolation consistency
/// measure (difference of the last two extrapolants, in units of k).
struct ScfResult {
    double k;
    double k0;
    double ratio;
    int n_used;
    double est_error;
};

/// Assembles the collocation system for the plane-strain hypersingular
/// equation: A_ij = 1/(x_i - t_j) - 1/(x_i - t_{j-1}) + h Khat(x_i - t_j),
/// rhs_i = pi sigma0 / (2 mu (1 - c2)).  Requires n >= 8 and even.
DenseSystem assemble_plane_system(const CrackConfig& cfg, const KernelContext& ctx, int n);

/// Solves the collocation system and returns the opening, oriented so the
/// crack faces open (g > 0 in the interior).
OpeningProfile solve_plane(const CrackConfig& cfg, const KernelContext& ctx, int n);

/// Normalized edge stress sample
///   F(x)/b = (2/pi) | int g(xi)/(x-xi)^2 dxi | sqrt(x^2-b^2) / b,  x > b,
/// evaluated with the exact per-cell primitives of the piecewise-constant
/// opening.  Tends to k as x -> b+.
double plane_edge_factor(const OpeningProfile& profile, double x);

/// Extracts the stress concentration factor from a solved profile.
///
/// F(x)/b is sampled at x_m = b(1 + 0.1 * 4^-m), m = 0..5, normalized by
/// the same samples of the classical (N = 0) solution on the same mesh
/// (whose exact k is sigma0/(mu(1-c2))), and the ratio is extrapolated to
/// the edge with model power 1/2.  The normalization cancels the mesh bias
/// of the exterior samples, which otherwise diverges as x -> b+.
ScfResult scf_plane(const OpeningProfile& profile, const CrackConfig& cfg,
                    const KernelContext& ctx);

/// Closed-form classical opening g(x) = sigma0 sqrt(b^2-x^2)/(2 mu (1-c2)),
/// valid at N = 0.  Throws DomainError for |x| > b.
double classical_plane_opening(double b, double c2, double x, double sigma0, double mu);

}  // namespace voidcrack

#endif
