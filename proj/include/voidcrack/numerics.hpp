#ifndef VOIDCRACK_NUMERICS_HPP
#define VOIDCRACK_NUMERICS_HPP

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace voidcrack {

/// Dense square linear system A x = rhs.
struct DenseSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};

/// Solves a dense system by LU with partial pivoting (one step of
/// iterative refinement).  Throws SingularMatrixError, carrying the pivot
/// index, when elimination meets a pivot below 1e-13 times the largest one.
Eigen::VectorXd solve_dense(const DenseSystem& sys);

/// Result of a limit extrapolation: the estimated limit and the difference
/// of the last two extrapolants (internal consistency measure).
struct ExtrapolationResult {
    double value;
    double consistency;
};

/// Richardson-style extrapolation of samples (delta_m, v_m) to delta -> 0,
/// assuming v(delta) = v_inf + sum_j C_j delta^{j p}.  Implemented as
/// polynomial extrapolation (Neville) in the variable w = delta^p evaluated
/// at w = 0; exact to roundoff on data following the model.
///
/// Requires at least 3 samples with strictly decreasing positive delta,
/// else throws UsageError.
ExtrapolationResult extrapolate_limit(std::span<const std::pair<double, double>> samples,
                                      double p);

/// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b] to absolute
/// tolerance abs_tol.  Throws ConvergenceError (with the achieved estimate)
/// if the subdivision budget is exhausted first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

/// Same quadrature driven over [a, b] pre-split into panels of width at
/// most max_panel_width; each panel is refined adaptively.  Suited to
/// oscillatory integrands whose wavelength bounds the panel width.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel_width, double abs_tol);

}  // namespace voidcrack

#endif
