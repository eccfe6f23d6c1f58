#include "voidcrack/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "voidcrack/errors.hpp"

namespace voidcrack {

Eigen::VectorXd solve_dense(const DenseSystem& sys) {
    const auto& A = sys.matrix;
    if (A.rows() != A.cols() || A.rows() < 1 || A.rows() != sys.rhs.size()) {
        throw UsageError("solve_dense: matrix must be square and match the rhs length");
    }
    if (!A.allFinite() || !sys.rhs.allFinite()) {
        throw UsageError("solve_dense: system contains non-finite entries");
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
    const double dmax = diag.maxCoeff();
    int imin = 0;
    const double dmin = diag.minCoeff(&imin);
    if (dmax <= 0.0 || dmin <= 1e-13 * dmax) {
        throw SingularMatrixError(
            "solve_dense: numerically singular pivot at index " + std::to_string(imin), imin);
    }

    Eigen::VectorXd x = lu.solve(sys.rhs);
    // one refinement step; cheap next to the factorization
    x += lu.solve(sys.rhs - A * x);
    return x;
}

ExtrapolationResult extrapolate_limit(std::span<const std::pair<double, double>> samples,
                                      double p) {
    const int n = static_cast<int>(samples.size());
    if (n < 3) throw UsageError("extrapolate_limit: need at least 3 samples");
    if (!(p > 0.0)) throw UsageError("extrapolate_limit: model power must be positive");
    std::vector<double> w(n), t(n);
    for (int i = 0; i < n; ++i) {
        const double delta = samples[i].first;
        if (!(delta > 0.0) || (i > 0 && !(delta < samples[i - 1].first))) {
            throw UsageError("extrapolate_limit: deltas must be positive, strictly decreasing");
        }
        w[i] = std::pow(delta, p);
        t[i] = samples[i].second;
    }

    // Neville tableau evaluated at w = 0; diagonal entries are the
    // successive extrapolants.
    double prev_diag = t[0];
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < n - j; ++i) {
            t[i] = (w[i + j] * t[i] - w[i] * t[i + 1]) / (w[i + j] - w[i]);
        }
        if (j == n - 2) prev_diag = t[0];
    }
    return {t[0], std::abs(t[0] - prev_diag)};
}

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth, int max_depth, double* achieved) {
    const PanelEstimate e = gk15(f, a, b);
    if (e.error <= tol || depth >= max_depth) {
        *achieved += e.error;
        return e.integral;
    }
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, achieved) +
           adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, achieved);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    double achieved = 0.0;
    const double v = adapt(f, a, b, abs_tol, 0, max_depth, &achieved);
    if (achieved > abs_tol * 8.0) {
        throw ConvergenceError("integrate_adaptive: tolerance not reached", achieved);
    }
    return v;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel_width, double abs_tol) {
    if (a == b) return 0.0;
    const int npanels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel_width)));
    const double w = (b - a) / npanels;
    const double per_panel = abs_tol / npanels;
    double sum = 0.0, achieved = 0.0;
    for (int i = 0; i < npanels; ++i) {
        sum += adapt(f, a + i * w, a + (i + 1) * w, per_panel, 0, 24, &achieved);
    }
    if (achieved > abs_tol * 8.0) {
        throw ConvergenceError("integrate_panels: tolerance not reached", achieved);
    }
    return sum;
}

}  // namespace voidcrack
