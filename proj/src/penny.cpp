#include "voidcrack/penny.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "voidcrack/errors.hpp"

namespace voidcrack {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Cubic Hermite interpolation of gamma between its nodes, with
// second-order finite-difference slopes (one-sided at the ends).
double gamma_interp(const GammaProfile& gp, double xi) {
    const int m = static_cast<int>(gp.gamma.size()) - 1;
    const double h = gp.b / m;
    if (xi <= 0.0) return 0.0;
    if (xi >= gp.b) return gp.gamma[m];
    const int j = std::min(static_cast<int>(xi / h), m - 1);
    const double t = (xi - j * h) / h;
    const auto& g = gp.gamma;
    auto slope = [&](int i) {
        if (i == 0) return (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
        if (i == m) return (3.0 * g[m] - 4.0 * g[m - 1] + g[m - 2]) / (2.0 * h);
        return (g[i + 1] - g[i - 1]) / (2.0 * h);
    };
    const double g0 = g[j], g1 = g[j + 1];
    const double d0 = slope(j) * h, d1 = slope(j + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * g0 + (t3 - 2.0 * t2 + t) * d0 +
           (-2.0 * t3 + 3.0 * t2) * g1 + (t3 - t2) * d1;
}

}  // namespace

DenseSystem assemble_penny_system(const CrackConfig& cfg, const KernelContext& ctx, int m) {
    validate(cfg);
    if (m < 8) throw UsageError("penny solver: m must be >= 8, got " + std::to_string(m));
    const double b = cfg.b;
    const double h = b / m;

    // K* enters only at the offsets (i +- j) h; tabulate once on d = 0..2m.
    // Each entry is an adaptive quadrature (the dominant cost), and the
    // arguments are independent, so the table fills in parallel.
    Eigen::VectorXd tab(2 * m + 1);
    {
        unsigned nthreads = std::thread::hardware_concurrency();
        if (nthreads == 0) nthreads = 1;
        if (const char* env = std::getenv("VOIDCRACK_THREADS")) {
            const long cap = std::strtol(env, nullptr, 10);
            if (cap >= 1 && cap < static_cast<long>(nthreads)) {
                nthreads = static_cast<unsigned>(cap);
            }
        }
        nthreads = std::min<unsigned>(nthreads, 2 * m + 1);
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        auto worker = [&]() {
            for (;;) {
                const int d = next.fetch_add(1);
                if (d > 2 * m || failed.load()) return;
                try {
                    tab[d] = penny_kernel_regular(d * h, ctx);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                    return;
                }
            }
        };
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (failed.load()) std::rethrow_exception(failure);
    }

    Eigen::VectorXd w = Eigen::VectorXd::Constant(m, h);
    w[m - 1] = 0.5 * h;  // trapezoid endpoint weight at xi = b

    DenseSystem sys;
    sys.matrix.resize(m, m);
    sys.rhs.resize(m);
    for (int i = 1; i <= m; ++i) {
        sys.rhs[i - 1] = -2.0 * cfg.sigma0 * (i * h) / ((1.0 - ctx.params.c2) * cfg.mu);
        for (int j = 1; j <= m; ++j) {
            const double folded = tab[std::abs(i - j)] - tab[i + j];
            sys.matrix(i - 1, j - 1) = (i == j ? kPi : 0.0) + w[j - 1] * folded;
        }
    }
    return sys;
}

GammaProfile solve_penny(const CrackConfig& cfg, const KernelContext& ctx, int m) {
    const DenseSystem sys = assemble_penny_system(cfg, ctx, m);
    const Eigen::VectorXd sol = solve_dense(sys);
    GammaProfile gp;
    gp.b = cfg.b;
    gp.nodes.resize(m + 1);
    gp.gamma.resize(m + 1);
    gp.gamma[0] = 0.0;  // odd extension
    for (int j = 0; j <= m; ++j) gp.nodes[j] = j * cfg.b / m;
    for (int j = 1; j <= m; ++j) gp.gamma[j] = sol[j - 1];
    return gp;
}

ScfResult scf_penny(const GammaProfile& gamma, const CrackConfig& cfg,
                    const KernelContext& ctx) {
    const int m = static_cast<int>(gamma.gamma.size()) - 1;
    ScfResult res;
    res.k = std::abs(gamma.gamma[m]) / gamma.b;
    res.k0 = 2.0 * cfg.sigma0 / (kPi * cfg.mu * (1.0 - ctx.params.c2));
    res.ratio = res.k / res.k0;
    res.n_used = m;
    res.est_error = 0.0;
    return res;
}

double opening_from_gamma(const GammaProfile& gamma, double r) {
    if (r < 0.0) throw DomainError("opening_from_gamma: r must be nonnegative");
    const double b = gamma.b;
    if (r >= b) return 0.0;
    const double U = std::sqrt((b - r) * (b + r));
    // g(r) = int_0^U gamma(sqrt(r^2+u^2)) / sqrt(r^2+u^2) du
    return integrate_adaptive(
        [&](double u) {
            const double xi = std::sqrt(r * r + u * u);
            return xi > 0.0 ? gamma_interp(gamma, xi) / xi : 0.0;
        },
        0.0, U, 1e-10);
}

double classical_penny_gamma(double b, double c2, double t, double sigma0, double mu) {
    if (t < 0.0 || t > b) throw DomainError("classical_penny_gamma: t must lie in [0, b]");
    return -2.0 * sigma0 * t / (kPi * (1.0 - c2) * mu);
}

}  // namespace voidcrack
