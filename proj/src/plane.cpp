#include "voidcrack/plane.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "voidcrack/errors.hpp"

namespace voidcrack {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Extraction samples x_m = b(1 + delta0 ratio^-m).
constexpr double kScfDelta0 = 0.1;
constexpr double kScfRatio = 4.0;
constexpr int kScfSamples = 6;

void check_mesh_args(const CrackConfig& cfg, int n) {
    validate(cfg);
    if (n < 8 || n % 2 != 0) {
        throw UsageError("plane solver: n must be even and >= 8, got " + std::to_string(n));
    }
}

}  // namespace

PlaneMesh PlaneMesh::uniform(double b, int n) {
    PlaneMesh mesh;
    mesh.n = n;
    mesh.b = b;
    mesh.h = 2.0 * b / n;
    mesh.x_nodes.resize(n);
    mesh.t_nodes.resize(n + 1);
    for (int i = 0; i < n; ++i) mesh.x_nodes[i] = -b + (i + 0.5) * mesh.h;
    for (int j = 0; j <= n; ++j) mesh.t_nodes[j] = -b + j * mesh.h;
    return mesh;
}

DenseSystem assemble_plane_system(const CrackConfig& cfg, const KernelContext& ctx, int n) {
    check_mesh_args(cfg, n);
    const PlaneMesh mesh = PlaneMesh::uniform(cfg.b, n);
    const double h = mesh.h;

    // Regular term: per-cell 2-point Gauss quadrature of Khat(x_i - xi)
    // against the constant cell value.  The node offsets are
    // (i - j) h -+ g h with g = 1/(2 sqrt(3)), so the kernel is needed at
    // 2(2n-1) distinct arguments, all at least 0.28 h from the origin, and
    // the matrix stays persymmetric (the solution symmetry the even
    // problem demands).
    const double goff = 0.5 / std::sqrt(3.0);
    Eigen::VectorXd khat_m(2 * n - 1), khat_p(2 * n - 1);
    for (int d = 0; d < 2 * n - 1; ++d) {
        const double off = (d - n + 1) * h;
        khat_m[d] = plane_kernel_regular(off - goff * h, ctx);
        khat_p[d] = plane_kernel_regular(off + goff * h, ctx);
    }

    DenseSystem sys;
    sys.matrix.resize(n, n);
    sys.rhs = Eigen::VectorXd::Constant(n, kPi * cfg.sigma0 / (2.0 * cfg.mu * (1.0 - ctx.params.c2)));
    for (int i = 0; i < n; ++i) {
        const double xi = mesh.x_nodes[i];
        for (int j = 0; j < n; ++j) {
            const double d1 = xi - mesh.t_nodes[j + 1];
            const double d0 = xi - mesh.t_nodes[j];
            const double reg = 0.5 * (khat_m[i - j + n - 1] + khat_p[i - j + n - 1]);
            sys.matrix(i, j) = 1.0 / d1 - 1.0 / d0 + h * reg;
        }
    }
    return sys;
}

OpeningProfile solve_plane(const CrackConfig& cfg, const KernelContext& ctx, int n) {
    const DenseSystem sys = assemble_plane_system(cfg, ctx, n);
    // With this sign convention the solved vector comes out negative; flip
    // so the reported faces open under the tensile load.
    Eigen::VectorXd g = -solve_dense(sys);
    OpeningProfile profile;
    profile.mesh = PlaneMesh::uniform(cfg.b, n);
    profile.g = std::move(g);
    return profile;
}

double plane_edge_factor(const OpeningProfile& profile, double x) {
    const auto& t = profile.mesh.t_nodes;
    const double b = profile.mesh.b;
    if (!(x > b)) throw DomainError("plane_edge_factor: requires x > b");
    double acc = 0.0;
    for (int j = 0; j < profile.mesh.n; ++j) {
        acc += profile.g[j] * (1.0 / (x - t[j + 1]) - 1.0 / (x - t[j]));
    }
    return (2.0 / kPi) * std::abs(acc) * std::sqrt((x - b) * (x + b)) / b;
}

ScfResult scf_plane(const OpeningProfile& profile, const CrackConfig& cfg,
                    const KernelContext& ctx) {
    if (profile.mesh.n < 8) throw UsageError("scf_plane: profile mesh too coarse");
    const double b = profile.mesh.b;
    const int n = profile.mesh.n;
    const double k0 = cfg.sigma0 / (cfg.mu * (1.0 - ctx.params.c2));

    ScfResult res;
    res.k0 = k0;
    res.n_used = n;

    if (ctx.params.N == 0.0) {
        // the control solution below would be this very profile
        res.k = k0;
        res.ratio = 1.0;
        res.est_error = 0.0;
        return res;
    }

    // Classical control solution on the same mesh: its exact k is k0, so
    // extrapolating the samplewise ratio F_N/F_0 removes the shared mesh
    // bias of the exterior stress samples.
    const KernelContext ctx0(PorousParams::from_c2_N(ctx.params.c2, 0.0));
    const OpeningProfile control = solve_plane(cfg, ctx0, n);

    std::vector<std::pair<double, double>> samples;
    samples.reserve(kScfSamples);
    for (int m = 0; m < kScfSamples; ++m) {
        const double delta = kScfDelta0 * std::pow(kScfRatio, -m);
        const double x = b * (1.0 + delta);
        samples.emplace_back(delta, plane_edge_factor(profile, x) /
                                        plane_edge_factor(control, x));
    }
    const ExtrapolationResult ex = extrapolate_limit(samples, 0.5);

    res.ratio = ex.value;
    res.k = ex.value * k0;
    res.est_error = ex.consistency * k0;
    return res;
}

double classical_plane_opening(double b, double c2, double x, double sigma0, double mu) {
    if (std::abs(x) > b) {
        throw DomainError("classical_plane_opening: |x| must not exceed b");
    }
    return sigma0 * std::sqrt((b - x) * (b + x)) / (2.0 * mu * (1.0 - c2));
}

}  // namespace voidcrack
