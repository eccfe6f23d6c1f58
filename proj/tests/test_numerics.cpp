#include "voidcrack/numerics.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "voidcrack/errors.hpp"

using voidcrack::DenseSystem;
using voidcrack::extrapolate_limit;
using voidcrack::solve_dense;

TEST(SolveDense, Identity) {
    DenseSystem sys;
    sys.matrix = Eigen::MatrixXd::Identity(4, 4);
    sys.rhs = Eigen::Vector4d(1.0, -2.0, 3.0, 0.5);
    EXPECT_TRUE(solve_dense(sys).isApprox(sys.rhs));
}

TEST(SolveDense, Diagonal) {
    DenseSystem sys;
    sys.matrix = Eigen::MatrixXd::Zero(2, 2);
    sys.matrix(0, 0) = 2.0;
    sys.matrix(1, 1) = 4.0;
    sys.rhs = Eigen::Vector2d(2.0, 8.0);
    const Eigen::VectorXd x = solve_dense(sys);
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 2.0);
}

TEST(SolveDense, RecoversKnownSolution) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 50;
    DenseSystem sys;
    sys.matrix.resize(n, n);
    Eigen::VectorXd xstar(n);
    for (int i = 0; i < n; ++i) {
        xstar[i] = u(rng);
        for (int j = 0; j < n; ++j) sys.matrix(i, j) = u(rng);
    }
    sys.matrix.diagonal().array() += 2.0;  // keep it comfortably nonsingular
    sys.rhs = sys.matrix * xstar;
    const Eigen::VectorXd x = solve_dense(sys);
    EXPECT_LT((x - xstar).norm() / xstar.norm(), 1e-8);
}

TEST(SolveDense, ResidualBound) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 80;
    DenseSystem sys;
    sys.matrix.resize(n, n);
    sys.rhs.resize(n);
    for (int i = 0; i < n; ++i) {
        sys.rhs[i] = u(rng);
        for (int j = 0; j < n; ++j) sys.matrix(i, j) = u(rng);
    }
    sys.matrix.diagonal().array() += n;  // diagonally dominant
    const Eigen::VectorXd x = solve_dense(sys);
    const double resid = (sys.matrix * x - sys.rhs).lpNorm<Eigen::Infinity>();
    const double scale = sys.matrix.cwiseAbs().rowwise().sum().maxCoeff() *
                             x.lpNorm<Eigen::Infinity>() +
                         sys.rhs.lpNorm<Eigen::Infinity>();
    EXPECT_LE(resid / scale, 1e-10);
}

TEST(SolveDense, DiagonallyDominantNeverSingular) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + trial;
        DenseSystem sys;
        sys.matrix.resize(n, n);
        sys.rhs = Eigen::VectorXd::Ones(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) sys.matrix(i, j) = u(rng);
        }
        const Eigen::MatrixXd sym = 0.5 * (sys.matrix + sys.matrix.transpose());
        sys.matrix = sym;
        sys.matrix.diagonal().array() += n + 1.0;
        EXPECT_NO_THROW(solve_dense(sys));
    }
}

TEST(SolveDense, SingularMatrixCarriesPivotIndex) {
    DenseSystem sys;
    sys.matrix.resize(3, 3);
    sys.matrix << 1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 1.0, 0.0, 1.0;  // rank 2
    sys.rhs = Eigen::Vector3d(1.0, 2.0, 1.0);
    try {
        solve_dense(sys);
        FAIL() << "expected SingularMatrixError";
    } catch (const voidcrack::SingularMatrixError& e) {
        EXPECT_GE(e.pivot_index(), 0);
        EXPECT_LT(e.pivot_index(), 3);
    }
}

TEST(Extrapolate, ExactLinearModel) {
    std::vector<std::pair<double, double>> s;
    for (int m = 0; m < 6; ++m) {
        const double d = std::pow(2.0, -m);
        s.emplace_back(d, 1.0 + d);
    }
    const auto r = extrapolate_limit(s, 1.0);
    EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(Extrapolate, ExactSqrtModel) {
    std::vector<std::pair<double, double>> s;
    for (int m = 0; m <= 4; ++m) {
        const double d = std::pow(4.0, -m);
        s.emplace_back(d, 3.0 + 2.0 * std::sqrt(d));
    }
    const auto r = extrapolate_limit(s, 0.5);
    EXPECT_NEAR(r.value, 3.0, 1e-10);
}

TEST(Extrapolate, ExactOnRandomModelData) {
    // exact (to roundoff) whenever the samples follow v = v_inf + sum C_j d^{jp}
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> pw(0.3, 1.5);
    for (int trial = 0; trial < 30; ++trial) {
        const double vinf = u(rng), c1 = u(rng), c2 = u(rng);
        const double p = pw(rng);
        std::vector<std::pair<double, double>> s;
        for (int m = 0; m < 5; ++m) {
            const double d = 0.7 * std::pow(3.0, -m);
            const double w = std::pow(d, p);
            s.emplace_back(d, vinf + c1 * w + c2 * w * w);
        }
        const auto r = extrapolate_limit(s, p);
        EXPECT_NEAR(r.value, vinf, 1e-9) << "trial " << trial;
    }
}

TEST(Extrapolate, UsageErrors) {
    std::vector<std::pair<double, double>> two = {{1.0, 1.0}, {0.5, 1.0}};
    EXPECT_THROW(extrapolate_limit(two, 1.0), voidcrack::UsageError);
    std::vector<std::pair<double, double>> nonmono = {{1.0, 1.0}, {1.5, 1.0}, {0.5, 1.0}};
    EXPECT_THROW(extrapolate_limit(nonmono, 1.0), voidcrack::UsageError);
}

TEST(Quadrature, SmoothReference) {
    const double v = voidcrack::integrate_adaptive(
        [](double x) { return std::exp(-x * x); }, 0.0, 6.0, 1e-12);
    EXPECT_NEAR(v, 0.886226925452758, 1e-12);  // sqrt(pi)/2
}

TEST(Quadrature, OscillatoryPanels) {
    // int_0^20pi cos(7x) dx = sin(140 pi)/7 = 0
    const double v = voidcrack::integrate_panels(
        [](double x) { return std::cos(7.0 * x); }, 0.0, 20.0 * M_PI, M_PI / 28.0, 1e-11);
    EXPECT_NEAR(v, 0.0, 1e-10);
}
