#include "voidcrack/bessel.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "voidcrack/errors.hpp"

using voidcrack::bessel_k0;
using voidcrack::bessel_k1;

TEST(Bessel, ReferenceValuesAtOne) {
    // frozen from the series/asymptotic cross-summation done before the build
    EXPECT_NEAR(bessel_k0(1.0), 0.421024438240708333, 1e-9);
    EXPECT_NEAR(bessel_k1(1.0), 0.601907230197234574, 1e-9);
}

TEST(Bessel, MatchesIntegralRepresentation) {
    for (double z : {1e-6, 1e-3, 0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 5.0, 8.0, 9.0, 20.0, 50.0}) {
        const double ref0 = oracles::bessel_k_integral(0, z);
        const double ref1 = oracles::bessel_k_integral(1, z);
        EXPECT_NEAR(bessel_k0(z), ref0, 1e-10 * std::max(1.0, ref0)) << "z=" << z;
        EXPECT_NEAR(bessel_k1(z), ref1, 1e-10 * std::max(1.0, ref1)) << "z=" << z;
    }
}

TEST(Bessel, SmallArgumentLawK0) {
    // K0(z) ~ -ln(z/2) - gamma + O(z^2 ln z); at z = 0.01 the exact
    // remainder is (z^2/4)(1 - ln(z/2) - gamma) = 1.433e-4
    const double z = 0.01;
    EXPECT_NEAR(bessel_k0(z) + std::log(0.005) + 0.577216, 0.0, 2e-4);
}

TEST(Bessel, SmallArgumentLawK1) {
    const double z = 1e-6;
    EXPECT_NEAR(z * bessel_k1(z), 1.0, 1e-9);
}

TEST(Bessel, ExponentialDecay) {
    EXPECT_LT(bessel_k0(40.0), 1e-17);
}

TEST(Bessel, DerivativeOfK0IsMinusK1) {
    const double z = 2.0;
    const double h = 1e-5;
    const double fd = (bessel_k0(z + h) - bessel_k0(z - h)) / (2.0 * h);
    EXPECT_NEAR(fd, -bessel_k1(2.0), 1e-6);
}

TEST(Bessel, DerivativeIdentitiesOverLogGrid) {
    // d/dz K0 = -K1 and d/dz K1 = -K0 - K1/z, central differences with a
    // step scaled to the argument
    for (int i = 0; i < 100; ++i) {
        const double z = std::pow(10.0, -3.0 + 4.4771212547 * i / 99.0);  // [1e-3, 30]
        const double h = std::min(1e-4 * z, 1e-3);  // truncation ~h^2/6 past z ~ 1
        const double d0 = (bessel_k0(z + h) - bessel_k0(z - h)) / (2.0 * h);
        const double d1 = (bessel_k1(z + h) - bessel_k1(z - h)) / (2.0 * h);
        EXPECT_NEAR(d0 / (-bessel_k1(z)), 1.0, 1e-6) << "z=" << z;
        EXPECT_NEAR(d1 / (-bessel_k0(z) - bessel_k1(z) / z), 1.0, 1e-6) << "z=" << z;
    }
}

TEST(Bessel, PositivityAndOrdering) {
    for (int i = 0; i < 200; ++i) {
        const double z = std::pow(10.0, -6.0 + 7.7 * i / 199.0);
        const double k0 = bessel_k0(z);
        const double k1 = bessel_k1(z);
        EXPECT_GT(k0, 0.0) << "z=" << z;
        EXPECT_GT(k1, k0) << "z=" << z;
    }
}

TEST(Bessel, ExpansionResidualOrder) {
    // residual of the K0 small-argument law is O(z^2 ln z)
    constexpr double kGamma = 0.57721566490153287;
    double worst = 0.0;
    for (double z : {1e-4, 1e-3, 1e-2, 0.05, 0.1}) {
        const double resid = std::abs(bessel_k0(z) + std::log(0.5 * z) + kGamma);
        worst = std::max(worst, resid / (z * z * std::abs(std::log(z))));
    }
    EXPECT_LT(worst, 1.0);
}

TEST(Bessel, SeamContinuityAtTwo) {
    // the series and scaled-Chebyshev regimes must agree where they meet
    const double below0 = bessel_k0(2.0);
    const double above0 = bessel_k0(std::nextafter(2.0, 3.0));
    EXPECT_NEAR(below0, above0, 1e-12);
    const double below1 = bessel_k1(2.0);
    const double above1 = bessel_k1(std::nextafter(2.0, 3.0));
    EXPECT_NEAR(below1, above1, 1e-12);
}

TEST(Bessel, ErrorBoundInvariant) {
    for (int i = 0; i < 100; ++i) {
        const double z = std::pow(10.0, -8.0 + 9.69897 * i / 99.0);  // [1e-8, 50]
        const auto e0 = voidcrack::bessel_k0_eval(z);
        EXPECT_GT(e0.value, 0.0);
        EXPECT_LE(e0.abs_error_bound, 1e-12) << "z=" << z;
        if (z >= 1e-3) {
            // K1 grows like 1/z; a 1e-12 absolute bound is only meaningful
            // once the value is O(1e3) or smaller
            const auto e1 = voidcrack::bessel_k1_eval(z);
            EXPECT_LE(e1.abs_error_bound, 1.01e-12) << "z=" << z;
        }
    }
}

TEST(Bessel, DomainErrors) {
    EXPECT_THROW(bessel_k0(0.0), voidcrack::DomainError);
    EXPECT_THROW(bessel_k0(-1.0), voidcrack::DomainError);
    EXPECT_THROW(bessel_k1(std::nan("")), voidcrack::DomainError);
    EXPECT_THROW(bessel_k1(std::numeric_limits<double>::infinity()), voidcrack::DomainError);
}
