#include "voidcrack/material.hpp"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "voidcrack/errors.hpp"

using voidcrack::derive_dimensionless;
using voidcrack::PorousParams;

TEST(Material, UnitConstants) {
    const PorousParams p = derive_dimensionless(1.0, 1.0, 1.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(p.c2, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(p.H, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(p.l1, 1.0);
    EXPECT_DOUBLE_EQ(p.l2, 1.0);
    EXPECT_NEAR(p.N, 1.0 / 3.0, 1e-15);
}

TEST(Material, VanishingBetaDecouples) {
    const PorousParams p = derive_dimensionless(3.0, 1.0, 2.0, 1e-13, 1.0);
    EXPECT_EQ(p.N, 0.0);
    EXPECT_EQ(p.H, 0.0);
}

TEST(Material, CouplingErrorWhenNReachesOne) {
    // N = beta^2/(xi (lambda+2mu)) = 9/3 = 3
    EXPECT_THROW(derive_dimensionless(1.0, 1.0, 1.0, 3.0, 1.0), voidcrack::CouplingError);
}

TEST(Material, ParameterErrorsNameTheConstant) {
    try {
        derive_dimensionless(1.0, -1.0, 1.0, 1.0, 1.0);
        FAIL() << "expected ParameterError";
    } catch (const voidcrack::ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("mu"), std::string::npos);
    }
    try {
        derive_dimensionless(1.0, 1.0, -2.0, 1.0, 1.0);
        FAIL() << "expected ParameterError";
    } catch (const voidcrack::ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
    }
    EXPECT_THROW(derive_dimensionless(1.0, 1.0, 1.0, 1.0, -1.0), voidcrack::ParameterError);
}

TEST(Material, NegativeLambdaAllowed) {
    // auxetic-like matrix: lambda < 0 is fine while lambda + 2mu > 0
    const PorousParams p = derive_dimensionless(-0.5, 1.0, 1.0, 0.5, 1.0);
    EXPECT_GT(p.c2, 0.0);
    EXPECT_LT(p.c2, 1.0);
}

TEST(Material, ScaleInvariance) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    const PorousParams ref = derive_dimensionless(2.0, 1.5, 0.8, 0.7, 1.3);
    for (int i = 0; i < 50; ++i) {
        const double s = scale(rng);
        const PorousParams p =
            derive_dimensionless(2.0 * s, 1.5 * s, 0.8 * s, 0.7 * s, 1.3 * s);
        EXPECT_NEAR(p.c2, ref.c2, 1e-14);
        EXPECT_NEAR(p.H, ref.H, 1e-14);
        EXPECT_NEAR(p.N, ref.N, 1e-14);
    }
}

TEST(Material, Determinism) {
    const PorousParams a = derive_dimensionless(2.0, 1.5, 0.8, 0.7, 1.3);
    const PorousParams b = derive_dimensionless(2.0, 1.5, 0.8, 0.7, 1.3);
    EXPECT_EQ(a.N, b.N);
    EXPECT_EQ(a.c2, b.c2);
}

TEST(Material, DirectConstruction) {
    const PorousParams p = PorousParams::from_c2_N(0.2, 0.6);
    EXPECT_EQ(p.c2, 0.2);
    EXPECT_EQ(p.N, 0.6);
    EXPECT_THROW(PorousParams::from_c2_N(0.0, 0.5), voidcrack::ParameterError);
    EXPECT_THROW(PorousParams::from_c2_N(1.0, 0.5), voidcrack::ParameterError);
    EXPECT_THROW(PorousParams::from_c2_N(0.5, 1.0), voidcrack::CouplingError);
    EXPECT_THROW(PorousParams::from_c2_N(0.5, -0.1), voidcrack::CouplingError);
}

TEST(Material, CrackConfigValidation) {
    voidcrack::CrackConfig bad{-1.0, 1.0, 1.0};
    EXPECT_THROW(voidcrack::validate(bad), voidcrack::ParameterError);
    voidcrack::CrackConfig good{2.0, 1.0, 1.0};
    EXPECT_NO_THROW(voidcrack::validate(good));
}
