#include "voidcrack/kernels.hpp"

#include <array>
#include <cmath>
#include <string>

#include "voidcrack/bessel.hpp"
#include "voidcrack/errors.hpp"
#include "voidcrack/numerics.hpp"

namespace voidcrack {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// kappa = N c^2 / ((1-N)(1-c^2)); the amplitude of everything the porosity
// coupling adds on top of the classical kernel.
double kappa_of(const KernelContext& ctx) {
    const double N = ctx.params.N, c2 = ctx.params.c2;
    return N * c2 / ((1.0 - N) * (1.0 - c2));
}

// V(z) = 12/z^4 + 1/z^2 - (12/z^3 + 4/z) K1(z) - (2 + 6/z^2) K0(z),
// the parameter-free profile of the regular plane kernel:
//   Khat(x) = -(N c^2/(1-c^2)) V(sqrt(1-N) |x|).
// Direct evaluation cancels catastrophically as z -> 0, so below the seam
// the ascending series V = sum z^{2k} (p_k (ln(z/2)+gamma) + q_k) is used;
// its coefficients follow from the K0/K1 series (p_0 = 3/4, q_0 = 7/16).
constexpr double kVSeamZ = 0.5;
constexpr int kVTerms = 16;

struct VSeries {
    std::array<double, kVTerms> p{}, q{};
    VSeries() {
        std::array<double, kVTerms + 2> e{}, c{}, d{}, H{};
        double fact_k = 1.0;        // k!
        double fact_k1 = 1.0;       // (k+1)!
        double pow4 = 1.0;          // 4^-k
        for (int k = 0; k < kVTerms + 2; ++k) {
            if (k > 0) {
                fact_k *= k;
                fact_k1 *= (k + 1);
                pow4 *= 0.25;
                H[k] = H[k - 1] + 1.0 / k;
            } else {
                fact_k1 = 1.0;  // 1! for k = 0
            }
            e[k] = pow4 / (fact_k * fact_k1);
            c[k] = -pow4 / (fact_k * fact_k);
            d[k] = (k >= 1) ? H[k] * pow4 / (fact_k * fact_k) : 0.0;
        }
        for (int k = 0; k < kVTerms; ++k) {
            const double Hk = H[k], Hk1 = H[k + 1], Hk2 = H[k + 2];
            p[k] = -(6.0 * e[k + 1] + 6.0 * c[k + 1] + 2.0 * e[k] + 2.0 * c[k]);
            q[k] = -(-3.0 * e[k + 1] * (Hk1 + Hk2) + 6.0 * d[k + 1] - e[k] * (Hk + Hk1) +
                     2.0 * d[k]);
        }
    }
};

const VSeries& v_series() {
    static const VSeries s;
    return s;
}

double V_profile(double z) {
    if (z < kVSeamZ) {
        const auto& s = v_series();
        const double lt = std::log(0.5 * z) + kEulerGamma;
        const double z2 = z * z;
        double acc = 0.0;
        for (int k = kVTerms - 1; k >= 0; --k) {
            acc = acc * z2 + (s.p[k] * lt + s.q[k]);
        }
        return acc;
    }
    const double k0 = bessel_k0(z);
    const double k1 = bessel_k1(z);
    const double iz = 1.0 / z, iz2 = iz * iz;
    return 12.0 * iz2 * iz2 + iz2 - (12.0 * iz2 * iz + 4.0 * iz) * k1 -
           (2.0 + 6.0 * iz2) * k0;
}

}  // namespace

double q_sym(double s, double N) {
    if (!(N >= 0.0 && N < 1.0)) {
        throw DomainError("q_sym: coupling number N must lie in [0, 1), got " +
                          std::to_string(N));
    }
    if (!(s >= 0.0)) throw DomainError("q_sym: s must be nonnegative");
    return std::sqrt(s * s + 1.0 - N);
}

double symbol_L(double s, const KernelContext& ctx) {
    const double N = ctx.params.N, c2 = ctx.params.c2;
    const double q = q_sym(s, N);
    // q - s = (1-N)/(q+s), exact and cancellation-free
    const double qms = (1.0 - N) / (q + s);
    return s * (2.0 * N * c2 * s * s * qms / q + (1.0 - N) * (1.0 - N - c2));
}

double symbol_remainder(double s, const KernelContext& ctx) {
    const double N = ctx.params.N;
    if (N == 0.0) return 0.0;
    const double m2 = 1.0 - N;
    const double q = std::sqrt(s * s + m2);
    const double qs = q + s;
    return -kappa_of(ctx) * m2 * (q + 2.0 * s) / (q * qs * qs);
}

double plane_kernel(double x, const KernelContext& ctx) {
    if (x == 0.0) {
        throw DomainError("plane_kernel: hypersingular at x = 0");
    }
    return -(ctx.norm / kPi) * (1.0 / (x * x) + plane_kernel_regular(x, ctx));
}

double plane_kernel_regular(double x, const KernelContext& ctx) {
    if (x == 0.0) {
        throw DomainError("plane_kernel_regular: logarithmic singularity at x = 0");
    }
    const double N = ctx.params.N, c2 = ctx.params.c2;
    if (N == 0.0) return 0.0;
    const double z = std::sqrt(1.0 - N) * std::abs(x);
    return -(N * c2 / (1.0 - c2)) * V_profile(z);
}

double penny_kernel_regular(double x, const KernelContext& ctx) {
    const double N = ctx.params.N;
    if (!std::isfinite(x)) throw DomainError("penny_kernel_regular: x must be finite");
    if (N == 0.0) return 0.0;

    const double m2 = 1.0 - N;
    const double m = std::sqrt(m2);
    const double kap = kappa_of(ctx);
    const double ax = std::abs(x);

    // Two-term rational model matching M(s) through O(1/s^4):
    //   T(s) = -kappa m^2 [ (3/4)/(s^2+m^2) + (m^2/8)/(s^2+m^2)^2 ],
    // whose cosine transform is
    //   That(x) = -(pi kappa m / 32) (13 + m|x|) e^{-m|x|}.
    // The remainder R = M - T decays like (3/64) kappa m^6 / s^6.
    const auto R = [&](double s) {
        const double q2 = s * s + m2;
        return symbol_remainder(s, ctx) + kap * m2 * (0.75 / q2 + m2 / (8.0 * q2 * q2));
    };

    // Truncation point: |int_S^inf R| <= |R(S)| S / 5 for the 1/s^6 tail.
    constexpr double tol = 1e-10;
    double S = 64.0;
    while (std::abs(R(S)) * S / 5.0 > 0.25 * tol && S < 1e6) S *= 2.0;

    const double width = kPi / (4.0 * std::max(ax, 1.0));
    const double integral =
        integrate_panels([&](double s) { return R(s) * std::cos(x * s); }, 0.0, S, width,
                         0.5 * tol);
    const double that = -(kPi * kap * m / 32.0) * (13.0 + m * ax) * std::exp(-m * ax);
    return integral + that;
}

}  // namespace voidcrack
