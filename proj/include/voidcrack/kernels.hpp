#ifndef VOIDCRACK_KERNELS_HPP
#define VOIDCRACK_KERNELS_HPP

#include "voidcrack/material.hpp"

namespace voidcrack {

/// Immutable evaluation context shared by the kernel routines.
///
/// norm = (1-N)^2 (1-c^2) is the strength of the hypersingular part of the
/// plane kernel (the large-s slope of the symbol, L(s) ~ norm * s).
struct KernelContext {
    PorousParams params;
    double norm;

    explicit KernelContext(const PorousParams& p)
        : params(p), norm((1.0 - p.N) * (1.0 - p.N) * (1.0 - p.c2)) {}
};

/// q(s) = sqrt(s^2 + 1 - N).  Throws DomainError for N outside [0, 1).
double q_sym(double s, double N);

/// Symbol of the stress/opening relation,
///   L(s) = (s/q) [ 2 N c^2 s^2 (q - s) + (1-N)(1-N-c^2) q ].
/// L(0) = 0 and L(s)/s -> norm as s -> infinity.  The (q - s) difference is
/// evaluated as (1-N)/(q+s) to stay accurate at large s.
double symbol_L(double s, const KernelContext& ctx);

/// Normalized symbol remainder M(s) = L(s)/(norm s) - 1, continuously
/// extended to s = 0.  Decays like O(1/s^2); identically 0 at N = 0.
double symbol_remainder(double s, const KernelContext& ctx);

/// Plane-strain convolution kernel K(x): the cosine transform
/// (1/pi) int_0^inf L(s) cos(sx) ds in its explicit Bessel closed form.
/// Hypersingular at the origin, K(x) ~ -norm/(pi x^2); throws DomainError
/// at x = 0.  Even in x.
double plane_kernel(double x, const KernelContext& ctx);

/// Regular part of the plane kernel after extracting the characteristic
/// term: Khat(x) = -(pi/norm) K(x) - 1/x^2.  Grows only logarithmically as
/// x -> 0 (evaluated there by an ascending series, so the cancellation in
/// the closed form never materializes).  Identically 0 at N = 0.  Throws
/// DomainError at x = 0.
double plane_kernel_regular(double x, const KernelContext& ctx);

/// Regularized penny-crack kernel
///   K*(x) = int_0^inf [ L(s)/(norm s) - 1 ] cos(xs) ds.
/// Finite everywhere (x = 0 allowed), even, C^1; identically 0 at N = 0.
/// Evaluated by subtracting a two-term rational model with a known cosine
/// transform and integrating the O(1/s^6) remainder by adaptive panels.
/// Throws ConvergenceError if the quadrature tolerance cannot be met.
double penny_kernel_regular(double x, const KernelContext& ctx);

}  // namespace voidcrack

#endif
