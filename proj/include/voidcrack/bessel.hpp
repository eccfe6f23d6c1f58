#ifndef VOIDCRACK_BESSEL_HPP
#define VOIDCRACK_BESSEL_HPP

namespace voidcrack {

/// Value of a special-function evaluation together with a conservative
/// absolute error bound.
struct BesselEval {
    double value;
    double abs_error_bound;
};

/// Modified Bessel function of the second kind (McDonald function) K0(z).
///
/// Evaluated by the ascending power series for z <= 2 and by exponentially
/// scaled Chebyshev expansions for z > 2.  Absolute accuracy is a few ulp
/// of the result over [1e-8, 50].
///
/// Throws DomainError unless z > 0 and finite.
double bessel_k0(double z);

/// Modified Bessel function of the second kind K1(z).  Same evaluation
/// scheme and domain contract as bessel_k0.
double bessel_k1(double z);

/// As bessel_k0/bessel_k1 but returning the value with an error bound.
BesselEval bessel_k0_eval(double z);
BesselEval bessel_k1_eval(double z);

}  // namespace voidcrack

#endif
