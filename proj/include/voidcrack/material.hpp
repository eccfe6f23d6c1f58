#ifndef VOIDCRACK_MATERIAL_HPP
#define VOIDCRACK_MATERIAL_HPP

namespace voidcrack {

/// Dimensionless material state of the porous (Cowin-Nunziato) medium.
///
/// c2 = mu/(lambda+2mu), H = beta/(lambda+2mu), l1^2 = alpha/beta,
/// l2^2 = alpha/xi and the coupling number N = (l2^2/l1^2) H.  The solvers
/// consume only c2 and N; lengths are kept for reporting.  N = 0 decouples
/// the elastic and porosity fields.
struct PorousParams {
    double c2;
    double N;
    double H;
    double l1;
    double l2;

    /// Direct construction from the two numbers the solvers need.
    /// Validates 0 < c2 < 1 and 0 <= N < 1.
    static PorousParams from_c2_N(double c2, double N);
};

/// Crack geometry and load.  b = a/l2 is the normalized half-length
/// (radius, for the penny crack); sigma0 the applied normal load; mu the
/// shear modulus.
struct CrackConfig {
    double b;
    double sigma0 = 1.0;
    double mu = 1.0;
};

/// Builds the dimensionless parameter set from the physical constants of
/// the medium.  beta below 1e-12 is treated as exact decoupling (N = 0,
/// H = 0, l1 infinite is avoided by convention l1 = l2).
///
/// Throws ParameterError naming the offending constant if a precondition
/// fails, CouplingError if the derived N is >= 1.
PorousParams derive_dimensionless(double lambda, double mu, double alpha, double beta,
                                  double xi);

/// Validates a CrackConfig (b, sigma0, mu all positive).
void validate(const CrackConfig& cfg);

}  // namespace voidcrack

#endif
