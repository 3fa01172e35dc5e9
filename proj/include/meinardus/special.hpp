#pragma once
#include <complex>

namespace meinardus::special {

using Cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Decimal-string constants parsed once at startup; >= 12 correct digits each.
struct Constants {
    double euler_gamma;       // Euler–Mascheroni
    double zeta_prime_0;      // zeta'(0) = -ln(2*pi)/2
    double zeta_prime_minus1; // zeta'(-1), cross-checked via the Glaisher constant
    double gamma_quarter;     // Gamma(1/4)
    double zeta_3;            // zeta(3)
    // extra pinned values used by the preset formulas
    double zeta_3_2;          // zeta(3/2)
    double zeta_1_3;          // zeta(1/3)
    double zeta_4_3;          // zeta(4/3)
    double gamma_third;       // Gamma(1/3)
};

const Constants& constants();

// sin(pi z) with argument reduction on Re z (stable for large real parts).
Cplx sinpi(Cplx z);

// Complex Gamma, Lanczos approximation (15-term set, g = 607/128), reflection
// formula for Re z < 1/2.  Relative error <~ 1e-13 for |Im| <= 200.
Cplx gamma(Cplx z);

// Complex Riemann zeta by Euler–Maclaurin, functional equation for Re s < 1/2.
Cplx zeta(Cplx s);

// Generalized binomial coefficient binom(x, m) via Gamma ratios.
double binom_general(double x, unsigned m);

} // namespace meinardus::special
