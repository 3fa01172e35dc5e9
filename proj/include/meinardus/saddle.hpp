#pragma once
#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "meinardus/lspec.hpp"
#include "meinardus/weight.hpp"

namespace meinardus {

using Cplx = std::complex<double>;

// Phi_f(z) = Log G_f(e^{-z}) = sum_m f(m) sum_j e^{-jmz}/j and its z-derivatives,
// evaluated from the series with the inner j-sum in closed form.  The weight
// table is grown lazily and shared between evaluations.
class PhiSeries {
  public:
    explicit PhiSeries(WeightFunction w);

    // k-th derivative, k in 0..4; requires Re z > 0.
    Cplx eval(Cplx z, int k) const;
    double eval_real(double x, int k) const;

  private:
    std::size_t truncation(double x, int k) const;
    const std::vector<std::uint64_t>& table(std::size_t M) const;

    WeightFunction w_;
    mutable std::vector<std::uint64_t> f_;
};

Cplx phi(const WeightFunction& w, Cplx z, int k);

struct SaddleResult {
    std::uint64_t n = 0;
    double rho = 0;       // Newton solution of -Phi'(rho) = n
    double rho_asym = 0;  // closed-form approximation
    double residual = 0;  // |Phi'(rho) + n|
};

SaddleResult solve_saddle(const WeightFunction& w, std::uint64_t n);

// Closed-form saddle expansion through the 1/n term (one- or two-pole).
double rho_asymptotic(const LSpec& spec, std::uint64_t n);

// The K_1..K_{ell+1} coefficients of the two-pole saddle expansion (exposed
// individually for testing), plus the exponents they attach to.
struct SaddleExpansion {
    int ell = 0;
    std::vector<double> K;          // K[j-1] = K_j, j = 1..ell+1
    std::vector<double> exponents;  // rho term j ~ K_j / n^{exponents[j-1]}
};
SaddleExpansion two_pole_saddle_expansion(const LSpec& spec);

struct CauchyResult {
    mpz_class nearest;     // nearest integer to the quadrature value
    double delta = 0;      // value - nearest (rounding slack)
    double err_estimate = 0;
};

// Full-circle Cauchy integral for p_f(n), evaluated in quad precision so the
// nearest integer is exact through the supported range (n <= 300, value
// within ~30 significant digits).
CauchyResult cauchy_count(const WeightFunction& w, std::uint64_t n);

} // namespace meinardus
