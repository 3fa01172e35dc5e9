#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "meinardus/coeffs.hpp"
#include "meinardus/lspec.hpp"
#include "meinardus/rational.hpp"

namespace meinardus {

// p_f(n) ~ (C / n^b) exp( sum_j A_j n^{alpha_j} )
struct AsymptoticModel {
    std::string preset;
    double alpha = 0;
    std::vector<std::pair<double, Rational>> exp_terms;  // (A_j, exponent), decreasing exponent
    double C = 0;
    double b = 0;
    bool b_exact_known = false;
    Rational b_exact;                 // when L_f(0) is known exactly
    Rational next_error_exponent{0};  // negative: first omitted relative correction
};

struct TwoPoleConstants {
    double c1 = 0, c2 = 0, c3 = 0;
    std::vector<double> K;  // K_1..K_{ell+1}
    std::vector<double> A;  // A_1..A_{ell+1}
    int ell = 0;
};

TwoPoleConstants two_pole_constants(const LSpec& spec);

AsymptoticModel one_pole_model(const LSpec& spec);
AsymptoticModel two_pole_model(const LSpec& spec);

// dispatch on the number of positive poles
AsymptoticModel preset_model(const LSpec& spec);

struct EvalResult {
    double log_value = 0;  // log p_hat(n)
    double linear = 0;     // exp(log_value) when representable
    bool linear_ok = false;
};

EvalResult evaluate(const AsymptoticModel& model, std::uint64_t n);

struct FitResult {
    double slope = 0;
    double r2 = 0;
};

// least-squares slope of log|p_f(n)/p_hat(n) - 1| against log n
FitResult error_exponent_fit(const AsymptoticModel& model, const CoeffTable& table,
                             const std::vector<std::uint64_t>& n_grid);

double log_mpz(const mpz_class& v);

} // namespace meinardus
