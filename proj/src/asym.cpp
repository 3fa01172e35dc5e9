#include "meinardus/asym.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/saddle.hpp"
#include "meinardus/special.hpp"

#include <cmath>
#include <functional>

namespace meinardus {

using special::pi;

namespace {

double pole_constant(const PolePoint& p) {
    double g = p.gamma.to_double();
    return p.omega * special::gamma(Cplx(g + 1.0, 0)).real() *
           special::zeta(Cplx(g + 1.0, 0)).real();
}

// exponents attached to the rho expansion term j: 1 - e_j, with e_j from the
// two-pole saddle expansion; j = ell+1 lands exactly at exponent 0
Rational term_exponent(const Rational& alpha, const Rational& beta, int j) {
    Rational a1 = alpha + Rational(1);
    Rational e = Rational(j - 1) * (Rational(1) - (beta + Rational(1)) / a1) +
                 Rational(1) / a1;
    return Rational(1) - e;
}

// prefactor pair (C, b) shared by the one- and two-pole theorems
void prefactor(const LSpec& spec, double c1, double& C, double& b) {
    double a = spec.alpha.to_double();
    C = std::exp(spec.L0prime) *
        std::pow(c1, (0.5 - spec.L0) / (a + 1.0)) /
        std::sqrt(2.0 * pi * (a + 1.0));
    b = (1.0 - spec.L0 + a / 2.0) / (a + 1.0);
}

// sum over compositions (j_1..j_ell) with sum j_i = m and sum i*j_i = target
// of  m!/(j_1!...j_ell!) * prod K_{i+1}^{j_i}
double composition_sum(const std::vector<double>& K, int ell, int m, int target) {
    double total = 0;
    std::vector<int> j(ell + 1, 0);
    // recursive enumeration
    std::function<void(int, int, int, double)> rec = [&](int i, int left, int wsum,
                                                         double mult) {
        if (i > ell) {
            if (left == 0 && wsum == target) total += mult;
            return;
        }
        double pw = 1.0;
        for (int ji = 0; ji <= left; ++ji) {
            if (wsum + i * ji > target) break;
            double fact = 1.0;
            for (int q = 2; q <= ji; ++q) fact *= q;
            rec(i + 1, left - ji, wsum + i * ji, mult * pw / fact);
            pw *= K[i];  // K[i] holds K_{i+1}
        }
    };
    double mfact = 1.0;
    for (int q = 2; q <= m; ++q) mfact *= q;
    rec(1, m, 0, mfact);
    return total;
}

} // namespace

TwoPoleConstants two_pole_constants(const LSpec& spec) {
    if (spec.positive_poles.size() != 2)
        throw DomainError("two-pole constants require exactly two positive poles");
    SaddleExpansion ex = two_pole_saddle_expansion(spec);
    TwoPoleConstants tc;
    tc.ell = ex.ell;
    tc.K = ex.K;
    tc.c1 = pole_constant(spec.positive_poles[0]);
    tc.c2 = pole_constant(spec.positive_poles[1]);
    tc.c3 = spec.L0;
    double a = spec.positive_poles[0].gamma.to_double();
    double b = spec.positive_poles[1].gamma.to_double();
    double a1 = a + 1.0;
    int ell = ex.ell;

    tc.A.assign(ell + 1, 0.0);
    tc.A[0] = (1.0 + 1.0 / a) * std::pow(tc.c1, 1.0 / a1);
    tc.A[1] = (tc.c2 / b) / std::pow(tc.c1, b / a1);
    // K[i] with K[0] unused by composition_sum (indexing starts at K_2)
    std::vector<double> Kidx(ell + 1, 0.0);
    for (int i = 1; i <= ell; ++i)
        Kidx[i] = (std::size_t(i) < ex.K.size()) ? ex.K[i] : 0.0;  // K_{i+1}
    for (int k = 3; k <= ell + 1; ++k) {
        double acc = (std::size_t(k - 1) < ex.K.size()) ? ex.K[k - 1] : 0.0;  // K_k
        double s1 = 0, s2 = 0;
        for (int m = 1; m <= ell; ++m) {
            double bin_a = special::binom_general(-a, unsigned(m));
            double bin_b = special::binom_general(-b, unsigned(m));
            double cpow = std::pow(tc.c1, double(m) / a1);
            s1 += bin_a * composition_sum(Kidx, ell, m, k - 1) / cpow;
            s2 += bin_b * composition_sum(Kidx, ell, m, k - 2) / cpow;
        }
        acc += (std::pow(tc.c1, 1.0 / a1) / a) * s1;
        acc += (tc.c2 / (b * std::pow(tc.c1, b / a1))) * s2;
        tc.A[k - 1] = acc;
    }
    return tc;
}

AsymptoticModel one_pole_model(const LSpec& spec) {
    if (spec.positive_poles.size() != 1)
        throw DomainError("one_pole_model requires exactly one positive pole");
    AsymptoticModel m;
    m.preset = spec.preset;
    double a = spec.alpha.to_double();
    m.alpha = a;
    double c1 = pole_constant(spec.positive_poles.front());
    double A1 = (1.0 + 1.0 / a) * std::pow(c1, 1.0 / (a + 1.0));
    m.exp_terms = {{A1, spec.alpha / (spec.alpha + Rational(1))}};
    prefactor(spec, c1, m.C, m.b);
    m.next_error_exponent = -exponent_sets(spec).smallest_positive_MN();
    return m;
}

AsymptoticModel two_pole_model(const LSpec& spec) {
    TwoPoleConstants tc = two_pole_constants(spec);
    AsymptoticModel m;
    m.preset = spec.preset;
    m.alpha = spec.alpha.to_double();
    Rational alpha = spec.positive_poles[0].gamma;
    Rational beta = spec.positive_poles[1].gamma;
    for (int j = 1; j <= tc.ell + 1; ++j)
        m.exp_terms.emplace_back(tc.A[j - 1], term_exponent(alpha, beta, j));
    prefactor(spec, tc.c1, m.C, m.b);
    m.next_error_exponent = -exponent_sets(spec).smallest_positive_MN();
    return m;
}

AsymptoticModel preset_model(const LSpec& spec) {
    AsymptoticModel m = spec.positive_poles.size() == 1 ? one_pole_model(spec)
                                                        : two_pole_model(spec);
    // exact b when L_f(0) is rational
    struct Known { const char* preset; Rational L0; };
    static const Known known[] = {
        {"ones", Rational(-1, 2)},
        {"plane", Rational(-1, 12)},
        {"so5", Rational(3, 8)},
    };
    Rational L0_exact(0);
    bool have = false;
    for (const auto& k : known)
        if (spec.preset == k.preset) { L0_exact = k.L0; have = true; }
    if (spec.preset.rfind("polygonal:", 0) == 0) {
        int k = std::stoi(spec.preset.substr(10));
        L0_exact = Rational(1, std::int64_t(2 - k));
        have = true;
    }
    if (have) {
        m.b_exact_known = true;
        m.b_exact = (Rational(1) - L0_exact + spec.alpha / Rational(2)) /
                    (spec.alpha + Rational(1));
    }
    return m;
}

EvalResult evaluate(const AsymptoticModel& model, std::uint64_t n) {
    if (n < 1) throw DomainError("evaluate requires n >= 1");
    EvalResult r;
    double ln_n = std::log(double(n));
    double lg = std::log(model.C) - model.b * ln_n;
    for (const auto& [A, e] : model.exp_terms)
        lg += A * std::pow(double(n), e.to_double());
    r.log_value = lg;
    if (std::abs(lg) < 700.0) {
        r.linear = std::exp(lg);
        r.linear_ok = true;
    }
    return r;
}

double log_mpz(const mpz_class& v) {
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(d) + double(e) * std::log(2.0);
}

FitResult error_exponent_fit(const AsymptoticModel& model, const CoeffTable& table,
                             const std::vector<std::uint64_t>& n_grid) {
    if (n_grid.size() < 2) throw DomainError("error_exponent_fit needs >= 2 grid points");
    std::vector<double> xs, ys;
    for (auto n : n_grid) {
        if (n < 1 || n > table.N) throw DomainError("grid point outside table range");
        double lp = log_mpz(table.values[n]);
        double lm = evaluate(model, n).log_value;
        double ratio_m1 = std::expm1(lp - lm);
        if (ratio_m1 == 0.0) throw DomainError("degenerate grid: ratio exactly 1");
        xs.push_back(std::log(double(n)));
        ys.push_back(std::log(std::abs(ratio_m1)));
    }
    double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i]; sy += ys[i];
        sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i]; syy += ys[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw DomainError("degenerate grid");
    FitResult f;
    f.slope = (n * sxy - sx * sy) / denom;
    double ssr = syy - sy * sy / n - f.slope * (sxy - sx * sy / n);
    double sst = syy - sy * sy / n;
    f.r2 = sst > 0 ? 1.0 - ssr / sst : 1.0;
    return f;
}

} // namespace meinardus
