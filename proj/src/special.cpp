#include "meinardus/special.hpp"
#include "meinardus/errors.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace meinardus::special {

namespace {

double parse(const char* s) { return std::strtod(s, nullptr); }

bool near_nonpositive_integer(Cplx z, double tol = 1e-13) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol * (1.0 + std::abs(z.real()));
}

// Lanczos coefficients, g = 607/128 (Godfrey's 15-term set).
constexpr double lanczos_g = 4.7421875;
constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Bernoulli numbers B_2 .. B_28.
constexpr std::array<double, 14> bernoulli2k = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0,
};

} // namespace

const Constants& constants() {
    static const Constants c = {
        parse("0.57721566490153286060651209008240243"),
        parse("-0.91893853320467274178032973640561764"),
        parse("-0.16542114370045092921391966024278064"),
        parse("3.62560990822190831193068515586767200"),
        parse("1.20205690315959428539973816151144999"),
        parse("2.61237534868548834334856756792407163"),
        parse("-0.97336024835078271546888686244789657"),
        parse("3.60093775045886242129220757847541128"),
        parse("2.67893853470774763365569294097467764"),
    };
    return c;
}

Cplx sinpi(Cplx z) {
    double k = std::round(z.real());
    Cplx w(z.real() - k, z.imag());
    Cplx s = std::sin(pi * w);
    if (std::fmod(std::abs(k), 2.0) != 0.0) s = -s;
    return s;
}

Cplx gamma(Cplx z) {
    if (near_nonpositive_integer(z))
        throw DomainError("gamma pole at nonpositive integer");
    if (z.real() < 0.5)
        return pi / (sinpi(z) * gamma(1.0 - z));
    z -= 1.0;
    Cplx a = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i)
        a += lanczos_c[i] / (z + double(i));
    Cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

Cplx zeta(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-14)
        throw DomainError("zeta pole at s = 1");
    if (s.real() < 0.5) {
        // the reflection formula is 0 * pole at s = 0; expand around it
        if (std::abs(s) < 1e-12)
            return Cplx(-0.5, 0.0) + s * constants().zeta_prime_0;
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        Cplx one_minus = 1.0 - s;
        return std::pow(Cplx(2.0), s) * std::pow(Cplx(pi), s - 1.0) *
               sinpi(s / 2.0) * gamma(one_minus) * zeta(one_minus);
    }
    double t = std::abs(s.imag());
    int N = std::max(20, int(1.3 * t) + 12);
    Cplx sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(double(n), -s);
    Cplx Nc(double(N), 0.0);
    sum += std::pow(Nc, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nc, -s);
    // Euler–Maclaurin correction: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Cplx poch = s;            // rising factorial s(s+1)...(s+2k-2)
    double fact = 2.0;        // (2k)!
    Cplx npow = std::pow(Nc, -s - 1.0);
    for (std::size_t k = 1; k <= bernoulli2k.size(); ++k) {
        sum += bernoulli2k[k - 1] / fact * poch * npow;
        // advance to order k+1
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        fact *= double(2 * k + 1) * double(2 * k + 2);
        npow /= Nc * Nc;
    }
    return sum;
}

double binom_general(double x, unsigned m) {
    if (m == 0) return 1.0;
    // binom(x, m) = Gamma(x+1) / (Gamma(m+1) Gamma(x-m+1)); zero at the
    // Gamma poles of the denominator when the numerator is finite.
    Cplx top(x + 1.0, 0.0), bot(x - double(m) + 1.0, 0.0);
    bool top_pole = near_nonpositive_integer(top);
    bool bot_pole = near_nonpositive_integer(bot);
    if (bot_pole && !top_pole) return 0.0;
    if (top_pole) {
        // integer x < 0: fall back to the product form (finite)
        double r = 1.0;
        for (unsigned i = 0; i < m; ++i) r *= (x - double(i)) / double(i + 1);
        return r;
    }
    return (gamma(top) / (gamma(Cplx(double(m) + 1.0, 0.0)) * gamma(bot))).real();
}

} // namespace meinardus::special
