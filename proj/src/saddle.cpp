#include "meinardus/saddle.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/special.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace meinardus {

using special::pi;

// ---------------------------------------------------------------------------
// Phi series

PhiSeries::PhiSeries(WeightFunction w) : w_(std::move(w)) {}

const std::vector<std::uint64_t>& PhiSeries::table(std::size_t M) const {
    if (f_.size() < M) f_ = weight_table(w_, M);
    return f_;
}

std::size_t PhiSeries::truncation(double x, int k) const {
    // terms bounded by f(m) m^k e^{-mx} with f(m) <= m for every preset
    const double D = 42.0;
    double M = (D + (k + 2) * std::log(std::max(3.0, D / x))) / x;
    M = (D + (k + 2) * std::log(std::max(3.0, M))) / x;
    if (M > 5e6) throw NumericError("phi truncation bound too large (Re z too small)");
    return std::size_t(M) + 2;
}

namespace {

Cplx inner_sum(Cplx u, int k) {
    // sum_j j^{k-1} u^j in closed form (k = derivative order >= 1)
    Cplx d = 1.0 - u;
    switch (k) {
        case 1: return u / d;
        case 2: return u / (d * d);
        case 3: return u * (1.0 + u) / (d * d * d);
        case 4: return u * (1.0 + u * (4.0 + u)) / (d * d * d * d);
    }
    throw DomainError("phi derivative order must be in 0..4");
}

} // namespace

Cplx PhiSeries::eval(Cplx z, int k) const {
    double x = z.real();
    if (!(x > 0)) throw DomainError("phi requires Re z > 0");
    if (k < 0 || k > 4) throw DomainError("phi derivative order must be in 0..4");
    std::size_t M = truncation(x, k);
    const auto& f = table(M);
    M = std::min(M, f.size());
    Cplx sum = 0.0;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 1; m <= M; ++m) {
        if (f[m - 1] == 0) continue;
        Cplx u = std::exp(-double(m) * z);
        Cplx term;
        if (k == 0) {
            term = -std::log(1.0 - u);
        } else {
            term = sign * std::pow(double(m), k) * inner_sum(u, k);
        }
        sum += double(f[m - 1]) * term;
    }
    return sum;
}

double PhiSeries::eval_real(double x, int k) const {
    return eval(Cplx(x, 0.0), k).real();
}

Cplx phi(const WeightFunction& w, Cplx z, int k) {
    return PhiSeries(w).eval(z, k);
}

// ---------------------------------------------------------------------------
// Saddle solve

namespace {

// c_gamma = omega Gamma(gamma+1) zeta(gamma+1) for a positive pole of L_f
double pole_constant(const PolePoint& p) {
    double g = p.gamma.to_double();
    return p.omega * special::gamma(Cplx(g + 1.0, 0)).real() *
           special::zeta(Cplx(g + 1.0, 0)).real();
}

} // namespace

SaddleResult solve_saddle(const WeightFunction& w, std::uint64_t n) {
    if (n < 1) throw DomainError("solve_saddle requires n >= 1");
    PhiSeries series(w);
    auto g = [&](double rho) { return -series.eval_real(rho, 1) - double(n); };

    // initial guess (c1/n)^{1/(alpha+1)} where available
    double rho0 = 0.1, alpha = 1.0;
    bool have_spec = false;
    double rho_asym = 0.0;
    if (w.kind != WeightFunction::Kind::Explicit) {
        LSpec spec = preset_lspec(w, /*fill_numeric=*/false);
        alpha = spec.alpha.to_double();
        double c1 = pole_constant(spec.positive_poles.front());
        if (c1 > 0) {
            rho0 = std::pow(c1 / double(n), 1.0 / (alpha + 1.0));
            have_spec = true;
        }
        if (w.kind != WeightFunction::Kind::SU3)
            rho_asym = rho_asymptotic(spec, n);
    }
    // without a closed-form seed, walk in from O(1) so the series stays short
    double lo = have_spec ? rho0 / 10.0 : 1.0;
    double hi = have_spec ? rho0 * 10.0 : 1.0;
    // -Phi' is strictly decreasing, so g(lo) > 0 > g(hi) brackets the root
    int guard = 0;
    while (g(lo) <= 0 && guard++ < 60) lo /= 4.0;
    guard = 0;
    while (g(hi) >= 0 && guard++ < 60) hi *= 4.0;
    if (!(g(lo) > 0 && g(hi) < 0))
        throw NumericError("saddle bracket not found");

    double rho = std::clamp(rho0, lo, hi);
    double gv = g(rho);
    int it = 0;
    for (; it < 30; ++it) {
        if (std::abs(gv) <= 1e-9 * double(n)) break;
        if (gv > 0) lo = rho; else hi = rho;
        double gp = series.eval_real(rho, 2);  // g'(rho) = -Phi'' < 0... Phi''>0
        double step = gv / gp;                 // Newton on g: rho - g/g' with g' = -Phi''
        double next = rho + step;              // g' = -Phi''(rho), so -g/g' = +g/Phi''
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        rho = next;
        gv = g(rho);
    }
    if (std::abs(gv) > 1e-9 * double(n))
        throw NumericError("saddle Newton failed to converge; bracket [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    SaddleResult r;
    r.n = n;
    r.rho = rho;
    r.rho_asym = rho_asym;
    r.residual = std::abs(gv);
    return r;
}

SaddleExpansion two_pole_saddle_expansion(const LSpec& spec) {
    if (spec.positive_poles.size() != 2)
        throw DomainError("two-pole expansion requires exactly two positive poles");
    double a = spec.positive_poles[0].gamma.to_double();
    double b = spec.positive_poles[1].gamma.to_double();
    double c1 = pole_constant(spec.positive_poles[0]);
    double c2 = pole_constant(spec.positive_poles[1]);
    if (!(a > b && b > 0)) throw DomainError("pole order violated");

    SaddleExpansion ex;
    // (ell+1)/ell * beta < alpha <= ell/(ell-1) * beta; ell = 1 when alpha > 2 beta
    int ell = 0;
    for (int l = 1; l <= 8; ++l) {
        double low = (double(l) + 1.0) / double(l) * b;
        double high = (l == 1) ? std::numeric_limits<double>::infinity()
                               : double(l) / (double(l) - 1.0) * b;
        if (a > low && a <= high) { ell = l; break; }
    }
    if (ell == 0) throw DomainError("pole configuration outside the implemented cases");
    if (ell > 4)
        throw DomainError("pole configuration outside the implemented cases (ell > 4)");
    ex.ell = ell;

    double a1 = a + 1.0;
    auto c1pow = [&](double e) { return std::pow(c1, e); };
    std::vector<double> K(5, 0.0);
    K[0] = c1pow(1.0 / a1);
    K[1] = c2 / (a1 * c1pow(b / a1));
    K[2] = c2 * c2 * (a - 2.0 * b) / (2.0 * a1 * a1 * c1pow((2.0 * b + 1.0) / a1));
    K[3] = std::pow(c2, 3) *
           (2 * a * a - 9 * a * b - 2 * a + 9 * b * b + 3 * b) /
           (6.0 * std::pow(a1, 3) * c1pow((3.0 * b + 2.0) / a1));
    K[4] = std::pow(c2, 4) *
           (6 * a * a * a - 44 * a * a * b - 15 * a * a + 96 * a * b * b +
            56 * a * b + 6 * a - 64 * b * b * b - 48 * b * b - 8 * b) /
           (24.0 * std::pow(a1, 4) * c1pow((4.0 * b + 3.0) / a1));
    ex.K.assign(K.begin(), K.begin() + (ell + 1));
    for (int j = 1; j <= ell + 1; ++j)
        ex.exponents.push_back(double(j - 1) * (1.0 - (b + 1.0) / a1) + 1.0 / a1);
    return ex;
}

double rho_asymptotic(const LSpec& spec, std::uint64_t n) {
    double a = spec.alpha.to_double();
    double a1 = a + 1.0;
    if (spec.positive_poles.size() == 1) {
        double c1 = pole_constant(spec.positive_poles.front());
        return std::pow(c1 / double(n), 1.0 / a1) + spec.L0 / (a1 * double(n));
    }
    if (spec.positive_poles.size() == 2) {
        SaddleExpansion ex = two_pole_saddle_expansion(spec);
        double r = 0;
        for (std::size_t j = 0; j < ex.K.size(); ++j)
            r += ex.K[j] * std::pow(double(n), -ex.exponents[j]);
        r += spec.L0 / (a1 * double(n));
        return r;
    }
    throw DomainError("pole configuration outside the implemented cases (>= 3 poles)");
}

// ---------------------------------------------------------------------------
// Quad-precision Cauchy integral

namespace {

using F128 = __float128;
using C128 = __complex128;

struct GLRule {
    std::vector<F128> x, w;  // nodes/weights on [-1, 1]
};

const GLRule& gauss_legendre(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GLRule r;
    r.x.assign(n, 0);
    r.w.assign(n, 0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        F128 x = cosq(F128(M_PI) * (F128(i) + 0.75q) / (F128(n) + 0.5q));
        F128 dp = 0;
        for (int iter = 0; iter < 8; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x)
            F128 p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                F128 p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            F128 dx = p1 / dp;
            x -= dx;
            if (fabsq(dx) < 1e-35q) {
                p0 = 1; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    F128 p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                break;
            }
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        F128 w = 2.0q / ((1 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

// Quad-precision Phi evaluation state for a fixed radius rho.
struct PhiQuad {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;  // (m, f(m))
    std::vector<F128> rpow;                                      // e^{-m rho}
    F128 rho;

    PhiQuad(const WeightFunction& w, double rho_d) {
        rho = rho_d;
        const double D = 88.0;  // quad-precision tail target
        double M = (D + 2 * std::log(std::max(3.0, D / rho_d))) / rho_d;
        M = (D + 2 * std::log(std::max(3.0, M))) / rho_d;
        auto f = weight_table(w, std::size_t(M) + 2);
        rpow.assign(f.size() + 1, 0);
        F128 r1 = expq(-rho);
        F128 cur = 1;
        for (std::size_t m = 1; m < rpow.size(); ++m) {
            if (m % 64 == 1)
                cur = expq(-rho * F128(m));
            else
                cur *= r1;
            rpow[m] = cur;
        }
        for (std::size_t m = 1; m <= f.size(); ++m)
            if (f[m - 1]) terms.emplace_back(m, f[m - 1]);
    }

    // -log(1-u), series for small |u|
    static C128 neglog1m(C128 u) {
        F128 mag = cabsq(u);
        if (mag < 1e-5q) {
            C128 acc = 0, up = u;
            for (int k = 1; k <= 8; ++k) {
                acc += up / F128(k);
                up *= u;
            }
            return acc;
        }
        return -clogq(1.0q - u);
    }

    // Phi(rho + i t)
    C128 eval(F128 t) const {
        C128 sum = 0;
        if (t == 0) {
            for (auto [m, fm] : terms) {
                C128 u = rpow[m];
                sum += F128(fm) * neglog1m(u);
            }
            return sum;
        }
        F128 s1, c1v;
        sincosq(-t, &s1, &c1v);
        C128 w1;
        __real__ w1 = c1v;
        __imag__ w1 = s1;
        C128 wm = 1;
        std::uint64_t last_m = 0;
        for (auto [m, fm] : terms) {
            if (m == last_m + 1 && m % 64 != 1) {
                wm *= w1;
            } else {
                F128 s, c;
                sincosq(-t * F128(m), &s, &c);
                __real__ wm = c;
                __imag__ wm = s;
            }
            last_m = m;
            C128 u = rpow[m] * wm;
            sum += F128(fm) * neglog1m(u);
        }
        return sum;
    }
};

struct CauchyIntegrator {
    const PhiQuad& phiq;
    F128 phi0;
    std::uint64_t n;
    F128 abs_tol;
    F128 err_acc = 0;
    int evals = 0;

    // Re exp(i n t + Phi(rho+it) - Phi(rho))
    F128 integrand(F128 t) const {
        C128 s = phiq.eval(t) - phi0;
        __imag__ s += F128(n) * t;
        return crealq(cexpq(s));
    }

    F128 panel(F128 a, F128 b, const GLRule& rule) const {
        F128 h = (b - a) / 2, c = (a + b) / 2, acc = 0;
        for (std::size_t i = 0; i < rule.x.size(); ++i)
            acc += rule.w[i] * integrand(c + h * rule.x[i]);
        return acc * h;
    }

    F128 adaptive(F128 a, F128 b, int depth) {
        F128 lo = panel(a, b, gauss_legendre(25));
        F128 hi = panel(a, b, gauss_legendre(51));
        F128 err = fabsq(hi - lo);
        if (err <= abs_tol || depth >= 26) {
            if (depth >= 26 && err > abs_tol * 100)
                throw NumericError("cauchy quadrature panel failed to converge");
            err_acc += err;
            return hi;
        }
        F128 mid = (a + b) / 2;
        return adaptive(a, mid, depth + 1) + adaptive(mid, b, depth + 1);
    }
};

mpz_class mpz_from_f128(F128 v) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.0Qf", v);
    return mpz_class(buf);
}

} // namespace

CauchyResult cauchy_count(const WeightFunction& w, std::uint64_t n) {
    if (n > 300) throw DomainError("cauchy_count limited to n <= 300");
    if (n == 0) return {mpz_class(1), 0.0, 0.0};
    SaddleResult sr = solve_saddle(w, n);
    PhiSeries series(w);
    double phi2 = series.eval_real(sr.rho, 2);
    double width = 1.0 / std::sqrt(phi2);

    PhiQuad phiq(w, sr.rho);
    CauchyIntegrator ci{phiq, crealq(phiq.eval(0)), n, 0, 0, 0};
    F128 pref_log = F128(n) * F128(sr.rho) + ci.phi0;  // real at t=0
    F128 pref = expq(crealq(pref_log));
    // absolute tolerance on the t-integral translating to ~0.1 on the count
    F128 tol1 = 0.1q * F128(M_PIq) / pref;
    F128 tol2 = F128(width) * 1e-36q;
    ci.abs_tol = tol1 > tol2 ? tol1 : tol2;

    // geometric panel layout anchored at the saddle width
    std::vector<F128> cuts{0};
    double edge = width;
    while (edge < pi) {
        cuts.push_back(F128(edge));
        edge *= 2.0;
    }
    cuts.push_back(F128(M_PIq));

    F128 total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += ci.adaptive(cuts[i], cuts[i + 1], 0);

    F128 value = pref * total / F128(M_PIq);
    CauchyResult res;
    res.nearest = mpz_from_f128(value);
    F128 nearest_q = strtoflt128(res.nearest.get_str().c_str(), nullptr);
    res.delta = double(value - nearest_q);
    res.err_estimate = double(ci.err_acc * pref / F128(M_PIq));
    return res;
}

} // namespace meinardus
