#include "meinardus/witten.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/parallel.hpp"
#include "meinardus/quadrature.hpp"
#include "meinardus/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace meinardus {

using special::pi;

namespace {

bool near_int_le(Cplx v, double bound, double tol = 1e-8) {
    if (std::abs(v.imag()) > tol) return false;
    double r = std::round(v.real());
    return r <= bound && std::abs(v.real() - r) <= tol;
}

Cplx poch(Cplx s, int k) {
    Cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= s + double(i);
    return r;
}

Cplx binom_c(Cplx x, int m) {
    Cplx r = 1.0;
    for (int i = 0; i < m; ++i) r *= (x - double(i)) / double(i + 1);
    return r;
}

// ---------------------------------------------------------------------------
// Double lattice sums  sum_{m,n >= 1} prod_i (a_i m + b_i n)^{-sigma_i}

struct LinearForm {
    double a, b;
    Cplx sigma;
};

// log_offset rescales every term by e^{log_offset}: at large m the individual
// terms underflow doubles while their sum does not, so callers work with a
// uniformly scaled copy of the sum and take the factor out again in log space
Cplx form_value(double m, double x, const std::vector<LinearForm>& fs,
                double log_offset = 0.0) {
    Cplx lg = log_offset;
    for (const auto& f : fs) lg -= f.sigma * std::log(f.a * m + f.b * x);
    return std::exp(lg);
}

struct Derivs {
    Cplx g, g1, g3, g5;
};

// derivatives in x via the logarithmic-derivative chain
Derivs form_derivs(double m, double x, const std::vector<LinearForm>& fs,
                   double log_offset = 0.0) {
    Cplx D1 = 0, D2 = 0, D3 = 0, D4 = 0, D5 = 0;
    for (const auto& f : fs) {
        if (f.b == 0) continue;
        double r = f.b / (f.a * m + f.b * x);
        D1 += f.sigma * r;
        D2 += f.sigma * r * r;
        D3 += f.sigma * r * r * r;
        D4 += f.sigma * r * r * r * r;
        D5 += f.sigma * r * r * r * r * r;
    }
    Cplx u = -D1, u1 = D2, u2 = -2.0 * D3, u3 = 6.0 * D4, u4 = -24.0 * D5;
    Derivs d;
    d.g = form_value(m, x, fs, log_offset);
    d.g1 = u * d.g;
    d.g3 = (u2 + 3.0 * u * u1 + u * u * u) * d.g;
    d.g5 = (u4 + 5.0 * u * u3 + 10.0 * u1 * u2 + 10.0 * u * u * u2 +
            15.0 * u * u1 * u1 + 10.0 * u * u * u * u1 + u * u * u * u * u) *
           d.g;
    return d;
}

double inner_decay(const std::vector<LinearForm>& fs) {
    double p = 0;
    for (const auto& f : fs)
        if (f.b != 0) p += f.sigma.real();
    return p;
}

struct PartEval {
    Cplx val;
    double err = 0;
};

// F(m) = sum_{n>=1} g(m, n) with Euler–Maclaurin tail past N.  The result is
// scaled by e^{log_scale}; pass the dominant log magnitude of the terms so the
// arithmetic stays inside the double range at large m.
PartEval inner_sum(double m, const std::vector<LinearForm>& fs, double rel_tol,
                   double log_scale = 0.0) {
    double px = inner_decay(fs);
    if (px <= 1.0 + 1e-12) throw DomainError("inner sum divergent");
    std::size_t N = 32;
    Cplx direct = 0;
    for (std::size_t n = 1; n < N; ++n)
        direct += form_value(m, double(n), fs, log_scale);
    Derivs d = form_derivs(m, double(N), fs, log_scale);
    double scale = std::abs(direct) + std::abs(d.g) * double(N);
    while (std::abs(d.g5) / 30240.0 * 5.0 > rel_tol * (scale + 1e-300) && N < 4096) {
        std::size_t N2 = 2 * N;
        for (std::size_t n = N; n < N2; ++n)
            direct += form_value(m, double(n), fs, log_scale);
        N = N2;
        d = form_derivs(m, double(N), fs, log_scale);
    }
    // Integral over [N, inf).  The crossover hump near n ~ m must be handled
    // in the log variable: a power-law substitution all the way from N would
    // compress it into a window of width e^{-O(log m)} whose integrand value
    // overflows even though the integral itself is fine.
    double nsplit = std::max(2.0 * double(N), m);
    double lN = std::log(double(N)), lsplit = std::log(nsplit);
    QuadResult qm{};
    Cplx mid = 0;
    if (lsplit > lN + 1e-12) {
        std::size_t initp = std::size_t((lsplit - lN) / 2.0) + 2;
        mid = integrate_adaptive<Cplx>(
            [&](double y) {
                // integrand n * g(n) at n = e^y, composed inside the exponent
                return form_value(m, std::exp(y), fs, log_scale + y);
            },
            lN, lsplit, rel_tol * (scale + 1e-300) * 0.25, rel_tol * 0.25, &qm,
            4000, initp);
    }
    QuadResult qf;
    Cplx far = integrate_tail<Cplx>(
        [&](double x) { return form_value(m, x, fs, log_scale); }, nsplit, px,
        rel_tol * (scale + std::abs(mid) + 1e-300) * 0.25, rel_tol * 0.25, &qf);
    PartEval pe;
    pe.val = direct + mid + far + 0.5 * d.g - d.g1 / 12.0 + d.g3 / 720.0;
    pe.err = std::abs(d.g5) / 30240.0 * 5.0 + qm.err + qf.err;
    return pe;
}

double outer_decay(const std::vector<LinearForm>& fs) {
    double all = 0, afixed = 0;
    for (const auto& f : fs) {
        all += f.sigma.real();
        if (f.a != 0) afixed += f.sigma.real();
    }
    // n = O(1) regime decays like m^{-afixed}; n ~ m regime like m^{1-all}
    return std::min(afixed, all - 1.0);
}

PartEval lattice_double_sum(const std::vector<LinearForm>& fs, double tol,
                            unsigned threads) {
    double pF = outer_decay(fs);
    if (pF <= 1.0 + 1e-12)
        throw DomainError("double sum outside the convergent region");
    double inner_tol = tol / 30.0;

    std::size_t No = 32;
    auto eval_F = [&](double m) { return inner_sum(m, fs, inner_tol); };

    std::vector<PartEval> head =
        parallel_map<PartEval>(No - 1, threads,
                               [&](std::size_t i) { return eval_F(double(i + 1)); });
    Cplx direct = 0;
    double err = 0;
    for (const auto& pe : head) { direct += pe.val; err += pe.err; }

    PartEval FN = eval_F(double(No));
    double qq = std::abs(pF * (pF + 1.0) * (pF + 2.0));
    auto b4_proxy = [&](double FNabs, double n0) {
        return FNabs * qq / (720.0 * n0 * n0 * n0) * 5.0;
    };
    while (b4_proxy(std::abs(FN.val), double(No)) >
               tol * (std::abs(direct) + 1e-300) / 6.0 &&
           No < 8192) {
        std::size_t No2 = 2 * No;
        std::vector<PartEval> more = parallel_map<PartEval>(
            No2 - No, threads,
            [&](std::size_t i) { return eval_F(double(No + i)); });
        for (const auto& pe : more) { direct += pe.val; err += pe.err; }
        No = No2;
        FN = eval_F(double(No));
    }

    // F'(No) = sum_{i: a_i != 0} (-sigma_i a_i) * F with sigma_i bumped by one
    Cplx Fp = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].a == 0) continue;
        auto bumped = fs;
        bumped[i].sigma += 1.0;
        PartEval pe = inner_sum(double(No), bumped, inner_tol);
        Fp += -fs[i].sigma * fs[i].a * pe.val;
        err += std::abs(fs[i].sigma) * fs[i].a * pe.err;
    }

    // Tail integral of F over [No, inf) with the substitution x = No t^{-q}.
    // F(x) is evaluated rescaled by x^{Ssum} (its terms underflow far sooner
    // than their sum) and the jacobian is folded back in log space.
    double Ssum = 0, Szero = 0;
    for (const auto& f : fs) {
        Ssum += f.sigma.real();
        if (f.a == 0) Szero += f.sigma.real();
    }
    double qsub = std::max(1.0, 4.0 / (pF - 1.0));
    double ln0 = std::log(double(No));
    // the rescaled inner head grows like x^{Szero}; keep it inside the range
    double log_xmax = std::min(690.0, 700.0 / std::max(0.5, Szero));
    auto gt = [&](double t) -> Cplx {
        if (t <= 0) return Cplx{};
        double lt = std::log(t), lx = ln0 - qsub * lt;
        if (lx > log_xmax) return Cplx{};
        double S = Ssum * lx;
        PartEval pe = inner_sum(std::exp(lx), fs, inner_tol, S);
        double mag = std::abs(pe.val);
        if (mag == 0) return Cplx{};
        double logjac = std::log(qsub) + lx - lt;
        return (pe.val / mag) * std::exp(std::log(mag) + logjac - S);
    };
    QuadResult qo;
    Cplx tail_int = integrate_adaptive<Cplx>(
        gt, 0.0, 1.0, tol * (std::abs(direct) + 1e-300) * 0.25, tol * 0.25, &qo,
        4000, 8);
    // mass beyond x = e^{log_xmax}, from F ~ C x^{-pF} calibrated at No
    qo.err += std::abs(FN.val) * double(No) / (pF - 1.0) *
              std::exp(-(pF - 1.0) * (log_xmax - ln0));

    PartEval out;
    out.val = direct + tail_int + 0.5 * FN.val - Fp / 12.0;
    out.err = (err + FN.err + qo.err + b4_proxy(std::abs(FN.val), double(No))) * 3.0 +
              1e-14 * std::abs(out.val);
    if (!(out.err <= tol * (std::abs(out.val) + 1e-300) * 50.0))
        throw NumericError("double-sum tail bound exceeds the requested tolerance");
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// direct evaluators

ZetaEval zeta_mt2(Cplx s1, Cplx s2, Cplx s3, double tol, unsigned threads) {
    if (!((s1 + s3).real() > 1.0 && (s2 + s3).real() > 1.0 &&
          (s1 + s2 + s3).real() > 2.0))
        throw DomainError("zeta_mt2 arguments outside the convergent region");
    std::vector<LinearForm> fs = {{1, 0, s1}, {0, 1, s2}, {1, 1, s3}};
    PartEval pe = lattice_double_sum(fs, tol, threads);
    return {pe.val, pe.err, ZetaMethod::DirectSum};
}

ZetaEval zeta_so5_direct(Cplx s, double tol, unsigned threads) {
    if (!(s.real() > 0.5))
        throw DomainError("zeta_so5_direct requires Re s > 1/2");
    std::vector<LinearForm> fs = {{1, 0, s}, {0, 1, s}, {1, 1, s}, {1, 2, s}};
    PartEval pe = lattice_double_sum(fs, tol, threads);
    Cplx scale = std::exp(s * std::log(6.0));
    return {scale * pe.val, std::abs(scale) * pe.err, ZetaMethod::DirectSum};
}

ZetaEval zeta_su3_direct(Cplx s, double tol, unsigned threads) {
    if (!(s.real() > 2.0 / 3.0))
        throw DomainError("zeta_su3_direct requires Re s > 2/3");
    ZetaEval mt = zeta_mt2(s, s, s, tol, threads);
    Cplx scale = std::exp(s * std::log(2.0));
    return {scale * mt.value, std::abs(scale) * mt.err_estimate, ZetaMethod::DirectSum};
}

// ---------------------------------------------------------------------------
// polygonal zeta

ZetaEval zeta_Pk(Cplx s, int k, double tol) {
    if (k < 3) throw DomainError("zeta_Pk requires k >= 3");
    if (!(s.real() > 0.5)) throw DomainError("zeta_Pk divergent for Re s <= 1/2");
    auto P = [&](double x) {
        return ((double(k) - 2.0) * x * x + (4.0 - double(k)) * x) / 2.0;
    };
    const int N = 24;
    Cplx direct = 0;
    for (int n = 1; n <= N; ++n) direct += std::exp(-s * std::log(P(double(n))));

    // P(x)^{-s} = ((k-2)/2)^{-s} x^{-2s} (1 + c/x)^{-s} with c = (4-k)/(k-2);
    // tail via the binomial expansion against Hurwitz zetas at x = N+1.
    double c = (4.0 - double(k)) / (double(k) - 2.0);
    Cplx A = std::exp(-s * std::log((double(k) - 2.0) / 2.0));

    // Hurwitz zeta by Euler–Maclaurin
    auto hurwitz = [](Cplx a, double x) {
        static const double bern[8] = {1.0 / 6,    -1.0 / 30,    1.0 / 42,
                                       -1.0 / 30,  5.0 / 66,     -691.0 / 2730,
                                       7.0 / 6,    -3617.0 / 510};
        int J = std::max(12, int(1.3 * std::abs(a.imag())) + 8);
        Cplx sum = 0;
        for (int n = 0; n < J; ++n) sum += std::exp(-a * std::log(x + n));
        double X = x + double(J);
        sum += std::exp((1.0 - a) * std::log(X)) / (a - 1.0);
        sum += 0.5 * std::exp(-a * std::log(X));
        Cplx p = a;
        double fact = 2.0;
        Cplx xp = std::exp((-a - 1.0) * std::log(X));
        for (int j = 1; j <= 8; ++j) {
            sum += bern[j - 1] / fact * p * xp;
            p *= (a + double(2 * j - 1)) * (a + double(2 * j));
            fact *= double(2 * j + 1) * double(2 * j + 2);
            xp /= X * X;
        }
        return sum;
    };

    Cplx tail = 0;
    double err = 0;
    double x0 = double(N + 1);
    Cplx bin = 1.0;
    double cj = 1.0;
    for (int j = 0; j <= 40; ++j) {
        if (j > 0) {
            bin *= (-s - double(j - 1)) / double(j);
            cj *= c;
        }
        if (bin == 0.0) break;  // integer s edge case
        Cplx a = 2.0 * s + double(j);
        if (near_int_le(a, 1.0) && std::abs(a.real() - 1.0) < 1e-8)
            throw DomainError("zeta_Pk tail hits the Hurwitz pole");
        Cplx term = bin * cj * hurwitz(a, x0);
        tail += term;
        double mag = std::abs(term);
        if (j > 2 && mag < tol * (std::abs(direct) + std::abs(tail)) * 0.05) {
            err += mag;
            break;
        }
        if (j == 40) err += mag * 2.0;
    }
    Cplx value = direct + A * tail;
    err = err * std::abs(A) + 1e-14 * std::abs(value);
    return {value, err * 3.0, ZetaMethod::DirectSum};
}

// ---------------------------------------------------------------------------
// Mellin–Barnes continuation of zeta_MT,2

ZetaEval zeta_mt2_continued_general(Cplx s1, Cplx s2, Cplx s3, int M, double eps,
                                    double tol) {
    using special::gamma;
    using special::zeta;
    if (M < 1 || eps <= 0.0 || eps >= 1.0)
        throw DomainError("zeta_mt2_continued requires M >= 1 and eps in (0,1)");
    double wline = double(M) - eps;
    if (!(s3.real() + wline > 0.0))
        throw DomainError("integration line violates Re(s3 + w) > 0");
    if (!(s1.real() + s3.real() + wline > 1.0))
        throw DomainError("integration line violates Re(s1 + s3 + w) > 1");
    if (!(s2.real() - wline < 1.0))
        throw DomainError("integration line violates Re(s2 - w) < 1");
    if (near_int_le(s2 + s3 - 1.0, 0.0))
        throw DomainError("Gamma pole at s2 + s3 - 1");
    if (near_int_le(1.0 - s2, 0.0)) {
        // removable: the Gamma(1-s2) pole of the closed term cancels the
        // zeta(s2-m) pole in the finite sum.  Evaluate symmetrically nearby
        // and kill the even-order error by Richardson.
        const double d = 1e-3;
        auto at = [&](double off) {
            return zeta_mt2_continued_general(s1, s2 + off, s3, M, eps, tol);
        };
        ZetaEval p1 = at(d), m1 = at(-d), p2 = at(d / 2), m2 = at(-d / 2);
        Cplx a1 = 0.5 * (p1.value + m1.value), a2 = 0.5 * (p2.value + m2.value);
        ZetaEval out;
        out.value = (4.0 * a2 - a1) / 3.0;
        out.err_estimate = std::abs(a2 - a1) / 3.0 + p1.err_estimate +
                           p2.err_estimate;
        out.method = ZetaMethod::MellinBarnes;
        return out;
    }
    if (std::abs(s1 + s2 + s3 - 2.0) < 1e-8)
        throw DomainError("zeta pole at s1 + s2 + s3 = 2");

    Cplx closed = gamma(s2 + s3 - 1.0) * gamma(1.0 - s2) / gamma(s3) *
                  zeta(s1 + s2 + s3 - 1.0);

    Cplx msum = 0;
    for (int m = 0; m < M; ++m) {
        Cplx bin = binom_c(-s3, m);
        if (bin == 0.0) continue;
        if (std::abs(s1 + s3 + double(m) - 1.0) < 1e-8 ||
            std::abs(s2 - double(m) - 1.0) < 1e-8)
            throw DomainError("zeta pole inside the finite sum");
        msum += bin * zeta(s1 + s3 + double(m)) * zeta(s2 - double(m));
    }

    double tol_i = tol / 10.0;
    double T = (std::log(1.0 / tol_i) + 8.0) / pi + std::abs(s1.imag()) +
               std::abs(s2.imag()) + std::abs(s3.imag()) + double(M) + 6.0;
    Cplx gs3 = gamma(s3);
    auto f = [&](double tau) {
        Cplx w(wline, tau);
        return gamma(s3 + w) * gamma(-w) / gs3 * zeta(s1 + s3 + w) *
               zeta(s2 - w);
    };
    double scale0 = std::abs(closed) + std::abs(msum) + 1e-30;
    bool real_args = s1.imag() == 0.0 && s2.imag() == 0.0 && s3.imag() == 0.0;
    QuadResult qi;
    Cplx I;
    // ~one initial panel per two units of tau; the integrand oscillates on
    // that scale and a single panel would under-report the error
    std::size_t init = std::size_t(T / 2.0) + 1;
    if (real_args) {
        double v = integrate_adaptive<double>(
            [&](double tau) { return f(tau).real(); }, 0.0, T,
            tol_i * scale0 * pi, tol_i, &qi, 4000, init);
        I = Cplx(v / pi, 0.0);
        qi.err /= pi;
    } else {
        I = integrate_adaptive<Cplx>(f, -T, T, tol_i * scale0 * 2.0 * pi, tol_i,
                                     &qi, 4000, 2 * init) /
            (2.0 * pi);
        qi.err /= 2.0 * pi;
    }
    qi.err = std::max(qi.err, tol_i * scale0);  // never claim below the target
    double tail_err = std::abs(f(T)) / (pi * pi);

    ZetaEval out;
    out.value = closed + msum + I;
    out.err_estimate =
        (qi.err + tail_err + 1e-13 * (scale0 + std::abs(I))) * 2.0;
    out.method = ZetaMethod::MellinBarnes;
    return out;
}

ZetaEval zeta_mt2_continued(Cplx s, Cplx z, int M, double eps, double tol) {
    return zeta_mt2_continued_general(s, s - z, 2.0 * s + z, M, eps, tol);
}

// ---------------------------------------------------------------------------
// so5 continuation

namespace {

struct ZeroData {
    double value0 = 0, deriv0 = 0, err = 0;
};

const ZeroData& so5_zero_data();

bool near_so5_pole(Cplx s, double dist) {
    // poles: 1/2 and d/3 for odd d <= 1 with d/3 not an integer
    if (std::abs(s - Cplx(0.5, 0)) < dist) return true;
    for (int d = 1; d >= -61; d -= 2) {
        if (d % 3 == 0) continue;
        if (std::abs(s - Cplx(double(d) / 3.0, 0)) < dist) return true;
    }
    return false;
}

} // namespace

ZetaEval zeta_so5_continued(Cplx s, int K, double eps, double tol) {
    using special::gamma;
    if (K < 1 || eps <= 0.0 || eps >= 1.0)
        throw DomainError("zeta_so5_continued requires K >= 1 and eps in (0,1)");
    if (std::abs(s) < 1e-3) {
        // removable point: 1/Gamma(s) vanishes against the MT poles
        const ZeroData& zd = so5_zero_data();
        Cplx v = Cplx(zd.value0, 0) + s * zd.deriv0;
        return {v, zd.err + std::abs(s) * 0.1, ZetaMethod::MellinBarnes};
    }
    if (near_so5_pole(s, 1e-3))
        throw NumericError("zeta_so5_continued rejects evaluation within 1e-3 of a pole");
    if (!(s.real() > (1.0 - double(K) + eps) / 3.0))
        throw DomainError("s outside the continuation window for this K");

    const int M = K + 2;
    double tol_part = tol / 4.0;

    Cplx ksum = 0;
    double err = 0;
    double kfact = 1.0;
    for (int k = 0; k < K; ++k) {
        if (k > 0) kfact *= double(k);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Cplx coef = sign * poch(s, k) / kfact;
        ZetaEval mt = zeta_mt2_continued_general(s, s - double(k), 2.0 * s + double(k),
                                                 M, eps, tol_part);
        ksum += coef * mt.value;
        err += std::abs(coef) * mt.err_estimate;
    }

    double tol_i = tol / 10.0;
    double T = (std::log(1.0 / tol_i) + 8.0) / pi + 2.0 * std::abs(s.imag()) +
               double(K) + 6.0;
    Cplx gs = gamma(s);
    auto f = [&](double tau) {
        Cplx z(double(K) - eps, tau);
        ZetaEval mt =
            zeta_mt2_continued_general(s, s - z, 2.0 * s + z, M, eps, tol_part);
        return gamma(s + z) * gamma(-z) / gs * mt.value;
    };
    bool real_arg = s.imag() == 0.0;
    QuadResult qi;
    Cplx I;
    double scale0 = std::abs(ksum) + 1e-30;
    std::size_t init = std::size_t(T / 3.0) + 1;
    if (real_arg) {
        double v = integrate_adaptive<double>(
            [&](double tau) { return f(tau).real(); }, 0.0, T, tol_i * scale0 * pi,
            tol_i, &qi, 800, init);
        I = Cplx(v / pi, 0.0);
        qi.err /= pi;
    } else {
        I = integrate_adaptive<Cplx>(f, -T, T, tol_i * scale0 * 2.0 * pi, tol_i,
                                     &qi, 800, 2 * init) /
            (2.0 * pi);
        qi.err /= 2.0 * pi;
    }
    qi.err = std::max(qi.err, tol_i * scale0);
    double tail_err = std::abs(f(T)) / (pi * pi);

    Cplx scale = std::exp(s * std::log(6.0));
    ZetaEval out;
    out.value = scale * (ksum + I);
    out.err_estimate = std::abs(scale) * (err + qi.err + tail_err) * 2.0 +
                       1e-13 * std::abs(out.value);
    out.method = ZetaMethod::MellinBarnes;
    return out;
}

// ---------------------------------------------------------------------------
// residue extraction and numeric seeds

std::vector<double> residue_grid(double h0, int points) {
    std::vector<double> g;
    double h = h0;
    for (int i = 0; i < points; ++i) {
        g.push_back(h);
        h /= 2.0;
    }
    return g;
}

double residue_extract(const std::function<double(double)>& g, double s0,
                       const std::vector<double>& h_grid, double* err_proxy) {
    if (h_grid.size() < 2)
        throw DomainError("residue_extract needs at least two grid points");
    std::vector<double> h = h_grid, T(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) T[i] = h[i] * g(s0 + h[i]);
    std::vector<double> diag{T[0]};
    std::size_t n = h.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i)
            T[i] = (h[i] * T[i + 1] - h[i + k] * T[i]) / (h[i] - h[i + k]);
        diag.push_back(T[0]);
    }
    std::vector<double> d(diag.size() - 1);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        d[i] = std::abs(diag[i + 1] - diag[i]);
    double last = d.back();
    bool significant = last > 1e-6 * std::abs(diag.back()) + 1e-12;
    // a genuine limit has shrinking corrections; for a higher-order pole the
    // diagonal runs away geometrically and the differences keep growing
    if (d.size() >= 2 && last > 4.0 * d[d.size() - 2] && significant)
        throw NumericError("residue extrapolation is not Cauchy");
    if (d.size() >= 3 && last > d[d.size() - 2] &&
        d[d.size() - 2] > d[d.size() - 3] && significant)
        throw NumericError("residue extrapolation is not Cauchy");
    if (err_proxy) *err_proxy = last;
    return diag.back();
}

namespace {

const ZeroData& so5_zero_data() {
    static ZeroData zd = [] {
        ZeroData d;
        const double h = 1e-2;
        auto F = [&](double s) {
            return zeta_so5_continued(Cplx(s, 0), 3, 0.5, 1e-9).value.real();
        };
        double fp1 = F(h), fm1 = F(-h), fp2 = F(h / 2), fm2 = F(-h / 2);
        double G1 = 0.5 * (fp1 + fm1), G2 = 0.5 * (fp2 + fm2);
        double D1 = (fp1 - fm1) / (2.0 * h), D2 = (fp2 - fm2) / h;
        d.value0 = (4.0 * G2 - G1) / 3.0;
        d.deriv0 = (4.0 * D2 - D1) / 3.0;
        d.err = std::abs(G2 - G1) / 3.0 + std::abs(D2 - D1) / 3.0 + 1e-8;
        return d;
    }();
    return zd;
}

} // namespace

double zeta_so5_zero() { return so5_zero_data().value0; }
double zeta_so5_deriv0() { return so5_zero_data().deriv0; }

ZetaEval zeta_su3_continued(Cplx s, int M, double eps, double tol) {
    if (std::abs(s - Cplx(2.0 / 3.0, 0)) < 1e-3 ||
        std::abs(s - Cplx(0.5, 0)) < 1e-3)
        throw NumericError("zeta_su3_continued rejects evaluation within 1e-3 of a pole");
    if (std::abs(s) < 1e-3) {
        const Su3Analytic& a = su3_analytic();
        return {Cplx(a.L0, 0) + s * a.L0prime, 1e-6, ZetaMethod::MellinBarnes};
    }
    ZetaEval mt = zeta_mt2_continued_general(s, s, s, M, eps, tol);
    Cplx scale = std::exp(s * std::log(2.0));
    return {scale * mt.value, std::abs(scale) * mt.err_estimate,
            ZetaMethod::MellinBarnes};
}

const Su3Analytic& su3_analytic() {
    static Su3Analytic a = [] {
        Su3Analytic r;
        auto grid = residue_grid(0.1, 5);
        // near 2/3 the lattice sum converges too slowly for high accuracy
        // (its outer decay exponent approaches 1), so sample the analytic
        // continuation instead
        r.res_2_3 = residue_extract(
            [](double s) {
                ZetaEval mt = zeta_mt2_continued_general(Cplx(s, 0), Cplx(s, 0),
                                                         Cplx(s, 0), 4, 0.5, 1e-9);
                return std::pow(2.0, s) * mt.value.real();
            },
            2.0 / 3.0, grid);
        r.res_1_2 = residue_extract(
            [](double s) {
                ZetaEval mt = zeta_mt2_continued_general(Cplx(s, 0), Cplx(s, 0),
                                                         Cplx(s, 0), 4, 0.5, 1e-9);
                return std::pow(2.0, s) * mt.value.real();
            },
            0.5, grid);
        const double h = 1e-2;
        auto F = [](double s) {
            ZetaEval mt = zeta_mt2_continued_general(Cplx(s, 0), Cplx(s, 0),
                                                     Cplx(s, 0), 4, 0.5, 1e-10);
            return std::pow(2.0, s) * mt.value.real();
        };
        double fp1 = F(h), fm1 = F(-h), fp2 = F(h / 2), fm2 = F(-h / 2);
        r.L0 = (4.0 * 0.5 * (fp2 + fm2) - 0.5 * (fp1 + fm1)) / 3.0;
        r.L0prime = (4.0 * (fp2 - fm2) / h - (fp1 - fm1) / (2.0 * h)) / 3.0;
        return r;
    }();
    return a;
}

} // namespace meinardus
