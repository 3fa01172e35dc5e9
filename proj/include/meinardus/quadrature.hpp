#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "meinardus/errors.hpp"

namespace meinardus {

// Adaptive Gauss–Kronrod 7-15 on a real interval.  Value type may be double or
// std::complex<double>; the classic QUADPACK abscissae/weights are reused.
namespace gk {
inline constexpr double wg[4] = {
    .129484966168869693270611432679082, .27970539148927666790146777142378,
    .381830050505118944950369775488975, .417959183673469387755102040816327};
inline constexpr double xgk[8] = {
    .991455371120812639206854697526329, .949107912342758524526189684047851,
    .864864423359769072789712788640926, .741531185599394439863864773280788,
    .58608723546769113029414483825873,  .405845151377397166906606412076961,
    .207784955007898467600689403773245, 0.};
inline constexpr double wgk[8] = {
    .02293532201052922496373200805897,  .063092092629978553290700663189204,
    .104790010322250183839876322541518, .140653259715525918745189590510238,
    .16900472663926790282658342659855,  .190350578064785409913256402421014,
    .204432940075298892414161999234649, .209482141084727828012999174891714};
} // namespace gk

template <class V, class F>
void gk15_panel(F&& f, double a, double b, V& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    V fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * gk::xgk[j]);
        fv[14 - j] = f(c + h * gk::xgk[j]);
    }
    fv[7] = f(c);
    V resk = gk::wgk[7] * fv[7];
    V resg = gk::wg[3] * fv[7];
    for (int j = 0; j < 7; ++j) {
        resk += gk::wgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1) resg += gk::wg[j / 2] * (fv[j] + fv[14 - j]);
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
    // QUADPACK-style sharpening of the raw difference, scaled against the
    // variation measure resasc = integral of |f - mean| (not |result|, which
    // would hide sharp features riding on a large smooth bulk).
    double mean = 0.5 * std::abs(resk);
    double resasc = gk::wgk[7] * std::abs(std::abs(fv[7]) - mean);
    for (int j = 0; j < 7; ++j)
        resasc += gk::wgk[j] * (std::abs(std::abs(fv[j]) - mean) +
                                std::abs(std::abs(fv[14 - j]) - mean));
    resasc *= h;
    if (resasc > 0 && err > 0) {
        double scale = std::pow(200.0 * err / resasc, 1.5);
        if (scale < 1.0) err = resasc * scale;
        if (err > resasc) err = resasc;
    }
}

struct QuadResult {
    double err = 0;
    std::size_t panels = 0;
};

// Adaptive bisection with a worst-panel-first queue.  init_panels > 1 starts
// from a uniform pre-split; long oscillatory integrands need this, because a
// single GK15 panel spanning many oscillations can alias them and report a
// spuriously small error.
template <class V, class F>
V integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                     QuadResult* info = nullptr, std::size_t max_panels = 4000,
                     std::size_t init_panels = 1) {
    struct Panel { double a, b, err; V val; };
    std::vector<Panel> panels;
    std::size_t k0 = std::max<std::size_t>(1, init_panels);
    for (std::size_t i = 0; i < k0; ++i) {
        Panel p;
        p.a = a + (b - a) * double(i) / double(k0);
        p.b = a + (b - a) * double(i + 1) / double(k0);
        gk15_panel<V>(f, p.a, p.b, p.val, p.err);
        panels.push_back(p);
    }
    auto total = [&] {
        V s{}; double err = 0;
        for (auto& p : panels) { s += p.val; err += p.err; }
        return std::pair<V, double>(s, err);
    };
    for (;;) {
        auto [sum, err] = total();
        double tol = std::max(abs_tol, rel_tol * std::abs(sum));
        if (err <= tol || panels.size() >= max_panels) {
            if (info) { info->err = err; info->panels = panels.size(); }
            if (err > std::max(tol * 50.0, 1e-280) && panels.size() >= max_panels)
                throw NumericError("adaptive quadrature failed to converge");
            return sum;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        Panel l, r;
        l.a = p.a; l.b = mid; r.a = mid; r.b = p.b;
        gk15_panel<V>(f, l.a, l.b, l.val, l.err);
        gk15_panel<V>(f, r.a, r.b, r.val, r.err);
        panels[worst] = l;
        panels.push_back(r);
    }
}

// Integral over [n0, inf) of an algebraically decaying f, f(x) ~ x^{-p} with
// p > 1.  Substitution x = n0 * t^{-q} maps to (0,1] and flattens the decay.
template <class V, class F>
V integrate_tail(F&& f, double n0, double p, double abs_tol, double rel_tol,
                 QuadResult* info = nullptr) {
    if (p <= 1.0) throw DomainError("tail integral requires decay exponent > 1");
    double q = std::max(1.0, 4.0 / (p - 1.0));
    // Past x ~ e^{690} the integrand cannot be evaluated in doubles; drop those
    // points and account for the lost mass below via the power-law model.
    const double log_xmax = 690.0;
    const double ln0 = std::log(n0);
    auto g = [&](double t) -> V {
        if (t <= 0) return V{};
        double lt = std::log(t);
        double lx = ln0 - q * lt;
        if (lx > log_xmax) return V{};
        double ljac = std::log(q) + lx - lt;
        if (ljac > log_xmax) return V{};
        double x = std::exp(lx);
        return f(x) * (q * x / t);
    };
    QuadResult qi;
    // pre-split: large q compresses the slow corrections of f into a thin
    // layer at t = 1 that a single panel would miss
    V v = integrate_adaptive<V>(g, 0.0, 1.0, abs_tol, rel_tol, &qi, 4000, 8);
    // mass beyond the evaluable range, from f ~ C x^{-p} calibrated at n0
    qi.err += std::abs(f(n0)) * n0 / (p - 1.0) *
              std::exp(-(p - 1.0) * (log_xmax - ln0));
    if (info) *info = qi;
    return v;
}

} // namespace meinardus
