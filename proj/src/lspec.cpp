#include "meinardus/lspec.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/special.hpp"
#include "meinardus/witten.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace meinardus {

using special::pi;

LSpec preset_lspec(const WeightFunction& w, bool fill_numeric) {
    return preset_lspec(w.kind, w.k, fill_numeric);
}

LSpec preset_lspec(WeightFunction::Kind kind, int k, bool fill_numeric) {
    const auto& C = special::constants();
    LSpec s;
    switch (kind) {
        case WeightFunction::Kind::Ones:
            // L_f = zeta
            s.preset = "ones";
            s.alpha = Rational(1);
            s.positive_poles = {{Rational(1), 1.0}};
            s.R = Rational(3, 2);
            s.lstar_poles = {Rational(1), Rational(0), Rational(-1)};
            s.L0 = -0.5;
            s.L0prime = -0.5 * std::log(2.0 * pi);
            break;
        case WeightFunction::Kind::PlanePartition:
            // L_f = zeta(s-1); the Gamma pole at -1 is cancelled by zeta(-2)=0
            s.preset = "plane";
            s.alpha = Rational(2);
            s.positive_poles = {{Rational(2), 1.0}};
            s.R = Rational(5, 2);
            s.lstar_poles = {Rational(2), Rational(0), Rational(-2)};
            s.L0 = -1.0 / 12.0;  // zeta(-1)
            s.L0prime = C.zeta_prime_minus1;
            break;
        case WeightFunction::Kind::Polygonal: {
            if (k < 3) throw DomainError("polygonal preset requires k >= 3");
            s.preset = "polygonal:" + std::to_string(k);
            s.alpha = Rational(1, 2);
            double km2 = double(k - 2);
            s.positive_poles = {{Rational(1, 2), std::sqrt(1.0 / (2.0 * km2))}};
            s.R = Rational(1);
            s.lstar_poles = {Rational(1, 2), Rational(0)};
            s.L0 = 1.0 / (2.0 - double(k));
            s.L0prime = std::log(km2 / 2.0) / km2 +
                        std::lgamma(2.0 / km2) - std::log(2.0 * pi);
            break;
        }
        case WeightFunction::Kind::SO5: {
            s.preset = "so5";
            s.alpha = Rational(1, 2);
            double w12 = std::sqrt(3.0) * C.gamma_quarter * C.gamma_quarter /
                         (8.0 * std::sqrt(pi));
            double w13 = (std::cbrt(2.0) + 1.0) * std::pow(3.0, -2.0 / 3.0) * C.zeta_1_3;
            s.positive_poles = {{Rational(1, 2), w12}, {Rational(1, 3), w13}};
            s.R = Rational(1);
            s.lstar_poles = {Rational(1, 2), Rational(1, 3), Rational(0), Rational(-1, 3)};
            s.L0 = 3.0 / 8.0;
            if (fill_numeric) s.L0prime = zeta_so5_deriv0();
            break;
        }
        case WeightFunction::Kind::SU3: {
            s.preset = "su3";
            s.alpha = Rational(2, 3);
            s.R = Rational(1);
            s.lstar_poles = {Rational(2, 3), Rational(1, 2), Rational(0)};
            if (fill_numeric) {
                const Su3Analytic& a = su3_analytic();
                s.positive_poles = {{Rational(2, 3), a.res_2_3}, {Rational(1, 2), a.res_1_2}};
                s.L0 = a.L0;
                s.L0prime = a.L0prime;
            } else {
                s.positive_poles = {{Rational(2, 3), 0.0}, {Rational(1, 2), 0.0}};
            }
            break;
        }
        case WeightFunction::Kind::Explicit:
            throw DomainError("explicit weight functions require a caller-supplied LSpec");
    }
    return s;
}

namespace {

// Enumerate { base + sum k_i * step_i } with nonpositive steps, keeping
// elements >= floor.  Steps of zero contribute nothing and are skipped.
void enumerate_down(std::set<Rational>& out, Rational base,
                    const std::vector<Rational>& steps, Rational floor) {
    if (base < floor) return;
    if (!out.insert(base).second) return;  // children already enumerated
    for (const auto& st : steps) {
        if (st.num == 0) continue;
        enumerate_down(out, base + st, steps, floor);
    }
}

// Nonnegative span { sum k_i * g_i } with positive generators, below `top`.
std::set<Rational> span_up(const std::vector<Rational>& gens, Rational top) {
    std::set<Rational> out{Rational(0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Rational> next = out;
        for (const auto& e : out)
            for (const auto& g : gens) {
                Rational v = e + g;
                if (v < top && next.insert(v).second) grew = true;
            }
        out = next;
    }
    return out;
}

} // namespace

ExponentSets exponent_sets(const LSpec& spec) {
    if (spec.lstar_poles.empty())
        throw DomainError("P_R must be nonempty (0 is always a member)");
    if (std::find(spec.lstar_poles.begin(), spec.lstar_poles.end(), Rational(0)) ==
        spec.lstar_poles.end())
        throw DomainError("P_R must contain 0");

    const Rational a1 = spec.alpha + Rational(1);
    // shift generators (mu+1)/(alpha+1) - 1 <= 0
    std::vector<Rational> shifts;
    for (const auto& mu : spec.lstar_poles)
        shifts.push_back((mu + Rational(1)) / a1 - Rational(1));

    ExponentSets es;

    // L: (1/(alpha+1)) P_R + span(shifts), floored for finiteness
    {
        Rational floor = -(spec.R + Rational(1)) / a1;
        std::set<Rational> acc;
        for (const auto& mu : spec.lstar_poles)
            enumerate_down(acc, mu / a1, shifts, floor);
        es.L_set.assign(acc.begin(), acc.end());
        std::reverse(es.L_set.begin(), es.L_set.end());
    }

    // M: (alpha/(alpha+1)) N_0 + (-span(shifts)), then windowed to
    // [0, (R+alpha)/(alpha+1)).  (Full Minkowski sum first, window second.)
    {
        Rational top = (spec.R + spec.alpha) / a1;
        std::vector<Rational> neg_shifts;
        for (const auto& st : shifts)
            if (st.num != 0) neg_shifts.push_back(-st);
        auto part2 = span_up(neg_shifts, top);
        std::set<Rational> acc;
        Rational step = spec.alpha / a1;
        for (Rational m0(0); m0 < top; m0 = m0 + step) {
            for (const auto& e : part2) {
                Rational v = m0 + e;
                if (v >= Rational(0) && v < top) acc.insert(v);
            }
        }
        es.M_set.assign(acc.begin(), acc.end());
    }

    // N: nonnegative span of (-L) ∩ (0, R/(alpha+1))
    {
        Rational top = spec.R / a1;
        std::vector<Rational> gens;
        for (const auto& e : es.L_set) {
            Rational t = -e;
            if (t > Rational(0) && t < top) gens.push_back(t);
        }
        auto acc = span_up(gens, top);
        es.N_set.assign(acc.begin(), acc.end());
    }

    return es;
}

Rational ExponentSets::smallest_positive_MN() const {
    bool found = false;
    Rational best(0);
    for (const auto& m : M_set)
        for (const auto& n : N_set) {
            Rational v = m + n;
            if (v > Rational(0) && (!found || v < best)) { best = v; found = true; }
        }
    if (!found) throw NumericError("M+N has no positive element in the window");
    return best;
}

} // namespace meinardus
