#pragma once
#include <vector>

#include "meinardus/rational.hpp"
#include "meinardus/weight.hpp"

namespace meinardus {

struct PolePoint {
    Rational gamma;   // pole location of L_f (exact rational for every preset)
    double omega;     // residue of L_f there
};

// Analytic data of L_f(s) = sum f(n) n^{-s} and of L*_f = Gamma(s) zeta(s+1) L_f(s).
struct LSpec {
    std::string preset;
    Rational alpha;                       // largest positive pole
    std::vector<PolePoint> positive_poles;  // descending by gamma
    std::vector<Rational> lstar_poles;      // P_R: poles of L*_f above -R, 0 included
    double L0 = 0.0;                       // L_f(0)
    double L0prime = 0.0;                  // L_f'(0)
    Rational R{1};                         // cutoff for the exponent windows
};

// Fully populated analytic record for a named preset.  For SO5 the residues
// and L0 are closed forms while L0prime is numeric; for SU3 all residues and
// the values at 0 are numeric.  fill_numeric=false skips the (expensive)
// numeric fills and leaves those fields at 0.
LSpec preset_lspec(WeightFunction::Kind kind, int k = 3, bool fill_numeric = true);
LSpec preset_lspec(const WeightFunction& w, bool fill_numeric = true);

struct ExponentSets {
    std::vector<Rational> L_set;  // descending; window (-(R+1)/(alpha+1), alpha/(alpha+1)]
    std::vector<Rational> M_set;  // ascending; window [0, (R+alpha)/(alpha+1))
    std::vector<Rational> N_set;  // ascending; window [0, R/(alpha+1))

    // smallest positive element of M + N (first relative-correction exponent)
    Rational smallest_positive_MN() const;
};

ExponentSets exponent_sets(const LSpec& spec);

} // namespace meinardus
