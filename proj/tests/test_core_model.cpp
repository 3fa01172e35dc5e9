#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "meinardus/errors.hpp"
#include "meinardus/lspec.hpp"
#include "meinardus/rational.hpp"
#include "meinardus/special.hpp"
#include "meinardus/weight.hpp"

using namespace meinardus;

TEST_CASE("rational arithmetic and normalization") {
    Rational a(2, 4), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(7, 12).to_double() == doctest::Approx(7.0 / 12.0));
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("preset parsing round trip") {
    for (const char* p : {"ones", "plane", "polygonal:5", "su3", "so5"}) {
        WeightFunction w = WeightFunction::parse(p);
        CHECK(w.name() == p);
    }
    CHECK_THROWS_AS(WeightFunction::parse("polygonal:2"), DomainError);
    CHECK_THROWS_AS(WeightFunction::parse("nope"), DomainError);
}

TEST_CASE("weight tables against hand enumeration") {
    // so5: multiplicity of n among j k (j+k) (j+2k) / 6
    std::vector<std::uint64_t> so5 = weight_table(WeightFunction::parse("so5"), 16);
    std::vector<std::uint64_t> so5_ref = {1, 0, 0, 1, 1, 0, 0, 0,
                                          0, 1, 0, 0, 0, 1, 0, 1};
    CHECK(so5 == so5_ref);
    // su3: multiplicity of n among j k (j+k) / 2
    std::vector<std::uint64_t> su3 = weight_table(WeightFunction::parse("su3"), 16);
    std::vector<std::uint64_t> su3_ref = {1, 0, 2, 0, 0, 2, 0, 1,
                                          0, 2, 0, 0, 0, 0, 4, 0};
    CHECK(su3 == su3_ref);
    // pentagonal numbers 1, 5, 12, 22, ...
    std::vector<std::uint64_t> p5 = weight_table(WeightFunction::parse("polygonal:5"), 25);
    for (std::size_t n = 1; n <= 25; ++n) {
        bool pent = n == 1 || n == 5 || n == 12 || n == 22;
        CHECK(p5[n - 1] == (pent ? 1u : 0u));
    }
    std::vector<std::uint64_t> plane = weight_table(WeightFunction::parse("plane"), 6);
    CHECK(plane == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("explicit weight file") {
    const char* path = "explicit_weights_test.txt";
    {
        std::ofstream out(path);
        out << "1 2\n3 1\n";
    }
    WeightFunction w = WeightFunction::parse(std::string("explicit:") + path);
    CHECK(w.f(1) == 2);
    CHECK(w.f(2) == 0);
    CHECK(w.f(3) == 1);
    std::remove(path);
    CHECK_THROWS_AS(WeightFunction::parse("explicit:/no/such/file"), IoError);
}

TEST_CASE("one-pole preset analytic data") {
    LSpec ones = preset_lspec(WeightFunction::Kind::Ones);
    CHECK(ones.alpha.str() == "1");
    CHECK(ones.positive_poles.size() == 1);
    CHECK(ones.positive_poles[0].omega == doctest::Approx(1.0));
    CHECK(ones.L0 == doctest::Approx(-0.5));
    CHECK(ones.L0prime ==
          doctest::Approx(-0.5 * std::log(2.0 * special::pi)).epsilon(1e-13));

    LSpec plane = preset_lspec(WeightFunction::Kind::PlanePartition);
    CHECK(plane.alpha.str() == "2");
    CHECK(plane.L0 == doctest::Approx(-1.0 / 12.0));
    CHECK(plane.L0prime ==
          doctest::Approx(special::constants().zeta_prime_minus1).epsilon(1e-13));

    LSpec p5 = preset_lspec(WeightFunction::Kind::Polygonal, 5);
    CHECK(p5.alpha.str() == "1/2");
    CHECK(p5.positive_poles[0].omega ==
          doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-13));
    CHECK(p5.L0 == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("so5 preset analytic data") {
    LSpec so5 = preset_lspec(WeightFunction::Kind::SO5, 3, false);
    CHECK(so5.alpha.str() == "1/2");
    REQUIRE(so5.positive_poles.size() == 2);
    CHECK(so5.positive_poles[0].gamma.str() == "1/2");
    CHECK(so5.positive_poles[1].gamma.str() == "1/3");
    double om12 = std::sqrt(3.0) * std::pow(special::constants().gamma_quarter, 2) /
                  (8.0 * std::sqrt(special::pi));
    CHECK(so5.positive_poles[0].omega == doctest::Approx(om12).epsilon(1e-13));
    double om13 = (std::cbrt(2.0) + 1.0) * std::pow(3.0, -2.0 / 3.0) *
                  special::constants().zeta_1_3;
    CHECK(so5.positive_poles[1].omega == doctest::Approx(om13).epsilon(1e-13));
    CHECK(so5.L0 == doctest::Approx(3.0 / 8.0));
}

TEST_CASE("exponent sets and error exponents") {
    struct Want { const char* preset; const char* smallest; };
    const Want wants[] = {
        {"ones", "1/2"},      {"plane", "2/3"}, {"polygonal:5", "1/3"},
        {"so5", "1/9"},       {"su3", "1/10"},
    };
    for (const auto& wexp : wants) {
        WeightFunction w = WeightFunction::parse(wexp.preset);
        LSpec spec = preset_lspec(w, false);
        ExponentSets sets = exponent_sets(spec);
        CHECK(sets.smallest_positive_MN().str() == wexp.smallest);
        // windows respected
        for (const auto& m : sets.M_set) {
            CHECK(m >= Rational(0));
            CHECK(m < (spec.R + spec.alpha) / (spec.alpha + Rational(1)));
        }
        for (const auto& nn : sets.N_set) {
            CHECK(nn >= Rational(0));
            CHECK(nn < spec.R / (spec.alpha + Rational(1)));
        }
        CHECK(!sets.L_set.empty());
        // alpha/(alpha+1) is the top of the L window
        CHECK(sets.L_set.front() <= spec.alpha / (spec.alpha + Rational(1)));
    }
}

TEST_CASE("ones exponent sets explicitly") {
    LSpec ones = preset_lspec(WeightFunction::Kind::Ones);
    ExponentSets sets = exponent_sets(ones);
    // P_1.5 = {1, 0, -1}: L = (1/2)P + {0, -1/2, -1, ...} intersected with window
    CHECK(sets.L_set.front().str() == "1/2");
    bool has_zero = false, has_minus_half = false;
    for (const auto& v : sets.L_set) {
        if (v.str() == "0") has_zero = true;
        if (v.str() == "-1/2") has_minus_half = true;
    }
    CHECK(has_zero);
    CHECK(has_minus_half);
    CHECK(sets.M_set.front().str() == "0");
    CHECK(sets.N_set.front().str() == "0");
}

TEST_CASE("explicit preset has no closed-form analytic record") {
    WeightFunction w;
    w.kind = WeightFunction::Kind::Explicit;
    w.table = {1, 1};
    CHECK_THROWS_AS(preset_lspec(w), DomainError);
}
