#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "meinardus/asym.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/lspec.hpp"
#include "meinardus/special.hpp"
#include "meinardus/weight.hpp"

using namespace meinardus;
using special::pi;

TEST_CASE("partition asymptotics: Hardy-Ramanujan constants") {
    AsymptoticModel m = preset_model(preset_lspec(WeightFunction::Kind::Ones));
    REQUIRE(m.exp_terms.size() == 1);
    CHECK(m.exp_terms[0].first ==
          doctest::Approx(pi * std::sqrt(2.0 / 3.0)).epsilon(1e-13));
    CHECK(m.exp_terms[0].second.str() == "1/2");
    CHECK(m.C == doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(m.b == doctest::Approx(1.0).epsilon(1e-13));
    REQUIRE(m.b_exact_known);
    CHECK(m.b_exact.str() == "1");
    CHECK(m.next_error_exponent.str() == "-1/2");
}

TEST_CASE("plane partition constants") {
    AsymptoticModel m =
        preset_model(preset_lspec(WeightFunction::Kind::PlanePartition));
    double z3 = special::constants().zeta_3;
    CHECK(m.exp_terms[0].first ==
          doctest::Approx(3.0 * std::cbrt(z3) / std::cbrt(4.0)).epsilon(1e-13));
    CHECK(m.exp_terms[0].second.str() == "2/3");
    CHECK(m.C == doctest::Approx(0.231516813448898371).epsilon(1e-12));
    CHECK(m.b == doctest::Approx(25.0 / 36.0).epsilon(1e-13));
    CHECK(m.b_exact.str() == "25/36");
    CHECK(m.next_error_exponent.str() == "-2/3");
}

TEST_CASE("polygonal closed forms k = 3, 4, 5") {
    struct Want { int k; double A, b, C; };
    // independently computed from the closed forms
    const Want wants[] = {
        {3, 4.1670777268237688, 1.5, 0.042434597978995511},
        {4, 3.3074117835966520, 7.0 / 6.0, 0.057154651709542586},
        {5, 2.8892903229886744, 19.0 / 18.0, 0.077880683238613257},
    };
    for (const auto& w : wants) {
        AsymptoticModel m =
            preset_model(preset_lspec(WeightFunction::Kind::Polygonal, w.k));
        CHECK(m.exp_terms[0].first == doctest::Approx(w.A).epsilon(1e-12));
        CHECK(m.exp_terms[0].second.str() == "1/3");
        CHECK(m.b == doctest::Approx(w.b).epsilon(1e-12));
        CHECK(m.C == doctest::Approx(w.C).epsilon(1e-12));
        CHECK(m.next_error_exponent.str() == "-1/3");
    }
}

TEST_CASE("so5 two-pole constants") {
    LSpec spec = preset_lspec(WeightFunction::Kind::SO5);
    TwoPoleConstants tc = two_pole_constants(spec);
    CHECK(tc.c1 == doctest::Approx(3.7173921006).epsilon(1e-9));
    CHECK(tc.c2 == doctest::Approx(-3.4005028653).epsilon(1e-9));
    CHECK(tc.c3 == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(tc.ell == 3);
    REQUIRE(tc.A.size() == 4);
    CHECK(tc.A[0] == doctest::Approx(7.1991325396).epsilon(1e-9));
    CHECK(tc.A[1] == doctest::Approx(-7.6198208664).epsilon(1e-9));
    CHECK(tc.A[2] == doctest::Approx(-0.8961213917).epsilon(1e-8));
    CHECK(tc.A[3] == doctest::Approx(-0.3161623729).epsilon(1e-8));
    CHECK(tc.A[3] < 0.0);

    AsymptoticModel m = preset_model(spec);
    REQUIRE(m.exp_terms.size() == 4);
    CHECK(m.exp_terms[0].second.str() == "1/3");
    CHECK(m.exp_terms[1].second.str() == "2/9");
    CHECK(m.exp_terms[2].second.str() == "1/9");
    CHECK(m.exp_terms[3].second.str() == "0");
    CHECK(m.b_exact.str() == "7/12");
    CHECK(m.next_error_exponent.str() == "-1/9");
}

TEST_CASE("su3 two-pole model sanity") {
    LSpec spec = preset_lspec(WeightFunction::Kind::SU3);
    AsymptoticModel m = preset_model(spec);
    REQUIRE(m.exp_terms.size() == 5);
    CHECK(m.exp_terms[0].second.str() == "2/5");
    CHECK(m.exp_terms[4].second.str() == "0");
    // A1 = (1 + 1/alpha) c1^{1/(alpha+1)} with alpha = 2/3
    TwoPoleConstants tc = two_pole_constants(spec);
    CHECK(m.exp_terms[0].first ==
          doctest::Approx(2.5 * std::pow(tc.c1, 0.6)).epsilon(1e-12));
    CHECK(m.b == doctest::Approx(0.6).epsilon(1e-5));  // b = 3/5 up to numeric L(0)
    CHECK_FALSE(m.b_exact_known);
    CHECK(m.next_error_exponent.str() == "-1/10");
}

TEST_CASE("evaluate matches a hand-rolled formula") {
    AsymptoticModel m = preset_model(preset_lspec(WeightFunction::Kind::Ones));
    std::uint64_t n = 100;
    double want = std::log(m.C) - m.b * std::log(double(n)) +
                  m.exp_terms[0].first * std::sqrt(double(n));
    EvalResult r = evaluate(m, n);
    CHECK(r.log_value == doctest::Approx(want).epsilon(1e-14));
    REQUIRE(r.linear_ok);
    CHECK(r.linear == doctest::Approx(std::exp(want)).epsilon(1e-13));
    // p(100) = 190569292; the first-order formula is good to a few percent
    CHECK(std::abs(r.linear / 190569292.0 - 1.0) < 0.05);
}

TEST_CASE("error exponent fit recovers a synthetic slope") {
    // build a table equal to the model inflated by 0.5 n^{-0.4}
    AsymptoticModel m;
    m.preset = "synthetic";
    m.alpha = 1.0;
    m.exp_terms = {{1.0, Rational(1, 2)}};
    m.C = 1.0;
    m.b = 0.0;
    CoeffTable t;
    t.N = 20000;
    t.values.resize(t.N + 1);
    for (std::size_t n = 1; n <= t.N; ++n) {
        double v = std::exp(std::sqrt(double(n))) *
                   (1.0 + 0.5 * std::pow(double(n), -0.4));
        t.values[n] = mpz_class(v);
    }
    std::vector<std::uint64_t> grid = {1000, 2000, 4000, 8000, 16000, 20000};
    FitResult f = error_exponent_fit(m, t, grid);
    CHECK(f.slope == doctest::Approx(-0.4).epsilon(0.05));
    CHECK(f.r2 > 0.999);
}

TEST_CASE("model guards") {
    LSpec so5 = preset_lspec(WeightFunction::Kind::SO5, 3, false);
    CHECK_THROWS_AS(one_pole_model(so5), DomainError);
    LSpec ones = preset_lspec(WeightFunction::Kind::Ones);
    CHECK_THROWS_AS(two_pole_constants(ones), DomainError);
    AsymptoticModel m = preset_model(ones);
    CHECK_THROWS_AS(evaluate(m, 0), DomainError);
}
