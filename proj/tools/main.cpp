// command line front end: exact counting, asymptotic comparison tables,
// constant printing, zeta evaluation, saddle and contour-integral dumps
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "meinardus/asym.hpp"
#include "meinardus/coeffs.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/lspec.hpp"
#include "meinardus/parallel.hpp"
#include "meinardus/saddle.hpp"
#include "meinardus/special.hpp"
#include "meinardus/weight.hpp"
#include "meinardus/witten.hpp"

using json = nlohmann::ordered_json;
using namespace meinardus;

namespace {

std::string resolve_cache(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("MEINARDUS_CACHE");
    return env ? std::string(env) : std::string();
}

Cplx parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re)) throw DomainError("cannot parse complex value '" + s + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw DomainError("cannot parse complex value '" + s + "'");
    }
    return {re, im};
}

// "a,b[,step|log]": two endpoints with an arithmetic step or a 9-point
// geometric layout (the default when no third token is given)
std::vector<std::uint64_t> parse_grid(const std::string& s) {
    std::vector<std::string> tok;
    std::stringstream in(s);
    std::string t;
    while (std::getline(in, t, ',')) tok.push_back(t);
    if (tok.size() < 2 || tok.size() > 3)
        throw DomainError("--n-grid expects a,b[,step|log]");
    std::uint64_t a = std::stoull(tok[0]), b = std::stoull(tok[1]);
    if (a < 1 || b < a) throw DomainError("--n-grid needs 1 <= a <= b");
    std::vector<std::uint64_t> grid;
    if (tok.size() == 3 && tok[2] != "log") {
        std::uint64_t step = std::stoull(tok[2]);
        if (step < 1) throw DomainError("--n-grid step must be >= 1");
        for (std::uint64_t n = a; n <= b; n += step) grid.push_back(n);
    } else {
        const int pts = 9;
        double la = std::log(double(a)), lb = std::log(double(b));
        for (int i = 0; i < pts; ++i) {
            double x = la + (lb - la) * double(i) / double(pts - 1);
            std::uint64_t n = std::uint64_t(std::llround(std::exp(x)));
            if (grid.empty() || n > grid.back()) grid.push_back(n);
        }
        if (grid.back() != b) grid.push_back(b);
    }
    return grid;
}

CoeffTable table_for(const WeightFunction& w, std::size_t N,
                     const std::string& cache_dir, unsigned threads) {
    CoeffTable t;
    if (!cache_dir.empty() && load_cache(t, w, N, cache_dir)) return t;
    if (w.kind == WeightFunction::Kind::Ones)
        t = coeffs_pentagonal(N);
    else {
        (void)threads;
        t = coeffs_convolution(w, N);
    }
    if (!cache_dir.empty()) save_cache(t, cache_dir);
    return t;
}

// scientific-notation string from a natural log (values overflow double)
std::string sci_from_log(double ln_value) {
    double e10 = ln_value / std::log(10.0);
    double ex = std::floor(e10);
    double mant = std::pow(10.0, e10 - ex);
    if (mant >= 10.0 - 1e-12) { mant /= 10.0; ex += 1.0; }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9fe%+04d", mant, int(ex));
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json model_json(const AsymptoticModel& m) {
    json terms = json::array();
    for (const auto& [A, e] : m.exp_terms)
        terms.push_back({{"A", A}, {"exponent", e.str()},
                         {"exponent_decimal", e.to_double()}});
    json j{{"preset", m.preset},
           {"alpha", m.alpha},
           {"exp_terms", terms},
           {"C", m.C},
           {"b", m.b},
           {"next_error_exponent", m.next_error_exponent.str()}};
    if (m.b_exact_known) j["b_exact"] = m.b_exact.str();
    return j;
}

int cmd_count(const std::string& preset, std::uint64_t n_max,
              const std::string& output, const std::string& cache_dir,
              unsigned threads) {
    WeightFunction w = WeightFunction::parse(preset);
    CoeffTable t = table_for(w, n_max, resolve_cache(cache_dir), threads);
    if (output == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n <= t.N; ++n)
            rows.push_back(t.values[n].get_str());
        json j{{"preset", w.name()}, {"n_max", n_max}, {"values", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        write_csv(t, std::cout);
    }
    return 0;
}

int cmd_compare(const std::string& preset, const std::string& grid_arg,
                const std::string& output, const std::string& cache_dir,
                unsigned threads) {
    WeightFunction w = WeightFunction::parse(preset);
    std::vector<std::uint64_t> grid = parse_grid(grid_arg);
    std::uint64_t cap = w.kind == WeightFunction::Kind::Ones ? 100000 : 20000;
    if (grid.back() > cap)
        throw DomainError("grid exceeds the supported range for this preset");

    AsymptoticModel model = preset_model(preset_lspec(w));
    CoeffTable t = table_for(w, grid.back(), resolve_cache(cache_dir), threads);
    FitResult fit = error_exponent_fit(model, t, grid);

    struct Row { std::uint64_t n; std::string p, phat; double ratio, log_err; };
    std::vector<Row> rows;
    for (auto n : grid) {
        double lp = log_mpz(t.values[n]);
        double lm = evaluate(model, n).log_value;
        rows.push_back({n, t.values[n].get_str(), sci_from_log(lm),
                        std::exp(lp - lm), lp - lm});
    }
    if (output == "json") {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"n", r.n}, {"p", r.p}, {"p_hat", r.phat},
                             {"ratio", r.ratio}, {"log_error", r.log_err}});
        json j{{"preset", w.name()},   {"model", model_json(model)},
               {"rows", jrows},        {"slope", fit.slope},
               {"r2", fit.r2}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n,p_f_n,p_hat,ratio,log_error\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.p << ',' << r.phat << ','
                      << fmt(r.ratio) << ',' << fmt(r.log_err) << "\n";
        std::cout << "slope," << fmt(fit.slope) << ",r2," << fmt(fit.r2)
                  << ",\n";
    }
    return 0;
}

int cmd_constants(const std::string& preset) {
    WeightFunction w = WeightFunction::parse(preset);
    LSpec spec = preset_lspec(w);
    AsymptoticModel model = preset_model(spec);
    json A = json::array(), alpha = json::array();
    for (const auto& [a, e] : model.exp_terms) {
        A.push_back(a);
        alpha.push_back({{"rational", e.str()}, {"decimal", e.to_double()}});
    }
    json K = json::array(), c = json::array();
    if (spec.positive_poles.size() == 2) {
        TwoPoleConstants tc = two_pole_constants(spec);
        for (double k : tc.K) K.push_back(k);
        c = {tc.c1, tc.c2, tc.c3};
    } else {
        const auto& p = spec.positive_poles.front();
        double a = p.gamma.to_double();
        double c1 = p.omega * special::gamma(Cplx(a + 1.0, 0)).real() *
                    special::zeta(Cplx(a + 1.0, 0)).real();
        c = {c1};
        K.push_back(std::pow(c1, 1.0 / (a + 1.0)));
    }
    json b{{"decimal", model.b}};
    if (model.b_exact_known) b["rational"] = model.b_exact.str();
    json j{{"preset", w.name()}, {"A", A},        {"alpha", alpha},
           {"C", model.C},       {"b", b},        {"K", K},
           {"c", c},
           {"next_error_exponent", model.next_error_exponent.str()}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_zeta(const std::string& name, const std::string& s_arg,
             const std::string& s2_arg, const std::string& s3_arg,
             const std::string& method, int k, int M, int K, double eps,
             double tol, unsigned threads) {
    Cplx s = parse_complex(s_arg);
    ZetaEval ev;
    if (name == "so5") {
        if (method == "direct")
            ev = zeta_so5_direct(s, tol, threads);
        else if (method == "mb")
            ev = zeta_so5_continued(s, K, eps, tol);
        else
            ev = s.real() > 0.75 ? zeta_so5_direct(s, tol, threads)
                                 : zeta_so5_continued(s, K, eps, tol);
    } else if (name == "mt2") {
        Cplx s2 = s2_arg.empty() ? s : parse_complex(s2_arg);
        Cplx s3 = s3_arg.empty() ? s : parse_complex(s3_arg);
        bool conv = (s + s3).real() > 1.0 && (s2 + s3).real() > 1.0 &&
                    (s + s2 + s3).real() > 2.0;
        if (method == "direct" || (method == "auto" && conv))
            ev = zeta_mt2(s, s2, s3, tol, threads);
        else
            ev = zeta_mt2_continued_general(s, s2, s3, M, eps, tol);
    } else if (name == "pk") {
        if (k < 3) throw DomainError("zeta pk requires --k >= 3");
        ev = zeta_Pk(s, k, tol);
    } else {
        throw DomainError("unknown zeta name '" + name + "' (so5|mt2|pk)");
    }
    json j{{"name", name},
           {"s", {s.real(), s.imag()}},
           {"value", {ev.value.real(), ev.value.imag()}},
           {"err_estimate", ev.err_estimate},
           {"method", ev.method == ZetaMethod::DirectSum ? "direct" : "mb"}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_saddle(const std::string& preset, std::uint64_t n) {
    WeightFunction w = WeightFunction::parse(preset);
    SaddleResult r = solve_saddle(w, n);
    json j{{"preset", w.name()}, {"n", r.n},
           {"rho", r.rho},       {"rho_asym", r.rho_asym},
           {"residual", r.residual}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_cauchy(const std::string& preset, std::uint64_t n) {
    WeightFunction w = WeightFunction::parse(preset);
    CauchyResult r = cauchy_count(w, n);
    json j{{"preset", w.name()},
           {"n", n},
           {"nearest", r.nearest.get_str()},
           {"delta", r.delta},
           {"err_estimate", r.err_estimate}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int fail(const char* code, const std::string& msg, int rc) {
    json j{{"error", {{"code", code}, {"message", msg}}}};
    std::cerr << j.dump() << "\n";
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition asymptotics toolkit"};
    app.require_subcommand(1);

    std::string preset = "ones", output = "csv", cache_dir, grid_arg;
    std::string zname, s_arg = "1", s2_arg, s3_arg, method = "auto";
    std::uint64_t n = 10;
    int k = 0, M = 4, K = 3;
    double eps = 0.5, tol = 1e-8;
    unsigned threads = 0;

    auto add_common = [&](CLI::App* c, bool with_cache) {
        c->add_option("--threads", threads, "worker threads (0 = auto)");
        if (with_cache) c->add_option("--cache-dir", cache_dir, "coefficient cache directory");
    };

    auto* c_count = app.add_subcommand("count", "exact coefficient table");
    c_count->add_option("--preset", preset)->required();
    c_count->add_option("--n", n, "largest index")->required();
    c_count->add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));
    add_common(c_count, true);

    auto* c_cmp = app.add_subcommand("compare", "exact vs asymptotic table");
    c_cmp->add_option("--preset", preset)->required();
    c_cmp->add_option("--n-grid", grid_arg, "a,b[,step|log]")->required();
    c_cmp->add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));
    c_cmp->add_option("--tol", tol);
    add_common(c_cmp, true);

    auto* c_const = app.add_subcommand("constants", "asymptotic constants");
    c_const->add_option("--preset", preset)->required();

    auto* c_zeta = app.add_subcommand("zeta", "zeta evaluators");
    c_zeta->add_option("name", zname, "so5|mt2|pk")->required();
    c_zeta->add_option("s_value", s_arg, "complex s as re[,im]");
    c_zeta->add_option("--s", s_arg, "complex s as re[,im]")
        ->excludes("s_value");
    c_zeta->add_option("--s2", s2_arg, "second argument (mt2)");
    c_zeta->add_option("--s3", s3_arg, "third argument (mt2)");
    c_zeta->add_option("--method", method)->check(CLI::IsMember({"direct", "mb", "auto"}));
    c_zeta->add_option("--k", k, "polygonal index");
    c_zeta->add_option("--M", M, "continuation shift (mt2)");
    c_zeta->add_option("--K", K, "continuation shift (so5)");
    c_zeta->add_option("--eps", eps, "line offset in (0,1)");
    c_zeta->add_option("--tol", tol);
    add_common(c_zeta, false);

    auto* c_sad = app.add_subcommand("saddle", "saddle point solve");
    c_sad->add_option("--preset", preset)->required();
    c_sad->add_option("--n", n)->required();

    auto* c_cau = app.add_subcommand("cauchy", "contour-integral count");
    c_cau->add_option("--preset", preset)->required();
    c_cau->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
        unsigned nt = resolve_threads(threads);
        if (c_count->parsed()) return cmd_count(preset, n, output, cache_dir, nt);
        if (c_cmp->parsed()) return cmd_compare(preset, grid_arg, output, cache_dir, nt);
        if (c_const->parsed()) return cmd_constants(preset);
        if (c_zeta->parsed())
            return cmd_zeta(zname, s_arg, s2_arg, s3_arg, method, k, M, K, eps, tol, nt);
        if (c_sad->parsed()) return cmd_saddle(preset, n);
        if (c_cau->parsed()) return cmd_cauchy(preset, n);
        return fail("usage", "no subcommand", 2);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::stringstream dummy;
        app.exit(e, dummy, dummy);
        return fail("usage", e.what(), 2);
    } catch (const NumericError& e) {
        return fail("numeric", e.what(), 3);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 2);
    } catch (const IoError& e) {
        return fail("io", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 3);
    }
}
