#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "meinardus/weight.hpp"

namespace meinardus {

// Exact coefficients p_f(0..N) of prod (1-q^n)^{-f(n)}.
struct CoeffTable {
    std::size_t N = 0;
    std::vector<mpz_class> values;  // size N+1, values[0] == 1
    WeightFunction weight;
};

// c(k) = sum_{d | k} d * f(d), 1 <= k <= N  (logarithmic-derivative weights)
struct DivisorWeight {
    std::vector<mpz_class> c;  // c[0] unused, c[k] for k >= 1
};

DivisorWeight divisor_weight(const WeightFunction& w, std::size_t N, unsigned threads = 1);

// Recurrence n p(n) = sum_{k=1}^{n} c(k) p(n-k); exact, O(N^2) bigint ops.
CoeffTable coeffs_convolution(const WeightFunction& w, std::size_t N);

// Euler pentagonal recurrence; Ones preset only, O(N^{3/2}) bigint adds.
CoeffTable coeffs_pentagonal(std::size_t N);

// Independent oracle: multiplies the truncated factor series
// (1-q^n)^{-f(n)} = sum_m binom(f(n)+m-1, m) q^{nm} directly.  N <= 2000.
CoeffTable coeffs_oracle(const WeightFunction& w, std::size_t N);

// CSV: header "n,p_f_n", decimal big integers.
void write_csv(const CoeffTable& t, std::ostream& out);

// Binary cache, keyed by (preset, N, code-version hash); checksummed.
void save_cache(const CoeffTable& t, const std::string& dir);
bool load_cache(CoeffTable& t, const WeightFunction& w, std::size_t N,
                const std::string& dir);
std::string cache_path(const WeightFunction& w, std::size_t N, const std::string& dir);

// version tag baked into cache keys so stale tables are never reused
extern const char* const kCoeffCodeVersion;

} // namespace meinardus
