#include "meinardus/coeffs.hpp"
#include "meinardus/errors.hpp"
#include "meinardus/parallel.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace meinardus {

const char* const kCoeffCodeVersion = "mct-1";

DivisorWeight divisor_weight(const WeightFunction& w, std::size_t N, unsigned threads) {
    auto f = weight_table(w, N);
    DivisorWeight dw;
    dw.c.assign(N + 1, mpz_class(0));
    // parallel over k: each c(k) is an independent divisor scan
    auto vals = parallel_map<std::uint64_t>(N, threads, [&](std::size_t i) {
        std::uint64_t k = i + 1, acc = 0;
        for (std::uint64_t d = 1; d * d <= k; ++d) {
            if (k % d) continue;
            std::uint64_t e = k / d;
            acc += d * f[d - 1];
            if (e != d) acc += e * f[e - 1];
        }
        return acc;
    });
    for (std::size_t k = 1; k <= N; ++k) dw.c[k] = mpz_class(vals[k - 1]);
    return dw;
}

CoeffTable coeffs_convolution(const WeightFunction& w, std::size_t N) {
    CoeffTable t;
    t.N = N;
    t.weight = w;
    t.values.assign(N + 1, mpz_class(0));
    t.values[0] = 1;
    if (N == 0) return t;
    auto dw = divisor_weight(w, N);
    // c(k) fits 64 bits through the desk-scale envelope; use the ui fast path
    std::vector<unsigned long> cu(N + 1, 0);
    bool small = true;
    for (std::size_t k = 1; k <= N; ++k) {
        if (!dw.c[k].fits_ulong_p()) { small = false; break; }
        cu[k] = dw.c[k].get_ui();
    }
    mpz_class acc;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        if (small) {
            for (std::size_t k = 1; k <= n; ++k)
                if (cu[k])
                    mpz_addmul_ui(acc.get_mpz_t(), t.values[n - k].get_mpz_t(), cu[k]);
        } else {
            for (std::size_t k = 1; k <= n; ++k)
                if (dw.c[k] != 0)
                    mpz_addmul(acc.get_mpz_t(), dw.c[k].get_mpz_t(),
                               t.values[n - k].get_mpz_t());
        }
        mpz_divexact_ui(t.values[n].get_mpz_t(), acc.get_mpz_t(),
                        (unsigned long)n);
    }
    return t;
}

CoeffTable coeffs_pentagonal(std::size_t N) {
    CoeffTable t;
    t.N = N;
    t.weight.kind = WeightFunction::Kind::Ones;
    t.values.assign(N + 1, mpz_class(0));
    t.values[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        mpz_class& pn = t.values[n];
        for (std::size_t k = 1;; ++k) {
            std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            std::size_t g2 = k * (3 * k + 1) / 2;
            bool add = (k % 2 == 1);
            if (add) {
                pn += t.values[n - g1];
                if (g2 <= n) pn += t.values[n - g2];
            } else {
                pn -= t.values[n - g1];
                if (g2 <= n) pn -= t.values[n - g2];
            }
        }
    }
    return t;
}

CoeffTable coeffs_oracle(const WeightFunction& w, std::size_t N) {
    if (N > 2000) throw DomainError("oracle limited to N <= 2000");
    CoeffTable t;
    t.N = N;
    t.weight = w;
    std::vector<mpz_class> cur(N + 1, mpz_class(0)), next(N + 1, mpz_class(0));
    cur[0] = 1;
    if (N == 0) { t.values = cur; return t; }
    auto f = weight_table(w, N);
    mpz_class binom;
    for (std::size_t n = 1; n <= N; ++n) {
        if (f[n - 1] == 0) continue;
        for (auto& x : next) x = 0;
        for (std::size_t m = 0; n * m <= N; ++m) {
            // binom(f(n)+m-1, m)
            mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)(f[n - 1] + m - 1),
                         (unsigned long)m);
            std::size_t off = n * m;
            for (std::size_t i = off; i <= N; ++i)
                mpz_addmul(next[i].get_mpz_t(), binom.get_mpz_t(),
                           cur[i - off].get_mpz_t());
        }
        std::swap(cur, next);
    }
    t.values = std::move(cur);
    return t;
}

void write_csv(const CoeffTable& t, std::ostream& out) {
    out << "n,p_f_n\n";
    for (std::size_t n = 0; n <= t.N; ++n)
        out << n << "," << t.values[n].get_str() << "\n";
}

namespace {

std::uint64_t fnv1a(const unsigned char* data, std::size_t len, std::uint64_t h) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum((unsigned char)c) ? c : '_');
    return out;
}

} // namespace

std::string cache_path(const WeightFunction& w, std::size_t N, const std::string& dir) {
    std::uint64_t tag = fnv1a((const unsigned char*)kCoeffCodeVersion,
                              std::strlen(kCoeffCodeVersion), 1469598103934665603ull);
    std::string key = w.name();
    tag = fnv1a((const unsigned char*)key.data(), key.size(), tag);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)tag);
    return dir + "/" + sanitize(key) + "_" + std::to_string(N) + "_" + buf + ".tbl";
}

void save_cache(const CoeffTable& t, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::string path = cache_path(t.weight, t.N, dir);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write cache file: " + path);
    const char magic[4] = {'M', 'C', 'T', '1'};
    out.write(magic, 4);
    std::uint64_t n = t.N;
    out.write((const char*)&n, 8);
    std::uint64_t checksum = 1469598103934665603ull;
    std::vector<unsigned char> buf;
    for (const auto& v : t.values) {
        std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        buf.resize(count ? count : 1);
        std::size_t written = 0;
        mpz_export(buf.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
        std::uint64_t len = written;
        out.write((const char*)&len, 8);
        out.write((const char*)buf.data(), (std::streamsize)written);
        checksum = fnv1a((const unsigned char*)&len, 8, checksum);
        checksum = fnv1a(buf.data(), written, checksum);
    }
    out.write((const char*)&checksum, 8);
    if (!out) throw IoError("short write on cache file: " + path);
}

bool load_cache(CoeffTable& t, const WeightFunction& w, std::size_t N,
                const std::string& dir) {
    std::string path = cache_path(w, N, dir);
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "MCT1", 4) != 0)
        throw IoError("cache corruption (bad magic): " + path);
    std::uint64_t n = 0;
    in.read((char*)&n, 8);
    if (!in || n != N) throw IoError("cache corruption (bad header): " + path);
    t.N = N;
    t.weight = w;
    t.values.assign(N + 1, mpz_class(0));
    std::uint64_t checksum = 1469598103934665603ull;
    std::vector<unsigned char> buf;
    for (std::size_t i = 0; i <= N; ++i) {
        std::uint64_t len = 0;
        in.read((char*)&len, 8);
        if (!in || len > (1u << 26)) throw IoError("cache corruption (bad length): " + path);
        buf.resize(len);
        in.read((char*)buf.data(), (std::streamsize)len);
        if (!in) throw IoError("cache corruption (truncated): " + path);
        checksum = fnv1a((const unsigned char*)&len, 8, checksum);
        checksum = fnv1a(buf.data(), len, checksum);
        if (len)
            mpz_import(t.values[i].get_mpz_t(), len, -1, 1, 0, 0, buf.data());
    }
    std::uint64_t stored = 0;
    in.read((char*)&stored, 8);
    if (!in || stored != checksum)
        throw IoError("cache corruption (checksum mismatch): " + path);
    return true;
}

} // namespace meinardus
