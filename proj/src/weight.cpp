#include "meinardus/weight.hpp"
#include "meinardus/errors.hpp"

#include <fstream>
#include <sstream>

namespace meinardus {

namespace {

// P_k(m) = ((k-2)m^2 + (4-k)m)/2
long long polygonal_number(int k, long long m) {
    return ((long long)(k - 2) * m * m + (long long)(4 - k) * m) / 2;
}

} // namespace

std::string WeightFunction::name() const {
    switch (kind) {
        case Kind::Ones: return "ones";
        case Kind::PlanePartition: return "plane";
        case Kind::Polygonal: return "polygonal:" + std::to_string(k);
        case Kind::SU3: return "su3";
        case Kind::SO5: return "so5";
        case Kind::Explicit: return "explicit:" + explicit_path;
    }
    return "?";
}

WeightFunction WeightFunction::parse(const std::string& preset) {
    WeightFunction w;
    if (preset == "ones") { w.kind = Kind::Ones; return w; }
    if (preset == "plane") { w.kind = Kind::PlanePartition; return w; }
    if (preset == "su3") { w.kind = Kind::SU3; return w; }
    if (preset == "so5") { w.kind = Kind::SO5; return w; }
    if (preset.rfind("polygonal:", 0) == 0) {
        w.kind = Kind::Polygonal;
        try {
            w.k = std::stoi(preset.substr(10));
        } catch (...) {
            throw DomainError("bad polygonal preset: " + preset);
        }
        if (w.k < 3) throw DomainError("polygonal preset requires k >= 3");
        return w;
    }
    if (preset.rfind("explicit:", 0) == 0) {
        w.kind = Kind::Explicit;
        w.explicit_path = preset.substr(9);
        std::ifstream in(w.explicit_path);
        if (!in) throw IoError("cannot open weight file: " + w.explicit_path);
        std::string line;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        std::uint64_t maxn = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::uint64_t n, fn;
            if (!(ls >> n >> fn)) throw IoError("bad weight line: " + line);
            if (n == 0) throw DomainError("weight index must be >= 1");
            pairs.emplace_back(n, fn);
            maxn = std::max(maxn, n);
        }
        w.table.assign(maxn, 0);
        bool any = false;
        for (auto [n, fn] : pairs) {
            w.table[n - 1] = fn;
            any = any || fn > 0;
        }
        if (!any) throw DomainError("weight function is identically zero");
        return w;
    }
    throw DomainError("unknown preset: " + preset);
}

std::uint64_t WeightFunction::f(std::uint64_t n) const {
    if (n == 0) return 0;
    auto t = weight_table(*this, n);
    return t[n - 1];
}

std::vector<std::uint64_t> weight_table(const WeightFunction& w, std::size_t N) {
    if (N < 1) throw DomainError("weight_table requires N >= 1");
    std::vector<std::uint64_t> f(N, 0);
    switch (w.kind) {
        case WeightFunction::Kind::Ones:
            for (std::size_t n = 0; n < N; ++n) f[n] = 1;
            break;
        case WeightFunction::Kind::PlanePartition:
            for (std::size_t n = 0; n < N; ++n) f[n] = n + 1;
            break;
        case WeightFunction::Kind::Polygonal: {
            if (w.k < 3) throw DomainError("polygonal preset requires k >= 3");
            for (long long m = 1;; ++m) {
                long long v = polygonal_number(w.k, m);
                if (v > (long long)N) break;
                f[v - 1] += 1;
            }
            break;
        }
        case WeightFunction::Kind::SU3:
            // dim(j,k) = j*k*(j+k)/2
            for (std::uint64_t j = 1; j * 1 * (j + 1) / 2 <= N; ++j)
                for (std::uint64_t k = 1; j * k * (j + k) / 2 <= N; ++k)
                    f[j * k * (j + k) / 2 - 1] += 1;
            break;
        case WeightFunction::Kind::SO5:
            // dim(j,k) = j*k*(j+k)*(j+2k)/6
            for (std::uint64_t j = 1; j * 1 * (j + 1) * (j + 2) / 6 <= N; ++j)
                for (std::uint64_t k = 1; j * k * (j + k) * (j + 2 * k) / 6 <= N; ++k)
                    f[j * k * (j + k) * (j + 2 * k) / 6 - 1] += 1;
            break;
        case WeightFunction::Kind::Explicit:
            for (std::size_t n = 0; n < N && n < w.table.size(); ++n) f[n] = w.table[n];
            break;
    }
    return f;
}

} // namespace meinardus
