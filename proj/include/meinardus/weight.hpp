#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace meinardus {

// Multiplicity sequence f defining the product  prod_{n>=1} (1 - q^n)^{-f(n)}.
struct WeightFunction {
    enum class Kind { Ones, PlanePartition, Polygonal, SU3, SO5, Explicit };
    Kind kind = Kind::Ones;
    int k = 0;                                  // polygonal index, k >= 3
    std::vector<std::uint64_t> table;           // Explicit: f(1..table.size())
    std::string explicit_path;                  // Explicit provenance (for cache keys)

    // canonical preset string: "ones", "plane", "polygonal:k", "su3", "so5",
    // "explicit:<path>"
    std::string name() const;

    static WeightFunction parse(const std::string& preset);

    std::uint64_t f(std::uint64_t n) const;
};

// f(1..N) by direct enumeration; SU3/SO5 scan lattice points (j,k) with
// dimension <= N using integer bounds.
std::vector<std::uint64_t> weight_table(const WeightFunction& w, std::size_t N);

} // namespace meinardus
