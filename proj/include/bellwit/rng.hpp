#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bellwit {

using UnitVectors = std::vector<std::vector<double>>;

/// Counter-based stream derivation: maps (seed, stream) to an independent
/// generator seed so parallel workers never share or advance a common state.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    // second pass; keeps nearby (seed, stream) pairs uncorrelated
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform point on the unit sphere in R^dim (normalized Gaussian vector).
inline std::vector<double> random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(dim);
    for (;;) {
        double norm2 = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            norm2 += x * x;
        }
        if (norm2 > 1e-24) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& x : v) x *= inv;
            return v;
        }
    }
}

inline UnitVectors random_unit_vectors(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
    UnitVectors out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_unit_vector(rng, dim));
    return out;
}

}  // namespace bellwit
