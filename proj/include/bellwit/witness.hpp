#pragma once

#include <cstddef>
#include <vector>

namespace bellwit {

/// Whether local Hilbert spaces are taken over the reals or the complexes.
enum class Field { Real, Complex };

/// Largest local dimension d whose systems provably cannot exceed the
/// n-dimensional vector maximum: complex spaces give d = floor((n+1)/2)
/// (from Q^d <= T^(2d-1)), real spaces give d = n. A value above T^n
/// therefore witnesses local dimension > d.
std::size_t witness_dimension(std::size_t n, Field field);

/// Certification level of reported values.
enum class Grade { Heuristic, Analytic };

struct ProfileEntry {
    std::size_t n = 0;
    double value = 0.0;
    bool converged = false;
    std::size_t restarts_used = 0;
};

/// A detected jump T^n < T^(n+1) and the dimension claim it supports.
struct GapEvidence {
    std::size_t n_low = 0;
    std::size_t n_high = 0;
    double gap = 0.0;
    std::size_t witness_dim = 0;  // systems of this local dimension stay below threshold
    double threshold = 0.0;       // the W^d role: best value found at n_low
};

struct WitnessReport {
    std::vector<ProfileEntry> profile;
    std::vector<GapEvidence> gaps;
    Grade grade = Grade::Heuristic;
};

}  // namespace bellwit
