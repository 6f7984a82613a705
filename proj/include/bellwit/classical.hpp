#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bellwit/bell_expression.hpp"

namespace bellwit {

/// Hard cap on exhaustive sign enumeration (2^(cols-1) vectors).
inline constexpr std::size_t kClassicalEnumerationCap = 30;

struct ClassicalResult {
    double value = 0.0;
    /// Maximizing sign assignment z in {-1,+1}^cols, z[0] fixed to +1
    /// (the objective is invariant under a global flip); among maximizers
    /// the lexicographically smallest with +1 < -1.
    std::vector<int> signs;
    /// Filled by the closed-form family bound only.
    std::optional<std::size_t> k_max;
    std::optional<double> delta;
};

/// Exact classical (n = 1) maximum sum_i |sum_j M(i,j) z_j| over sign
/// vectors, by Gray-code enumeration with incremental row-sum updates.
/// The enumeration is split into fixed-size blocks (independent of the
/// thread count) so results are bit-identical for any jobs value.
ClassicalResult classical_max(const BellExpression& expr, int jobs = 0);

/// Naive reference enumeration (fresh evaluation per sign vector). Kept as
/// the independent oracle for classical_max and as the benchmark baseline.
ClassicalResult classical_max_reference(const BellExpression& expr);

/// Closed-form classical limit of the B_gamma family:
/// (m_b^2 + gamma^2 - 4 delta^2) / 2 with delta = |(m_b - gamma)/2 - k_max|
/// and k_max the non-negative integer nearest to (m_b - gamma)/2 (ties
/// rounded down; both tie values give the same bound). For gamma > m_b the
/// value reduces to gamma * m_b.
ClassicalResult bgamma_classical(std::size_t m_b, double gamma);

}  // namespace bellwit
