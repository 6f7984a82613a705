#include "bellwit/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "bellwit/errors.hpp"
#include "bellwit/parallel.hpp"

namespace bellwit {

namespace {

// Sign mask layout: bit (free_bits - 1 - c) of the mask corresponds to free
// column c+1; a set bit means z = -1. Numeric order on masks is then exactly
// lexicographic order on sign vectors with +1 < -1.
std::vector<int> signs_from_mask(std::uint64_t mask, std::size_t cols) {
    std::vector<int> z(cols, 1);
    const std::size_t free_bits = cols - 1;
    for (std::size_t c = 1; c < cols; ++c) {
        if ((mask >> (free_bits - c)) & 1ull) z[c] = -1;
    }
    return z;
}

struct BlockBest {
    double value = -1.0;
    std::uint64_t mask = 0;
};

// Enumerates one block: the high free columns are fixed by the block index,
// the low ones run through a reflected Gray code with incremental updates of
// the per-row sums. Arithmetic inside a block does not depend on how blocks
// are scheduled, which keeps the overall result independent of the job count.
BlockBest scan_block(const BellExpression& expr, std::uint64_t block, std::size_t high_bits,
                     std::size_t low_bits) {
    const std::size_t rows = expr.rows();
    const std::size_t cols = expr.cols();
    const std::size_t free_bits = cols - 1;

    std::vector<int> z(cols, 1);
    for (std::size_t c = 1; c <= high_bits; ++c) {
        if ((block >> (high_bits - c)) & 1ull) z[c] = -1;
    }
    std::uint64_t mask = 0;
    for (std::size_t c = 1; c < cols; ++c) {
        if (z[c] < 0) mask |= 1ull << (free_bits - c);
    }

    std::vector<double> row_sum(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto row = expr.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * z[j];
        row_sum[i] = s;
    }
    auto objective = [&] {
        double v = 0.0;
        for (double s : row_sum) v += std::abs(s);
        return v;
    };

    BlockBest best{objective(), mask};
    const std::uint64_t steps = 1ull << low_bits;
    for (std::uint64_t s = 1; s < steps; ++s) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(s));
        const std::size_t c = high_bits + 1 + bit;  // flipped column
        z[c] = -z[c];
        mask ^= 1ull << (free_bits - c);
        const double delta = 2.0 * z[c];
        for (std::size_t i = 0; i < rows; ++i) row_sum[i] += delta * expr(i, c);
        const double v = objective();
        if (v > best.value || (v == best.value && mask < best.mask)) {
            best.value = v;
            best.mask = mask;
        }
    }
    return best;
}

}  // namespace

ClassicalResult classical_max(const BellExpression& expr, int jobs) {
    const std::size_t cols = expr.cols();
    if (cols > kClassicalEnumerationCap) {
        throw CapacityError("exhaustive enumeration capped at " +
                            std::to_string(kClassicalEnumerationCap) +
                            " columns; use the heuristic optimizer at n = 1 instead");
    }
    const std::size_t free_bits = cols - 1;
    // Fixed split keeps per-block arithmetic identical for any job count.
    const std::size_t low_bits = std::min<std::size_t>(free_bits, 12);
    const std::size_t high_bits = free_bits - low_bits;
    const auto n_blocks = static_cast<std::int64_t>(1ull << high_bits);

    std::vector<BlockBest> block_best(static_cast<std::size_t>(n_blocks));
    const int threads = resolve_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1 && n_blocks > 1)
#endif
    for (std::int64_t b = 0; b < n_blocks; ++b) {
        block_best[static_cast<std::size_t>(b)] =
            scan_block(expr, static_cast<std::uint64_t>(b), high_bits, low_bits);
    }

    BlockBest best = block_best.front();
    for (const auto& cand : block_best) {
        if (cand.value > best.value || (cand.value == best.value && cand.mask < best.mask)) {
            best = cand;
        }
    }
    ClassicalResult result;
    result.value = best.value;
    result.signs = signs_from_mask(best.mask, cols);
    return result;
}

ClassicalResult classical_max_reference(const BellExpression& expr) {
    const std::size_t cols = expr.cols();
    if (cols > kClassicalEnumerationCap) {
        throw CapacityError("exhaustive enumeration capped at " +
                            std::to_string(kClassicalEnumerationCap) + " columns");
    }
    const std::size_t rows = expr.rows();
    const std::uint64_t total = 1ull << (cols - 1);
    double best_value = -1.0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::vector<int> z = signs_from_mask(mask, cols);
        double v = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols; ++j) s += expr(i, j) * z[j];
            v += std::abs(s);
        }
        if (v > best_value) {
            best_value = v;
            best_mask = mask;
        }
    }
    ClassicalResult result;
    result.value = best_value;
    result.signs = signs_from_mask(best_mask, cols);
    return result;
}

ClassicalResult bgamma_classical(std::size_t m_b, double gamma) {
    if (m_b < 2) throw DomainError("family needs at least two Bob settings");
    if (gamma < 0.0 || !std::isfinite(gamma)) throw DomainError("gamma must be non-negative");
    const double m = static_cast<double>(m_b);
    const double target = (m - gamma) / 2.0;
    // Nearest non-negative integer, ties rounded down.
    auto k = static_cast<long long>(std::ceil(target - 0.5));
    if (k < 0) k = 0;
    const double delta = std::abs(target - static_cast<double>(k));
    ClassicalResult result;
    result.value = (m * m + gamma * gamma - 4.0 * delta * delta) / 2.0;
    result.k_max = static_cast<std::size_t>(k);
    result.delta = delta;
    // k and m_b - k give the same value; the larger +1 count is the
    // lexicographically smaller maximizer (and keeps z[0] = +1).
    const auto plus = std::max<std::size_t>(static_cast<std::size_t>(k),
                                            m_b - static_cast<std::size_t>(k));
    result.signs.assign(m_b, -1);
    for (std::size_t i = 0; i < plus; ++i) result.signs[i] = 1;
    return result;
}

}  // namespace bellwit
