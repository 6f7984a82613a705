#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "bellwit/bell_expression.hpp"
#include "bellwit/optimizer.hpp"

namespace bellwit {

/// Canonical entry sequence (row-major) of the minimal representative under
/// row/column permutations, row/column sign flips, and transposition for
/// square shapes.
using CanonicalKey = std::vector<double>;

/// Minimal representative sequence over the symmetry group. Rows are free:
/// for any fixed column transform the optimum is each row replaced by the
/// smaller of itself and its negation, then rows sorted; the column
/// permutations and sign masks are searched exhaustively with early-abort
/// comparisons. Idempotent by construction.
CanonicalKey canonical_form(const BellExpression& expr);
CanonicalKey canonical_entries(std::size_t rows, std::size_t cols,
                               const std::vector<double>& entries);

/// One equivalence class of coefficient matrices.
struct ClassRep {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;  // equals its own canonical key
    bool rank_one = false;        // never a witness: the objective factorizes
    bool trivial = false;         // has an all-zero row or column

    BellExpression to_expression() const;
};

struct EnumerationOptions {
    std::vector<double> alphabet{-1.0, 0.0, 1.0};
    bool filter_trivial = true;
    std::uint64_t budget = 50'000'000;  // cap on alphabet^(rows*cols)
    int jobs = 0;
};

/// Exactly one representative per equivalence class, sorted by key.
/// Generate-and-canonicalize: the full assignment space is enumerated in
/// blocks keyed by the first row (a deterministic partition), canonical keys
/// are deduplicated, trivial classes dropped when requested, and rank-one
/// representatives tagged.
std::vector<ClassRep> enumerate_classes(std::size_t rows, std::size_t cols,
                                        const EnumerationOptions& options);

/// Canonical row-augmentation for shapes where the assignment space is out
/// of reach: canonical k-row prefixes are extended one (row-sign-canonical,
/// non-decreasing) row at a time and kept when still canonical. Deleting the
/// last row of a row-sorted canonical matrix leaves a canonical matrix, so
/// every class is reached exactly once. Transpose-related classes of square
/// shapes are merged in a final pass.
std::vector<ClassRep> enumerate_classes_augmented(std::size_t rows, std::size_t cols,
                                                  const EnumerationOptions& options);

struct ScanOptions {
    std::size_t n_max = 4;
    std::pair<std::size_t, std::size_t> flag_gap{3, 4};
    /// Hits are re-run with this many times the restart budget before being
    /// reported, which weeds out under-converged lower bounds at the flagged
    /// dimension.
    std::size_t confirm_factor = 10;
};

struct SearchHit {
    std::size_t class_index = 0;
    ClassRep rep;
    DimensionProfile profile;
    double gap = 0.0;
    std::size_t witness_dim = 0;
};

struct ScanResult {
    std::size_t scanned = 0;
    std::size_t skipped = 0;  // trivial / all-zero representatives
    std::vector<SearchHit> hits;
};

/// Called once per scanned class, in class order.
using ScanEmit = std::function<void(std::size_t index, const ClassRep& rep,
                                    const DimensionProfile& profile, bool hit)>;

/// Profiles every class up to options.n_max (per-class seeds derived from
/// config.seed and the class index) and flags classes whose profile jumps by
/// more than gap_tol across options.flag_gap.
ScanResult scan_for_witnesses(const std::vector<ClassRep>& classes, const ScanOptions& options,
                              const OptimizerConfig& config, const ScanEmit& emit = {});

}  // namespace bellwit
