#include "bellwit/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "bellwit/errors.hpp"
#include "bellwit/parallel.hpp"

namespace bellwit {

namespace {

constexpr std::size_t kCanonicalColsCap = 8;

// Lexicographically smaller of a row and its negation, in place.
void minsign_row(std::vector<double>& row) {
    for (double v : row) {
        if (v != 0.0) {
            if (v > 0.0) {
                for (double& x : row) x = -x;
            }
            return;
        }
    }
}

// Candidate sequence for one column transform: entries column-permuted and
// column-signed, each row minsigned, rows sorted.
void build_candidate(const std::vector<double>& entries, std::size_t rows, std::size_t cols,
                     const std::vector<std::size_t>& perm, std::uint32_t sign_mask,
                     std::vector<std::vector<double>>& row_buf, std::vector<double>& out) {
    for (std::size_t i = 0; i < rows; ++i) {
        auto& row = row_buf[i];
        for (std::size_t k = 0; k < cols; ++k) {
            const double v = entries[i * cols + perm[k]];
            row[k] = ((sign_mask >> k) & 1u) ? -v : v;
        }
        minsign_row(row);
    }
    std::sort(row_buf.begin(), row_buf.end());
    out.clear();
    for (const auto& row : row_buf) out.insert(out.end(), row.begin(), row.end());
}

// visit(candidate) -> bool; return true to stop early.
template <typename Visit>
void for_each_column_transform(const std::vector<double>& entries, std::size_t rows,
                               std::size_t cols, Visit&& visit) {
    std::vector<std::size_t> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<double>> row_buf(rows, std::vector<double>(cols));
    std::vector<double> candidate;
    candidate.reserve(rows * cols);
    const std::uint32_t sign_count = 1u << cols;
    do {
        for (std::uint32_t mask = 0; mask < sign_count; ++mask) {
            build_candidate(entries, rows, cols, perm, mask, row_buf, candidate);
            if (visit(candidate)) return;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<double> transpose_entries(const std::vector<double>& entries, std::size_t rows,
                                      std::size_t cols) {
    std::vector<double> out(entries.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = entries[i * cols + j];
    return out;
}

CanonicalKey canonical_no_transpose(const std::vector<double>& entries, std::size_t rows,
                                    std::size_t cols) {
    CanonicalKey best;
    for_each_column_transform(entries, rows, cols, [&](const std::vector<double>& cand) {
        if (best.empty() || cand < best) best = cand;
        return false;
    });
    return best;
}

// True iff no group element produces a strictly smaller sequence; assumes
// the rows of `entries` are already minsigned and sorted.
bool is_canonical_no_transpose(const std::vector<double>& entries, std::size_t rows,
                               std::size_t cols) {
    bool smaller_found = false;
    for_each_column_transform(entries, rows, cols, [&](const std::vector<double>& cand) {
        if (cand < entries) {
            smaller_found = true;
            return true;
        }
        return false;
    });
    return !smaller_found;
}

void check_canonical_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw DomainError("canonical form needs a non-empty shape");
    if (cols > kCanonicalColsCap) {
        throw CapacityError("canonical form capped at " + std::to_string(kCanonicalColsCap) +
                            " columns");
    }
}

bool has_zero_row(const std::vector<double>& entries, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols && zero; ++j) zero = entries[i * cols + j] == 0.0;
        if (zero) return true;
    }
    return false;
}

bool has_zero_col(const std::vector<double>& entries, std::size_t rows, std::size_t cols) {
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows && zero; ++i) zero = entries[i * cols + j] == 0.0;
        if (zero) return true;
    }
    return false;
}

bool is_rank_one(const std::vector<double>& entries, std::size_t rows, std::size_t cols) {
    double scale = 0.0;
    for (double v : entries) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return false;
    const double tol = 1e-12 * scale * scale;
    for (std::size_t i = 1; i < rows; ++i)
        for (std::size_t i2 = 0; i2 < i; ++i2)
            for (std::size_t j = 1; j < cols; ++j)
                for (std::size_t j2 = 0; j2 < j; ++j2) {
                    const double minor = entries[i * cols + j] * entries[i2 * cols + j2] -
                                         entries[i * cols + j2] * entries[i2 * cols + j];
                    if (std::abs(minor) > tol) return false;
                }
    return true;
}

ClassRep make_rep(std::size_t rows, std::size_t cols, CanonicalKey key) {
    ClassRep rep;
    rep.rows = rows;
    rep.cols = cols;
    rep.trivial = has_zero_row(key, rows, cols) || has_zero_col(key, rows, cols);
    rep.rank_one = is_rank_one(key, rows, cols);
    rep.entries = std::move(key);
    return rep;
}

// All rows over the alphabet that equal their own minsigned form, sorted.
std::vector<std::vector<double>> canonical_rows(std::size_t cols,
                                                const std::vector<double>& alphabet,
                                                bool include_zero) {
    std::vector<std::vector<double>> out;
    std::vector<std::size_t> digits(cols, 0);
    std::vector<double> row(cols);
    for (;;) {
        for (std::size_t k = 0; k < cols; ++k) row[k] = alphabet[digits[k]];
        std::vector<double> ms = row;
        minsign_row(ms);
        const bool zero = std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
        if (ms == row && (include_zero || !zero)) out.push_back(row);
        std::size_t pos = 0;
        while (pos < cols && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
        if (pos == cols) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

CanonicalKey canonical_entries(std::size_t rows, std::size_t cols,
                               const std::vector<double>& entries) {
    check_canonical_shape(rows, cols);
    if (entries.size() != rows * cols) throw DimensionError("entry count does not match shape");
    CanonicalKey best = canonical_no_transpose(entries, rows, cols);
    if (rows == cols) {
        CanonicalKey other =
            canonical_no_transpose(transpose_entries(entries, rows, cols), cols, rows);
        if (other < best) best = std::move(other);
    }
    return best;
}

CanonicalKey canonical_form(const BellExpression& expr) {
    return canonical_entries(expr.rows(), expr.cols(), expr.entries());
}

BellExpression ClassRep::to_expression() const {
    return BellExpression(rows, cols, entries);
}

std::vector<ClassRep> enumerate_classes(std::size_t rows, std::size_t cols,
                                        const EnumerationOptions& options) {
    check_canonical_shape(rows, cols);
    if (options.alphabet.empty()) throw DomainError("alphabet must be non-empty");
    const std::size_t cells = rows * cols;
    const auto radix = static_cast<std::uint64_t>(options.alphabet.size());
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
        if (total > options.budget / radix) {
            throw CapacityError(
                "assignment space exceeds the enumeration budget " +
                std::to_string(options.budget) + "; use the augmented mode for this shape");
        }
        total *= radix;
    }

    // Blocks keyed by the first row: a deterministic partition of the space.
    std::uint64_t block_count = 1;
    for (std::size_t c = 0; c < cols; ++c) block_count *= radix;
    const std::uint64_t inner_count = total / block_count;

    std::vector<std::set<CanonicalKey>> block_keys(block_count);
    const int threads = resolve_jobs(options.jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
    for (std::int64_t block = 0; block < static_cast<std::int64_t>(block_count); ++block) {
        std::vector<std::size_t> digits(cells, 0);
        std::vector<double> entries(cells);
        auto code = static_cast<std::uint64_t>(block);
        for (std::size_t k = 0; k < cols; ++k) {
            digits[k] = static_cast<std::size_t>(code % radix);
            code /= radix;
        }
        auto& keys = block_keys[static_cast<std::size_t>(block)];
        for (std::uint64_t inner = 0; inner < inner_count; ++inner) {
            std::uint64_t rest = inner;
            for (std::size_t k = cols; k < cells; ++k) {
                digits[k] = static_cast<std::size_t>(rest % radix);
                rest /= radix;
            }
            for (std::size_t k = 0; k < cells; ++k) entries[k] = options.alphabet[digits[k]];
            if (options.filter_trivial &&
                (has_zero_row(entries, rows, cols) || has_zero_col(entries, rows, cols))) {
                continue;
            }
            keys.insert(canonical_entries(rows, cols, entries));
        }
    }

    std::set<CanonicalKey> merged;
    for (auto& keys : block_keys) merged.merge(keys);

    std::vector<ClassRep> reps;
    reps.reserve(merged.size());
    for (const auto& key : merged) reps.push_back(make_rep(rows, cols, key));
    return reps;
}

std::vector<ClassRep> enumerate_classes_augmented(std::size_t rows, std::size_t cols,
                                                  const EnumerationOptions& options) {
    check_canonical_shape(rows, cols);
    if (options.alphabet.empty()) throw DomainError("alphabet must be non-empty");

    const std::vector<std::vector<double>> row_pool =
        canonical_rows(cols, options.alphabet, !options.filter_trivial);

    // Level 1: canonical single-row matrices.
    std::vector<std::vector<double>> level;
    for (const auto& row : row_pool) {
        if (is_canonical_no_transpose(row, 1, cols)) level.push_back(row);
    }

    const int threads = resolve_jobs(options.jobs);
    for (std::size_t depth = 2; depth <= rows; ++depth) {
        // Candidate = canonical prefix + one row >= its last row; keeping the
        // candidates that are still canonical reaches every class once.
        std::vector<std::vector<std::vector<double>>> extensions(level.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(level.size()); ++p) {
            const auto& prefix = level[static_cast<std::size_t>(p)];
            std::vector<double> last_row(prefix.end() - static_cast<std::ptrdiff_t>(cols),
                                         prefix.end());
            auto first = std::lower_bound(row_pool.begin(), row_pool.end(), last_row);
            std::vector<double> candidate(prefix.size() + cols);
            std::copy(prefix.begin(), prefix.end(), candidate.begin());
            for (auto it = first; it != row_pool.end(); ++it) {
                std::copy(it->begin(), it->end(), candidate.end() - static_cast<std::ptrdiff_t>(cols));
                if (is_canonical_no_transpose(candidate, depth, cols)) {
                    extensions[static_cast<std::size_t>(p)].push_back(candidate);
                }
            }
        }
        std::vector<std::vector<double>> next;
        for (auto& ext : extensions)
            for (auto& m : ext) next.push_back(std::move(m));
        level = std::move(next);
    }

    std::set<CanonicalKey> merged;
    for (const auto& entries : level) {
        if (rows == cols) {
            merged.insert(canonical_entries(rows, cols, entries));
        } else {
            merged.insert(entries);
        }
    }

    std::vector<ClassRep> reps;
    reps.reserve(merged.size());
    for (const auto& key : merged) {
        ClassRep rep = make_rep(rows, cols, key);
        if (options.filter_trivial && rep.trivial) continue;
        reps.push_back(std::move(rep));
    }
    return reps;
}

ScanResult scan_for_witnesses(const std::vector<ClassRep>& classes, const ScanOptions& options,
                              const OptimizerConfig& config, const ScanEmit& emit) {
    config.validate();
    if (options.flag_gap.first == 0 || options.flag_gap.first >= options.flag_gap.second ||
        options.flag_gap.second > options.n_max) {
        throw DomainError("flagged gap must satisfy 1 <= n < n+k <= n_max");
    }

    ScanResult result;
    struct PerClass {
        DimensionProfile profile;
        bool hit = false;
        bool skipped = false;
        double gap = 0.0;
    };

    auto gap_of = [&](const DimensionProfile& profile) {
        const auto& low = profile.points[options.flag_gap.first - 1].run;
        const auto& high = profile.points[options.flag_gap.second - 1].run;
        return high.value - low.value;
    };

    const int threads = resolve_jobs(config.jobs);
    const std::size_t chunk = 256;
    for (std::size_t start = 0; start < classes.size(); start += chunk) {
        const std::size_t stop = std::min(classes.size(), start + chunk);
        std::vector<PerClass> results(stop - start);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
        for (std::int64_t idx = static_cast<std::int64_t>(start);
             idx < static_cast<std::int64_t>(stop); ++idx) {
            const auto& rep = classes[static_cast<std::size_t>(idx)];
            auto& out = results[static_cast<std::size_t>(idx) - start];
            const bool all_zero =
                std::all_of(rep.entries.begin(), rep.entries.end(),
                            [](double v) { return v == 0.0; });
            if (all_zero) {
                out.skipped = true;
                continue;
            }
            const BellExpression expr = rep.to_expression();
            OptimizerConfig local = config;
            local.jobs = 1;  // parallelism lives at the class level
            local.seed = stream_seed(config.seed, static_cast<std::uint64_t>(idx));
            out.profile = dimension_profile(expr, options.n_max, local);
            out.gap = gap_of(out.profile);
            out.hit = out.gap > config.gap_tol;
            if (out.hit && options.confirm_factor > 1) {
                OptimizerConfig confirm = local;
                confirm.restarts = local.restarts * options.confirm_factor;
                DimensionProfile rerun = dimension_profile(expr, options.n_max, confirm);
                for (std::size_t k = 0; k < out.profile.points.size(); ++k) {
                    auto& point = out.profile.points[k];
                    const auto& better = rerun.points[k];
                    if (better.run.value > point.run.value) point.run = better.run;
                    point.restarts_used += better.restarts_used;
                }
                out.gap = gap_of(out.profile);
                out.hit = out.gap > config.gap_tol;
            }
        }
        for (std::size_t idx = start; idx < stop; ++idx) {
            auto& out = results[idx - start];
            if (out.skipped) {
                ++result.skipped;
                continue;
            }
            ++result.scanned;
            if (emit) emit(idx, classes[idx], out.profile, out.hit);
            if (out.hit) {
                SearchHit hit;
                hit.class_index = idx;
                hit.rep = classes[idx];
                hit.profile = std::move(out.profile);
                hit.gap = out.gap;
                hit.witness_dim = witness_dimension(options.flag_gap.first, Field::Complex);
                result.hits.push_back(std::move(hit));
            }
        }
    }
    return result;
}

}  // namespace bellwit
