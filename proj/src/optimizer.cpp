#include "bellwit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "bellwit/classical.hpp"
#include "bellwit/errors.hpp"
#include "bellwit/parallel.hpp"
#include "bellwit/strategy.hpp"

namespace bellwit {

void OptimizerConfig::validate() const {
    if (restarts == 0) throw DomainError("restarts must be at least 1");
    if (max_sweeps == 0) throw DomainError("max_sweeps must be at least 1");
    if (!(conv_tol > 0.0)) throw DomainError("conv_tol must be positive");
    if (!(gap_tol > 0.0)) throw DomainError("gap_tol must be positive");
}

namespace {

// Flat row-major views keep the sweep loops cache-friendly; the public
// vector-of-vectors form is only materialized at the boundaries.
struct Sweeper {
    const BellExpression& expr;
    std::size_t n;
    std::vector<double> bob;    // cols x n
    std::vector<double> alice;  // rows x n
    std::vector<double> combo;  // n scratch

    Sweeper(const BellExpression& e, std::size_t n_, const UnitVectors& init)
        : expr(e), n(n_), bob(e.cols() * n_), alice(e.rows() * n_, 0.0), combo(n_) {
        for (std::size_t j = 0; j < e.cols(); ++j) {
            std::copy(init[j].begin(), init[j].end(), bob.begin() + j * n);
        }
    }

    double objective() const {
        double total = 0.0;
        for (std::size_t i = 0; i < expr.rows(); ++i) {
            double norm2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double s = 0.0;
                for (std::size_t j = 0; j < expr.cols(); ++j) {
                    s += expr(i, j) * bob[j * n + k];
                }
                norm2 += s * s;
            }
            total += std::sqrt(norm2);
        }
        return total;
    }

    void update_alice() {
        for (std::size_t i = 0; i < expr.rows(); ++i) {
            std::fill(combo.begin(), combo.end(), 0.0);
            for (std::size_t j = 0; j < expr.cols(); ++j) {
                const double m = expr(i, j);
                if (m == 0.0) continue;
                for (std::size_t k = 0; k < n; ++k) combo[k] += m * bob[j * n + k];
            }
            double norm2 = 0.0;
            for (double x : combo) norm2 += x * x;
            const double norm = std::sqrt(norm2);
            double* a = alice.data() + i * n;
            if (norm < 1e-14) {
                std::fill(a, a + n, 0.0);
                a[0] = 1.0;
            } else {
                for (std::size_t k = 0; k < n; ++k) a[k] = combo[k] / norm;
            }
        }
    }

    void update_bob() {
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            std::fill(combo.begin(), combo.end(), 0.0);
            for (std::size_t i = 0; i < expr.rows(); ++i) {
                const double m = expr(i, j);
                if (m == 0.0) continue;
                for (std::size_t k = 0; k < n; ++k) combo[k] += m * alice[i * n + k];
            }
            double norm2 = 0.0;
            for (double x : combo) norm2 += x * x;
            const double norm = std::sqrt(norm2);
            if (norm >= 1e-14) {
                double* b = bob.data() + j * n;
                for (std::size_t k = 0; k < n; ++k) b[k] = combo[k] / norm;
            }
            // A vanishing combination leaves b_j in place: its contribution
            // to the objective is zero for any choice.
        }
    }

    UnitVectors bob_vectors() const {
        UnitVectors out(expr.cols());
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            out[j].assign(bob.begin() + j * n, bob.begin() + (j + 1) * n);
        }
        return out;
    }
};

UnitVectors pad_to_dimension(const UnitVectors& vectors, std::size_t n) {
    UnitVectors out = vectors;
    for (auto& v : out) v.resize(n, 0.0);
    return out;
}

// Deterministic reduce: higher value wins, ties go to the lower restart index.
const OptRun& better_run(const OptRun& a, const OptRun& b) {
    if (b.value > a.value) return b;
    if (b.value == a.value && b.restart_index < a.restart_index) return b;
    return a;
}

}  // namespace

OptRun seesaw(const BellExpression& expr, std::size_t n, const UnitVectors& init,
              const OptimizerConfig& config) {
    config.validate();
    if (n == 0) throw DomainError("strategy dimension must be at least 1");
    if (init.size() != expr.cols()) {
        throw DimensionError("initial Bob set must have one vector per column");
    }
    for (const auto& v : init) {
        if (v.size() != n) throw DimensionError("initial vectors must live in R^n");
    }

    Sweeper sw(expr, n, init);
    double value = sw.objective();
    std::size_t sweep = 0;
    bool converged = false;
    while (sweep < config.max_sweeps) {
        sw.update_alice();
        sw.update_bob();
        ++sweep;
        const double next = sw.objective();
        if (next < value - 1e-12 * std::max(1.0, std::abs(value))) {
            throw NumericalError("see-saw objective decreased from " + std::to_string(value) +
                                 " to " + std::to_string(next));
        }
        const double improvement = next - value;
        value = next;
        if (improvement <= config.conv_tol * std::max(1.0, std::abs(value))) {
            converged = true;
            break;
        }
    }

    OptRun run;
    run.n = n;
    run.value = value;
    run.bob = sw.bob_vectors();
    run.converged = converged;
    run.sweeps = sweep;
    return run;
}

OptRun max_over_restarts(const BellExpression& expr, std::size_t n,
                         const OptimizerConfig& config) {
    config.validate();
    if (n == 0) throw DomainError("strategy dimension must be at least 1");

    const auto restarts = static_cast<std::int64_t>(config.restarts);
    std::vector<OptRun> runs(config.restarts);
    const int threads = resolve_jobs(config.jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1 && restarts > 1)
#endif
    for (std::int64_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(stream_seed(config.seed, static_cast<std::uint64_t>(r)));
        const UnitVectors init = random_unit_vectors(rng, expr.cols(), n);
        OptRun run = seesaw(expr, n, init, config);
        run.restart_index = static_cast<std::size_t>(r);
        runs[static_cast<std::size_t>(r)] = std::move(run);
    }

    OptRun best = runs.front();
    for (const auto& run : runs) best = better_run(best, run);
    return best;
}

std::size_t default_profile_depth(const BellExpression& expr) {
    return std::min(expr.rows(), expr.cols());
}

DimensionProfile dimension_profile(const BellExpression& expr, std::size_t n_max,
                                   const OptimizerConfig& config) {
    config.validate();
    if (n_max == 0) throw DomainError("profile depth must be at least 1");

    DimensionProfile profile;
    profile.points.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ProfilePoint point;
        if (n == 1 && expr.cols() <= kClassicalEnumerationCap) {
            const ClassicalResult exact = classical_max(expr, config.jobs);
            point.run.n = 1;
            point.run.value = exact.value;
            point.run.converged = true;
            point.run.restart_index = 0;
            point.run.bob.reserve(expr.cols());
            for (int s : exact.signs) {
                point.run.bob.push_back({static_cast<double>(s)});
            }
            point.exact = true;
        } else {
            point.run = max_over_restarts(expr, n, config);
            point.restarts_used = config.restarts;
        }

        if (n > 1) {
            const OptRun& prev = profile.points.back().run;
            OptRun warm = seesaw(expr, n, pad_to_dimension(prev.bob, n), config);
            warm.restart_index = config.restarts;
            point.restarts_used += 1;
            point.run = better_run(point.run, warm);
            // Warm-start guarantee: the padded previous solution realizes the
            // previous value in R^n, so the profile never steps down; clamp
            // away the last-ulp rounding of the re-evaluation.
            if (point.run.value < prev.value) {
                point.run.value = prev.value;
                point.run.bob = pad_to_dimension(prev.bob, n);
                point.run.converged = prev.converged;
            }
        }
        point.run.n = n;
        profile.points.push_back(std::move(point));
    }
    return profile;
}

WitnessReport detect_gaps(const DimensionProfile& profile, const OptimizerConfig& config,
                          Grade grade) {
    config.validate();
    WitnessReport report;
    report.grade = grade;
    report.profile.reserve(profile.points.size());
    for (const auto& point : profile.points) {
        report.profile.push_back(
            {point.run.n, point.run.value, point.run.converged, point.restarts_used});
    }
    for (std::size_t k = 0; k + 1 < profile.points.size(); ++k) {
        const auto& low = profile.points[k].run;
        const auto& high = profile.points[k + 1].run;
        const double gap = high.value - low.value;
        const double threshold = std::max(config.gap_tol, config.gap_tol * high.value);
        if (gap > threshold && low.converged && high.converged) {
            report.gaps.push_back(
                {low.n, high.n, gap, witness_dimension(low.n, Field::Complex), low.value});
        }
    }
    return report;
}

}  // namespace bellwit
