#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bellwit/bell_expression.hpp"
#include "bellwit/rng.hpp"
#include "bellwit/witness.hpp"

namespace bellwit {

struct OptimizerConfig {
    std::size_t restarts = 50;
    std::size_t max_sweeps = 10000;
    double conv_tol = 1e-11;  // relative per-sweep improvement
    double gap_tol = 1e-5;    // gap detection, absolute and relative combined
    std::uint64_t seed = 0;
    int jobs = 0;  // 0 = available parallelism

    void validate() const;
};

/// Outcome of one see-saw ascent.
struct OptRun {
    std::size_t n = 0;
    double value = 0.0;
    UnitVectors bob;
    bool converged = false;
    std::size_t sweeps = 0;
    std::size_t restart_index = 0;
};

/// Alternating exact block maximization over the two vector sets:
/// Alice follows the Bob combinations, Bob follows the Alice combinations,
/// so the objective never decreases. Stops when the relative per-sweep
/// improvement drops below conv_tol or after max_sweeps.
OptRun seesaw(const BellExpression& expr, std::size_t n, const UnitVectors& init,
              const OptimizerConfig& config);

/// Best run over config.restarts independent see-saws. Initial vectors come
/// from per-restart generators derived with stream_seed(config.seed, index),
/// so the result is a deterministic reduce (max value, ties to the lowest
/// restart index) no matter how the restarts are scheduled.
OptRun max_over_restarts(const BellExpression& expr, std::size_t n,
                         const OptimizerConfig& config);

struct ProfilePoint {
    OptRun run;
    std::size_t restarts_used = 0;
    bool exact = false;  // n = 1 entry taken from exhaustive enumeration
};

struct DimensionProfile {
    std::vector<ProfilePoint> points;  // points[k] holds n = k + 1
};

/// Default profile depth: Bob's span suffices and Alice follows Bob.
std::size_t default_profile_depth(const BellExpression& expr);

/// Best value per dimension n = 1..n_max. Each level runs the restart batch
/// plus one warm start seeded from the previous best solution padded with a
/// zero coordinate, which makes the profile nondecreasing by construction.
/// The n = 1 entry is replaced by the exact classical bound whenever
/// enumeration is feasible.
DimensionProfile dimension_profile(const BellExpression& expr, std::size_t n_max,
                                   const OptimizerConfig& config);

/// Flags every step with T(n+1) - T(n) > max(gap_tol, gap_tol * T(n+1)) and
/// both entries converged; each gap carries the complex-field witness
/// dimension floor((n+1)/2) and the threshold T(n).
WitnessReport detect_gaps(const DimensionProfile& profile, const OptimizerConfig& config,
                          Grade grade = Grade::Heuristic);

}  // namespace bellwit
