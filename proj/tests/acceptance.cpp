// Acceptance suite: one line per criterion, hard tolerances, nonzero exit on
// any failure. Criterion 10 is an extended run gated behind --extended.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bellwit/classical.hpp"
#include "bellwit/families.hpp"
#include "bellwit/gram.hpp"
#include "bellwit/optimizer.hpp"
#include "bellwit/search.hpp"
#include "bellwit/sphere.hpp"
#include "bellwit/strategy.hpp"
#include "bellwit/tsirelson.hpp"
#include "test_support.hpp"

using namespace bellwit;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

void skip(int id, const char* name, const std::string& why) {
    std::printf("[SKIP] criterion %2d: %s -- %s\n", id, name, why.c_str());
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

OptimizerConfig base_config(std::uint64_t seed, std::size_t restarts) {
    OptimizerConfig config;
    config.seed = seed;
    config.restarts = restarts;
    config.jobs = 0;
    return config;
}

// ---------------------------------------------------------------------------

void criterion_1_family_analytic() {
    const OptimizerConfig config = base_config(2026, 50);
    double worst_value = 0.0;
    double worst_gram = 0.0;
    bool pass = true;
    for (std::size_t m_b = 3; m_b <= 8; ++m_b) {
        const double gammas[5] = {0.5, 1.0, std::sqrt(m_b / 2.0), 2.0, 3.0};
        for (double gamma : gammas) {
            const FamilyAnalytic analytic = bgamma_analytic(m_b, gamma);
            const BellExpression expr = bgamma_matrix(m_b, gamma);
            const OptRun best = max_over_restarts(expr, m_b, config);
            const double rel = std::abs(best.value - analytic.t_max) / analytic.t_max;
            const GramMatrix gram = gram_of(best.bob);
            double gram_err = 0.0;
            for (std::size_t i = 0; i < m_b; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    gram_err = std::max(gram_err, std::abs(gram(i, j) - analytic.x_star));
            worst_value = std::max(worst_value, rel);
            worst_gram = std::max(worst_gram, gram_err);
            pass = pass && best.converged && rel <= 1e-6 && gram_err <= 1e-4;
        }
    }
    report(1, "family analytic agreement (m_b 3..8, gamma grid)", pass,
           fmt("worst value rel %.2e (tol 1e-6), worst Gram offdiag err %.2e (tol 1e-4)",
               worst_value, worst_gram));
}

void criterion_2_qubit_real_gap() {
    const BellExpression expr = bgamma_matrix(3, 1.0);
    const DimensionProfile profile = dimension_profile(expr, 3, base_config(1, 50));
    const double t2 = profile.points[1].run.value;
    const double t3 = profile.points[2].run.value;
    const double ratio = t3 / t2;
    const bool pass = std::abs(t3 - 6.0) <= 1e-7 && std::abs(t2 - 5.8894) <= 5e-4 &&
                      std::abs(ratio - 1.01878) <= 2e-4;
    report(2, "three-setting family real/complex qubit gap", pass,
           fmt("T3=%.9f (6 +/- 1e-7), T2=%.6f (5.8894 +/- 5e-4), ratio=%.6f (1.01878 +/- 2e-4)",
               t3, t2, ratio));
}

void criterion_3_four_setting_gap() {
    const DimensionProfile p4 =
        dimension_profile(bgamma_matrix(4, 1.4153), 4, base_config(1, 50));
    const double r4 = p4.points[3].run.value / p4.points[2].run.value;
    const DimensionProfile p3 =
        dimension_profile(bgamma_matrix(3, 1.3946), 3, base_config(1, 50));
    const double r3 = p3.points[2].run.value / p3.points[1].run.value;
    const bool pass = std::abs(r4 - 1.0107161) <= 2e-4 && std::abs(r3 - 1.0208047) <= 2e-4;
    report(3, "four-setting gap ratios at the extremal gammas", pass,
           fmt("T4/T3=%.8f (1.0107161 +/- 2e-4), T3/T2=%.8f (1.0208047 +/- 2e-4)", r4, r3));
}

void criterion_4_classical_bounds() {
    double worst = 0.0;
    bool pass = true;
    for (std::size_t m_b = 2; m_b <= 10; ++m_b) {
        for (double gamma = 0.0; gamma <= m_b + 2.0; gamma += 0.5) {
            const BellExpression expr =
                gamma == 0.0 ? zn_matrix(m_b) : bgamma_matrix(m_b, gamma);
            const double enumerated = classical_max(expr).value;
            const double closed = bgamma_classical(m_b, gamma).value;
            worst = std::max(worst, std::abs(enumerated - closed));
            pass = pass && std::abs(enumerated - closed) <= 1e-12;
        }
    }
    report(4, "classical bounds: enumeration equals the closed form", pass,
           fmt("worst |enum - closed| = %.2e over m_b 2..10, gamma 0..m_b+2 (tol 1e-12)", worst));
}

void criterion_5_sphere_analytics() {
    constexpr double pi = std::numbers::pi;
    bool pass = true;
    std::ostringstream detail;
    const double r2 = limit_ratio(2);
    const double r3 = limit_ratio(3);
    const double r5 = limit_ratio(5);
    pass = pass && std::abs(r2 - pi * pi / 8.0) <= 1e-12;
    pass = pass && std::abs(r3 - 4.0 / 3.0) <= 1e-12;
    pass = pass && std::abs(r5 - 64.0 / 45.0) <= 1e-12;

    const auto s = s_integrals(10000);
    double worst_identity = 0.0;
    bool increasing = true;
    double prev_ratio = s[1] / s[0];
    for (std::size_t n = 1; n <= 10000; ++n) {
        const double identity = static_cast<double>(n) * s[n] * s[n - 1];
        worst_identity = std::max(worst_identity, std::abs(identity - 2.0 * pi) / (2.0 * pi));
        if (n >= 2) {
            const double ratio = s[n] / s[n - 1];
            increasing = increasing && ratio > prev_ratio;
            prev_ratio = ratio;
        }
    }
    pass = pass && worst_identity <= 1e-12 && increasing;
    report(5, "sphere analytics: limit ratios, product identity, monotonicity", pass,
           fmt("ratios ok=%d, worst |n s_n s_(n-1) - 2pi| rel = %.2e (tol 1e-12), increasing=%d",
               std::abs(r2 - pi * pi / 8.0) <= 1e-12 && std::abs(r3 - 4.0 / 3.0) <= 1e-12 &&
                   std::abs(r5 - 64.0 / 45.0) <= 1e-12,
               worst_identity, increasing));
}

void criterion_6_sphere_discretization() {
    constexpr double pi = std::numbers::pi;
    const double targets[3] = {0.75, 3.0 * pi * pi / 32.0, 1.0};
    double mean[3] = {0.0, 0.0, 0.0};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const BellExpression expr = discretize_sphere_expression(3, 500, seed);
        OptimizerConfig config = base_config(seed, 8);
        config.conv_tol = 1e-9;
        const DimensionProfile profile = dimension_profile(expr, 3, config);
        for (int n = 0; n < 3; ++n) mean[n] += profile.points[n].run.value / 5.0;
    }
    bool pass = true;
    for (int n = 0; n < 3; ++n) {
        pass = pass && std::abs(mean[n] - targets[n]) / targets[n] <= 0.05;
    }
    // The n = 1 mean sits ~7% above 3/4 at K = 500: the exhaustive sign
    // optimum overfits the finite sample, and the excess decays only like
    // K^(-1/2) (about 5% at K = 2000). Reported as-is.
    report(6, "sphere discretization means (m=3, K=500, 5 seeds, tol 5%)", pass,
           fmt("n=1: %.4f vs %.4f (%+.1f%%), n=2: %.4f vs %.4f (%+.1f%%), n=3: %.4f vs %.4f "
               "(%+.1f%%)",
               mean[0], targets[0], 100.0 * (mean[0] - targets[0]) / targets[0], mean[1],
               targets[1], 100.0 * (mean[1] - targets[1]) / targets[1], mean[2], targets[2],
               100.0 * (mean[2] - targets[2]) / targets[2]));
}

void criterion_7_tsirelson() {
    bool pass = true;
    double worst_corr = 0.0;
    double worst_alg = 0.0;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (std::size_t m = 2; m <= 7; ++m) {
        for (int trial = 0; trial < 100; ++trial) {
            const UnitVectors alice = random_unit_vectors(rng, 3, m);
            const UnitVectors bob = random_unit_vectors(rng, 3, m);
            std::vector<double> entries(9);
            for (auto& v : entries) v = uniform(rng);
            const BellExpression expr(3, 3, entries);
            const QuantumRealization realization = realize(alice, bob);
            const RealizationCheck check =
                verify_realization(realization, expr, Strategy(m, alice, bob));
            worst_corr = std::max(worst_corr, check.max_correlation_error);
            worst_alg = std::max(worst_alg, std::max(check.max_involution_residual,
                                                     check.max_anticommutator_residual));
            pass = pass && check.max_correlation_error < 1e-10 &&
                   check.max_involution_residual < 1e-12 &&
                   check.max_anticommutator_residual < 1e-12;
        }
    }

    // analytic family optimum on one qubit per side
    const BellExpression family = bgamma_matrix(3, 1.0);
    const UnitVectors bob = vectors_from_gram(GramMatrix::constant_off_diagonal(3, -0.125), 3);
    const UnitVectors alice = optimal_alice(family, bob);
    const QuantumRealization realization = realize(alice, bob);
    const RealizationCheck check =
        verify_realization(realization, family, Strategy(3, alice, bob));
    const bool family_ok = realization.local_dim == 2 &&
                           std::abs(check.realized_bell_value - 6.0) <= 1e-9 && check.passed;
    pass = pass && family_ok;
    report(7, "quantum realizations reproduce dot products (m 2..7, 100 each)", pass,
           fmt("worst correlation err %.2e (tol 1e-10), worst algebra residual %.2e (tol "
               "1e-12), family value %.9f on D=%zu",
               worst_corr, worst_alg, check.realized_bell_value, realization.local_dim));
}

void criterion_8_chsh() {
    const DimensionProfile profile = dimension_profile(chsh_matrix(), 4, base_config(1, 50));
    const double t1 = profile.points[0].run.value;
    const double t2 = profile.points[1].run.value;
    const double t3 = profile.points[2].run.value;
    const double t4 = profile.points[3].run.value;
    const bool pass = t1 == 2.0 && std::abs(t2 - 2.0 * std::sqrt(2.0)) <= 1e-9 &&
                      t3 - t2 <= 1e-8 && t4 - t2 <= 1e-8;
    report(8, "CHSH fixture: exact classical bound, 2*sqrt(2), flat above n=2", pass,
           fmt("T1=%.17g, T2=%.12f, T3-T2=%.2e, T4-T2=%.2e", t1, t2, t3 - t2, t4 - t2));
}

void criterion_9_search() {
    EnumerationOptions options;
    options.jobs = 0;
    bool pass = true;
    std::size_t count22 = 0;
    std::size_t count23 = 0;
    std::size_t oracle22 = 0;
    std::size_t oracle23 = 0;
    for (bool filter : {false, true}) {
        options.filter_trivial = filter;
        count22 = enumerate_classes(2, 2, options).size();
        oracle22 = testing::oracle_class_count(2, 2, options.alphabet, filter);
        count23 = enumerate_classes(2, 3, options).size();
        oracle23 = testing::oracle_class_count(2, 3, options.alphabet, filter);
        pass = pass && count22 == oracle22 && count23 == oracle23;
    }

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> entry(-2, 2);
    bool orbit_constant = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t rows = 2 + rng() % 3;
        const std::size_t cols = 2 + rng() % 3;
        testing::Mat m(rows * cols);
        for (auto& v : m) v = entry(rng);
        const testing::Mat image = testing::random_group_image(rng, m, rows, cols);
        orbit_constant = orbit_constant &&
                         canonical_entries(rows, cols, m) ==
                             canonical_entries(rows, cols, image);
    }
    pass = pass && orbit_constant;

    // the integer four-setting family member is a (3,4) hit
    ClassRep family;
    family.rows = 7;
    family.cols = 4;
    family.entries = bgamma_matrix(4, 1.0).entries();
    ScanOptions scan_options;
    scan_options.n_max = 4;
    scan_options.flag_gap = {3, 4};
    const ScanResult scan = scan_for_witnesses({family}, scan_options, base_config(9, 20));
    const bool family_hit = scan.hits.size() == 1 && scan.hits[0].witness_dim == 2;
    pass = pass && family_hit;

    report(9, "search: class counts, orbit invariance, four-setting family hit", pass,
           fmt("counts (2,2)=%zu/(oracle %zu), (2,3)=%zu/(oracle %zu), orbit-constant=%d, "
               "(3,4)-hit=%d",
               count22, oracle22, count23, oracle23, orbit_constant, family_hit));
}

void criterion_10_extended(bool enabled) {
    const char* name = "extended: 5x5 scan has no (3,4) hits; m_b=5,6 extremal ratios";
    if (!enabled) {
        skip(10, name, "pass --extended to run (several minutes)");
        return;
    }
    OptimizerConfig ratio_config = base_config(1, 300);
    const DimensionProfile p5 =
        dimension_profile(bgamma_matrix(5, 1.6396), 5, ratio_config);
    const double r5 = p5.points[4].run.value / p5.points[3].run.value;
    const DimensionProfile p6 =
        dimension_profile(bgamma_matrix(6, 1.7642), 6, ratio_config);
    const double r6 = p6.points[5].run.value / p6.points[4].run.value;
    const bool ratios_ok =
        std::abs(r5 - 1.0062317) <= 1e-3 && std::abs(r6 - 1.0041964) <= 1e-3;

    EnumerationOptions enum_options;
    enum_options.jobs = 0;
    const std::vector<ClassRep> classes = enumerate_classes_augmented(5, 5, enum_options);
    ScanOptions scan_options;
    scan_options.n_max = 4;
    scan_options.flag_gap = {3, 4};
    const ScanResult scan = scan_for_witnesses(classes, scan_options, base_config(5, 12));
    const bool no_hits = scan.hits.empty();

    report(10, name, ratios_ok && no_hits,
           fmt("ratio5=%.7f (1.0062317 +/- 1e-3), ratio6=%.7f (1.0041964 +/- 1e-3), 5x5 "
               "classes=%zu, (3,4) hits=%zu",
               r5, r6, classes.size(), scan.hits.size()));
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    }

    const auto t0 = std::chrono::steady_clock::now();
    criterion_1_family_analytic();
    criterion_2_qubit_real_gap();
    criterion_3_four_setting_gap();
    criterion_4_classical_bounds();
    criterion_5_sphere_analytics();
    criterion_6_sphere_discretization();
    criterion_7_tsirelson();
    criterion_8_chsh();
    criterion_9_search();
    criterion_10_extended(extended);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("\n%d criterion failure(s), %.1f s\n", failures, secs);
    return failures;
}
