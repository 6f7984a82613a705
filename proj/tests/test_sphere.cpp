#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellwit/errors.hpp"
#include "bellwit/optimizer.hpp"
#include "bellwit/sphere.hpp"
#include "bellwit/strategy.hpp"

using namespace bellwit;

namespace {
constexpr double kPi = std::numbers::pi;

// Simpson-rule oracle for the sine-power integral.
double s_quadrature(std::size_t i) {
    const int steps = 20000;
    const double h = kPi / steps;
    double sum = 0.0;
    for (int k = 0; k <= steps; ++k) {
        const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        sum += w * std::pow(std::sin(k * h), static_cast<double>(i));
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("sine-power integrals") {
    CHECK(s_integral(0) == kPi);
    CHECK(s_integral(1) == 2.0);
    CHECK(s_integral(2) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(s_integral(3) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    for (std::size_t i = 0; i <= 12; ++i) {
        CHECK(s_integral(i) == doctest::Approx(s_quadrature(i)).epsilon(1e-9));
    }

    // Gamma-function route
    for (std::size_t i = 1; i <= 200; ++i) {
        const double gamma_form = std::sqrt(kPi) *
                                  std::exp(std::lgamma((i + 1.0) / 2.0) -
                                           std::lgamma((i + 2.0) / 2.0));
        CHECK(s_integral(i) == doctest::Approx(gamma_form).epsilon(1e-12));
    }

    const auto table = s_integrals(10000);
    for (std::size_t i = 1; i <= 10000; ++i) {
        // product identity holds to high relative accuracy along the table
        CHECK(static_cast<double>(i) * table[i] * table[i - 1] ==
              doctest::Approx(2.0 * kPi).epsilon(1e-12));
        if (i >= 2) CHECK(table[i] < table[i - 1]);  // strictly decreasing
    }
}

TEST_CASE("analytic maxima") {
    CHECK(analytic_tn(3, 3) == 1.0);
    CHECK(analytic_tn(3, 5) == 1.0);
    CHECK(analytic_tn(3, 1) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(analytic_tn(3, 2) == doctest::Approx(3.0 * kPi * kPi / 32.0).epsilon(1e-15));

    for (std::size_t m = 2; m <= 30; ++m) {
        for (std::size_t n = 1; n + 1 < m; ++n) {
            CHECK(analytic_tn(m, n) < analytic_tn(m, n + 1));
        }
        CHECK(analytic_tn(m, m - 1) < 1.0);
    }
}

TEST_CASE("infinite-m limits and ratios") {
    CHECK(limit_tn(1) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(limit_ratio(2) == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-15));
    CHECK(limit_ratio(3) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(limit_ratio(5) == doctest::Approx(64.0 / 45.0).epsilon(1e-15));

    double prev = limit_ratio(1);
    for (std::size_t n = 2; n <= 2000; ++n) {
        const double r = limit_ratio(n);
        CHECK(r > prev);
        CHECK(r < kPi / 2.0);
        prev = r;
    }
}

TEST_CASE("wallis products agree with the recurrence ratios") {
    for (std::size_t n = 1; n <= 100; ++n) {
        CHECK(wallis_sine_ratio(n) == doctest::Approx(limit_tn(n)).epsilon(1e-12));
    }
}

TEST_CASE("lambda coefficient") {
    CHECK(lambda_value(3, 2) == doctest::Approx(kPi / 8.0).epsilon(1e-15));
    CHECK(lambda_value(3, 1) == doctest::Approx(0.5).epsilon(1e-15));
    for (std::size_t m = 1; m <= 10; ++m) {
        CHECK(lambda_value(m, m) == doctest::Approx(1.0 / m).epsilon(1e-14));
    }
    CHECK_THROWS_AS(lambda_value(3, 4), DomainError);
}

TEST_CASE("lambda coefficient agrees with Monte-Carlo integration") {
    // lambda = average of <e_(m-n+i), y> b_i(y) over the sphere
    const std::size_t m = 4;
    const std::size_t n = 2;
    const std::size_t samples = 400000;
    const UnitVectors y = sample_sphere_points(m, samples, 77, 9);
    const UnitVectors b = analytic_sphere_strategy(m, n, y);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t s = 0; s < samples; ++s) acc += y[s][m - n + i] * b[s][i];
        acc /= static_cast<double>(samples);
        CHECK(acc == doctest::Approx(lambda_value(m, n)).epsilon(0.02));
    }
}

TEST_CASE("sampling is deterministic and on the sphere") {
    const UnitVectors a = sample_sphere_points(5, 64, 123, 0);
    const UnitVectors b = sample_sphere_points(5, 64, 123, 0);
    CHECK(a == b);
    const UnitVectors c = sample_sphere_points(5, 64, 123, 1);
    CHECK(a != c);
    for (const auto& v : a) {
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("discretized expression entries and strategy projections") {
    const BellExpression expr = discretize_sphere_expression(3, 40, 5);
    CHECK(expr.rows() == 40);
    CHECK(expr.cols() == 40);
    const UnitVectors x = sample_sphere_points(3, 40, 5, 0);
    const UnitVectors y = sample_sphere_points(3, 40, 5, 1);
    double dot = 0.0;
    for (std::size_t c = 0; c < 3; ++c) dot += x[7][c] * y[11][c];
    CHECK(expr(7, 11) == doctest::Approx(3.0 * dot / 1600.0).epsilon(1e-15));

    // n = m keeps the whole point; n = 1 keeps the sign of the last coordinate
    const UnitVectors full = analytic_sphere_strategy(3, 3, y);
    for (std::size_t l = 0; l < y.size(); ++l) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(full[l][c] == doctest::Approx(y[l][c]).epsilon(1e-14));
        }
    }
    const UnitVectors line = analytic_sphere_strategy(3, 1, y);
    for (std::size_t l = 0; l < y.size(); ++l) {
        CHECK(line[l][0] == (y[l][2] >= 0.0 ? 1.0 : -1.0));
    }
}

TEST_CASE("single-point discretization is the rank-one case") {
    // one sample per side: T^n = m |<x, y>| for every n
    const BellExpression expr = discretize_sphere_expression(3, 1, 99);
    REQUIRE(expr.rows() == 1);
    const double entry = expr(0, 0);
    OptimizerConfig config;
    config.restarts = 4;
    config.seed = 1;
    config.jobs = 1;
    for (std::size_t n : {1u, 2u, 3u}) {
        CHECK(max_over_restarts(expr, n, config).value ==
              doctest::Approx(std::abs(entry)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate projection points fall back to the first subspace axis") {
    const UnitVectors points = {{1.0, 0.0, 0.0}};
    const UnitVectors b = analytic_sphere_strategy(3, 2, points);
    CHECK(b[0] == std::vector<double>{1.0, 0.0});
}

TEST_CASE("projection strategy value approaches the analytic maximum") {
    const std::size_t points = 1000;
    const BellExpression expr = discretize_sphere_expression(3, points, 2024);
    const UnitVectors y = sample_sphere_points(3, points, 2024, 1);
    const UnitVectors b2 = analytic_sphere_strategy(3, 2, y);
    CHECK(bob_value(expr, b2) ==
          doctest::Approx(analytic_tn(3, 2)).epsilon(0.05));
}

TEST_CASE("discretized see-saw error shrinks with sample size") {
    // average absolute error at n = 2 over seeds, for growing K
    OptimizerConfig config;
    config.restarts = 6;
    config.conv_tol = 1e-9;
    config.jobs = 0;
    const double target = analytic_tn(3, 2);
    double previous_error = -1.0;
    for (std::size_t points : {100u, 400u, 1600u}) {
        double error = 0.0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            config.seed = seed;
            const BellExpression expr = discretize_sphere_expression(3, points, seed);
            const OptRun run = max_over_restarts(expr, 2, config);
            error += std::abs(run.value - target);
        }
        error /= 5.0;
        if (previous_error >= 0.0) CHECK(error < previous_error);
        previous_error = error;
    }
}
