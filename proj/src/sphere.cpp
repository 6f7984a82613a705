#include "bellwit/sphere.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bellwit/errors.hpp"

namespace bellwit {

namespace {
constexpr double kPi = std::numbers::pi;
}

double s_integral(std::size_t i) {
    double even = kPi;  // s_0
    double odd = 2.0;   // s_1
    if (i == 0) return even;
    if (i == 1) return odd;
    double value = (i % 2 == 0) ? even : odd;
    for (std::size_t k = (i % 2 == 0) ? 2 : 3; k <= i; k += 2) {
        value *= static_cast<double>(k - 1) / static_cast<double>(k);
    }
    return value;
}

std::vector<double> s_integrals(std::size_t up_to) {
    std::vector<double> s(up_to + 1);
    s[0] = kPi;
    if (up_to >= 1) s[1] = 2.0;
    for (std::size_t i = 2; i <= up_to; ++i) {
        s[i] = s[i - 2] * static_cast<double>(i - 1) / static_cast<double>(i);
    }
    return s;
}

double analytic_tn(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw DomainError("dimensions must be at least 1");
    if (n >= m) return 1.0;
    const std::vector<double> s = s_integrals(m);
    return (s[m - 1] / s[m]) * (s[n] / s[n - 1]);
}

double limit_tn(std::size_t n) {
    if (n == 0) throw DomainError("dimension must be at least 1");
    const std::vector<double> s = s_integrals(n);
    return s[n] / s[n - 1];
}

double limit_ratio(std::size_t n) {
    return (kPi / 2.0) * limit_tn(n);
}

double wallis_sine_ratio(std::size_t n) {
    if (n == 0) throw DomainError("dimension must be at least 1");
    if (n % 2 == 0) {
        double product = kPi / 4.0;
        for (std::size_t i = 1; i <= n / 2 - 1; ++i) {
            const double odd = static_cast<double>(2 * i + 1);
            product *= odd * odd / (odd * odd - 1.0);
        }
        return product;
    }
    double product = 2.0 / kPi;
    for (std::size_t i = 1; i <= (n - 1) / 2; ++i) {
        const double ev = static_cast<double>(2 * i);
        product *= ev * ev / (ev * ev - 1.0);
    }
    return product;
}

UnitVectors sample_sphere_points(std::size_t m, std::size_t count, std::uint64_t seed,
                                 std::uint64_t stream) {
    if (m == 0) throw DomainError("sphere dimension must be at least 1");
    std::mt19937_64 rng(stream_seed(seed, stream));
    return random_unit_vectors(rng, count, m);
}

BellExpression discretize_sphere_expression(std::size_t m, std::size_t points,
                                            std::uint64_t seed) {
    if (m < 2) throw DomainError("sphere discretization needs m >= 2");
    if (points < 1) throw DomainError("sphere discretization needs at least one point");
    const UnitVectors x = sample_sphere_points(m, points, seed, 0);
    const UnitVectors y = sample_sphere_points(m, points, seed, 1);
    const double scale = static_cast<double>(m) / (static_cast<double>(points) *
                                                   static_cast<double>(points));
    std::vector<double> entries(points * points);
    for (std::size_t k = 0; k < points; ++k) {
        for (std::size_t l = 0; l < points; ++l) {
            double dot = 0.0;
            for (std::size_t c = 0; c < m; ++c) dot += x[k][c] * y[l][c];
            entries[k * points + l] = scale * dot;
        }
    }
    return BellExpression(points, points, std::move(entries));
}

UnitVectors analytic_sphere_strategy(std::size_t m, std::size_t n,
                                     const UnitVectors& bob_points) {
    if (n == 0 || n > m) throw DomainError("strategy dimension must satisfy 1 <= n <= m");
    UnitVectors out;
    out.reserve(bob_points.size());
    for (const auto& y : bob_points) {
        if (y.size() != m) throw DimensionError("sample point dimension mismatch");
        std::vector<double> b(y.end() - static_cast<std::ptrdiff_t>(n), y.end());
        double norm2 = 0.0;
        for (double v : b) norm2 += v * v;
        const double norm = std::sqrt(norm2);
        if (norm < 1e-12) {
            std::fill(b.begin(), b.end(), 0.0);
            b[0] = 1.0;
        } else {
            for (double& v : b) v /= norm;
        }
        out.push_back(std::move(b));
    }
    return out;
}

double lambda_value(std::size_t m, std::size_t n) {
    if (n == 0 || n > m) throw DomainError("lambda_value needs 1 <= n <= m");
    const std::vector<double> s = s_integrals(m);
    return s[m - 1] / (static_cast<double>(n) * s[n - 1]);
}

}  // namespace bellwit
