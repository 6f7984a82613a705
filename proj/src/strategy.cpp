#include "bellwit/strategy.hpp"

#include <cmath>
#include <string>

#include "bellwit/errors.hpp"

namespace bellwit {

namespace {

void check_unit_vectors(const UnitVectors& vs, std::size_t dim, const char* who) {
    for (const auto& v : vs) {
        if (v.size() != dim) {
            throw DimensionError(std::string(who) + " vector dimension mismatch");
        }
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTol) {
            throw DomainError(std::string(who) + " vectors must have unit norm");
        }
    }
}

}  // namespace

Strategy::Strategy(std::size_t dim_, UnitVectors alice_, UnitVectors bob_)
    : dim(dim_), alice(std::move(alice_)), bob(std::move(bob_)) {
    if (dim == 0) throw DomainError("strategy dimension must be at least 1");
    check_unit_vectors(alice, dim, "Alice");
    check_unit_vectors(bob, dim, "Bob");
}

double evaluate_strategy(const BellExpression& expr, const Strategy& s) {
    if (s.alice.size() != expr.rows() || s.bob.size() != expr.cols()) {
        throw DimensionError("strategy setting counts do not match the expression shape");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        const auto& a = s.alice[i];
        double row_term = 0.0;
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            const double m = expr(i, j);
            if (m == 0.0) continue;
            const auto& b = s.bob[j];
            double dot = 0.0;
            for (std::size_t k = 0; k < s.dim; ++k) dot += a[k] * b[k];
            row_term += m * dot;
        }
        total += row_term;
    }
    return total;
}

UnitVectors optimal_alice(const BellExpression& expr, const UnitVectors& bob) {
    if (bob.size() != expr.cols()) {
        throw DimensionError("Bob vector count does not match the expression columns");
    }
    const std::size_t dim = bob.empty() ? 0 : bob.front().size();
    check_unit_vectors(bob, dim, "Bob");

    UnitVectors alice(expr.rows(), std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        auto& a = alice[i];
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            const double m = expr(i, j);
            if (m == 0.0) continue;
            const auto& b = bob[j];
            for (std::size_t k = 0; k < dim; ++k) a[k] += m * b[k];
        }
        double norm2 = 0.0;
        for (double x : a) norm2 += x * x;
        const double norm = std::sqrt(norm2);
        if (norm < 1e-14) {
            std::fill(a.begin(), a.end(), 0.0);
            a[0] = 1.0;
        } else {
            for (double& x : a) x /= norm;
        }
    }
    return alice;
}

double bob_value(const BellExpression& expr, const UnitVectors& bob) {
    if (bob.size() != expr.cols()) {
        throw DimensionError("Bob vector count does not match the expression columns");
    }
    const std::size_t dim = bob.empty() ? 0 : bob.front().size();
    std::vector<double> combo(dim);
    double total = 0.0;
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        std::fill(combo.begin(), combo.end(), 0.0);
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            const double m = expr(i, j);
            if (m == 0.0) continue;
            const auto& b = bob[j];
            for (std::size_t k = 0; k < dim; ++k) combo[k] += m * b[k];
        }
        double norm2 = 0.0;
        for (double x : combo) norm2 += x * x;
        total += std::sqrt(norm2);
    }
    return total;
}

}  // namespace bellwit
