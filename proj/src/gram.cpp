#include "bellwit/gram.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "bellwit/errors.hpp"

namespace bellwit {

namespace {

Eigen::MatrixXd to_eigen(const std::vector<double>& entries, std::size_t n) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i * n + j];
    return m;
}

}  // namespace

GramMatrix::GramMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
    if (size_ == 0) throw DomainError("Gram matrix must have size at least 1");
    if (entries_.size() != size_ * size_) {
        throw DimensionError("Gram matrix entry count does not match size");
    }
    for (std::size_t i = 0; i < size_; ++i) {
        if (entries_[i * size_ + i] != 1.0) {
            throw DomainError("Gram matrix diagonal entries must be exactly 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            const double a = entries_[i * size_ + j];
            const double b = entries_[j * size_ + i];
            if (!std::isfinite(a) || !std::isfinite(b)) {
                throw DomainError("Gram matrix entries must be finite");
            }
            if (std::abs(a - b) > 1e-12) {
                throw DomainError("Gram matrix must be symmetric within 1e-12");
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(entries_, size_),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of Gram matrix failed");
    }
    eigenvalues_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + size_);
    std::sort(eigenvalues_.rbegin(), eigenvalues_.rend());
    if (eigenvalues_.back() < kPsdEigenvalueTol) {
        throw NumericalError("Gram matrix is not positive semidefinite (min eigenvalue " +
                             std::to_string(eigenvalues_.back()) + ")");
    }
}

GramMatrix GramMatrix::constant_off_diagonal(std::size_t size, double x) {
    std::vector<double> entries(size * size, x);
    for (std::size_t i = 0; i < size; ++i) entries[i * size + i] = 1.0;
    return GramMatrix(size, std::move(entries));
}

std::vector<double> gram_offdiagonal_flat(const GramMatrix& g) {
    const std::size_t n = g.size();
    std::vector<double> flat(n * (n - 1) / 2);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) flat[pair_index(i, j)] = g(i, j);
    return flat;
}

GramMatrix gram_of(const UnitVectors& vectors) {
    const std::size_t n = vectors.size();
    if (n == 0) throw DomainError("gram_of needs at least one vector");
    const std::size_t dim = vectors.front().size();
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (vectors[i].size() != dim) throw DimensionError("mixed vector dimensions in gram_of");
        double norm2 = 0.0;
        for (double x : vectors[i]) norm2 += x * x;
        if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
            throw DomainError("gram_of needs unit vectors");
        }
        entries[i * n + i] = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) dot += vectors[i][k] * vectors[j][k];
            entries[i * n + j] = dot;
            entries[j * n + i] = dot;
        }
    }
    return GramMatrix(n, std::move(entries));
}

UnitVectors vectors_from_gram(const GramMatrix& g, std::size_t n, double tol) {
    if (n == 0) throw DomainError("target dimension must be at least 1");
    const std::size_t rank = effective_rank(g, tol);
    if (rank > n) {
        throw RankError("Gram matrix has effective rank " + std::to_string(rank) +
                        " > requested dimension " + std::to_string(n));
    }
    const std::size_t size = g.size();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(g.entries(), size));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of Gram matrix failed");
    }
    // Eigen returns eigenvalues in ascending order; use the top min(n, size).
    const std::size_t keep = std::min(n, size);
    UnitVectors out(size, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < keep; ++k) {
        const auto col = static_cast<Eigen::Index>(size - 1 - k);
        const double lambda = std::max(solver.eigenvalues()(col), 0.0);
        const double scale = std::sqrt(lambda);
        for (std::size_t i = 0; i < size; ++i) {
            out[i][k] = scale * solver.eigenvectors()(static_cast<Eigen::Index>(i), col);
        }
    }
    for (auto& v : out) {
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        const double norm = std::sqrt(norm2);
        if (norm < 1e-6) throw NumericalError("degenerate row while factoring Gram matrix");
        for (double& x : v) x /= norm;
    }
    return out;
}

std::size_t effective_rank(const GramMatrix& g, double tol) {
    const auto& eigs = g.eigenvalues();
    const double largest = eigs.front();
    if (largest <= 0.0) return 0;
    std::size_t rank = 0;
    for (double e : eigs)
        if (e > tol * largest) ++rank;
    return rank;
}

double constant_gram_determinant(double p, double q, std::size_t k) {
    if (k == 0) throw DomainError("matrix order must be at least 1");
    return (p + (static_cast<double>(k) - 1.0) * q) *
           std::pow(p - q, static_cast<double>(k) - 1.0);
}

double bob_value_from_gram(const BellExpression& expr, const GramMatrix& g) {
    if (g.size() != expr.cols()) {
        throw DimensionError("Gram size does not match the expression columns");
    }
    const std::vector<double> x = gram_offdiagonal_flat(g);
    const std::size_t cols = expr.cols();
    double total = 0.0;
    for (std::size_t k = 0; k < expr.rows(); ++k) {
        const auto row = expr.row(k);
        double radicand = 0.0;
        for (double m : row) radicand += m * m;  // C_k
        for (std::size_t i = 1; i < cols; ++i) {
            if (row[i] == 0.0) continue;
            for (std::size_t j = 0; j < i; ++j) {
                radicand += 2.0 * row[i] * row[j] * x[pair_index(i, j)];  // Y_k,nu x_nu
            }
        }
        if (radicand < 0.0) {
            if (radicand < -1e-12) {
                throw NumericalError("negative radicand " + std::to_string(radicand) +
                                     " in Gram objective");
            }
            radicand = 0.0;
        }
        total += std::sqrt(radicand);
    }
    return total;
}

}  // namespace bellwit
