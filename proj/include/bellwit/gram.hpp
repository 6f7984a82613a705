#pragma once

#include <cstddef>
#include <vector>

#include "bellwit/bell_expression.hpp"
#include "bellwit/rng.hpp"

namespace bellwit {

/// Eigenvalue floor accepted as "positive semidefinite" (round-off slack).
inline constexpr double kPsdEigenvalueTol = -1e-9;

/// Default relative eigenvalue cutoff for rank decisions.
inline constexpr double kRankTol = 1e-8;

/// Symmetric unit-diagonal PSD matrix of pairwise dot products of Bob's
/// vectors. Construction validates symmetry (1e-12), an exactly-unit
/// diagonal, and eigenvalues above kPsdEigenvalueTol.
class GramMatrix {
public:
    GramMatrix(std::size_t size, std::vector<double> entries);

    /// k x k matrix with unit diagonal and constant off-diagonal x.
    static GramMatrix constant_off_diagonal(std::size_t size, double x);

    std::size_t size() const { return size_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    /// Eigenvalues in descending order (computed once at construction).
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

private:
    std::size_t size_;
    std::vector<double> entries_;      // row-major
    std::vector<double> eigenvalues_;  // descending
};

/// Single index for the strictly-lower-triangle pair (i, j), i > j, both
/// 0-based, enumerating pairs as (1,0), (2,0), (2,1), (3,0), ...
/// Matches the 1-based convention nu = (i-1)(i-2)/2 + j.
inline std::size_t pair_index(std::size_t i, std::size_t j) {
    return i * (i - 1) / 2 + j;
}

/// Off-diagonal entries flattened in pair_index order.
std::vector<double> gram_offdiagonal_flat(const GramMatrix& g);

GramMatrix gram_of(const UnitVectors& vectors);

/// Unit vectors in R^n whose Gram matrix reproduces g. Uses the symmetric
/// eigendecomposition so rank-deficient optima factor cleanly; throws
/// RankError when the effective rank exceeds n.
UnitVectors vectors_from_gram(const GramMatrix& g, std::size_t n, double tol = kRankTol);

/// Number of eigenvalues above tol * (largest eigenvalue).
std::size_t effective_rank(const GramMatrix& g, double tol = kRankTol);

/// Determinant of the k x k matrix with diagonal p and off-diagonal q:
/// [p + (k-1) q] * (p - q)^(k-1).
double constant_gram_determinant(double p, double q, std::size_t k);

/// Optimal-Alice objective evaluated directly on a Gram matrix:
/// sum_k sqrt(C_k + 2 sum_nu Y_k,nu x_nu) with C_k = sum_i M(k,i)^2 and
/// Y_k,nu = M(k,i) M(k,j). Radicands in [-1e-12, 0) are clamped to zero;
/// anything lower raises NumericalError.
double bob_value_from_gram(const BellExpression& expr, const GramMatrix& g);

}  // namespace bellwit
