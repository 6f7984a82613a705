#pragma once

#include <cstddef>

#include "bellwit/bell_expression.hpp"
#include "bellwit/rng.hpp"

namespace bellwit {

/// Tolerance on the Euclidean norm of strategy vectors.
inline constexpr double kUnitNormTol = 1e-12;

/// A pair of ordered unit-vector sets in a common R^n, one vector per
/// measurement setting.
struct Strategy {
    std::size_t dim;
    UnitVectors alice;
    UnitVectors bob;

    Strategy(std::size_t dim, UnitVectors alice, UnitVectors bob);
};

/// sum_ij M(i,j) <a_i, b_j>.
double evaluate_strategy(const BellExpression& expr, const Strategy& s);

/// Best-response Alice vectors: a_i = normalize(sum_j M(i,j) b_j).
/// A combination with norm below 1e-14 resolves to the first basis vector;
/// its contribution to the objective is zero either way.
UnitVectors optimal_alice(const BellExpression& expr, const UnitVectors& bob);

/// Objective with Alice chosen optimally: sum_i |sum_j M(i,j) b_j|.
double bob_value(const BellExpression& expr, const UnitVectors& bob);

}  // namespace bellwit
