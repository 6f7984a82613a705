#pragma once

#include <cstddef>

#include "bellwit/bell_expression.hpp"

namespace bellwit {

/// Closed-form optimum data of the B_gamma family.
struct FamilyAnalytic {
    double t_max = 0.0;   // full-dimension maximum m_b * sqrt(gamma^2 + m_b(m_b-1)/2)
    double x_star = 0.0;  // stationary Gram off-diagonal (2g^2 - m_b) / (2g^2 + m_b(m_b-1))
    double gamma = 0.0;
    std::size_t m_b = 0;
};

/// Difference rows for every Bob pair plus one all-gamma row:
/// m_b(m_b-1)/2 + 1 rows over m_b columns. The pair rows are emitted in
/// pair_index order with +1 at the smaller column and -1 at the larger one.
/// gamma must be positive; use zn_matrix for the gamma = 0 ancestor.
BellExpression bgamma_matrix(std::size_t m_b, double gamma);

FamilyAnalytic bgamma_analytic(std::size_t m_b, double gamma);

/// The gamma = 0 ancestor: difference rows only (no zero row is emitted).
BellExpression zn_matrix(std::size_t m_b);

/// [[1, 1], [1, -1]]; the standard sanity fixture.
BellExpression chsh_matrix();

}  // namespace bellwit
