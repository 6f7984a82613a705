#include "bellwit/families.hpp"

#include <cmath>

#include "bellwit/errors.hpp"
#include "bellwit/gram.hpp"

namespace bellwit {

namespace {

void append_difference_rows(std::vector<double>& entries, std::size_t m_b) {
    for (std::size_t i = 1; i < m_b; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<double> row(m_b, 0.0);
            row[j] = 1.0;
            row[i] = -1.0;
            entries.insert(entries.end(), row.begin(), row.end());
        }
    }
}

}  // namespace

BellExpression bgamma_matrix(std::size_t m_b, double gamma) {
    if (m_b < 2) throw DomainError("family needs at least two Bob settings");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("gamma must be positive; use zn_matrix for the gamma = 0 family");
    }
    const std::size_t pair_rows = m_b * (m_b - 1) / 2;
    std::vector<double> entries;
    entries.reserve((pair_rows + 1) * m_b);
    append_difference_rows(entries, m_b);
    entries.insert(entries.end(), m_b, gamma);
    return BellExpression(pair_rows + 1, m_b, std::move(entries));
}

FamilyAnalytic bgamma_analytic(std::size_t m_b, double gamma) {
    if (m_b < 2) throw DomainError("family needs at least two Bob settings");
    const double m = static_cast<double>(m_b);
    FamilyAnalytic out;
    out.m_b = m_b;
    out.gamma = gamma;
    out.t_max = m * std::sqrt(gamma * gamma + m * (m - 1.0) / 2.0);
    out.x_star = (2.0 * gamma * gamma - m) / (2.0 * gamma * gamma + m * (m - 1.0));
    return out;
}

BellExpression zn_matrix(std::size_t m_b) {
    if (m_b < 2) throw DomainError("family needs at least two Bob settings");
    const std::size_t pair_rows = m_b * (m_b - 1) / 2;
    std::vector<double> entries;
    entries.reserve(pair_rows * m_b);
    append_difference_rows(entries, m_b);
    return BellExpression(pair_rows, m_b, std::move(entries));
}

BellExpression chsh_matrix() {
    return BellExpression(2, 2, {1.0, 1.0, 1.0, -1.0});
}

}  // namespace bellwit
