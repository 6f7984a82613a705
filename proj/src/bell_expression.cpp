#include "bellwit/bell_expression.hpp"

#include <cmath>
#include <string>

#include "bellwit/errors.hpp"

namespace bellwit {

BellExpression::BellExpression(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DomainError("Bell expression needs at least one row and one column");
    }
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("Bell expression entry count " + std::to_string(entries_.size()) +
                             " does not match shape " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    bool any_nonzero = false;
    for (double v : entries_) {
        if (!std::isfinite(v)) throw DomainError("Bell expression entries must be finite");
        if (v != 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw DomainError("all-zero Bell expression rejected");
}

BellExpression BellExpression::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw DomainError("Bell expression needs at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged rows in Bell expression");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return BellExpression(rows.size(), cols, std::move(flat));
}

double BellExpression::abs_sum() const {
    double s = 0.0;
    for (double v : entries_) s += std::abs(v);
    return s;
}

}  // namespace bellwit
