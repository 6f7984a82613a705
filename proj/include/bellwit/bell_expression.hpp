#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bellwit {

/// Real coefficient matrix M of a correlation Bell expression
/// sum_ij M(i,j) <a_i, b_j>. Row index = Alice setting, column = Bob setting.
///
/// Construction rejects empty shapes, non-finite entries and the all-zero
/// matrix. Immutable after construction.
class BellExpression {
public:
    BellExpression(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static BellExpression from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

    const std::vector<double>& entries() const { return entries_; }

    /// sum |M_ij|; an a-priori bound on any strategy value.
    double abs_sum() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;  // row-major
};

}  // namespace bellwit
