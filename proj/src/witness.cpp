#include "bellwit/witness.hpp"

#include "bellwit/errors.hpp"

namespace bellwit {

std::size_t witness_dimension(std::size_t n, Field field) {
    if (n == 0) throw DomainError("vector dimension must be at least 1");
    return field == Field::Complex ? (n + 1) / 2 : n;
}

}  // namespace bellwit
