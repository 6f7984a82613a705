#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "bellwit/bell_expression.hpp"
#include "bellwit/rng.hpp"
#include "bellwit/strategy.hpp"

namespace bellwit {

using ComplexMatrix = Eigen::MatrixXcd;

/// Largest vector dimension accepted for realization (keeps the dense
/// complex algebra at D <= 64, product dimension <= 4096).
inline constexpr std::size_t kCliffordGeneratorCap = 12;

/// m pairwise anticommuting Hermitian involutions on D = 2^floor(m/2)
/// dimensions, built from the X/Y/Z one-qubit involutions:
/// G_(2j-1) = Z^(j-1) (x) X (x) I..., G_(2j) = Z^(j-1) (x) Y (x) I...,
/// G_(2k+1) = Z^k.
std::vector<ComplexMatrix> clifford_generators(std::size_t m);

/// Explicit quantum model reproducing a vector strategy: observables are
/// generator combinations, Bob's side entrywise-transposed in the
/// computational basis, measured on the maximally entangled state.
struct QuantumRealization {
    std::size_t local_dim = 0;  // D = 2^floor(m/2)
    std::vector<ComplexMatrix> generators;
    std::vector<ComplexMatrix> alice_obs;
    std::vector<ComplexMatrix> bob_obs;
    Eigen::VectorXcd state;  // (1/sqrt(D)) sum_t |t>|t>, length D^2
};

/// Builds A_i = sum_k a_i[k] G_k and B_j = (sum_k b_j[k] G_k)^T; then
/// <psi| A_i (x) B_j |psi> = Tr(A_i B_j^T)/D = <a_i, b_j>.
QuantumRealization realize(const UnitVectors& alice, const UnitVectors& bob);

struct RealizationCheck {
    double max_correlation_error = 0.0;     // |<psi|A(x)B|psi> - a.b| over settings
    double max_involution_residual = 0.0;   // max |O^2 - I| entry over observables
    double max_anticommutator_residual = 0.0;  // max |G_k G_l + G_l G_k - 2 delta I|
    double realized_bell_value = 0.0;
    double strategy_bell_value = 0.0;
    bool passed = false;  // all residuals below 1e-10
};

/// Measures every residual of a realization against its target strategy.
/// Expectations are evaluated from the stored state via
/// <psi|A(x)B|psi> = <Psi, A Psi B^T> with Psi the reshaped state.
RealizationCheck verify_realization(const QuantumRealization& realization,
                                    const BellExpression& expr, const Strategy& target);

}  // namespace bellwit
