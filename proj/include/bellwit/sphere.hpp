#pragma once

#include <cstddef>
#include <cstdint>

#include "bellwit/bell_expression.hpp"
#include "bellwit/rng.hpp"

namespace bellwit {

/// s_i = integral of sin^i(phi) over [0, pi], via the stable recurrence
/// s_i = s_(i-2) (i-1)/i with s_0 = pi, s_1 = 2. Equals
/// sqrt(pi) Gamma((i+1)/2) / Gamma((i+2)/2) without Gamma overflow.
double s_integral(std::size_t i);

/// Table s_0..s_up_to in one pass.
std::vector<double> s_integrals(std::size_t up_to);

/// Maximum of the sphere expression with kernel m<x,y> over n-dimensional
/// strategies: 1 for n >= m, otherwise (s_(m-1)/s_m) (s_n/s_(n-1)).
double analytic_tn(std::size_t m, std::size_t n);

/// m -> infinity limit of the maximum: s_n/s_(n-1).
double limit_tn(std::size_t n);

/// Quantum/classical ratio in the m -> infinity limit: (pi/2) s_n/s_(n-1).
/// Strictly increasing in n with supremum pi/2.
double limit_ratio(std::size_t n);

/// s_n/s_(n-1) via the even/odd Wallis products; an algebraically
/// independent route used to cross-check the recurrence.
double wallis_sine_ratio(std::size_t n);

/// count i.i.d. uniform points on S^(m-1), deterministic in (seed, stream).
UnitVectors sample_sphere_points(std::size_t m, std::size_t count, std::uint64_t seed,
                                 std::uint64_t stream);

/// Monte-Carlo discretization of the sphere expression: K sample points per
/// side (Alice stream 0, Bob stream 1) and entries m <x_k, y_l> / K^2.
BellExpression discretize_sphere_expression(std::size_t m, std::size_t points,
                                            std::uint64_t seed);

/// The known optimal Bob strategy evaluated at sample points: normalized
/// projection onto the last n coordinates; a projection below 1e-12 is
/// assigned the first basis vector of the subspace.
UnitVectors analytic_sphere_strategy(std::size_t m, std::size_t n,
                                     const UnitVectors& bob_points);

/// Overlap coefficient of the optimal strategy with each spanning
/// coordinate: s_(m-1) / (n s_(n-1)), independent of the component index.
double lambda_value(std::size_t m, std::size_t n);

}  // namespace bellwit
