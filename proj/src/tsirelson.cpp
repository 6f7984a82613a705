#include "bellwit/tsirelson.hpp"

#include <cmath>
#include <string>

#include "bellwit/errors.hpp"

namespace bellwit {

namespace {

using Complex = std::complex<double>;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return m;
}

// Z^(x)(prefix) (x) middle (x) I^(x)(suffix) over `qubits` factors.
ComplexMatrix chain(std::size_t qubits, std::size_t position, const ComplexMatrix& middle) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < qubits; ++q) {
        if (q < position) {
            out = kron(out, pauli_z());
        } else if (q == position) {
            out = kron(out, middle);
        } else {
            out = kron(out, ComplexMatrix::Identity(2, 2));
        }
    }
    return out;
}

void check_strategy_vectors(const UnitVectors& vs, std::size_t m, const char* who) {
    for (const auto& v : vs) {
        if (v.size() != m) throw DimensionError(std::string(who) + " vectors must share R^m");
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTol) {
            throw DomainError(std::string(who) + " vectors must have unit norm");
        }
    }
}

ComplexMatrix combine(const std::vector<ComplexMatrix>& generators,
                      const std::vector<double>& coeffs) {
    ComplexMatrix out = ComplexMatrix::Zero(generators.front().rows(), generators.front().cols());
    for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k] * generators[k];
    return out;
}

}  // namespace

std::vector<ComplexMatrix> clifford_generators(std::size_t m) {
    if (m < 1) throw DomainError("need at least one generator");
    if (m > kCliffordGeneratorCap) {
        throw CapacityError("generator construction capped at m = " +
                            std::to_string(kCliffordGeneratorCap));
    }
    const std::size_t qubits = m / 2;
    std::vector<ComplexMatrix> generators;
    generators.reserve(m);
    for (std::size_t j = 0; j < qubits && generators.size() < m; ++j) {
        generators.push_back(chain(qubits, j, pauli_x()));
        if (generators.size() < m) generators.push_back(chain(qubits, j, pauli_y()));
    }
    if (generators.size() < m) {
        // Odd m: the all-Z chain completes the anticommuting family.
        ComplexMatrix z = ComplexMatrix::Identity(1, 1);
        for (std::size_t q = 0; q < qubits; ++q) z = kron(z, pauli_z());
        generators.push_back(z);
    }
    return generators;
}

QuantumRealization realize(const UnitVectors& alice, const UnitVectors& bob) {
    if (alice.empty() || bob.empty()) throw DomainError("realize needs non-empty vector sets");
    const std::size_t m = alice.front().size();
    check_strategy_vectors(alice, m, "Alice");
    check_strategy_vectors(bob, m, "Bob");

    QuantumRealization r;
    r.generators = clifford_generators(m);
    r.local_dim = static_cast<std::size_t>(r.generators.front().rows());

    r.alice_obs.reserve(alice.size());
    for (const auto& a : alice) r.alice_obs.push_back(combine(r.generators, a));
    r.bob_obs.reserve(bob.size());
    for (const auto& b : bob) {
        r.bob_obs.push_back(combine(r.generators, b).transpose());
    }

    const auto d = static_cast<Eigen::Index>(r.local_dim);
    r.state = Eigen::VectorXcd::Zero(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(r.local_dim));
    for (Eigen::Index t = 0; t < d; ++t) r.state(t * d + t) = Complex(amp, 0.0);
    return r;
}

RealizationCheck verify_realization(const QuantumRealization& realization,
                                    const BellExpression& expr, const Strategy& target) {
    if (target.alice.size() != expr.rows() || target.bob.size() != expr.cols() ||
        realization.alice_obs.size() != expr.rows() ||
        realization.bob_obs.size() != expr.cols()) {
        throw DimensionError("realization, expression and strategy shapes disagree");
    }

    const auto d = static_cast<Eigen::Index>(realization.local_dim);
    RealizationCheck check;

    const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
    auto involution_residual = [&](const ComplexMatrix& o) {
        return ((o * o - identity).cwiseAbs()).maxCoeff();
    };
    for (const auto& o : realization.alice_obs) {
        check.max_involution_residual =
            std::max(check.max_involution_residual, involution_residual(o));
    }
    for (const auto& o : realization.bob_obs) {
        check.max_involution_residual =
            std::max(check.max_involution_residual, involution_residual(o));
    }

    const auto& gens = realization.generators;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
            ComplexMatrix anti = gens[k] * gens[l] + gens[l] * gens[k];
            if (k == l) anti -= 2.0 * identity;
            check.max_anticommutator_residual =
                std::max(check.max_anticommutator_residual, anti.cwiseAbs().maxCoeff());
        }
    }

    // <psi| A (x) B |psi> = <Psi, A Psi B^T>_F with Psi = reshape(psi, D x D).
    ComplexMatrix psi(d, d);
    for (Eigen::Index s = 0; s < d; ++s)
        for (Eigen::Index t = 0; t < d; ++t) psi(s, t) = realization.state(s * d + t);

    double realized_value = 0.0;
    for (std::size_t i = 0; i < expr.rows(); ++i) {
        const ComplexMatrix left = realization.alice_obs[i] * psi;
        for (std::size_t j = 0; j < expr.cols(); ++j) {
            const ComplexMatrix mapped = left * realization.bob_obs[j].transpose();
            const Complex expectation = (psi.conjugate().cwiseProduct(mapped)).sum();
            double dot = 0.0;
            for (std::size_t k = 0; k < target.dim; ++k) {
                dot += target.alice[i][k] * target.bob[j][k];
            }
            const double err = std::abs(expectation - Complex(dot, 0.0));
            check.max_correlation_error = std::max(check.max_correlation_error, err);
            realized_value += expr(i, j) * expectation.real();
        }
    }
    check.realized_bell_value = realized_value;
    check.strategy_bell_value = evaluate_strategy(expr, target);
    check.passed = check.max_correlation_error < 1e-10 &&
                   check.max_involution_residual < 1e-10 &&
                   check.max_anticommutator_residual < 1e-10;
    return check;
}

}  // namespace bellwit
