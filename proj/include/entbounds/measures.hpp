#pragma once

#include "entbounds/states.hpp"

#include <array>

namespace entbounds {

/**
 * Descending square roots of the eigenvalues of rho * rho_tilde for a
 * 2-qubit density matrix (equal to the eigenvalues of the Hermitian
 * similarity sqrt(rho) rho_tilde sqrt(rho), and computed as the singular
 * values of X^T (sigma_y kron sigma_y) X for rho = X X^dag). They carry
 * both extremal decomposition averages of the concurrence in closed form.
 */
struct LambdaSpectrum {
    std::array<double, 4> lambdas{};  // descending, clamped >= 0

    /// Wootters concurrence: max{0, l1 - l2 - l3 - l4}.
    double concurrence() const {
        return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
    }
    /// Concurrence of assistance: l1 + l2 + l3 + l4 = F(rho, rho_tilde).
    double assistance() const {
        return lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3];
    }
};

/// The three closed-form measures of one reduced 2-qubit state.
struct MeasureSet {
    double entropy_E;       ///< entanglement of formation, ebits
    double concurrence_C;   ///< Wootters concurrence, in [0,1]
    double coa_Ca;          ///< concurrence of assistance, in [0,1]
};

/// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 := 0. Domain [0,1].
double binary_entropy(double x);

/**
 * Entanglement entropy of a normalized bipartite pure state: the von Neumann
 * entropy (base 2) of either marginal.
 */
double entropy_pure(const ComplexVector& state, int dim_a, int dim_b);

const ComplexMatrix& pauli_y();

/// Spin flip (sigma_y kron sigma_y) rho^* (sigma_y kron sigma_y) of a 2-qubit matrix.
ComplexMatrix spin_flip(const ComplexMatrix& rho);

/**
 * Lambda spectrum of a 2-qubit density matrix (Hermitian PSD, unit trace
 * within 1e-9). Throws std::invalid_argument / std::domain_error for
 * anything that is not a valid density matrix.
 */
LambdaSpectrum lambda_spectrum(const ComplexMatrix& rho);

/// |<state^* | sigma_y kron sigma_y | state>| of a normalized 2-qubit pure state.
double concurrence_pure(const ComplexVector& state);

/// Two-qubit entanglement of formation from the concurrence:
/// h((1 + sqrt(1 - c^2)) / 2).
double eof_from_concurrence(double c);

/// Reduced state on A,B of the (internally normalized) tripartite state.
ComplexMatrix reduced_ab(const PureTripartiteState& gamma);

/**
 * All three measures of a (2,2,n) tripartite state, evaluated on the
 * normalized state: C and C_a from the lambda spectrum of Tr_C, the
 * entropy from the entanglement-of-formation relation.
 */
MeasureSet measures_of(const PureTripartiteState& gamma);

}  // namespace entbounds
