#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>

namespace entbounds {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions (dA, dB, dC). The flat basis index is
/// (a*dB + b)*dC + c, i.e. subsystem C varies fastest. Every module shares
/// this convention.
using Dims = std::array<int, 3>;

enum class Subsystem { A = 0, B = 1, C = 2 };

struct EigenSystem {
    RealVector values;      ///< real eigenvalues, descending
    ComplexMatrix vectors;  ///< orthonormal eigenvectors as columns, same order
};

/// Largest elementwise |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/**
 * Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
 * Throws std::invalid_argument for non-square input or when the Hermiticity
 * defect exceeds `herm_tol`.
 */
EigenSystem eig_hermitian(const ComplexMatrix& m, double herm_tol = 1e-10);

/**
 * Hermitian PSD square root. Eigenvalues above -1e-8 are clamped to zero
 * before the square root (roundoff); anything below that raises
 * std::domain_error as a genuinely non-PSD input.
 */
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Kronecker product; dimensions multiply, (A kron B)(C kron D) = AC kron BD.
template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                Complex(a(i, j)) * b.template cast<Complex>();
    return out;
}

/**
 * Partial trace of an operator on the tripartite space described by `dims`,
 * keeping the subsystems in `keep` (in their original order) and tracing the
 * rest. Preserves the trace; Hermitian input gives Hermitian output.
 * Throws std::invalid_argument when the matrix size does not match dims.
 */
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::initializer_list<Subsystem> keep);

}  // namespace entbounds
