#include "entbounds/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace entbounds {

namespace {

double entropy_term(double p) {
    return (p > 0.0) ? -p * std::log2(p) : 0.0;
}

void check_density_matrix(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("expected a 4x4 (2-qubit) density matrix");
    if (!is_hermitian(rho, 1e-10))
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw std::invalid_argument("density matrix trace is not 1");
}

}  // namespace

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("binary_entropy: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    return entropy_term(x) + entropy_term(1.0 - x);
}

double entropy_pure(const ComplexVector& state, int dim_a, int dim_b) {
    if (state.size() != static_cast<long>(dim_a) * dim_b)
        throw std::invalid_argument("entropy_pure: state size does not match dims");
    if (std::abs(state.squaredNorm() - 1.0) > 1e-8)
        throw std::invalid_argument("entropy_pure: state is not normalized");

    // state[(a)*dB + b] as a dA x dB matrix; the smaller marginal is cheaper.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(state.data(), dim_a, dim_b);
    ComplexMatrix marginal;
    if (dim_a <= dim_b)
        marginal = m * m.adjoint();
    else
        marginal = m.transpose() * m.conjugate();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(marginal, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        entropy += entropy_term(std::max(solver.eigenvalues()[i], 0.0));
    return entropy;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix y = [] {
        ComplexMatrix m(2, 2);
        m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        return m;
    }();
    return y;
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("spin_flip: expected a 4x4 matrix");
    static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    return yy * rho.conjugate() * yy;
}

LambdaSpectrum lambda_spectrum(const ComplexMatrix& rho) {
    check_density_matrix(rho);
    // With rho = X X^dag, the lambdas are the singular values of the complex
    // symmetric matrix X^T (sigma_y kron sigma_y) X: its Takagi squares are the
    // eigenvalues of rho * rho_tilde, i.e. of sqrt(rho) rho_tilde sqrt(rho).
    // Singular values avoid the square-root noise amplification that taking
    // sqrt of near-zero eigenvalues would cause on rank-deficient input.
    const EigenSystem es = eig_hermitian(rho);
    RealVector w = es.values;
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (w[i] < -1e-8) throw std::domain_error("lambda_spectrum: invalid density matrix");
        w[i] = std::sqrt(std::max(w[i], 0.0));
    }
    const ComplexMatrix x = es.vectors * w.asDiagonal();
    static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const ComplexMatrix t = x.transpose() * yy * x;
    Eigen::JacobiSVD<ComplexMatrix> svd(t);
    LambdaSpectrum out;
    for (int i = 0; i < 4; ++i) out.lambdas[i] = svd.singularValues()[i];
    return out;
}

double concurrence_pure(const ComplexVector& state) {
    if (state.size() != 4)
        throw std::invalid_argument("concurrence_pure: expected a 2-qubit state");
    if (std::abs(state.squaredNorm() - 1.0) > 1e-8)
        throw std::invalid_argument("concurrence_pure: state is not normalized");
    const double c = 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
    return std::min(c, 1.0);
}

double eof_from_concurrence(double c) {
    if (c < -1e-12 || c > 1.0 + 1e-12)
        throw std::domain_error("eof_from_concurrence: concurrence outside [0,1]");
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

ComplexMatrix reduced_ab(const PureTripartiteState& gamma) {
    const PureTripartiteState g = gamma.normalized();
    const int dAB = g.dims[0] * g.dims[1];
    const int dC = g.dims[2];
    // amps[(ab)*dC + c] as a dAB x dC matrix; rho_AB = M M^dag traces out C.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(g.amps.data(), dAB, dC);
    return m * m.adjoint();
}

MeasureSet measures_of(const PureTripartiteState& gamma) {
    if (gamma.dims[0] != 2 || gamma.dims[1] != 2)
        throw std::invalid_argument("measures_of: requires dA = dB = 2");
    const LambdaSpectrum ls = lambda_spectrum(reduced_ab(gamma));
    MeasureSet out;
    out.concurrence_C = ls.concurrence();
    out.coa_Ca = ls.assistance();
    out.entropy_E = eof_from_concurrence(out.concurrence_C);
    return out;
}

}  // namespace entbounds
