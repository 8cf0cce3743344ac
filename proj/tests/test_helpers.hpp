#pragma once

#include "entbounds/measures.hpp"
#include "entbounds/rng.hpp"
#include "entbounds/states.hpp"

#include <utility>
#include <vector>

namespace testutil {

using namespace entbounds;

inline PureTripartiteState from_amps(const Dims& dims, std::vector<Complex> amps) {
    PureTripartiteState s;
    s.dims = dims;
    s.amps = Eigen::Map<ComplexVector>(amps.data(), static_cast<long>(amps.size()));
    return s;
}

// (|000> + |111>)/sqrt(2) on (2,2,2)
inline PureTripartiteState ghz() {
    std::vector<Complex> a(8, 0.0);
    a[0] = a[7] = 1.0 / std::sqrt(2.0);
    return from_amps({2, 2, 2}, std::move(a));
}

// (|001> + |010> + |100>)/sqrt(3) on (2,2,2)
inline PureTripartiteState w_state() {
    std::vector<Complex> a(8, 0.0);
    a[1] = a[2] = a[4] = 1.0 / std::sqrt(3.0);
    return from_amps({2, 2, 2}, std::move(a));
}

// (|00> + |11>)/sqrt(2) with a trivial third party, dims (2,2,1)
inline PureTripartiteState bell_trivial_c() {
    std::vector<Complex> a(4, 0.0);
    a[0] = a[3] = 1.0 / std::sqrt(2.0);
    return from_amps({2, 2, 1}, std::move(a));
}

inline PureTripartiteState product_000() {
    std::vector<Complex> a(8, 0.0);
    a[0] = 1.0;
    return from_amps({2, 2, 2}, std::move(a));
}

inline ComplexVector bell_vector() {
    ComplexVector v = ComplexVector::Zero(4);
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    return v;
}

inline ComplexMatrix random_complex_matrix(int rows, int cols, CounterRng& rng) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

inline ComplexMatrix random_hermitian(int n, CounterRng& rng) {
    const ComplexMatrix g = random_complex_matrix(n, n, rng);
    return 0.5 * (g + g.adjoint()).eval();
}

// Hilbert-Schmidt-style random density matrix G G^dag / tr
inline ComplexMatrix random_density(int n, CounterRng& rng) {
    const ComplexMatrix g = random_complex_matrix(n, n, rng);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline ComplexMatrix random_unitary(int n, CounterRng& rng) {
    const ComplexMatrix g = random_complex_matrix(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

// rank-1 Kraus set {u_k v_k^dag} with whitened v_k so that sum N^dag N = I
inline std::vector<ComplexMatrix> random_rank1_kraus(int dim_c, int count, CounterRng& rng) {
    std::vector<ComplexVector> vs;
    ComplexMatrix s = ComplexMatrix::Zero(dim_c, dim_c);
    for (int k = 0; k < count; ++k) {
        ComplexVector v(dim_c);
        for (int i = 0; i < dim_c; ++i) v[i] = rng.complex_gaussian();
        s += v * v.adjoint();
        vs.push_back(std::move(v));
    }
    const ComplexMatrix whitener = psd_sqrt(s).inverse();
    std::vector<ComplexMatrix> kraus;
    for (int k = 0; k < count; ++k) {
        ComplexVector u(dim_c);
        for (int i = 0; i < dim_c; ++i) u[i] = rng.complex_gaussian();
        u /= u.norm();
        kraus.push_back(u * (whitener * vs[k]).adjoint());
    }
    return kraus;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
