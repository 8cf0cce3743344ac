#include "entbounds/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace entbounds {

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

EigenSystem eig_hermitian(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eig_hermitian: matrix must be square");
    if (!is_hermitian(m, herm_tol))
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver did not converge");
    // Eigen sorts ascending; flip to descending.
    EigenSystem out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenSystem es = eig_hermitian(m);
    RealVector w = es.values;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] < -1e-8)
            throw std::domain_error("psd_sqrt: matrix is not positive semidefinite");
        w[i] = std::sqrt(std::max(w[i], 0.0));
    }
    return es.vectors * w.asDiagonal() * es.vectors.adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            std::initializer_list<Subsystem> keep) {
    const long total = static_cast<long>(dims[0]) * dims[1] * dims[2];
    if (rho.rows() != total || rho.cols() != total)
        throw std::invalid_argument("partial_trace: matrix size does not match dims");

    const std::array<long, 3> d{dims[0], dims[1], dims[2]};
    const std::array<long, 3> stride{d[1] * d[2], d[2], 1};

    std::array<bool, 3> kept_flag{false, false, false};
    for (Subsystem s : keep) kept_flag[static_cast<int>(s)] = true;
    std::vector<int> kept, traced;
    for (int s = 0; s < 3; ++s) (kept_flag[s] ? kept : traced).push_back(s);
    if (kept.empty())
        throw std::invalid_argument("partial_trace: must keep at least one subsystem");

    long dim_kept = 1, dim_traced = 1;
    for (int s : kept) dim_kept *= d[s];
    for (int s : traced) dim_traced *= d[s];

    // Flat kept/traced indices enumerate their subsystems in original order,
    // last one fastest (so keep {A,B} yields the usual a*dB + b layout).
    auto full_index = [&](long kflat, long tflat) {
        long idx = 0;
        for (int pos = static_cast<int>(kept.size()) - 1; pos >= 0; --pos) {
            idx += (kflat % d[kept[pos]]) * stride[kept[pos]];
            kflat /= d[kept[pos]];
        }
        for (int pos = static_cast<int>(traced.size()) - 1; pos >= 0; --pos) {
            idx += (tflat % d[traced[pos]]) * stride[traced[pos]];
            tflat /= d[traced[pos]];
        }
        return idx;
    };

    ComplexMatrix out = ComplexMatrix::Zero(dim_kept, dim_kept);
    for (long r = 0; r < dim_kept; ++r) {
        for (long c = 0; c < dim_kept; ++c) {
            Complex acc = 0;
            for (long t = 0; t < dim_traced; ++t) acc += rho(full_index(r, t), full_index(c, t));
            out(r, c) = acc;
        }
    }
    return out;
}

}  // namespace entbounds
