#include "entbounds/oracle.hpp"

#include "entbounds/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace entbounds {

namespace {

constexpr double kRankTol = 1e-12;
constexpr double kZeroWeight = 1e-14;

/// Bilinear spin-flip form x^T (sigma_y kron sigma_y) y (symmetric in x, y).
Complex tau_form(const ComplexVector& x, const ComplexVector& y) {
    return -x[0] * y[3] + x[1] * y[2] + x[2] * y[1] - x[3] * y[0];
}

/**
 * Objective contribution of one subnormalized member x = sqrt(p)|w>, from
 * its spin-flip form value and weight only. |tau| equals p * C(|w>); the
 * entropy path uses the pure-state relation between entropy and concurrence.
 */
double member_value_fast(Complex tau, double p, Objective obj) {
    if (p < 1e-30) return 0.0;
    const double c_sub = std::abs(tau);
    if (obj == Objective::Concurrence) return c_sub;
    const double c = std::min(c_sub / p, 1.0);
    const double mu = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    return p * binary_entropy(mu);
}

/**
 * Reporting route for one member. The entropy goes through the 2x2 marginal
 * spectrum directly, independent of the concurrence relation that steers the
 * search, so reported values cannot inherit a bug from the hot path.
 */
double member_value_report(const ComplexVector& x, Objective obj) {
    const double p = x.squaredNorm();
    if (p < 1e-30) return 0.0;
    if (obj == Objective::Concurrence) return std::abs(tau_form(x, x));
    const double a00 = std::norm(x[0]) + std::norm(x[1]);
    const double a11 = std::norm(x[2]) + std::norm(x[3]);
    const Complex a01 = x[0] * std::conj(x[2]) + x[1] * std::conj(x[3]);
    const double det = a00 * a11 - std::norm(a01);
    const double disc = std::max(0.0, 1.0 - 4.0 * det / (p * p));
    const double mu = std::min(1.0, 0.5 * (1.0 + std::sqrt(disc)));
    return p * binary_entropy(mu);
}

double report_total(const ComplexMatrix& members, Objective obj) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < members.cols(); ++i)
        total += member_value_report(members.col(i), obj);
    return total;
}

double fast_total(const ComplexMatrix& members, Objective obj) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < members.cols(); ++i)
        total += member_value_fast(tau_form(members.col(i), members.col(i)),
                                   members.col(i).squaredNorm(), obj);
    return total;
}

/**
 * Takagi congruence of the 2x2 complex symmetric block [[a, d], [d, b]]:
 * produces a unitary W with W T W^T = diag(s1, s2), s1 >= s2 >= 0 (the
 * singular values of the block). Returns false for a numerically zero block.
 *
 * Rows of W are the conjugated Takagi vectors: the eigenvectors v of the
 * Hermitian matrix conj(T) T satisfy T v = c conj(v) with |c| the singular
 * value, and e^{-i arg(c)/2} v^T diagonalizes the bilinear form.
 */
bool takagi_2x2(Complex a, Complex d, Complex b, Eigen::Matrix2cd& w, double& s1, double& s2) {
    Eigen::Matrix2cd t;
    t << a, d, d, b;
    const Eigen::Matrix2cd h = t.conjugate() * t;  // Hermitian PSD
    const double h00 = h(0, 0).real(), h11 = h(1, 1).real();
    const Complex h01 = h(0, 1);
    const double mean = 0.5 * (h00 + h11);
    const double rad = std::sqrt(std::max(0.0, 0.25 * (h00 - h11) * (h00 - h11) + std::norm(h01)));
    s1 = std::sqrt(std::max(0.0, mean + rad));
    s2 = std::sqrt(std::max(0.0, mean - rad));
    if (s1 < 1e-18) return false;

    Eigen::Vector2cd v1, v2;
    if (rad > 1e-13 * std::max(1.0, mean + rad)) {
        // dominant eigenvector of h from the better-conditioned formula; the
        // second one as the exact orthonormal complement, so the congruence
        // stays unitary to machine precision even near degeneracy
        Eigen::Vector2cd cand_a, cand_b;
        cand_a << h01, Complex(mean + rad - h00);
        cand_b << Complex(mean + rad - h11), std::conj(h01);
        v1 = (cand_a.norm() >= cand_b.norm()) ? cand_a : cand_b;
        if (v1.norm() < 1e-150) {
            v1 << 1.0, 0.0;  // h is already diagonal with equal formula norms
        }
        v1.normalize();
        v2 << -std::conj(v1(1)), std::conj(v1(0));
        const Complex c1 = v1.transpose() * t * v1;
        const Complex c2 = v2.transpose() * t * v2;
        w.row(0) = std::polar(1.0, -0.5 * std::arg(c1)) * v1.transpose();
        w.row(1) = std::polar(1.0, -0.5 * std::arg(c2)) * v2.transpose();
        return true;
    }

    // degenerate singular values: u = x + T conj(x)/s1 satisfies T conj(u) = s1 u
    Eigen::Vector2cd u1 = Eigen::Vector2cd::Zero();
    double best_norm = -1.0;
    const Eigen::Vector2cd candidates[4] = {{Complex(1, 0), Complex(0, 0)},
                                            {Complex(0, 0), Complex(1, 0)},
                                            {Complex(1, 0), Complex(1, 0)},
                                            {Complex(1, 0), Complex(0, 1)}};
    for (const auto& x : candidates) {
        const Eigen::Vector2cd y = x + (t * x.conjugate()) / s1;
        if (y.norm() > best_norm) {
            best_norm = y.norm();
            u1 = y;
        }
    }
    if (best_norm < 1e-8) return false;
    u1.normalize();
    Eigen::Vector2cd u2;
    u2 << -std::conj(u1(1)), std::conj(u1(0));
    const Complex c2 = u2.adjoint() * (t * u2.conjugate());
    u2 *= std::polar(1.0, 0.5 * std::arg(c2));
    w.row(0) = u1.adjoint();
    w.row(1) = u2.adjoint();
    return true;
}

/// Applies a 2x2 unitary move to member columns i and j.
void apply_pair_unitary(ComplexMatrix& members, Eigen::Index i, Eigen::Index j,
                        const Eigen::Matrix2cd& m) {
    const ComplexVector xi = members.col(i);
    const ComplexVector xj = members.col(j);
    members.col(i) = m(0, 0) * xi + m(0, 1) * xj;
    members.col(j) = m(1, 0) * xi + m(1, 1) * xj;
}

/**
 * Exact pair step for the concurrence objective: the extremal value of
 * |tau'_ii| + |tau'_jj| over the full two-member unitary congruence is
 * s1 + s2 (max) or s1 - s2 (min) for the block's singular values, attained
 * by the Takagi rotation, for the minimum composed with a phase flip and the
 * real rotation that zeroes one diagonal entry. Returns the improvement of
 * the sign-adjusted objective, applying the move when it helps.
 */
double pair_step_concurrence(ComplexMatrix& members, Eigen::Index i, Eigen::Index j,
                             double sign) {
    const Complex a = tau_form(members.col(i), members.col(i));
    const Complex b = tau_form(members.col(j), members.col(j));
    const Complex d = tau_form(members.col(i), members.col(j));
    const double base = std::abs(a) + std::abs(b);

    Eigen::Matrix2cd w;
    double s1 = 0.0, s2 = 0.0;
    if (!takagi_2x2(a, d, b, w, s1, s2)) return 0.0;
    const double target = (sign > 0.0) ? s1 + s2 : s1 - s2;
    if (sign * (target - base) <= 1e-14 * std::max(1.0, base)) return 0.0;

    Eigen::Matrix2cd move = w;
    if (sign < 0.0 && s2 > 1e-18) {
        // diag(s1, s2) -> diag(s1, -s2) -> both entries (s1 - s2)/2: the
        // equalizing split keeps the whole ensemble contracting instead of
        // concentrating weight, which is what lets later sweeps keep going
        Eigen::Matrix2cd flip = Eigen::Matrix2cd::Identity();
        flip(1, 1) = Complex(0, 1);
        const double half_sqrt2 = std::numbers::sqrt2 / 2.0;
        Eigen::Matrix2cd rot;
        rot << half_sqrt2, half_sqrt2, -half_sqrt2, half_sqrt2;
        move = rot * flip * w;
    }

    // verify before touching the members
    Eigen::Matrix2cd block;
    block << a, d, d, b;
    const Eigen::Matrix2cd rotated = move * block * move.transpose();
    const double newval = std::abs(rotated(0, 0)) + std::abs(rotated(1, 1));
    if (sign * (newval - base) <= 1e-15) return 0.0;

    apply_pair_unitary(members, i, j, move);
    return sign * (newval - base);
}

/// O(1) evaluation of the two-member entropy objective under the pair move
///   x_j pre-phased by e^{i psi}, then
///   x_i' =  cos(t) x_i + sin(t) e^{i phi} x_j
///   x_j' = -sin(t) e^{-i phi} x_i + cos(t) x_j
struct EntropyPairContext {
    Complex tii, tjj, tij;
    Complex gij;  ///< <x_i, x_j>
    double gii, gjj;

    double eval(double theta, double phi, double psi) const {
        const Complex pre = std::polar(1.0, psi);
        const Complex b_ = pre * pre * tjj;
        const Complex d_ = pre * tij;
        const Complex g_ = pre * gij;
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex e = std::polar(1.0, phi);
        const Complex a2 = s * e;
        const Complex b1 = -s * std::conj(e);
        const Complex tii_new = c * c * tii + 2.0 * c * a2 * d_ + a2 * a2 * b_;
        const Complex tjj_new = b1 * b1 * tii + 2.0 * b1 * c * d_ + c * c * b_;
        const double re = (e * g_).real();
        const double pii = c * c * gii + s * s * gjj + 2.0 * c * s * re;
        const double pjj = s * s * gii + c * c * gjj - 2.0 * c * s * re;
        return member_value_fast(tii_new, pii, Objective::Entropy) +
               member_value_fast(tjj_new, pjj, Objective::Entropy);
    }
};

template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < iters; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    return (f1 > f2) ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Search-based pair step for the entropy objective (no closed-form target):
/// coarse grid over the three move parameters plus golden-section refinement.
double pair_step_entropy(ComplexMatrix& members, Eigen::Index i, Eigen::Index j, double sign) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    constexpr double kPi = std::numbers::pi;

    const EntropyPairContext ctx{tau_form(members.col(i), members.col(i)),
                                 tau_form(members.col(j), members.col(j)),
                                 tau_form(members.col(i), members.col(j)),
                                 members.col(i).dot(members.col(j)),
                                 members.col(i).squaredNorm(),
                                 members.col(j).squaredNorm()};
    auto value_at = [&](double th, double ph, double ps) { return sign * ctx.eval(th, ph, ps); };

    const double base = value_at(0.0, 0.0, 0.0);
    double best_v = base, best_th = 0.0, best_ph = 0.0, best_ps = 0.0;
    for (int a = 1; a <= 6; ++a) {
        const double th = a * kHalfPi / 7.0;
        for (int b = 0; b < 8; ++b) {
            const double ph = b * kTwoPi / 8.0;
            for (int c = 0; c < 4; ++c) {
                const double ps = c * kPi / 4.0;  // pre-phase has period pi here
                const double v = value_at(th, ph, ps);
                if (v > best_v) {
                    best_v = v;
                    best_th = th;
                    best_ph = ph;
                    best_ps = ps;
                }
            }
        }
    }
    if (best_th != 0.0) {
        double wt = 0.25, wp = 0.45, ws = 0.45;
        for (int round = 0; round < 4; ++round) {
            auto [th, v1] = golden_max([&](double t) { return value_at(t, best_ph, best_ps); },
                                       best_th - wt, best_th + wt, 32);
            best_th = th;
            auto [ph, v2] = golden_max([&](double p) { return value_at(best_th, p, best_ps); },
                                       best_ph - wp, best_ph + wp, 32);
            best_ph = ph;
            auto [ps, v3] = golden_max([&](double q) { return value_at(best_th, best_ph, q); },
                                       best_ps - ws, best_ps + ws, 32);
            best_ps = ps;
            best_v = v3;
            wt *= 0.4;
            wp *= 0.4;
            ws *= 0.4;
        }
    }
    if (best_v <= base + 1e-15) return 0.0;

    Eigen::Matrix2cd move;
    const double c = std::cos(best_th), s = std::sin(best_th);
    const Complex e = std::polar(1.0, best_ph);
    const Complex pre = std::polar(1.0, best_ps);
    move << c, s * e * pre, -s * std::conj(e), c * pre;
    apply_pair_unitary(members, i, j, move);
    return best_v - base;
}

/// One sweep over all member pairs; returns the accumulated improvement of
/// the sign-adjusted objective (sign = +1 maximizes, -1 minimizes).
double sweep_once(ComplexMatrix& members, Objective obj, double sign) {
    const Eigen::Index m = members.cols();
    double improved = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            improved += (obj == Objective::Concurrence)
                            ? pair_step_concurrence(members, i, j, sign)
                            : pair_step_entropy(members, i, j, sign);
        }
    }
    return improved;
}

/// One-time phase flip turning an aligned configuration into the cancelling
/// one: the member with the largest form value keeps its phase, every other
/// member is rotated so its value flips sign. Objective-neutral.
void flip_all_but_lead(ComplexMatrix& members) {
    Eigen::Index lead = 0;
    double lead_abs = -1.0;
    for (Eigen::Index i = 0; i < members.cols(); ++i) {
        const double a = std::abs(tau_form(members.col(i), members.col(i)));
        if (a > lead_abs) {
            lead_abs = a;
            lead = i;
        }
    }
    for (Eigen::Index i = 0; i < members.cols(); ++i)
        if (i != lead) members.col(i) *= Complex(0, 1);
}

ComplexMatrix random_isometry(int rows, int cols, CounterRng& rng) {
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ() * ComplexMatrix::Identity(rows, cols);
}

Ensemble ensemble_from_members(const ComplexMatrix& members) {
    Ensemble out;
    for (Eigen::Index i = 0; i < members.cols(); ++i) {
        const double p = members.col(i).squaredNorm();
        if (p < kZeroWeight) continue;
        out.members.push_back({p, members.col(i) / std::sqrt(p)});
    }
    return out;
}

/// Spectral data of a density matrix restricted to its numerical rank.
struct Spectral {
    ComplexMatrix subnorm_vectors;  ///< columns sqrt(mu_k) |v_k>, k = 1..rank
    int rank;
};

Spectral spectral_decomposition(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("density matrix must be square");
    if (!is_hermitian(rho, 1e-10))
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw std::invalid_argument("density matrix trace is not 1");
    const EigenSystem es = eig_hermitian(rho);
    int rank = 0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        if (es.values[i] < -1e-8)
            throw std::domain_error("density matrix is not positive semidefinite");
        if (es.values[i] > kRankTol) ++rank;
    }
    if (rank == 0) throw std::invalid_argument("density matrix has no support");
    Spectral out;
    out.rank = rank;
    out.subnorm_vectors =
        es.vectors.leftCols(rank) * es.values.head(rank).array().sqrt().matrix().asDiagonal();
    return out;
}

}  // namespace

Ensemble hjw_ensemble(const ComplexMatrix& rho, const ComplexMatrix& isometry) {
    const Spectral sp = spectral_decomposition(rho);
    if (isometry.cols() != sp.rank)
        throw std::invalid_argument(
            "hjw_ensemble: isometry needs one column per nonzero eigenvalue");
    if (isometry.rows() < isometry.cols())
        throw std::invalid_argument("hjw_ensemble: isometry needs at least rank-many rows");
    const ComplexMatrix gram = isometry.adjoint() * isometry;
    if ((gram - ComplexMatrix::Identity(sp.rank, sp.rank)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("hjw_ensemble: matrix is not an isometry");
    // member i = sum_k U_ik sqrt(mu_k)|v_k>
    const ComplexMatrix members = sp.subnorm_vectors * isometry.transpose();
    return ensemble_from_members(members);
}

OptimizeResult optimize_avg(const ComplexMatrix& rho, Objective objective, Direction direction,
                            const DecompositionSearch& search, std::uint64_t seed) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("optimize_avg: expected a 2-qubit density matrix");
    if (search.restarts < 1 || search.sweeps < 1 || !(search.tolerance > 0.0) ||
        search.ensemble_size < 0)
        throw std::invalid_argument("optimize_avg: search parameters must be positive");

    const Spectral sp = spectral_decomposition(rho);
    const int m = (search.ensemble_size > 0) ? search.ensemble_size : 2 * sp.rank;
    if (m < sp.rank)
        throw std::invalid_argument("optimize_avg: ensemble size below the rank");

    const double sign = (direction == Direction::Max) ? 1.0 : -1.0;

    OptimizeResult result;
    double best_signed = -std::numeric_limits<double>::infinity();
    ComplexMatrix best_members;

    for (int restart = 0; restart < search.restarts; ++restart) {
        ComplexMatrix isometry;
        if (restart == 0) {
            isometry = ComplexMatrix::Identity(m, sp.rank);  // eigen-ensemble start
        } else {
            CounterRng rng(seed, static_cast<std::uint64_t>(restart));
            isometry = random_isometry(m, sp.rank, rng);
        }
        ComplexMatrix members = sp.subnorm_vectors * isometry.transpose();

        if (direction == Direction::Min) {
            // Warm start: converge onto the aligned (Takagi) configuration
            // first, then flip all phases but the leading one. From there the
            // cancelling minimum is downhill for the pair moves.
            for (int sweep = 0; sweep < search.sweeps; ++sweep)
                if (sweep_once(members, Objective::Concurrence, 1.0) <= 1e-12) break;
            flip_all_but_lead(members);
        }

        for (int sweep = 0; sweep < search.sweeps; ++sweep) {
            const double improved = sweep_once(members, objective, sign);

            // Selection and history use the independent reporting route;
            // the running best is monotone by construction.
            const double signed_report = sign * report_total(members, objective);
            if (signed_report > best_signed) {
                best_signed = signed_report;
                best_members = members;
            }
            result.history.push_back(sign * best_signed);

            const double scale = std::max(1.0, std::abs(fast_total(members, objective)));
            if (improved <= search.tolerance * scale) break;
        }
    }

    result.value = sign * best_signed;
    result.ensemble = ensemble_from_members(best_members);
    return result;
}

double estimate_Ea(const PureTripartiteState& gamma, const DecompositionSearch& search,
                   std::uint64_t seed) {
    if (gamma.dims[0] != 2 || gamma.dims[1] != 2)
        throw std::invalid_argument("estimate_Ea: requires dA = dB = 2");
    return optimize_avg(reduced_ab(gamma), Objective::Entropy, Direction::Max, search, seed).value;
}

}  // namespace entbounds
