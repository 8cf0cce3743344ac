#pragma once

#include "entbounds/measures.hpp"
#include "entbounds/states.hpp"

#include <cstdint>
#include <vector>

namespace entbounds {

/// Search knobs for the decomposition optimizer.
struct DecompositionSearch {
    int ensemble_size = 0;    ///< members m (>= rank); 0 means twice the rank
    int restarts = 32;        ///< independent random starts
    int sweeps = 500;         ///< rotation sweeps per restart (step budget)
    double tolerance = 1e-9;  ///< relative per-sweep improvement below which a restart stops
};

enum class Objective { Concurrence, Entropy };
enum class Direction { Min, Max };

/**
 * Ensemble generated from the eigen-decomposition of rho by an isometry U
 * (one column per nonzero eigenvalue, U^dag U = I): member i is
 * sum_k U_ik sqrt(mu_k) |v_k>, carrying its own weight. The weighted mixture
 * reconstructs rho for every valid isometry.
 */
Ensemble hjw_ensemble(const ComplexMatrix& rho, const ComplexMatrix& isometry);

struct OptimizeResult {
    double value;                 ///< best average found (one-sided estimate)
    Ensemble ensemble;            ///< decomposition achieving `value`
    std::vector<double> history;  ///< running best per sweep, monotone in `direction`
};

/**
 * Extremal average of a pure-state measure over decompositions of a 2-qubit
 * density matrix: random isometry restarts plus pairwise member rotations
 * with a grid-seeded golden-section line search on the rotation angle,
 * accepted only when improving. The returned value is a certified one-sided
 * estimate: <= the true maximum for Direction::Max, >= the true minimum for
 * Direction::Min. Deterministic for fixed (seed, search).
 */
OptimizeResult optimize_avg(const ComplexMatrix& rho, Objective objective, Direction direction,
                            const DecompositionSearch& search, std::uint64_t seed);

/**
 * Lower estimate of the entanglement of assistance of a (2,2,n) state:
 * the best average marginal entropy found over decompositions of Tr_C.
 */
double estimate_Ea(const PureTripartiteState& gamma, const DecompositionSearch& search,
                   std::uint64_t seed);

}  // namespace entbounds
