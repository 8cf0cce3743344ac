#pragma once

#include "entbounds/linalg.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace entbounds {

/**
 * Pure state of a tripartite system. Amplitudes are stored flat with
 * subsystem C varying fastest: amps[(a*dB + b)*dC + c].
 *
 * States produced by superpose() are deliberately kept unnormalized: every
 * superposition bound carries an explicit squared-norm factor, and
 * normalizing early would silently change the inequalities.
 */
struct PureTripartiteState {
    Dims dims{0, 0, 0};
    ComplexVector amps;

    long total_dim() const { return static_cast<long>(dims[0]) * dims[1] * dims[2]; }
    double norm_squared() const { return amps.squaredNorm(); }
    bool is_normalized(double tol = 1e-10) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }
    /// Unit-norm copy. Throws std::domain_error when the norm is ~zero.
    PureTripartiteState normalized() const;
};

/// <phi|psi> in the physics convention (conjugate on the left argument).
Complex overlap(const PureTripartiteState& phi, const PureTripartiteState& psi);

/// a*phi + b*psi, NOT renormalized. Requires equal dims and normalized inputs.
PureTripartiteState superpose(Complex a, const PureTripartiteState& phi, Complex b,
                              const PureTripartiteState& psi);

enum class SampleMode {
    ComplexGaussian,  ///< i.i.d. standard complex Gaussian amplitudes, normalized (Haar)
    RealUniform,      ///< i.i.d. uniform [0,1) real amplitudes, normalized
};

/**
 * Deterministic random pure state for (seed, mode, stream). The stream index
 * lets sweeps draw sample k independently of evaluation order.
 */
PureTripartiteState sample_random(const Dims& dims, std::uint64_t seed, SampleMode mode,
                                  std::uint64_t stream = 0);

/// Bundled reference states: two real 2x2x4 vectors used by the sweep examples.
enum class Fixture { Phi33, Psi34 };

/**
 * Loads a bundled fixture, renormalized to unit norm. The stored amplitudes
 * are rounded to four decimals, so the raw squared norm is only ~1e-3 close
 * to one; it is reported through `raw_norm_sq` and checked on load.
 */
PureTripartiteState load_fixture(Fixture which, double* raw_norm_sq = nullptr);

/// Parses "phi33" / "psi34"; throws std::invalid_argument otherwise.
Fixture fixture_from_name(const std::string& name);

/// Weighted pure-state ensemble realizing a bipartite density matrix.
struct Ensemble {
    struct Member {
        double weight;        ///< probability, >= 0
        ComplexVector state;  ///< unit-norm bipartite pure state on dA*dB
    };
    std::vector<Member> members;

    double total_weight() const;
    /// Sum of weight * |state><state|.
    ComplexMatrix mixture() const;
};

/**
 * Ensemble induced on parties A,B by a Kraus measurement {N_j} on party C,
 * read out in C's computational basis. Requires sum N_j^dag N_j = identity
 * within 1e-10 and a state of nonzero norm. Outcomes with probability below
 * 1e-14 are dropped. The weighted mixture reproduces Tr_C of the normalized
 * input state.
 */
Ensemble measure_ensemble(const PureTripartiteState& gamma,
                          const std::vector<ComplexMatrix>& kraus);

/// Parse error carrying the 1-based offending line of a state file.
struct StateParseError : std::runtime_error {
    StateParseError(const std::string& what, int line_number)
        : std::runtime_error(what), line(line_number) {}
    int line;
};

/**
 * State file format (text, one state per file):
 *   line 1:        dims dA dB dC
 *   following:     re im            (one amplitude per line, C fastest)
 * Files whose amplitude count mismatches the declared dims are rejected.
 */
PureTripartiteState parse_state(std::istream& in);
PureTripartiteState read_state_file(const std::string& path);
void write_state_file(const PureTripartiteState& state, const std::string& path);

}  // namespace entbounds
