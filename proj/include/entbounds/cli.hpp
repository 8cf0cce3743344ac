#pragma once

#include "entbounds/oracle.hpp"
#include "entbounds/states.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace entbounds::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Resolves a state reference: the bundled fixture names "phi33"/"psi34",
/// otherwise a state file path.
PureTripartiteState resolve_state(const std::string& ref);

/// Formats with 12 significant digits, locale-independent.
std::string fmt12(double v);

struct SweepConfig {
    int grid_points = 101;  ///< |alpha| grid over [0,1], endpoints included
    double phase_alpha = 0.0;
    double phase_beta = 0.0;
    std::uint64_t seed = 0;
    std::string output_path = "sweep.csv";
};

enum class AlphaMode { Grid, Random };

struct VerifyConfig {
    long long n_pairs = 10000;
    Dims dims{2, 2, 4};
    std::uint64_t seed = 0;
    AlphaMode alpha_mode = AlphaMode::Random;
    SampleMode sample_mode = SampleMode::ComplexGaussian;
    /// Fraction of samples put through the entropy-bound check with oracle
    /// assistance estimates (costly); 0 disables it.
    double entropy_check_fraction = 0.01;
    DecompositionSearch search{};
};

struct OracleConfig {
    std::uint64_t seed = 0;
    DecompositionSearch search{};
};

/// Prints C, Ca, E of a (2,2,n) state. Nothing is printed on parse failure.
int run_measure(const std::string& state_ref, std::ostream& out, std::ostream& err);

/// Writes the |alpha|-sweep CSV (plus a gnuplot companion script) for the
/// superposition of two states. Byte-identical output for fixed inputs.
int run_sweep(const std::string& ref_a, const std::string& ref_b, const SweepConfig& config,
              std::ostream& out, std::ostream& err);

/// Monte-Carlo verification of every bound; exit 1 on any violation.
int run_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

/// Decomposition-optimization certification of the closed-form measures.
int run_oracle(const std::string& state_ref, const OracleConfig& config, std::ostream& out,
               std::ostream& err);

}  // namespace entbounds::cli
