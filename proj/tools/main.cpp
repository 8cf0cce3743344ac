#include "entbounds/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

entbounds::SampleMode parse_sample_mode(const std::string& mode) {
    if (mode == "complex-gaussian") return entbounds::SampleMode::ComplexGaussian;
    if (mode == "real-uniform") return entbounds::SampleMode::RealUniform;
    throw CLI::ValidationError("--mode must be complex-gaussian or real-uniform");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite entanglement measures and superposition bounds for tripartite pure states"};
    app.require_subcommand(1);

    // measure
    std::string measure_state;
    CLI::App* measure = app.add_subcommand("measure", "print C, Ca, E of a (2,2,n) state");
    measure->add_option("state", measure_state, "state file, or fixture name phi33/psi34")
        ->required();

    // sweep
    std::string sweep_a, sweep_b;
    entbounds::cli::SweepConfig sweep_cfg;
    CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep of bounds vs |alpha| for a superposed pair");
    sweep->add_option("stateA", sweep_a, "first state (file or fixture name)")->required();
    sweep->add_option("stateB", sweep_b, "second state (file or fixture name)")->required();
    sweep->add_option("--grid", sweep_cfg.grid_points, "grid points over |alpha| in [0,1]")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--out", sweep_cfg.output_path, "output CSV path");
    sweep->add_option("--seed", sweep_cfg.seed, "seed (kept for interface symmetry)");
    sweep->add_option("--phase-alpha", sweep_cfg.phase_alpha, "phase of alpha in radians");
    sweep->add_option("--phase-beta", sweep_cfg.phase_beta, "phase of beta in radians");

    // verify
    entbounds::cli::VerifyConfig verify_cfg;
    std::vector<int> dims_flag;
    std::string verify_mode = "complex-gaussian";
    std::string alpha_mode = "random";
    CLI::App* verify = app.add_subcommand("verify", "Monte-Carlo verification of all bounds");
    verify->add_option("--pairs", verify_cfg.n_pairs, "number of random state pairs")
        ->check(CLI::PositiveNumber);
    verify->add_option("--dims", dims_flag, "subsystem dimensions dA dB dC")->expected(3);
    verify->add_option("--seed", verify_cfg.seed, "master seed");
    verify->add_option("--alpha-mode", alpha_mode, "grid | random");
    verify->add_option("--mode", verify_mode, "complex-gaussian | real-uniform");
    verify->add_option("--budget", verify_cfg.search.restarts,
                       "optimizer restarts for the entropy-bound subsample")
        ->check(CLI::PositiveNumber);

    // oracle
    std::string oracle_state;
    entbounds::cli::OracleConfig oracle_cfg;
    CLI::App* oracle = app.add_subcommand("oracle", "certify closed-form C and Ca against decomposition search");
    oracle->add_option("state", oracle_state, "state file, or fixture name phi33/psi34")
        ->required();
    oracle->add_option("--seed", oracle_cfg.seed, "optimizer seed");
    oracle->add_option("--budget", oracle_cfg.search.restarts, "optimizer restarts")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--members", oracle_cfg.search.ensemble_size,
                       "ensemble size (0 = twice the rank)");
    oracle->add_option("--sweeps", oracle_cfg.search.sweeps, "rotation sweeps per restart")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? entbounds::cli::kExitOk : entbounds::cli::kExitInputError;
    }

    try {
        if (*measure) return entbounds::cli::run_measure(measure_state, std::cout, std::cerr);
        if (*sweep) return entbounds::cli::run_sweep(sweep_a, sweep_b, sweep_cfg, std::cout, std::cerr);
        if (*verify) {
            if (!dims_flag.empty())
                verify_cfg.dims = {dims_flag[0], dims_flag[1], dims_flag[2]};
            verify_cfg.sample_mode = parse_sample_mode(verify_mode);
            if (alpha_mode == "grid")
                verify_cfg.alpha_mode = entbounds::cli::AlphaMode::Grid;
            else if (alpha_mode == "random")
                verify_cfg.alpha_mode = entbounds::cli::AlphaMode::Random;
            else {
                std::cerr << "error: --alpha-mode must be grid or random\n";
                return entbounds::cli::kExitInputError;
            }
            return entbounds::cli::run_verify(verify_cfg, std::cout, std::cerr);
        }
        if (*oracle) return entbounds::cli::run_oracle(oracle_state, oracle_cfg, std::cout, std::cerr);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return entbounds::cli::kExitInputError;
    }
    return entbounds::cli::kExitInputError;
}
