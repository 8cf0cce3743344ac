#include "entbounds/oracle.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace entbounds;
using namespace testutil;

TEST_CASE("hjw_ensemble: identity isometry returns the eigen-ensemble") {
    const ComplexMatrix rho = reduced_ab(ghz());
    const EigenSystem es = eig_hermitian(rho);
    const Ensemble e = hjw_ensemble(rho, ComplexMatrix::Identity(2, 2));
    REQUIRE(e.members.size() == 2);
    CHECK(e.members[0].weight == doctest::Approx(es.values[0]).epsilon(1e-12));
    CHECK(e.members[1].weight == doctest::Approx(es.values[1]).epsilon(1e-12));
    CHECK(max_abs_diff(e.mixture(), rho) <= 1e-12);
}

TEST_CASE("hjw_ensemble: rank-1 state gives members equal to it up to phase") {
    const ComplexVector bell = bell_vector();
    const ComplexMatrix rho = bell * bell.adjoint();

    Ensemble single = hjw_ensemble(rho, ComplexMatrix::Identity(1, 1));
    REQUIRE(single.members.size() == 1);
    CHECK(std::abs(std::abs(single.members[0].state.dot(bell)) - 1.0) <= 1e-10);

    CounterRng rng(71, 0);
    ComplexMatrix column = random_complex_matrix(4, 1, rng);
    column /= column.norm();
    const Ensemble spread = hjw_ensemble(rho, column);
    CHECK(std::abs(spread.total_weight() - 1.0) <= 1e-10);
    for (const auto& m : spread.members)
        CHECK(std::abs(std::abs(m.state.dot(bell)) - 1.0) <= 1e-10);
}

TEST_CASE("hjw_ensemble: random isometries reconstruct rho") {
    CounterRng rng(72, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const ComplexMatrix rho = random_density(4, rng);
        const ComplexMatrix g = random_complex_matrix(7, 4, rng);
        Eigen::HouseholderQR<ComplexMatrix> qr(g);
        const ComplexMatrix isometry = qr.householderQ() * ComplexMatrix::Identity(7, 4);
        const Ensemble e = hjw_ensemble(rho, isometry);
        CHECK(std::abs(e.total_weight() - 1.0) <= 1e-10);
        CHECK(max_abs_diff(e.mixture(), rho) <= 1e-9);
    }
}

TEST_CASE("hjw_ensemble: rejects non-isometries and wrong column counts") {
    CounterRng rng(73, 0);
    const ComplexMatrix rho = random_density(4, rng);
    CHECK_THROWS_AS(hjw_ensemble(rho, ComplexMatrix::Ones(6, 4)), std::invalid_argument);
    CHECK_THROWS_AS(hjw_ensemble(rho, ComplexMatrix::Identity(4, 2)), std::invalid_argument);
}

TEST_CASE("optimize_avg: rank-1 state is exact for both directions") {
    const ComplexVector bell = bell_vector();
    const ComplexMatrix rho = bell * bell.adjoint();
    DecompositionSearch search;
    search.restarts = 4;
    for (Direction dir : {Direction::Min, Direction::Max}) {
        const OptimizeResult r = optimize_avg(rho, Objective::Concurrence, dir, search, 1);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(r.ensemble.total_weight() - 1.0) <= 1e-10);
    }
}

TEST_CASE("optimize_avg: GHZ reduced state reaches both closed-form extremes") {
    const ComplexMatrix rho = reduced_ab(ghz());
    DecompositionSearch search;
    search.restarts = 8;

    const OptimizeResult lo = optimize_avg(rho, Objective::Concurrence, Direction::Min, search, 2);
    CHECK(lo.value <= 1e-6);
    CHECK(lo.value >= -1e-12);

    const OptimizeResult hi = optimize_avg(rho, Objective::Concurrence, Direction::Max, search, 2);
    CHECK(hi.value >= 1.0 - 1e-3);
    CHECK(hi.value <= 1.0 + 1e-9);
}

TEST_CASE("optimize_avg: certified against closed forms on random states") {
    DecompositionSearch search;
    for (int trial = 0; trial < 20; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 4}, 74, SampleMode::ComplexGaussian, trial);
        const ComplexMatrix rho = reduced_ab(s);
        const LambdaSpectrum ls = lambda_spectrum(rho);

        const OptimizeResult hi =
            optimize_avg(rho, Objective::Concurrence, Direction::Max, search, 75 + trial);
        const OptimizeResult lo =
            optimize_avg(rho, Objective::Concurrence, Direction::Min, search, 75 + trial);

        // one-sided soundness at 1e-9, convergence at 1e-3
        CHECK(hi.value <= ls.assistance() + 1e-9);
        CHECK(lo.value >= ls.concurrence() - 1e-9);
        CHECK(std::abs(hi.value - ls.assistance()) <= 1e-3);
        CHECK(std::abs(lo.value - ls.concurrence()) <= 1e-3);

        CHECK(std::abs(hi.ensemble.total_weight() - 1.0) <= 1e-10);
        CHECK(max_abs_diff(hi.ensemble.mixture(), rho) <= 1e-9);
        CHECK(max_abs_diff(lo.ensemble.mixture(), rho) <= 1e-9);
    }
}

TEST_CASE("optimize_avg: running best is monotone") {
    const ComplexMatrix rho = reduced_ab(w_state());
    DecompositionSearch search;
    search.restarts = 6;
    const OptimizeResult hi = optimize_avg(rho, Objective::Entropy, Direction::Max, search, 3);
    for (std::size_t i = 1; i < hi.history.size(); ++i)
        CHECK(hi.history[i] >= hi.history[i - 1]);
    const OptimizeResult lo = optimize_avg(rho, Objective::Concurrence, Direction::Min, search, 3);
    for (std::size_t i = 1; i < lo.history.size(); ++i)
        CHECK(lo.history[i] <= lo.history[i - 1]);
}

TEST_CASE("optimize_avg: rejects an ensemble smaller than the rank") {
    CounterRng rng(76, 0);
    const ComplexMatrix rho = random_density(4, rng);
    DecompositionSearch search;
    search.ensemble_size = 2;  // below rank 4
    CHECK_THROWS_AS(optimize_avg(rho, Objective::Concurrence, Direction::Max, search, 1),
                    std::invalid_argument);
}

TEST_CASE("estimate_Ea: GHZ, product, and domination of the formation entropy") {
    DecompositionSearch search;
    search.restarts = 8;
    const double ghz_ea = estimate_Ea(ghz(), search, 4);
    CHECK(ghz_ea >= 1.0 - 1e-6);
    CHECK(ghz_ea <= 1.0 + 1e-9);

    CHECK(std::abs(estimate_Ea(product_000(), search, 4)) <= 1e-9);

    for (int trial = 0; trial < 10; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 4}, 77, SampleMode::ComplexGaussian, trial);
        const double ea = estimate_Ea(s, search, 78 + trial);
        CHECK(ea >= measures_of(s).entropy_E - 1e-6);
    }
}

TEST_CASE("sub-probability Cauchy-Schwarz across any shared measurement") {
    CounterRng rng(79, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const PureTripartiteState phi =
            sample_random({2, 2, 4}, 80, SampleMode::ComplexGaussian, 2 * trial);
        const PureTripartiteState psi =
            sample_random({2, 2, 4}, 80, SampleMode::ComplexGaussian, 2 * trial + 1);
        std::vector<ComplexMatrix> kraus = random_rank1_kraus(4, 8, rng);
        if (trial % 4 == 0) kraus = {ComplexMatrix::Identity(4, 4)};

        // q = |<i| N_j |state>|^2 summed over outcomes, computed directly
        double cs_sum = 0.0;
        for (const ComplexMatrix& n : kraus) {
            for (int i = 0; i < n.rows(); ++i) {
                Complex amp_phi = 0.0, amp_psi = 0.0;
                double q1 = 0.0, q2 = 0.0;
                for (int ab = 0; ab < 4; ++ab) {
                    amp_phi = 0.0;
                    amp_psi = 0.0;
                    for (int cidx = 0; cidx < 4; ++cidx) {
                        amp_phi += n(i, cidx) * phi.amps[ab * 4 + cidx];
                        amp_psi += n(i, cidx) * psi.amps[ab * 4 + cidx];
                    }
                    q1 += std::norm(amp_phi);
                    q2 += std::norm(amp_psi);
                }
                cs_sum += std::sqrt(q1 * q2);
            }
        }
        CHECK(cs_sum <= 1.0 + 1e-9);
    }
}
