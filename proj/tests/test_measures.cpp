#include "entbounds/measures.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace entbounds;
using namespace testutil;

TEST_CASE("binary_entropy: anchors and the comparison point of its sqrt bound") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(2.0 * std::sqrt(0.5 * 0.5) == doctest::Approx(1.0));  // equality point
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.1) == doctest::Approx(0.46899559358928116).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("binary_entropy: symmetry and the 2*sqrt(x(1-x)) dominance") {
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-12));
        CHECK(2.0 * std::sqrt(x * (1.0 - x)) - binary_entropy(x) >= -1e-12);
    }
}

TEST_CASE("entropy_pure: Bell, product, and the W marginal") {
    CHECK(entropy_pure(bell_vector(), 2, 2) == doctest::Approx(1.0).epsilon(1e-12));

    ComplexVector product = ComplexVector::Zero(4);
    product[0] = 1.0;
    CHECK(entropy_pure(product, 2, 2) <= 1e-12);

    // A|(BC) split of the W state: marginal spectrum (2/3, 1/3)
    const PureTripartiteState w = w_state();
    CHECK(entropy_pure(w.amps, 2, 4) ==
          doctest::Approx(0.9182958340544896).epsilon(1e-12));

    ComplexVector unnormalized = 2.0 * bell_vector();
    CHECK_THROWS_AS(entropy_pure(unnormalized, 2, 2), std::invalid_argument);
}

TEST_CASE("entropy_pure: both marginals agree") {
    for (int trial = 0; trial < 30; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 1, 4}, 41, SampleMode::ComplexGaussian, trial);
        const double from_a = entropy_pure(s.amps, 2, 4);
        // swap the role of the parties: state[(b)*dA + a]
        ComplexVector swapped(8);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 4; ++b) swapped[b * 2 + a] = s.amps[a * 4 + b];
        CHECK(from_a == doctest::Approx(entropy_pure(swapped, 4, 2)).epsilon(1e-10));
    }
}

TEST_CASE("lambda_spectrum: GHZ, W, and Bell reduced states") {
    const LambdaSpectrum g = lambda_spectrum(reduced_ab(ghz()));
    CHECK(g.lambdas[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(g.lambdas[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(g.lambdas[2] <= 1e-10);
    CHECK(g.lambdas[3] <= 1e-10);
    CHECK(g.concurrence() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(g.assistance() == doctest::Approx(1.0).epsilon(1e-10));

    const LambdaSpectrum w = lambda_spectrum(reduced_ab(w_state()));
    CHECK(w.lambdas[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(w.lambdas[1] <= 1e-9);
    CHECK(w.concurrence() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(w.assistance() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    const ComplexVector bell = bell_vector();
    const LambdaSpectrum b = lambda_spectrum(bell * bell.adjoint());
    CHECK(b.lambdas[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.lambdas[1] <= 1e-9);
}

TEST_CASE("lambda_spectrum: rejects invalid density matrices") {
    CHECK_THROWS_AS(lambda_spectrum(ComplexMatrix::Identity(4, 4)), std::invalid_argument);
    CHECK_THROWS_AS(lambda_spectrum(ComplexMatrix::Identity(3, 3) / 3.0), std::invalid_argument);
    ComplexMatrix indefinite = ComplexMatrix::Zero(4, 4);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(lambda_spectrum(indefinite), std::domain_error);
}

TEST_CASE("concurrence_pure: Bell, product, and Schmidt form") {
    CHECK(concurrence_pure(bell_vector()) == doctest::Approx(1.0).epsilon(1e-12));

    ComplexVector basis01 = ComplexVector::Zero(4);
    basis01[1] = 1.0;
    CHECK(concurrence_pure(basis01) == 0.0);

    ComplexVector schmidt = ComplexVector::Zero(4);
    schmidt[0] = 0.6;
    schmidt[3] = 0.8;
    CHECK(concurrence_pure(schmidt) == doctest::Approx(0.96).epsilon(1e-14));

    CHECK_THROWS_AS(concurrence_pure(ComplexVector::Ones(3)), std::invalid_argument);
}

TEST_CASE("measures_of: closed-form fixtures") {
    const MeasureSet g = measures_of(ghz());
    CHECK(g.concurrence_C == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(g.coa_Ca == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(g.entropy_E == doctest::Approx(0.0).epsilon(1e-10));

    const MeasureSet w = measures_of(w_state());
    CHECK(w.concurrence_C == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(w.coa_Ca == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    const MeasureSet b = measures_of(bell_trivial_c());
    CHECK(b.concurrence_C == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.coa_Ca == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.entropy_E == doctest::Approx(1.0).epsilon(1e-10));

    const MeasureSet p = measures_of(product_000());
    CHECK(p.concurrence_C <= 1e-10);
    CHECK(p.coa_Ca <= 1e-9);
    CHECK(p.entropy_E <= 1e-10);

    PureTripartiteState big_a = sample_random({3, 2, 2}, 1, SampleMode::ComplexGaussian);
    CHECK_THROWS_AS(measures_of(big_a), std::invalid_argument);
}

TEST_CASE("measures_of: entropy matches entropy_pure on pure reduced states") {
    for (int trial = 0; trial < 25; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 1}, 43, SampleMode::ComplexGaussian, trial);
        const MeasureSet m = measures_of(s);
        CHECK(m.entropy_E == doctest::Approx(entropy_pure(s.amps, 2, 2)).epsilon(1e-10));
    }
}

TEST_CASE("reduced_ab agrees with partial_trace") {
    for (int trial = 0; trial < 10; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 4}, 44, SampleMode::ComplexGaussian, trial);
        const ComplexMatrix projector = s.amps * s.amps.adjoint();
        CHECK(max_abs_diff(reduced_ab(s),
                           partial_trace(projector, s.dims, {Subsystem::A, Subsystem::B})) <=
              1e-12);
    }
}

TEST_CASE("property: C <= Ca and both within [0,1] on random densities") {
    CounterRng rng(45, 0);
    for (int trial = 0; trial < 10000; ++trial) {
        const LambdaSpectrum ls = lambda_spectrum(random_density(4, rng));
        const double c = ls.concurrence(), ca = ls.assistance();
        CHECK(c <= ca + 1e-10);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-10);
        CHECK(ca >= 0.0);
        CHECK(ca <= 1.0 + 1e-10);
        // Ca <= 1 is the spectrum-sum invariant for normalized 2-qubit states
        CHECK(ls.lambdas[3] >= 0.0);
    }
}

TEST_CASE("property: pure projectors have a single lambda equal to the pure concurrence") {
    for (int trial = 0; trial < 200; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 1}, 46, SampleMode::ComplexGaussian, trial);
        const LambdaSpectrum ls = lambda_spectrum(s.amps * s.amps.adjoint());
        CHECK(ls.lambdas[1] <= 1e-9);
        CHECK(ls.lambdas[2] <= 1e-9);
        CHECK(ls.lambdas[3] <= 1e-9);
        CHECK(ls.lambdas[0] == doctest::Approx(concurrence_pure(s.amps)).epsilon(1e-10));
    }
}

TEST_CASE("property: local unitaries on A and B leave C and Ca unchanged") {
    CounterRng rng(47, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const PureTripartiteState s =
            sample_random({2, 2, 3}, 48, SampleMode::ComplexGaussian, trial);
        const ComplexMatrix u = random_unitary(2, rng);
        const ComplexMatrix v = random_unitary(2, rng);
        const ComplexMatrix local = kron(kron(u, v), ComplexMatrix::Identity(3, 3));

        PureTripartiteState rotated = s;
        rotated.amps = local * s.amps;
        const MeasureSet before = measures_of(s);
        const MeasureSet after = measures_of(rotated);
        CHECK(after.concurrence_C == doctest::Approx(before.concurrence_C).epsilon(1e-10));
        CHECK(after.coa_Ca == doctest::Approx(before.coa_Ca).epsilon(1e-10));
    }
}
