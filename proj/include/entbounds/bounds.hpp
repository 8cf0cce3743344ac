#pragma once

#include "entbounds/measures.hpp"
#include "entbounds/states.hpp"

#include <span>
#include <vector>

namespace entbounds {

/**
 * The three equivalent-family forms of a two-term superposition upper bound.
 * `sym` is exactly the average of the two asymmetric forms; each form is
 * individually valid, so the minimum is the tightest certified bound.
 */
struct UpperBoundForms {
    double sym, asym1, asym2;
    double best() const { return std::min(sym, std::min(asym1, asym2)); }
};

/**
 * Upper bounds on ||Gamma||^2 * E(rho_AB) for Gamma = alpha*Phi + beta*Psi
 * (|alpha|^2 + |beta|^2 = 1) built from the components' entanglement of
 * formation (e1, e2) and entanglement of assistance (ea1, ea2):
 *
 *   sym   = |a|^2 (e1 + ea1) + |b|^2 (ea2 + e2) + 4|ab|
 *   asym1 = 2 (|a|^2 e1 + |b|^2 ea2 + 2|ab|)
 *   asym2 = 2 (|a|^2 ea1 + |b|^2 e2 + 2|ab|)
 */
UpperBoundForms entropy_upper_bounds(double e1, double ea1, double e2, double ea2,
                                     Complex alpha, Complex beta);

/// Upper bound on ||Gamma||^2 * Ea(Gamma): 2 (|a|^2 ea1 + |b|^2 ea2 + 2|ab|).
double assisted_entropy_upper(double ea1, double ea2, Complex alpha, Complex beta);

/**
 * Upper bounds on ||Gamma||^2 * C(rho_AB) from component concurrences and
 * concurrences of assistance:
 *
 *   sym   = |a|^2/2 (c1 + ca1) + |b|^2/2 (ca2 + c2) + 2|ab|
 *   asym1 = |a|^2 c1 + |b|^2 ca2 + 2|ab|
 *   asym2 = |a|^2 ca1 + |b|^2 c2 + 2|ab|
 */
UpperBoundForms concurrence_upper_bounds(double c1, double ca1, double c2, double ca2,
                                         Complex alpha, Complex beta);

/// Upper bound on ||Gamma||^2 * Ca(Gamma): |a|^2 ca1 + |b|^2 ca2 + 2|ab|.
double assisted_concurrence_upper(double ca1, double ca2, Complex alpha, Complex beta);

enum class BoundKind { EntropyUpper, AssistedEntropyUpper, ConcurrenceUpper, AssistedConcurrenceUpper };
enum class BoundForm { Sym, Asym1, Asym2 };

/// Component measures feeding a two-term bound: plain and assisted measure
/// of each component. Assisted-only kinds ignore m1/m2.
struct BoundInputs {
    double m1, a1;  // first component
    double m2, a2;  // second component
};

/**
 * Two-term bound for arbitrary (not normalized) coefficients: rescales
 * (a, b) by t = sqrt(|a|^2 + |b|^2) and evaluates the requested bound at
 * (a/t, b/t). The returned value bounds ||a*Phi + b*Psi||^2 * measure / t^2;
 * for t = 1 it is exactly the plain two-term bound. `form` selects the
 * asymmetric variant for the non-assisted kinds.
 */
double bound_unnormalized(Complex a, Complex b, const BoundInputs& in, BoundKind kind,
                          BoundForm form = BoundForm::Sym);

/**
 * Lower bound on ||Gamma||^2 * C(rho_AB), from rewriting each component as a
 * superposition of the normalized Gamma and the other component and applying
 * the asymmetric upper bound to that rearrangement:
 *
 *   max(0, |a|^2 c1 - |b|^2 ca2 - 2||Gamma|| |b|,
 *          |b|^2 c2 - |a|^2 ca1 - 2||Gamma|| |a|)
 *
 * Each rearranged inequality is independently valid, so the maximum is taken.
 */
double concurrence_lower_bound(double c1, double ca1, double c2, double ca2,
                               double norm_gamma, Complex alpha, Complex beta);

/// Same rearrangement applied to the assisted-concurrence upper bound.
double assisted_concurrence_lower_bound(double ca1, double ca2, double norm_gamma,
                                        Complex alpha, Complex beta);

struct SuperposedTerm {
    Complex coeff;
    PureTripartiteState state;
};

/// Plain and assisted measure of one superposition term.
struct TermMeasures {
    double measure;
    double assisted;
};

/**
 * Upper bound on ||Pi||^2 * measure for Pi = sum_i coeff_i |state_i> with
 * sum |coeff_i|^2 = 1. Folds left: the two-term bound is applied to the
 * running prefix and the next term, with the prefix's plain and assisted
 * measures replaced by their own recursive bounds and the prefix norm taken
 * from the actual amplitudes. For two terms this reduces exactly to the
 * two-term ops (the asym1 form for the non-assisted kinds).
 *
 * The overload without explicit measures computes them in closed form and
 * accepts only the concurrence kinds.
 */
double multi_term_upper(std::span<const SuperposedTerm> terms, BoundKind kind,
                        std::span<const TermMeasures> measures);
double multi_term_upper(std::span<const SuperposedTerm> terms, BoundKind kind);

/// The fold is order-dependent; this returns the smallest bound over all
/// input permutations (intended for small term counts).
double multi_term_upper_min_permutation(std::span<const SuperposedTerm> terms, BoundKind kind);

/// Upper/lower bound values for one measure of one superposition instance.
struct BoundValues {
    double sym, asym1, asym2;
    double best;   ///< min(sym, asym1, asym2)
    double lower;  ///< rearranged lower bound, clamped at 0
};

/**
 * Everything the harness reports about one two-term superposition: the
 * coefficients, the squared norm, the actual measures of the superposed
 * state and of both components, and the concurrence-family bounds.
 * Slacks are bound minus ||Gamma||^2 * actual; bound validity means they
 * stay nonnegative.
 */
struct BoundReport {
    Complex alpha, beta;
    double norm_sq_gamma;
    MeasureSet actual;  ///< of the normalized superposed state
    MeasureSet comp1, comp2;
    BoundValues C, Ca;

    double slack_C() const { return C.best - norm_sq_gamma * actual.concurrence_C; }
    double slack_Ca() const { return Ca.best - norm_sq_gamma * actual.coa_Ca; }
};

/// Builds the full report for Gamma = alpha*Phi + beta*Psi (normalized pair
/// of coefficients, normalized (2,2,n) component states).
BoundReport make_bound_report(const PureTripartiteState& phi, const PureTripartiteState& psi,
                              Complex alpha, Complex beta);

}  // namespace entbounds
