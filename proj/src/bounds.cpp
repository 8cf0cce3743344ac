#include "entbounds/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace entbounds {

namespace {

void check_coefficients(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
        throw std::invalid_argument("coefficient pair must satisfy |alpha|^2 + |beta|^2 = 1");
}

void check_entropy_inputs(std::initializer_list<double> values) {
    for (double v : values)
        if (!(v >= -1e-9)) throw std::invalid_argument("entropy measures must be nonnegative");
}

void check_concurrence_inputs(std::initializer_list<double> values) {
    for (double v : values)
        if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
            throw std::invalid_argument("concurrence measures must lie in [0,1]");
}

}  // namespace

UpperBoundForms entropy_upper_bounds(double e1, double ea1, double e2, double ea2,
                                     Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_entropy_inputs({e1, ea1, e2, ea2});
    const double a2 = std::norm(alpha), b2 = std::norm(beta);
    const double cross = std::abs(alpha) * std::abs(beta);
    UpperBoundForms out;
    out.sym = a2 * (e1 + ea1) + b2 * (ea2 + e2) + 4.0 * cross;
    out.asym1 = 2.0 * (a2 * e1 + b2 * ea2 + 2.0 * cross);
    out.asym2 = 2.0 * (a2 * ea1 + b2 * e2 + 2.0 * cross);
    return out;
}

double assisted_entropy_upper(double ea1, double ea2, Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_entropy_inputs({ea1, ea2});
    return 2.0 * (std::norm(alpha) * ea1 + std::norm(beta) * ea2 +
                  2.0 * std::abs(alpha) * std::abs(beta));
}

UpperBoundForms concurrence_upper_bounds(double c1, double ca1, double c2, double ca2,
                                         Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_concurrence_inputs({c1, ca1, c2, ca2});
    const double a2 = std::norm(alpha), b2 = std::norm(beta);
    const double cross = 2.0 * std::abs(alpha) * std::abs(beta);
    UpperBoundForms out;
    out.sym = 0.5 * a2 * (c1 + ca1) + 0.5 * b2 * (ca2 + c2) + cross;
    out.asym1 = a2 * c1 + b2 * ca2 + cross;
    out.asym2 = a2 * ca1 + b2 * c2 + cross;
    return out;
}

double assisted_concurrence_upper(double ca1, double ca2, Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_concurrence_inputs({ca1, ca2});
    return std::norm(alpha) * ca1 + std::norm(beta) * ca2 +
           2.0 * std::abs(alpha) * std::abs(beta);
}

double bound_unnormalized(Complex a, Complex b, const BoundInputs& in, BoundKind kind,
                          BoundForm form) {
    const double t2 = std::norm(a) + std::norm(b);
    if (t2 <= 0.0)
        throw std::invalid_argument("bound_unnormalized: both coefficients vanish");
    const double t = std::sqrt(t2);
    const Complex an = a / t, bn = b / t;
    switch (kind) {
        case BoundKind::EntropyUpper: {
            const UpperBoundForms f = entropy_upper_bounds(in.m1, in.a1, in.m2, in.a2, an, bn);
            return form == BoundForm::Sym ? f.sym : (form == BoundForm::Asym1 ? f.asym1 : f.asym2);
        }
        case BoundKind::AssistedEntropyUpper:
            return assisted_entropy_upper(in.a1, in.a2, an, bn);
        case BoundKind::ConcurrenceUpper: {
            const UpperBoundForms f = concurrence_upper_bounds(in.m1, in.a1, in.m2, in.a2, an, bn);
            return form == BoundForm::Sym ? f.sym : (form == BoundForm::Asym1 ? f.asym1 : f.asym2);
        }
        case BoundKind::AssistedConcurrenceUpper:
            return assisted_concurrence_upper(in.a1, in.a2, an, bn);
    }
    throw std::logic_error("bound_unnormalized: unknown kind");
}

double concurrence_lower_bound(double c1, double ca1, double c2, double ca2,
                               double norm_gamma, Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_concurrence_inputs({c1, ca1, c2, ca2});
    if (!(norm_gamma > 0.0))
        throw std::invalid_argument("concurrence_lower_bound: norm must be positive");
    const double a2 = std::norm(alpha), b2 = std::norm(beta);
    const double am = std::abs(alpha), bm = std::abs(beta);
    const double from_phi = a2 * c1 - b2 * ca2 - 2.0 * norm_gamma * bm;
    const double from_psi = b2 * c2 - a2 * ca1 - 2.0 * norm_gamma * am;
    return std::max({0.0, from_phi, from_psi});
}

double assisted_concurrence_lower_bound(double ca1, double ca2, double norm_gamma,
                                        Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    check_concurrence_inputs({ca1, ca2});
    if (!(norm_gamma > 0.0))
        throw std::invalid_argument("assisted_concurrence_lower_bound: norm must be positive");
    const double a2 = std::norm(alpha), b2 = std::norm(beta);
    const double from_phi = a2 * ca1 - b2 * ca2 - 2.0 * norm_gamma * std::abs(beta);
    const double from_psi = b2 * ca2 - a2 * ca1 - 2.0 * norm_gamma * std::abs(alpha);
    return std::max({0.0, from_phi, from_psi});
}

double multi_term_upper(std::span<const SuperposedTerm> terms, BoundKind kind,
                        std::span<const TermMeasures> measures) {
    if (terms.size() < 2)
        throw std::invalid_argument("multi_term_upper: need at least two terms");
    if (measures.size() != terms.size())
        throw std::invalid_argument("multi_term_upper: one measure pair per term required");
    double coeff_norm = 0.0;
    for (const SuperposedTerm& t : terms) coeff_norm += std::norm(t.coeff);
    if (std::abs(coeff_norm - 1.0) > 1e-10)
        throw std::invalid_argument("multi_term_upper: coefficients must satisfy sum |c|^2 = 1");
    for (const SuperposedTerm& t : terms) {
        if (t.state.dims != terms.front().state.dims)
            throw std::invalid_argument("multi_term_upper: dimension mismatch");
        if (!t.state.is_normalized())
            throw std::invalid_argument("multi_term_upper: states must be normalized");
    }

    const bool entropy_family =
        kind == BoundKind::EntropyUpper || kind == BoundKind::AssistedEntropyUpper;
    const bool assisted_kind =
        kind == BoundKind::AssistedEntropyUpper || kind == BoundKind::AssistedConcurrenceUpper;
    const double factor = entropy_family ? 2.0 : 1.0;

    // upper_m bounds ||P||^2 * measure(P normalized), upper_a the assisted
    // analogue, for the running prefix P; the prefix norm is exact.
    double c2 = std::norm(terms[0].coeff);
    double upper_m = c2 * measures[0].measure;
    double upper_a = c2 * measures[0].assisted;
    ComplexVector prefix = terms[0].coeff * terms[0].state.amps;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const double w = prefix.norm();
        c2 = std::norm(terms[k].coeff);
        const double cross = 2.0 * w * std::abs(terms[k].coeff);
        upper_m = factor * (upper_m + c2 * measures[k].assisted + cross);
        upper_a = factor * (upper_a + c2 * measures[k].assisted + cross);
        prefix += terms[k].coeff * terms[k].state.amps;
    }
    return assisted_kind ? upper_a : upper_m;
}

double multi_term_upper(std::span<const SuperposedTerm> terms, BoundKind kind) {
    if (kind != BoundKind::ConcurrenceUpper && kind != BoundKind::AssistedConcurrenceUpper)
        throw std::invalid_argument(
            "multi_term_upper: entropy kinds need explicit per-term measures");
    std::vector<TermMeasures> measures;
    measures.reserve(terms.size());
    for (const SuperposedTerm& t : terms) {
        const MeasureSet m = measures_of(t.state);
        measures.push_back({m.concurrence_C, m.coa_Ca});
    }
    return multi_term_upper(terms, kind, measures);
}

double multi_term_upper_min_permutation(std::span<const SuperposedTerm> terms, BoundKind kind) {
    std::vector<std::size_t> order(terms.size());
    std::iota(order.begin(), order.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        std::vector<SuperposedTerm> permuted;
        permuted.reserve(terms.size());
        for (std::size_t i : order) permuted.push_back(terms[i]);
        best = std::min(best, multi_term_upper(permuted, kind));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

BoundReport make_bound_report(const PureTripartiteState& phi, const PureTripartiteState& psi,
                              Complex alpha, Complex beta) {
    check_coefficients(alpha, beta);
    const PureTripartiteState gamma = superpose(alpha, phi, beta, psi);

    BoundReport r;
    r.alpha = alpha;
    r.beta = beta;
    r.norm_sq_gamma = gamma.norm_squared();
    r.comp1 = measures_of(phi);
    r.comp2 = measures_of(psi);
    r.actual = measures_of(gamma);

    const double norm_gamma = std::sqrt(r.norm_sq_gamma);
    const UpperBoundForms c = concurrence_upper_bounds(
        r.comp1.concurrence_C, r.comp1.coa_Ca, r.comp2.concurrence_C, r.comp2.coa_Ca, alpha, beta);
    r.C = {c.sym, c.asym1, c.asym2, c.best(),
           concurrence_lower_bound(r.comp1.concurrence_C, r.comp1.coa_Ca, r.comp2.concurrence_C,
                                   r.comp2.coa_Ca, norm_gamma, alpha, beta)};
    const double ca = assisted_concurrence_upper(r.comp1.coa_Ca, r.comp2.coa_Ca, alpha, beta);
    r.Ca = {ca, ca, ca, ca,
            assisted_concurrence_lower_bound(r.comp1.coa_Ca, r.comp2.coa_Ca, norm_gamma, alpha,
                                             beta)};
    return r;
}

}  // namespace entbounds
