#include "entbounds/states.hpp"

#include "entbounds/rng.hpp"

#include <fstream>
#include <sstream>

namespace entbounds {

namespace {

void check_dims(const Dims& dims) {
    if (dims[0] < 1 || dims[1] < 1 || dims[2] < 1)
        throw std::invalid_argument("state dims must be positive");
}

// Amplitudes of the bundled reference states, rounded to four decimals.
constexpr double kFixturePhi[16] = {
    0.4061, 0.1119, 0.1321, 0.4155, 0.2188, 0.3618, 0.0422, 0.3351,
    0.2407, 0.1541, 0.1120, 0.0759, 0.2656, 0.2659, 0.2019, 0.2402};
constexpr double kFixturePsi[16] = {
    0.3868, 0.0250, 0.4408, 0.0716, 0.1171, 0.1588, 0.1093, 0.0930,
    0.0581, 0.2613, 0.1253, 0.0290, 0.2439, 0.4571, 0.3642, 0.3189};

}  // namespace

PureTripartiteState PureTripartiteState::normalized() const {
    const double n2 = norm_squared();
    if (n2 < 1e-14) throw std::domain_error("cannot normalize a ~zero state");
    PureTripartiteState out = *this;
    out.amps /= std::sqrt(n2);
    return out;
}

Complex overlap(const PureTripartiteState& phi, const PureTripartiteState& psi) {
    if (phi.dims != psi.dims) throw std::invalid_argument("overlap: dimension mismatch");
    return phi.amps.dot(psi.amps);  // Eigen's dot conjugates the left argument
}

PureTripartiteState superpose(Complex a, const PureTripartiteState& phi, Complex b,
                              const PureTripartiteState& psi) {
    if (phi.dims != psi.dims) throw std::invalid_argument("superpose: dimension mismatch");
    if (!phi.is_normalized() || !psi.is_normalized())
        throw std::invalid_argument("superpose: component states must be normalized");
    PureTripartiteState out;
    out.dims = phi.dims;
    out.amps = a * phi.amps + b * psi.amps;
    return out;
}

PureTripartiteState sample_random(const Dims& dims, std::uint64_t seed, SampleMode mode,
                                  std::uint64_t stream) {
    check_dims(dims);
    CounterRng rng(seed, stream);
    PureTripartiteState out;
    out.dims = dims;
    out.amps.resize(out.total_dim());
    for (Eigen::Index i = 0; i < out.amps.size(); ++i) {
        out.amps[i] = (mode == SampleMode::ComplexGaussian) ? rng.complex_gaussian()
                                                            : Complex(rng.uniform(), 0.0);
    }
    const double n2 = out.amps.squaredNorm();
    if (n2 <= 0.0) throw std::runtime_error("sample_random: drew a zero vector");
    out.amps /= std::sqrt(n2);
    return out;
}

PureTripartiteState load_fixture(Fixture which, double* raw_norm_sq) {
    const double* raw = (which == Fixture::Phi33) ? kFixturePhi : kFixturePsi;
    PureTripartiteState out;
    out.dims = {2, 2, 4};
    out.amps.resize(16);
    for (int i = 0; i < 16; ++i) out.amps[i] = Complex(raw[i], 0.0);
    const double n2 = out.amps.squaredNorm();
    if (std::abs(n2 - 1.0) > 1e-3)
        throw std::logic_error("fixture amplitudes drifted from unit norm");
    if (raw_norm_sq) *raw_norm_sq = n2;
    out.amps /= std::sqrt(n2);
    return out;
}

Fixture fixture_from_name(const std::string& name) {
    if (name == "phi33") return Fixture::Phi33;
    if (name == "psi34") return Fixture::Psi34;
    throw std::invalid_argument("unknown fixture name: " + name);
}

double Ensemble::total_weight() const {
    double sum = 0.0;
    for (const Member& m : members) sum += m.weight;
    return sum;
}

ComplexMatrix Ensemble::mixture() const {
    if (members.empty()) return ComplexMatrix::Zero(0, 0);
    const Eigen::Index n = members.front().state.size();
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (const Member& m : members) rho.noalias() += m.weight * (m.state * m.state.adjoint());
    return rho;
}

Ensemble measure_ensemble(const PureTripartiteState& gamma,
                          const std::vector<ComplexMatrix>& kraus) {
    const int dA = gamma.dims[0], dB = gamma.dims[1], dC = gamma.dims[2];
    if (kraus.empty()) throw std::invalid_argument("measure_ensemble: empty Kraus set");
    ComplexMatrix completeness = ComplexMatrix::Zero(dC, dC);
    for (const ComplexMatrix& n : kraus) {
        if (n.cols() != dC)
            throw std::invalid_argument("measure_ensemble: Kraus operator does not act on C");
        completeness += n.adjoint() * n;
    }
    if ((completeness - ComplexMatrix::Identity(dC, dC)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("measure_ensemble: Kraus set is not complete");

    const double n2 = gamma.norm_squared();
    if (n2 < 1e-14) throw std::domain_error("measure_ensemble: state has ~zero norm");

    Ensemble out;
    for (const ComplexMatrix& n : kraus) {
        for (Eigen::Index i = 0; i < n.rows(); ++i) {
            ComplexVector v = ComplexVector::Zero(dA * dB);
            for (int ab = 0; ab < dA * dB; ++ab)
                for (int c = 0; c < dC; ++c)
                    v[ab] += n(i, c) * gamma.amps[static_cast<long>(ab) * dC + c];
            const double q = v.squaredNorm();
            const double p = q / n2;
            if (p < 1e-14) continue;  // drop zero-probability outcomes
            out.members.push_back({p, v / std::sqrt(q)});
        }
    }
    return out;
}

PureTripartiteState parse_state(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw StateParseError("empty state file", 1);
    ++line_no;
    std::istringstream head(line);
    std::string tag;
    Dims dims{0, 0, 0};
    if (!(head >> tag >> dims[0] >> dims[1] >> dims[2]) || tag != "dims")
        throw StateParseError("expected header 'dims dA dB dC'", line_no);
    std::string trailing;
    if (head >> trailing) throw StateParseError("unexpected trailing data in header", line_no);
    if (dims[0] < 1 || dims[1] < 1 || dims[2] < 1)
        throw StateParseError("dims must be positive", line_no);

    PureTripartiteState out;
    out.dims = dims;
    const long total = out.total_dim();
    out.amps.resize(total);

    long count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        double re, im;
        if (!(row >> re)) {
            // allow trailing blank lines
            std::istringstream probe(line);
            std::string token;
            if (probe >> token)
                throw StateParseError("malformed amplitude line", line_no);
            continue;
        }
        if (!(row >> im)) throw StateParseError("amplitude line needs 're im'", line_no);
        if (row >> trailing) throw StateParseError("unexpected trailing data", line_no);
        if (count >= total)
            throw StateParseError("amplitude count exceeds dims", line_no);
        out.amps[count++] = Complex(re, im);
    }
    if (count != total)
        throw StateParseError("amplitude count mismatches dims", line_no + 1);
    return out;
}

PureTripartiteState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    return parse_state(in);
}

void write_state_file(const PureTripartiteState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out.precision(17);
    out << "dims " << state.dims[0] << ' ' << state.dims[1] << ' ' << state.dims[2] << '\n';
    for (Eigen::Index i = 0; i < state.amps.size(); ++i)
        out << state.amps[i].real() << ' ' << state.amps[i].imag() << '\n';
}

}  // namespace entbounds
