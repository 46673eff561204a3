#include "qsim/grover.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qsim/circuit.hpp"
#include "qsim/measure.hpp"

namespace qsim {

StateVector flip_sign(const Predicate& p, const StateVector& state) {
    if (state.n_qubits() != p.n) throw DomainError("predicate width mismatch");
    std::vector<Amplitude> amps(state.amplitudes());
    for (std::uint64_t x = 0; x < state.dim(); ++x)
        if (p.p(x)) amps[x] = -amps[x];
    return StateVector::unchecked(state.n_qubits(), std::move(amps));
}

StateVector flip_sign_via_ancilla(const Predicate& p, const StateVector& state) {
    if (state.n_qubits() != p.n) throw DomainError("predicate width mismatch");
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector b =
        StateVector::unchecked(1, {Amplitude(s, 0), Amplitude(-s, 0)});
    StateVector joint = tensor(state, b);

    ClassicalOracle oracle{p.n, 1,
                           [&p](std::uint64_t x) { return p.p(x) ? 1ull : 0ull; }};
    std::vector<int> in_qubits(p.n);
    for (int q = 0; q < p.n; ++q) in_qubits[q] = q;
    joint = apply_oracle(oracle, joint, in_qubits, {p.n});

    // The ancilla must come back exactly (|0⟩-|1⟩)/sqrt(2)-factored.
    std::vector<Amplitude> amps(state.dim());
    for (std::uint64_t x = 0; x < state.dim(); ++x) {
        const Amplitude a0 = joint.amp(2 * x);
        const Amplitude a1 = joint.amp(2 * x + 1);
        if (std::abs(a0 + a1) > kTol)
            throw IntegrityError("oracle ancilla did not stay factored");
        amps[x] = a0 / s;
    }
    return StateVector::unchecked(state.n_qubits(), std::move(amps));
}

UnitaryOp diffusion(int n) {
    if (n < 1) throw DomainError("diffusion needs n >= 1");
    const std::uint64_t d = std::uint64_t(1) << n;
    const UnitaryOp w = walsh(n);
    UnitaryOp r(n, std::vector<Amplitude>(d * d, Amplitude(0, 0)));
    r.at(0, 0) = Amplitude(1, 0);
    for (std::uint64_t i = 1; i < d; ++i) r.at(i, i) = Amplitude(-1, 0);

    // W·R·W
    UnitaryOp rw(n, std::vector<Amplitude>(d * d, Amplitude(0, 0)));
    for (std::uint64_t i = 0; i < d; ++i)
        for (std::uint64_t j = 0; j < d; ++j) rw.at(i, j) = r.at(i, i) * w.at(i, j);
    UnitaryOp out(n, std::vector<Amplitude>(d * d, Amplitude(0, 0)));
    for (std::uint64_t i = 0; i < d; ++i)
        for (std::uint64_t j = 0; j < d; ++j) {
            Amplitude acc(0, 0);
            for (std::uint64_t k = 0; k < d; ++k) acc += w.at(i, k) * rw.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

int default_iterations(int n) {
    return static_cast<int>(std::floor(std::numbers::pi / 4.0 *
                                       std::sqrt(double(std::uint64_t(1) << n))));
}

namespace {

// a_i -> 2A - a_i, which is exactly the diffusion operator D = WRW applied
// without materializing the matrix.
void invert_about_average(std::vector<Amplitude>& amps) {
    Amplitude avg(0, 0);
    for (const auto& a : amps) avg += a;
    avg /= double(amps.size());
    for (auto& a : amps) a = 2.0 * avg - a;
}

}  // namespace

GroverRun grover_search(const Predicate& p, std::optional<int> iterations,
                        RngStream& rng) {
    if (p.n < 1 || p.n > 24) throw CapacityError("grover_search supports 1..24 qubits");
    const std::uint64_t d = std::uint64_t(1) << p.n;

    GroverRun out;
    out.iterations = iterations.value_or(default_iterations(p.n));

    std::vector<Amplitude> amps(d, Amplitude(1.0 / std::sqrt(double(d)), 0));
    std::vector<bool> is_sol(d);
    for (std::uint64_t x = 0; x < d; ++x) is_sol[x] = p.p(x);

    for (int k = 0; k < out.iterations; ++k) {
        for (std::uint64_t x = 0; x < d; ++x)
            if (is_sol[x]) amps[x] = -amps[x];
        invert_about_average(amps);
        double mass = 0.0;
        for (std::uint64_t x = 0; x < d; ++x)
            if (is_sol[x]) mass += std::norm(amps[x]);
        out.success_probability_curve.push_back(mass);
    }

    const StateVector state = StateVector::unchecked(p.n, std::move(amps));
    std::vector<int> all(p.n);
    for (int q = 0; q < p.n; ++q) all[q] = q;
    out.result = measure(state, all, rng).outcome;
    out.is_solution = is_sol[out.result];
    return out;
}

std::vector<double> analytic_success_curve(int n, std::uint64_t n_solutions,
                                           int iterations) {
    const double theta =
        std::asin(std::sqrt(double(n_solutions) / double(std::uint64_t(1) << n)));
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(iterations));
    for (int k = 1; k <= iterations; ++k) {
        const double s = std::sin((2.0 * k + 1.0) * theta);
        curve.push_back(s * s);
    }
    return curve;
}

}  // namespace qsim
