#include "qsim/protocols.hpp"

#include <cmath>

#include "qsim/measure.hpp"
#include "qsim/ops.hpp"

namespace qsim {

namespace {

// Measures a single qubit in the standard (basis=0) or diagonal (basis=1)
// basis and returns the classical bit and the collapsed state.
std::pair<int, StateVector> measure_in_basis(const StateVector& q, int basis,
                                             RngStream& rng) {
    StateVector s = q;
    if (basis == 1) s = apply(standard_gate(GateName::H), {0}, s);
    const MeasurementOutcome out = measure(s, {0}, rng);
    StateVector post = out.post_state;
    if (basis == 1) post = apply(standard_gate(GateName::H), {0}, post);
    return {static_cast<int>(out.outcome), post};
}

StateVector encode_bit(int bit, int basis) {
    StateVector s = basis_state(1, static_cast<std::uint64_t>(bit));
    if (basis == 1) s = apply(standard_gate(GateName::H), {0}, s);
    return s;
}

}  // namespace

Bb84Report bb84(std::uint64_t n_bits, bool eve, RngStream& rng) {
    if (n_bits < 1) throw DomainError("bb84 needs at least one bit");
    Bb84Report report;
    report.n_sent = n_bits;
    report.eve_present = eve;

    std::uint64_t disagreements = 0;
    for (std::uint64_t i = 0; i < n_bits; ++i) {
        const int alice_bit = rng.next_bool() ? 1 : 0;
        const int alice_basis = rng.next_bool() ? 1 : 0;
        StateVector photon = encode_bit(alice_bit, alice_basis);

        if (eve) {
            const int eve_basis = rng.next_bool() ? 1 : 0;
            photon = measure_in_basis(photon, eve_basis, rng).second;
        }

        const int bob_basis = rng.next_bool() ? 1 : 0;
        const int bob_bit = measure_in_basis(photon, bob_basis, rng).first;

        if (bob_basis == alice_basis) {
            report.sifted_indices.push_back(i);
            if (bob_bit != alice_bit) ++disagreements;
        }
    }
    const double n_sifted = static_cast<double>(report.sifted_indices.size());
    report.sifted_fraction = n_sifted / static_cast<double>(n_bits);
    report.disagreement_rate = n_sifted > 0 ? disagreements / n_sifted : 0.0;
    return report;
}

StateVector epr_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    return StateVector::unchecked(2, {Amplitude(s, 0), Amplitude(0, 0),
                                      Amplitude(0, 0), Amplitude(s, 0)});
}

StateVector dense_encode(int value, const StateVector& pair) {
    if (value < 0 || value > 3) throw DomainError("dense_encode value must be 0..3");
    if (pair.n_qubits() != 2) throw DomainError("dense_encode needs a 2-qubit pair");
    static const GateName kEncoding[4] = {GateName::I, GateName::X, GateName::Y,
                                          GateName::Z};
    return apply(standard_gate(kEncoding[value]), {0}, pair);
}

namespace {

// The decode measurements must be point-mass; anything else means the input
// was not one of psi_0..psi_3.
int deterministic_bit(const StateVector& s, int qubit) {
    const Distribution d = probabilities(s, {qubit});
    for (const auto& [outcome, p] : d.probabilities) {
        if (p > 1.0 - 1e-9) return static_cast<int>(outcome);
    }
    throw IntegrityError("dense_decode: state is not a dense-coding code state");
}

}  // namespace

int dense_decode(const StateVector& state) {
    if (state.n_qubits() != 2) throw DomainError("dense_decode needs a 2-qubit state");
    StateVector s = apply(standard_gate(GateName::CNOT), {0, 1}, state);
    const int second = deterministic_bit(s, 1);
    s = apply(standard_gate(GateName::H), {0}, s);
    const int first = deterministic_bit(s, 0);
    // (first, second): (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3
    if (first == 0) return second;
    return second ? 2 : 3;
}

TeleportResult teleport(const StateVector& phi, RngStream& rng) {
    if (phi.n_qubits() != 1) throw DomainError("teleport needs a 1-qubit state");
    StateVector s = tensor(phi, epr_pair());
    s = apply(standard_gate(GateName::CNOT), {0, 1}, s);
    s = apply(standard_gate(GateName::H), {0}, s);

    const MeasurementOutcome out = measure(s, {0, 1}, rng);
    const int bits = static_cast<int>(out.outcome);

    // Bob's correction per received bits: 00->I, 01->X, 10->Z, 11->Y.
    static const GateName kCorrection[4] = {GateName::I, GateName::X, GateName::Z,
                                            GateName::Y};
    StateVector corrected = apply(standard_gate(kCorrection[bits]), {2}, out.post_state);

    // The first two qubits are in basis state `bits`; factor out Bob's qubit.
    const std::uint64_t base = static_cast<std::uint64_t>(bits) << 1;
    std::vector<Amplitude> bob = {corrected.amp(base), corrected.amp(base | 1)};
    return TeleportResult{bits, StateVector::unchecked(1, std::move(bob))};
}

}  // namespace qsim
