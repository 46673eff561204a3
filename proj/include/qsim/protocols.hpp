#ifndef QSIM_PROTOCOLS_HPP
#define QSIM_PROTOCOLS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

struct Bb84Report {
    std::uint64_t n_sent = 0;
    std::vector<std::uint64_t> sifted_indices;
    double sifted_fraction = 0.0;
    double disagreement_rate = 0.0;  // on sifted bits
    bool eve_present = false;
};

// BB84 with an optional intercept-resend eavesdropper. Each bit is simulated
// as a fresh single-qubit state; the diagonal basis is H followed by a
// standard measurement. Per-bit draw order: Alice bit, Alice basis,
// [Eve basis, Eve measurement], Bob basis, Bob measurement.
Bb84Report bb84(std::uint64_t n_bits, bool eve, RngStream& rng);

// (|00⟩+|11⟩)/sqrt(2)
StateVector epr_pair();

// Applies {I, X, Y, Z}[value] to the first qubit of the pair.
StateVector dense_encode(int value, const StateVector& pair);

// CNOT, then H on the first qubit; both measurements are point-mass for a
// valid code state. Throws IntegrityError when a non-point-mass distribution
// is encountered (partial detection of invalid input).
int dense_decode(const StateVector& state);

struct TeleportResult {
    int bits = 0;  // Alice's two classical bits, first measured bit is the MSB
    StateVector bob_final;
};

// Teleports a single-qubit state through an EPR pair. bob_final equals phi up
// to global phase.
TeleportResult teleport(const StateVector& phi, RngStream& rng);

}  // namespace qsim

#endif
