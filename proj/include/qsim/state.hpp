#ifndef QSIM_STATE_HPP
#define QSIM_STATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsim/common.hpp"

namespace qsim {

// Normalized complex amplitude vector over 2^n basis states.
//
// Bit order: the ket string is read left to right as a binary number, so the
// leftmost ket character (qubit 0) is the most significant bit of the
// amplitude-array index. |10⟩ on two qubits is index 2.
class StateVector {
public:
    // Empty placeholder (0 qubits, no amplitudes); useful only as a slot to
    // assign into.
    StateVector() = default;

    // Validates and, within tolerance, renormalizes. Norm deviations above
    // kNormRejectTol are rejected as malformed input.
    StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

    // Internal constructor for operations that preserve normalization by
    // construction; skips the norm check.
    static StateVector unchecked(int n_qubits, std::vector<Amplitude> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t(1) << n_qubits_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude amp(std::uint64_t index) const { return amps_[index]; }

    double norm() const;

    // Bit mask of qubit q in the amplitude index (qubit 0 = MSB).
    std::uint64_t qubit_mask(int q) const {
        return std::uint64_t(1) << (n_qubits_ - 1 - q);
    }

private:
    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

// |x⟩ on n qubits.
StateVector basis_state(int n_qubits, std::uint64_t x);

// Tensor product; amplitude at (x·2^{n_w} + y) is amp_v(x)·amp_w(y).
StateVector tensor(const StateVector& v, const StateVector& w);

// Determinant criterion: a 2-qubit state factors as a product of two
// single-qubit states iff amp(00)·amp(11) − amp(01)·amp(10) = 0.
bool is_product_state_2q(const StateVector& v);

// Human-readable ket sum, terms in basis-index order, amplitudes below
// `threshold` in magnitude omitted. "0.7071|00⟩ - 0.7071|11⟩"
std::string format_dirac(const StateVector& v, double threshold = kTol);

// Parses "|101⟩" or bare "101" into a basis state.
StateVector parse_ket(const std::string& text);

// |⟨u|v⟩|; 1 means equal up to global phase.
double overlap(const StateVector& u, const StateVector& v);

}  // namespace qsim

#endif
