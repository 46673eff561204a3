#ifndef QSIM_QEC_HPP
#define QSIM_QEC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/ops.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Weighted sum of unitary error operators, sum |e_i|^2 = 1.
struct ErrorOperator {
    struct Term {
        Amplitude coefficient;
        UnitaryOp op;  // arity = the code's block size
    };
    std::vector<Term> terms;
};

// Encoder, syndrome extraction and syndrome -> correction table.
struct QuantumCode {
    int n_data = 0;
    int n_code = 0;
    int n_anc = 0;
    // Basis-state isometry: data basis index -> code basis index.
    std::vector<std::uint64_t> encoder;
    // Permutation-style unitary on n_code + n_anc qubits.
    UnitaryOp syndrome_op;
    // Measured ancilla value -> correcting operator. Syndromes must index
    // errors bijectively; degenerate codes are rejected at construction.
    std::map<std::uint64_t, UnitaryOp> correction_table;
};

struct RecoveryReport {
    std::uint64_t syndrome = 0;
    bool correctable = false;
    StateVector final_state;       // n_code qubits, ancilla stripped
    double fidelity_to_encoded = 0.0;  // norm of the projection onto code space
};

// The 1 -> 3 qubit bit-flip code: |0⟩ -> |000⟩, |1⟩ -> |111⟩, with syndrome
// |x0 x1 x2, b ⊕ (x0^x1, x0^x2, x1^x2)⟩ and single-X corrections.
QuantumCode bitflip_code();

// Encodes an n_data-qubit state into n_code qubits.
StateVector encode(const QuantumCode& code, const StateVector& data);

// sum_i e_i (E_i state). The result is renormalized with a warning only when
// the term images are not mutually orthogonal; for distinct single-bit-flip
// terms it is normalized automatically.
StateVector apply_error(const ErrorOperator& e, const StateVector& state);

// Pads with ancilla zeros, extracts and measures the syndrome (collapsing the
// error superposition), then applies the inverse correction from the table.
RecoveryReport recover(const QuantumCode& code, const StateVector& corrupted,
                       RngStream& rng);

}  // namespace qsim

#endif
