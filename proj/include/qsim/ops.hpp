#ifndef QSIM_OPS_HPP
#define QSIM_OPS_HPP

#include <cstdint>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/state.hpp"

namespace qsim {

enum class GateName { I, X, Y, Z, H, CNOT, SWAP, TOFFOLI, FREDKIN };

// Dense 2^k x 2^k complex matrix, row-major. Gate constructors always return
// unitary matrices; the type itself can hold arbitrary square matrices so
// that is_unitary has something to reject (e.g. Hogg's raw move matrix).
//
// Row/column indices follow the same bit order as StateVector: the first
// qubit a gate acts on is the most significant bit of the index.
struct UnitaryOp {
    int arity = 0;
    std::vector<Amplitude> entries;  // row-major, dim() * dim()

    UnitaryOp() = default;
    UnitaryOp(int arity_, std::vector<Amplitude> entries_);

    std::uint64_t dim() const { return std::uint64_t(1) << arity; }
    Amplitude at(std::uint64_t row, std::uint64_t col) const {
        return entries[row * dim() + col];
    }
    Amplitude& at(std::uint64_t row, std::uint64_t col) {
        return entries[row * dim() + col];
    }
};

// Fixed gates of the conventional table. Note Y is the real matrix
// ((0,1),(-1,0)) = ZX, not the Pauli-Y with imaginary entries; the
// dense-coding and teleportation tables depend on this convention.
UnitaryOp standard_gate(GateName name);

// |0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ u; the new control is the first (most significant)
// qubit. controlled(X) = CNOT, controlled(CNOT) = Toffoli.
UnitaryOp controlled(const UnitaryOp& u);

// ((cos a, sin a), (-sin a, cos a))
UnitaryOp rotation(double alpha);

// diag(e^{ia}, e^{-ia})
UnitaryOp phase(double alpha);

// Kronecker product; a's qubits become the high-order qubits.
UnitaryOp tensor_op(const UnitaryOp& a, const UnitaryOp& b);

// n-fold tensor power of H; entry (r,s) = (-1)^{popcount(r&s)} / sqrt(2^n).
UnitaryOp walsh(int n);

// Applies a k-qubit gate to the given target qubits of an n-qubit state
// without materializing the 2^n x 2^n matrix. targets[0] corresponds to the
// most significant bit of the gate's index.
StateVector apply(const UnitaryOp& u, const std::vector<int>& targets,
                  const StateVector& state);

// Max-entry deviation of U·U* from I below kTol.
bool is_unitary(const UnitaryOp& u);

}  // namespace qsim

#endif
