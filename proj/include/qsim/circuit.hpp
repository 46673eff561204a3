#ifndef QSIM_CIRCUIT_HPP
#define QSIM_CIRCUIT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/ops.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Reversible embedding of a classical function: |x,y⟩ -> |x, y xor f(x)⟩.
struct ClassicalOracle {
    int n_in = 0;   // input bit-count m
    int n_out = 0;  // output bit-count k
    std::function<std::uint64_t(std::uint64_t)> f;
};

struct GateInstr {
    // CPhase is the two-qubit diag(1,1,1,e^{ia}) gate of the QFT
    // decomposition ("cphase <q1> <q2> <alpha>" in circuit text).
    enum class Kind { Named, Rot, Phase, CPhase, Oracle };

    Kind kind = Kind::Named;
    GateName gate = GateName::I;         // Kind::Named
    double alpha = 0.0;                  // Kind::Rot / Kind::Phase / Kind::CPhase
    std::string oracle_name;             // Kind::Oracle
    std::vector<int> targets;            // in-register for oracles
    std::vector<int> out_targets;        // out-register, oracles only

    bool operator==(const GateInstr&) const = default;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<GateInstr> instrs;

    bool operator==(const Circuit&) const = default;
};

// Oracles are referenced by name in circuit text; implementations are
// resolved from a registry at run time.
using OracleRegistry = std::map<std::string, ClassicalOracle>;

// Basis permutation |x,y,rest⟩ -> |x, y xor f(x), rest⟩. Applying the same
// oracle twice is the identity.
StateVector apply_oracle(const ClassicalOracle& o, const StateVector& state,
                         const std::vector<int>& in_qubits,
                         const std::vector<int>& out_qubits);

StateVector run(const Circuit& c, const StateVector& initial,
                const OracleRegistry& oracles = {});

// Syntax error with 1-based line/column position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Line-oriented circuit text: first line "qubits N", then one instruction per
// line; '#' begins a comment; LF endings canonical.
Circuit parse(const std::string& text);
std::string serialize(const Circuit& c);

// The Toffoli/CNOT full adder on qubits |c,x,y,0,0⟩ -> |c,x,y,s,c'⟩.
Circuit full_adder();

}  // namespace qsim

#endif
