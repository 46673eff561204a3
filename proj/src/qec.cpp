#include "qsim/qec.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "qsim/measure.hpp"

namespace qsim {

QuantumCode bitflip_code() {
    QuantumCode code;
    code.n_data = 1;
    code.n_code = 3;
    code.n_anc = 3;
    code.encoder = {0b000, 0b111};

    // Permutation on 6 qubits: xor the three parities of the data bits into
    // the ancilla register.
    const int n = code.n_code + code.n_anc;
    const std::uint64_t dim = std::uint64_t(1) << n;
    UnitaryOp s(n, std::vector<Amplitude>(dim * dim, Amplitude(0, 0)));
    for (std::uint64_t i = 0; i < dim; ++i) {
        const int x0 = (i >> 5) & 1, x1 = (i >> 4) & 1, x2 = (i >> 3) & 1;
        const std::uint64_t parity =
            std::uint64_t((x0 ^ x1) << 2 | (x0 ^ x2) << 1 | (x1 ^ x2));
        s.at(i ^ parity, i) = Amplitude(1, 0);
    }
    code.syndrome_op = std::move(s);

    const UnitaryOp i1 = standard_gate(GateName::I);
    const UnitaryOp x1 = standard_gate(GateName::X);
    code.correction_table[0b000] = tensor_op(tensor_op(i1, i1), i1);
    code.correction_table[0b110] = tensor_op(tensor_op(x1, i1), i1);
    code.correction_table[0b101] = tensor_op(tensor_op(i1, x1), i1);
    code.correction_table[0b011] = tensor_op(tensor_op(i1, i1), x1);
    return code;
}

StateVector encode(const QuantumCode& code, const StateVector& data) {
    if (data.n_qubits() != code.n_data) throw DomainError("encode: data width mismatch");
    std::vector<Amplitude> amps(std::uint64_t(1) << code.n_code, Amplitude(0, 0));
    for (std::uint64_t x = 0; x < data.dim(); ++x) amps[code.encoder[x]] = data.amp(x);
    return StateVector::unchecked(code.n_code, std::move(amps));
}

StateVector apply_error(const ErrorOperator& e, const StateVector& state) {
    if (e.terms.empty()) throw DomainError("empty error operator");
    double weight = 0.0;
    for (const auto& t : e.terms) {
        if (t.op.arity != state.n_qubits()) throw DomainError("error arity mismatch");
        weight += std::norm(t.coefficient);
    }
    if (std::abs(weight - 1.0) > kTol)
        throw DomainError("error coefficients must satisfy sum |e_i|^2 = 1");

    std::vector<int> all(state.n_qubits());
    for (int q = 0; q < state.n_qubits(); ++q) all[q] = q;

    std::vector<Amplitude> acc(state.dim(), Amplitude(0, 0));
    for (const auto& t : e.terms) {
        const StateVector part = apply(t.op, all, state);
        for (std::uint64_t i = 0; i < state.dim(); ++i)
            acc[i] += t.coefficient * part.amp(i);
    }
    double nrm = 0.0;
    for (const auto& a : acc) nrm += std::norm(a);
    nrm = std::sqrt(nrm);
    if (std::abs(nrm - 1.0) > kTol) {
        // Term images overlap; the coefficient weighting no longer yields a
        // unit vector on its own.
        std::fprintf(stderr,
                     "warning: error terms have non-orthogonal images; "
                     "renormalizing (norm %.6g)\n",
                     nrm);
        for (auto& a : acc) a /= nrm;
    }
    return StateVector::unchecked(state.n_qubits(), std::move(acc));
}

RecoveryReport recover(const QuantumCode& code, const StateVector& corrupted,
                       RngStream& rng) {
    if (corrupted.n_qubits() != code.n_code)
        throw DomainError("recover: corrupted state width mismatch");
    const int n = code.n_code + code.n_anc;

    StateVector padded = tensor(corrupted, basis_state(code.n_anc, 0));
    std::vector<int> all(n);
    for (int q = 0; q < n; ++q) all[q] = q;
    padded = apply(code.syndrome_op, all, padded);

    std::vector<int> anc(code.n_anc);
    for (int q = 0; q < code.n_anc; ++q) anc[q] = code.n_code + q;
    const MeasurementOutcome m = measure(padded, anc, rng);

    RecoveryReport report;
    report.syndrome = m.outcome;

    // Strip the ancilla, now in basis state m.outcome.
    const std::uint64_t anc_dim = std::uint64_t(1) << code.n_anc;
    std::vector<Amplitude> block(std::uint64_t(1) << code.n_code);
    for (std::uint64_t x = 0; x < block.size(); ++x)
        block[x] = m.post_state.amp(x * anc_dim + m.outcome);
    StateVector collapsed = StateVector::unchecked(code.n_code, std::move(block));

    const auto it = code.correction_table.find(m.outcome);
    if (it == code.correction_table.end()) {
        report.correctable = false;
        report.final_state = collapsed;
        report.fidelity_to_encoded = 0.0;
        return report;
    }
    report.correctable = true;

    // Apply the inverse of the identified error. The table stores the error
    // operator itself; its inverse is the conjugate transpose.
    const UnitaryOp& err = it->second;
    UnitaryOp inv(err.arity, std::vector<Amplitude>(err.entries.size()));
    for (std::uint64_t r = 0; r < err.dim(); ++r)
        for (std::uint64_t c = 0; c < err.dim(); ++c)
            inv.at(r, c) = std::conj(err.at(c, r));
    std::vector<int> data_qubits(code.n_code);
    for (int q = 0; q < code.n_code; ++q) data_qubits[q] = q;
    report.final_state = apply(inv, data_qubits, collapsed);

    // Fidelity: norm of the projection onto the code space (the span of the
    // encoder's basis images); 1 means properly encoded.
    double mass = 0.0;
    for (std::uint64_t x = 0; x < code.encoder.size(); ++x)
        mass += std::norm(report.final_state.amp(code.encoder[x]));
    report.fidelity_to_encoded = std::sqrt(mass);
    return report;
}

}  // namespace qsim
