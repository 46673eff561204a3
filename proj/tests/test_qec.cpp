#include <cmath>
#include <set>

#include "doctest.h"
#include "qsim/measure.hpp"
#include "qsim/qec.hpp"
#include "util.hpp"

using qsim::Amplitude;
using qsim::ErrorOperator;
using qsim::GateName;
using qsim::QuantumCode;
using qsim::StateVector;
using qsim::UnitaryOp;
using testutil::max_dev;
using testutil::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

UnitaryOp one_qubit(GateName g) { return qsim::standard_gate(g); }

UnitaryOp triple(GateName a, GateName b, GateName c) {
    return qsim::tensor_op(qsim::tensor_op(one_qubit(a), one_qubit(b)), one_qubit(c));
}

StateVector minus_code() {
    // (|000> - |111>)/sqrt(2), the encoded (|0> - |1>)/sqrt(2).
    std::vector<Amplitude> amps(8, Amplitude(0, 0));
    amps[0] = Amplitude(kInvSqrt2, 0);
    amps[7] = Amplitude(-kInvSqrt2, 0);
    return StateVector::unchecked(3, std::move(amps));
}

}  // namespace

TEST_CASE("encoding maps the data qubit onto the repetition basis") {
    const QuantumCode code = qsim::bitflip_code();
    const StateVector psi =
        StateVector::unchecked(1, {Amplitude(kInvSqrt2, 0), Amplitude(-kInvSqrt2, 0)});
    CHECK(max_dev(qsim::encode(code, psi), minus_code()) <= 1e-12);
    CHECK(max_dev(qsim::encode(code, qsim::basis_state(1, 0)), qsim::basis_state(3, 0)) == 0.0);
    CHECK(max_dev(qsim::encode(code, qsim::basis_state(1, 1)), qsim::basis_state(3, 7)) == 0.0);
    CHECK_THROWS_AS(qsim::encode(code, qsim::basis_state(2, 0)), qsim::DomainError);
}

TEST_CASE("syndrome operator is a basis permutation computing the parities") {
    const QuantumCode code = qsim::bitflip_code();
    const UnitaryOp& s = code.syndrome_op;
    CHECK(qsim::is_unitary(s));
    for (std::uint64_t c = 0; c < s.dim(); ++c) {
        int ones = 0;
        for (std::uint64_t r = 0; r < s.dim(); ++r) {
            const Amplitude e = s.at(r, c);
            CHECK((std::abs(e) <= 1e-15 || std::abs(e - Amplitude(1, 0)) <= 1e-15));
            if (std::abs(e - Amplitude(1, 0)) <= 1e-15) ++ones;
        }
        CHECK(ones == 1);
    }

    // |x0 x1 x2, 000> -> |x0 x1 x2, x0^x1, x0^x2, x1^x2>.
    auto syndrome_of = [&](std::uint64_t data3) {
        const std::uint64_t in = data3 << 3;
        for (std::uint64_t r = 0; r < s.dim(); ++r)
            if (std::abs(s.at(r, in) - Amplitude(1, 0)) <= 1e-15) return r & 7;
        return std::uint64_t(8);
    };
    CHECK(syndrome_of(0b000) == 0b000);  // no error
    CHECK(syndrome_of(0b100) == 0b110);  // X on qubit 0
    CHECK(syndrome_of(0b010) == 0b101);  // X on qubit 1
    CHECK(syndrome_of(0b001) == 0b011);  // X on qubit 2
    CHECK(syndrome_of(0b111) == 0b000);  // code word
}

TEST_CASE("correction table entries are the self-inverse single-flip operators") {
    const QuantumCode code = qsim::bitflip_code();
    CHECK(code.correction_table.size() == 4);
    for (const auto& [syndrome, op] : code.correction_table) {
        CHECK(qsim::is_unitary(op));
        // E = E^-1 for these operators: E*E = I.
        for (std::uint64_t r = 0; r < op.dim(); ++r)
            for (std::uint64_t c = 0; c < op.dim(); ++c) {
                Amplitude acc(0, 0);
                for (std::uint64_t k = 0; k < op.dim(); ++k)
                    acc += op.at(r, k) * op.at(k, c);
                CHECK(std::abs(acc - Amplitude(r == c ? 1 : 0, 0)) <= 1e-12);
            }
    }
}

TEST_CASE("apply_error: worked mixture of two bit flips") {
    ErrorOperator e;
    e.terms.push_back({Amplitude(0.8, 0), triple(GateName::X, GateName::I, GateName::I)});
    e.terms.push_back({Amplitude(0.6, 0), triple(GateName::I, GateName::X, GateName::I)});
    const StateVector out = qsim::apply_error(e, minus_code());
    // (4/(5 sqrt 2))(|100> - |011>) + (3/(5 sqrt 2))(|010> - |101>)
    CHECK(std::abs(out.amp(0b100).real() - 0.8 * kInvSqrt2) <= 1e-12);
    CHECK(std::abs(out.amp(0b011).real() + 0.8 * kInvSqrt2) <= 1e-12);
    CHECK(std::abs(out.amp(0b010).real() - 0.6 * kInvSqrt2) <= 1e-12);
    CHECK(std::abs(out.amp(0b101).real() + 0.6 * kInvSqrt2) <= 1e-12);
    CHECK(std::abs(out.norm() - 1.0) <= 1e-10);
}

TEST_CASE("apply_error: identity and single-term cases, weight validation") {
    ErrorOperator id;
    id.terms.push_back({Amplitude(1, 0), triple(GateName::I, GateName::I, GateName::I)});
    CHECK(max_dev(qsim::apply_error(id, minus_code()), minus_code()) <= 1e-12);

    ErrorOperator flip;
    flip.terms.push_back({Amplitude(1, 0), triple(GateName::X, GateName::I, GateName::I)});
    const StateVector flipped = qsim::apply_error(flip, minus_code());
    CHECK(std::abs(flipped.amp(0b100).real() - kInvSqrt2) <= 1e-12);
    CHECK(std::abs(flipped.amp(0b011).real() + kInvSqrt2) <= 1e-12);

    ErrorOperator bad;
    bad.terms.push_back({Amplitude(0.8, 0), triple(GateName::X, GateName::I, GateName::I)});
    CHECK_THROWS_AS(qsim::apply_error(bad, minus_code()), qsim::DomainError);
    CHECK_THROWS_AS(qsim::apply_error(ErrorOperator{}, minus_code()), qsim::DomainError);
}

TEST_CASE("worked recovery: syndrome branches 16/25 and 9/25, fidelity 1") {
    const QuantumCode code = qsim::bitflip_code();
    ErrorOperator e;
    e.terms.push_back({Amplitude(0.8, 0), triple(GateName::X, GateName::I, GateName::I)});
    e.terms.push_back({Amplitude(0.6, 0), triple(GateName::I, GateName::X, GateName::I)});
    const StateVector corrupted = qsim::apply_error(e, minus_code());

    // Exact branch probabilities via the padded syndrome state.
    StateVector padded = qsim::tensor(corrupted, qsim::basis_state(3, 0));
    padded = qsim::apply(code.syndrome_op, {0, 1, 2, 3, 4, 5}, padded);
    const qsim::Distribution d = qsim::probabilities(padded, {3, 4, 5});
    CHECK(std::abs(d.probabilities.at(0b110) - 16.0 / 25.0) <= 1e-12);
    CHECK(std::abs(d.probabilities.at(0b101) - 9.0 / 25.0) <= 1e-12);

    // Both branches recover the encoded state exactly.
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed = 1; seed <= 40 && seen.size() < 2; ++seed) {
        qsim::RngStream rng(seed);
        const qsim::RecoveryReport rep = qsim::recover(code, corrupted, rng);
        seen.insert(rep.syndrome);
        CHECK(rep.correctable);
        CHECK((rep.syndrome == 0b110 || rep.syndrome == 0b101));
        CHECK(std::abs(rep.fidelity_to_encoded - 1.0) <= 1e-9);
        CHECK(std::abs(qsim::overlap(rep.final_state, minus_code()) - 1.0) <= 1e-9);
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("no-error input recovers trivially") {
    const QuantumCode code = qsim::bitflip_code();
    qsim::RngStream rng(3);
    const qsim::RecoveryReport rep = qsim::recover(code, minus_code(), rng);
    CHECK(rep.syndrome == 0);
    CHECK(rep.correctable);
    CHECK(max_dev(rep.final_state, minus_code()) <= 1e-12);
    CHECK(std::abs(rep.fidelity_to_encoded - 1.0) <= 1e-12);
}

TEST_CASE("random data states and error mixtures always recover") {
    const QuantumCode code = qsim::bitflip_code();
    const UnitaryOp flips[] = {
        triple(GateName::I, GateName::I, GateName::I),
        triple(GateName::X, GateName::I, GateName::I),
        triple(GateName::I, GateName::X, GateName::I),
        triple(GateName::I, GateName::I, GateName::X),
    };
    qsim::RngStream rng(91);
    for (int state_trial = 0; state_trial < 5; ++state_trial) {
        const StateVector data = random_state(1, rng);
        const StateVector encoded = qsim::encode(code, data);
        for (int mix_trial = 0; mix_trial < 5; ++mix_trial) {
            ErrorOperator e;
            double total = 0.0;
            std::vector<double> weights(4);
            for (auto& w : weights) {
                w = 0.05 + rng.next_double();
                total += w * w;
            }
            for (int i = 0; i < 4; ++i)
                e.terms.push_back({Amplitude(weights[i] / std::sqrt(total), 0), flips[i]});
            const StateVector corrupted = qsim::apply_error(e, encoded);
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                qsim::RngStream mrng(seed * 1000 + mix_trial);
                const qsim::RecoveryReport rep = qsim::recover(code, corrupted, mrng);
                CHECK(rep.correctable);
                CHECK(std::abs(rep.fidelity_to_encoded - 1.0) <= 1e-9);
                CHECK(std::abs(qsim::overlap(rep.final_state, encoded) - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("a syndrome missing from the table reports uncorrectable") {
    QuantumCode code = qsim::bitflip_code();
    code.correction_table.erase(0b011);
    ErrorOperator e;
    e.terms.push_back({Amplitude(1, 0), triple(GateName::I, GateName::I, GateName::X)});
    const StateVector corrupted = qsim::apply_error(e, minus_code());
    qsim::RngStream rng(1);
    const qsim::RecoveryReport rep = qsim::recover(code, corrupted, rng);
    CHECK(rep.syndrome == 0b011);
    CHECK_FALSE(rep.correctable);
    CHECK(rep.fidelity_to_encoded == 0.0);
}
