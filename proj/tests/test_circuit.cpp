#include <cmath>
#include <vector>

#include "doctest.h"
#include "qsim/circuit.hpp"
#include "util.hpp"

using qsim::Amplitude;
using qsim::Circuit;
using qsim::ClassicalOracle;
using qsim::GateInstr;
using qsim::GateName;
using qsim::StateVector;
using testutil::max_dev;
using testutil::random_state;

TEST_CASE("parse the minimal grammar") {
    const Circuit c = qsim::parse("qubits 2\ncnot 0 1\n");
    CHECK(c.n_qubits == 2);
    REQUIRE(c.instrs.size() == 1);
    CHECK(c.instrs[0].kind == GateInstr::Kind::Named);
    CHECK(c.instrs[0].gate == GateName::CNOT);
    CHECK(c.instrs[0].targets == std::vector<int>{0, 1});

    const Circuit r = qsim::parse("qubits 1\nrot 0 0.0\n");
    REQUIRE(r.instrs.size() == 1);
    CHECK(r.instrs[0].kind == GateInstr::Kind::Rot);
    CHECK(max_dev(qsim::run(r, qsim::basis_state(1, 0)), qsim::basis_state(1, 0)) <= 1e-12);

    const Circuit hh = qsim::parse("qubits 2\nh 0\nh 0\n");
    CHECK(max_dev(qsim::run(hh, qsim::basis_state(2, 0)), qsim::basis_state(2, 0)) <= 1e-12);
}

TEST_CASE("comments and blank lines are skipped") {
    const Circuit c = qsim::parse("# adder fragment\nqubits 3\n\nx 0  # flip\n# done\n");
    CHECK(c.n_qubits == 3);
    REQUIRE(c.instrs.size() == 1);
    CHECK(c.instrs[0].gate == GateName::X);
}

TEST_CASE("parse errors carry line and column") {
    try {
        qsim::parse("qubits 2\nbogus 0\n");
        FAIL("expected ParseError");
    } catch (const qsim::ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(qsim::parse("h 0\n"), qsim::ParseError);           // missing header
    CHECK_THROWS_AS(qsim::parse("qubits 2\nh 5\n"), qsim::ParseError); // out of range
    CHECK_THROWS_AS(qsim::parse("qubits 2\ncnot 1\n"), qsim::ParseError);  // arity
    CHECK_THROWS_AS(qsim::parse("qubits 2\ncnot 1 1\n"), qsim::ParseError);  // duplicate
}

TEST_CASE("serialize and parse are mutually inverse") {
    Circuit c;
    c.n_qubits = 5;
    c.instrs = {
        GateInstr{GateInstr::Kind::Named, GateName::H, 0.0, "", {0}, {}},
        GateInstr{GateInstr::Kind::Named, GateName::CNOT, 0.0, "", {0, 2}, {}},
        GateInstr{GateInstr::Kind::Named, GateName::TOFFOLI, 0.0, "", {0, 1, 3}, {}},
        GateInstr{GateInstr::Kind::Named, GateName::FREDKIN, 0.0, "", {1, 2, 4}, {}},
        GateInstr{GateInstr::Kind::Named, GateName::SWAP, 0.0, "", {0, 4}, {}},
        GateInstr{GateInstr::Kind::Rot, GateName::I, 0.12345, "", {2}, {}},
        GateInstr{GateInstr::Kind::Phase, GateName::I, -2.5, "", {3}, {}},
        GateInstr{GateInstr::Kind::CPhase, GateName::I, 0.7853981633974483, "", {1, 3}, {}},
        GateInstr{GateInstr::Kind::Oracle, GateName::I, 0.0, "f", {0, 1}, {2, 3}},
    };
    const std::string text = qsim::serialize(c);
    const Circuit back = qsim::parse(text);
    CHECK(back == c);
    CHECK(qsim::serialize(back) == text);  // canonical fixed point
}

TEST_CASE("apply_oracle implements |x,y> -> |x, y xor f(x)>") {
    // f = AND of two bits into one output bit, on the uniform input register.
    const ClassicalOracle and_oracle{2, 1,
                                     [](std::uint64_t x) { return (x == 3) ? 1ull : 0ull; }};
    std::vector<Amplitude> amps(8, Amplitude(0, 0));
    amps[0] = amps[2] = amps[4] = amps[6] = Amplitude(0.5, 0);  // 1/2(|000>+|010>+|100>+|110>)
    const StateVector in = StateVector::unchecked(3, std::move(amps));
    const StateVector out = qsim::apply_oracle(and_oracle, in, {0, 1}, {2});
    CHECK(std::abs(out.amp(0).real() - 0.5) <= 1e-12);
    CHECK(std::abs(out.amp(2).real() - 0.5) <= 1e-12);
    CHECK(std::abs(out.amp(4).real() - 0.5) <= 1e-12);
    CHECK(std::abs(out.amp(7).real() - 0.5) <= 1e-12);  // |110> -> |111>
    CHECK(std::abs(out.amp(6)) <= 1e-12);

    // Involution: applying the same oracle twice is the identity.
    const StateVector twice = qsim::apply_oracle(and_oracle, out, {0, 1}, {2});
    CHECK(max_dev(twice, in) <= 1e-12);

    CHECK_THROWS_AS(qsim::apply_oracle(and_oracle, in, {0, 1}, {1}), qsim::DomainError);
}

TEST_CASE("apply_oracle agrees with the brute-force permutation matrix") {
    qsim::RngStream rng(717);
    // Random f: [0,2^3) -> [0,2^2), in/out registers at scattered positions.
    std::vector<std::uint64_t> table(8);
    for (auto& t : table) t = rng.next_below(4);
    const ClassicalOracle o{3, 2, [table](std::uint64_t x) { return table[x]; }};
    const int n = 6;
    const std::vector<int> in_q{4, 0, 2}, out_q{5, 1};

    const StateVector s = random_state(n, rng);
    const StateVector fast = qsim::apply_oracle(o, s, in_q, out_q);

    // Oracle: permute each basis index explicitly.
    std::vector<Amplitude> slow(s.dim(), Amplitude(0, 0));
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < in_q.size(); ++j)
            x |= ((i >> (n - 1 - in_q[j])) & 1) << (in_q.size() - 1 - j);
        const std::uint64_t fx = table[x];
        std::uint64_t target = i;
        for (std::size_t j = 0; j < out_q.size(); ++j) {
            const std::uint64_t bit = (fx >> (out_q.size() - 1 - j)) & 1;
            target ^= bit << (n - 1 - out_q[j]);
        }
        slow[target] += s.amp(i);
    }
    CHECK(max_dev(fast, StateVector::unchecked(n, std::move(slow))) <= 1e-12);
}

TEST_CASE("run: empty circuit and oracle registry") {
    qsim::RngStream rng(818);
    const StateVector s = random_state(3, rng);
    Circuit empty;
    empty.n_qubits = 3;
    CHECK(max_dev(qsim::run(empty, s), s) <= 1e-15);

    Circuit with_oracle;
    with_oracle.n_qubits = 3;
    with_oracle.instrs = {
        GateInstr{GateInstr::Kind::Oracle, GateName::I, 0.0, "not", {0}, {2}}};
    qsim::OracleRegistry reg;
    reg["not"] = ClassicalOracle{1, 1, [](std::uint64_t x) { return x ^ 1; }};
    CHECK(max_dev(qsim::run(with_oracle, qsim::basis_state(3, 0), reg),
                  qsim::basis_state(3, 1)) == 0.0);
    CHECK_THROWS_AS(qsim::run(with_oracle, qsim::basis_state(3, 0)), qsim::DomainError);
}

TEST_CASE("full adder reproduces the classical truth table") {
    const Circuit adder = qsim::full_adder();
    CHECK(adder.n_qubits == 5);

    // |c,x,y,0,0> -> |c,x,y,s,c'>; worked case 1,1,0 -> s=0, c'=1.
    const StateVector got = qsim::run(adder, qsim::parse_ket("11000"));
    CHECK(max_dev(got, qsim::parse_ket("11001")) <= 1e-12);

    for (int c = 0; c <= 1; ++c)
        for (int x = 0; x <= 1; ++x)
            for (int y = 0; y <= 1; ++y) {
                const std::uint64_t in = std::uint64_t(c) << 4 | std::uint64_t(x) << 3 |
                                         std::uint64_t(y) << 2;
                const int s = c ^ x ^ y;
                const int carry = (c + x + y) >= 2 ? 1 : 0;
                const std::uint64_t want = in | std::uint64_t(s) << 1 | std::uint64_t(carry);
                CHECK(max_dev(qsim::run(adder, qsim::basis_state(5, in)),
                              qsim::basis_state(5, want)) <= 1e-12);
            }
}

TEST_CASE("long random circuits preserve norm") {
    qsim::RngStream rng(919);
    Circuit c;
    c.n_qubits = 5;
    for (int i = 0; i < 200; ++i) {
        const int pick = int(rng.next_below(4));
        const int q = int(rng.next_below(5));
        int q2 = int(rng.next_below(5));
        if (q2 == q) q2 = (q2 + 1) % 5;
        switch (pick) {
            case 0:
                c.instrs.push_back(GateInstr{GateInstr::Kind::Named, GateName::H, 0, "", {q}, {}});
                break;
            case 1:
                c.instrs.push_back(
                    GateInstr{GateInstr::Kind::Rot, GateName::I, rng.next_double(), "", {q}, {}});
                break;
            case 2:
                c.instrs.push_back(
                    GateInstr{GateInstr::Kind::Named, GateName::CNOT, 0, "", {q, q2}, {}});
                break;
            default:
                c.instrs.push_back(GateInstr{GateInstr::Kind::CPhase, GateName::I,
                                             rng.next_double(), "", {q, q2}, {}});
        }
    }
    const StateVector out = qsim::run(c, random_state(5, rng));
    CHECK(std::abs(out.norm() - 1.0) <= 1e-9);
}
