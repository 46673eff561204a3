#include "qsim/circuit.hpp"

#include <cstdio>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace qsim {

StateVector apply_oracle(const ClassicalOracle& o, const StateVector& state,
                         const std::vector<int>& in_qubits,
                         const std::vector<int>& out_qubits) {
    if (static_cast<int>(in_qubits.size()) != o.n_in ||
        static_cast<int>(out_qubits.size()) != o.n_out)
        throw DomainError("oracle register sizes do not match");
    std::unordered_set<int> seen;
    for (int q : in_qubits) {
        if (q < 0 || q >= state.n_qubits()) throw DomainError("oracle qubit out of range");
        if (!seen.insert(q).second) throw DomainError("oracle registers overlap");
    }
    for (int q : out_qubits) {
        if (q < 0 || q >= state.n_qubits()) throw DomainError("oracle qubit out of range");
        if (!seen.insert(q).second) throw DomainError("oracle registers overlap");
    }

    std::vector<std::uint64_t> in_masks, out_masks;
    for (int q : in_qubits) in_masks.push_back(state.qubit_mask(q));
    for (int q : out_qubits) out_masks.push_back(state.qubit_mask(q));

    // U_f is a permutation of basis states; move each amplitude to the basis
    // vector with f(x) xor'd into the out register.
    std::vector<Amplitude> out(state.dim(), Amplitude(0, 0));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const Amplitude a = state.amp(i);
        if (a == Amplitude(0, 0)) continue;
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < in_masks.size(); ++j)
            if (i & in_masks[j]) x |= std::uint64_t(1) << (o.n_in - 1 - j);
        const std::uint64_t fx = o.f(x);
        std::uint64_t dest = i;
        for (std::size_t j = 0; j < out_masks.size(); ++j)
            if (fx & (std::uint64_t(1) << (o.n_out - 1 - j))) dest ^= out_masks[j];
        out[dest] += a;
    }
    return StateVector::unchecked(state.n_qubits(), std::move(out));
}

namespace {

int named_arity(GateName g) {
    switch (g) {
        case GateName::I:
        case GateName::X:
        case GateName::Y:
        case GateName::Z:
        case GateName::H:
            return 1;
        case GateName::CNOT:
        case GateName::SWAP:
            return 2;
        case GateName::TOFFOLI:
        case GateName::FREDKIN:
            return 3;
    }
    throw DomainError("unknown gate");
}

void check_instr(const GateInstr& g, int n_qubits) {
    auto check_range = [&](const std::vector<int>& qs) {
        std::unordered_set<int> seen;
        for (int q : qs) {
            if (q < 0 || q >= n_qubits) throw DomainError("qubit index out of range");
            if (!seen.insert(q).second) throw DomainError("duplicate target qubit");
        }
    };
    check_range(g.targets);
    if (g.kind == GateInstr::Kind::Oracle) check_range(g.out_targets);
}

}  // namespace

StateVector run(const Circuit& c, const StateVector& initial,
                const OracleRegistry& oracles) {
    if (initial.n_qubits() != c.n_qubits)
        throw DomainError("initial state does not match circuit width");
    StateVector state = initial;
    for (const GateInstr& g : c.instrs) {
        check_instr(g, c.n_qubits);
        switch (g.kind) {
            case GateInstr::Kind::Named:
                state = apply(standard_gate(g.gate), g.targets, state);
                break;
            case GateInstr::Kind::Rot:
                state = apply(rotation(g.alpha), g.targets, state);
                break;
            case GateInstr::Kind::Phase:
                state = apply(phase(g.alpha), g.targets, state);
                break;
            case GateInstr::Kind::CPhase: {
                UnitaryOp s(2, std::vector<Amplitude>(16, Amplitude(0, 0)));
                s.at(0, 0) = s.at(1, 1) = s.at(2, 2) = Amplitude(1, 0);
                s.at(3, 3) = std::polar(1.0, g.alpha);
                state = apply(s, g.targets, state);
                break;
            }
            case GateInstr::Kind::Oracle: {
                auto it = oracles.find(g.oracle_name);
                if (it == oracles.end())
                    throw DomainError("unknown oracle: " + g.oracle_name);
                state = apply_oracle(it->second, state, g.targets, g.out_targets);
                break;
            }
        }
    }
    return state;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#')
            ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return toks;
}

int parse_int(const Token& t, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, t.column, "expected integer, got '" + t.text + "'");
    }
}

double parse_real(const Token& t, int line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, t.column, "expected real number, got '" + t.text + "'");
    }
}

// "in=0,1,2" -> {0,1,2}
std::vector<int> parse_qubit_list(const Token& t, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0)
        throw ParseError(line_no, t.column, "expected '" + key + "=<q,...>'");
    std::vector<int> qs;
    std::stringstream ss(t.text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            qs.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(line_no, t.column, "bad qubit list in '" + t.text + "'");
        }
    }
    if (qs.empty())
        throw ParseError(line_no, t.column, "empty qubit list in '" + t.text + "'");
    return qs;
}

const std::map<std::string, GateName>& mnemonics() {
    static const std::map<std::string, GateName> m = {
        {"i", GateName::I},       {"x", GateName::X},
        {"y", GateName::Y},       {"z", GateName::Z},
        {"h", GateName::H},       {"cnot", GateName::CNOT},
        {"swap", GateName::SWAP}, {"toffoli", GateName::TOFFOLI},
        {"fredkin", GateName::FREDKIN},
    };
    return m;
}

std::string mnemonic_of(GateName g) {
    for (const auto& [k, v] : mnemonics())
        if (v == g) return k;
    throw DomainError("gate has no text mnemonic");
}

}  // namespace

Circuit parse(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (ch != '\r') {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    Circuit c;
    bool have_header = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        const auto toks = tokenize(lines[li]);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks[0].text != "qubits")
                throw ParseError(line_no, toks[0].column, "expected 'qubits N' header");
            if (toks.size() != 2)
                throw ParseError(line_no, toks[0].column, "expected 'qubits N' header");
            c.n_qubits = parse_int(toks[1], line_no);
            if (c.n_qubits < 0)
                throw ParseError(line_no, toks[1].column, "negative qubit count");
            have_header = true;
            continue;
        }

        GateInstr g;
        const std::string& op = toks[0].text;
        auto need_args = [&](std::size_t n) {
            if (toks.size() != n + 1)
                throw ParseError(line_no, toks[0].column,
                                 "'" + op + "' takes " + std::to_string(n) +
                                     " argument(s), got " + std::to_string(toks.size() - 1));
        };

        if (auto it = mnemonics().find(op); it != mnemonics().end()) {
            g.kind = GateInstr::Kind::Named;
            g.gate = it->second;
            const int arity = named_arity(g.gate);
            need_args(static_cast<std::size_t>(arity));
            for (int j = 0; j < arity; ++j)
                g.targets.push_back(parse_int(toks[j + 1], line_no));
        } else if (op == "rot" || op == "phase") {
            g.kind = (op == "rot") ? GateInstr::Kind::Rot : GateInstr::Kind::Phase;
            need_args(2);
            g.targets.push_back(parse_int(toks[1], line_no));
            g.alpha = parse_real(toks[2], line_no);
        } else if (op == "cphase") {
            g.kind = GateInstr::Kind::CPhase;
            need_args(3);
            g.targets.push_back(parse_int(toks[1], line_no));
            g.targets.push_back(parse_int(toks[2], line_no));
            g.alpha = parse_real(toks[3], line_no);
        } else if (op == "oracle") {
            g.kind = GateInstr::Kind::Oracle;
            need_args(3);
            g.oracle_name = toks[1].text;
            g.targets = parse_qubit_list(toks[2], "in", line_no);
            g.out_targets = parse_qubit_list(toks[3], "out", line_no);
        } else {
            throw ParseError(line_no, toks[0].column, "unknown instruction '" + op + "'");
        }

        std::unordered_set<int> seen;
        for (int q : g.targets) {
            if (q < 0 || q >= c.n_qubits)
                throw ParseError(line_no, toks[0].column, "qubit index out of range");
            if (!seen.insert(q).second)
                throw ParseError(line_no, toks[0].column, "duplicate target qubit");
        }
        for (int q : g.out_targets) {
            if (q < 0 || q >= c.n_qubits)
                throw ParseError(line_no, toks[0].column, "qubit index out of range");
            if (!seen.insert(q).second)
                throw ParseError(line_no, toks[0].column, "duplicate target qubit");
        }
        c.instrs.push_back(std::move(g));
    }
    if (!have_header) throw ParseError(1, 1, "missing 'qubits N' header");
    return c;
}

std::string serialize(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    char buf[64];
    for (const GateInstr& g : c.instrs) {
        switch (g.kind) {
            case GateInstr::Kind::Named:
                out += mnemonic_of(g.gate);
                for (int q : g.targets) out += " " + std::to_string(q);
                break;
            case GateInstr::Kind::Rot:
            case GateInstr::Kind::Phase:
                std::snprintf(buf, sizeof buf, "%.17g", g.alpha);
                out += (g.kind == GateInstr::Kind::Rot ? "rot " : "phase ");
                out += std::to_string(g.targets[0]) + " " + buf;
                break;
            case GateInstr::Kind::CPhase:
                std::snprintf(buf, sizeof buf, "%.17g", g.alpha);
                out += "cphase " + std::to_string(g.targets[0]) + " " +
                       std::to_string(g.targets[1]) + " " + buf;
                break;
            case GateInstr::Kind::Oracle: {
                out += "oracle " + g.oracle_name + " in=";
                for (std::size_t j = 0; j < g.targets.size(); ++j)
                    out += (j ? "," : "") + std::to_string(g.targets[j]);
                out += " out=";
                for (std::size_t j = 0; j < g.out_targets.size(); ++j)
                    out += (j ? "," : "") + std::to_string(g.out_targets[j]);
                break;
            }
        }
        out += "\n";
    }
    return out;
}

Circuit full_adder() {
    // Qubits: 0=c, 1=x, 2=y, 3=s ancilla, 4=c' ancilla.
    // c' = xy xor cx xor cy (majority), s = c xor x xor y.
    Circuit c;
    c.n_qubits = 5;
    auto toffoli = [](int a, int b, int t) {
        return GateInstr{GateInstr::Kind::Named, GateName::TOFFOLI, 0.0, "", {a, b, t}, {}};
    };
    auto cnot = [](int a, int t) {
        return GateInstr{GateInstr::Kind::Named, GateName::CNOT, 0.0, "", {a, t}, {}};
    };
    c.instrs = {toffoli(1, 2, 4), toffoli(0, 1, 4), toffoli(0, 2, 4),
                cnot(0, 3), cnot(1, 3), cnot(2, 3)};
    return c;
}

}  // namespace qsim
