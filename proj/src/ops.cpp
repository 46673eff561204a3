#include "qsim/ops.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace qsim {

UnitaryOp::UnitaryOp(int arity_, std::vector<Amplitude> entries_)
    : arity(arity_), entries(std::move(entries_)) {
    const std::uint64_t d = dim();
    if (entries.size() != d * d) throw DomainError("matrix size is not 4^arity");
}

namespace {

UnitaryOp from_rows(int arity, std::initializer_list<double> vals) {
    std::vector<Amplitude> e;
    e.reserve(vals.size());
    for (double v : vals) e.emplace_back(v, 0);
    return UnitaryOp(arity, std::move(e));
}

}  // namespace

UnitaryOp standard_gate(GateName name) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (name) {
        case GateName::I:
            return from_rows(1, {1, 0, 0, 1});
        case GateName::X:
            return from_rows(1, {0, 1, 1, 0});
        case GateName::Y:  // Y = ZX, real-valued by convention
            return from_rows(1, {0, 1, -1, 0});
        case GateName::Z:
            return from_rows(1, {1, 0, 0, -1});
        case GateName::H:
            return from_rows(1, {s, s, s, -s});
        case GateName::CNOT:
            return from_rows(2, {1, 0, 0, 0,
                                 0, 1, 0, 0,
                                 0, 0, 0, 1,
                                 0, 0, 1, 0});
        case GateName::SWAP:
            return from_rows(2, {1, 0, 0, 0,
                                 0, 0, 1, 0,
                                 0, 1, 0, 0,
                                 0, 0, 0, 1});
        case GateName::TOFFOLI:
            return controlled(standard_gate(GateName::CNOT));
        case GateName::FREDKIN:
            return controlled(standard_gate(GateName::SWAP));
    }
    throw DomainError("unknown gate name");
}

UnitaryOp controlled(const UnitaryOp& u) {
    const std::uint64_t d = u.dim();
    UnitaryOp out(u.arity + 1, std::vector<Amplitude>(4 * d * d, Amplitude(0, 0)));
    for (std::uint64_t i = 0; i < d; ++i) out.at(i, i) = Amplitude(1, 0);
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) out.at(d + r, d + c) = u.at(r, c);
    return out;
}

UnitaryOp rotation(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("non-finite angle");
    const double c = std::cos(alpha), s = std::sin(alpha);
    return from_rows(1, {c, s, -s, c});
}

UnitaryOp phase(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("non-finite angle");
    return UnitaryOp(1, {std::polar(1.0, alpha), Amplitude(0, 0),
                         Amplitude(0, 0), std::polar(1.0, -alpha)});
}

UnitaryOp tensor_op(const UnitaryOp& a, const UnitaryOp& b) {
    const std::uint64_t da = a.dim(), db = b.dim();
    UnitaryOp out(a.arity + b.arity,
                  std::vector<Amplitude>(da * db * da * db, Amplitude(0, 0)));
    for (std::uint64_t ra = 0; ra < da; ++ra)
        for (std::uint64_t ca = 0; ca < da; ++ca)
            for (std::uint64_t rb = 0; rb < db; ++rb)
                for (std::uint64_t cb = 0; cb < db; ++cb)
                    out.at(ra * db + rb, ca * db + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

UnitaryOp walsh(int n) {
    if (n < 1) throw DomainError("walsh needs n >= 1");
    if (n > 13) throw CapacityError("walsh matrix too large for dense path");
    const std::uint64_t d = std::uint64_t(1) << n;
    const double scale = 1.0 / std::sqrt(double(d));
    UnitaryOp out(n, std::vector<Amplitude>(d * d));
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t s = 0; s < d; ++s)
            out.at(r, s) = Amplitude((std::popcount(r & s) & 1) ? -scale : scale, 0);
    return out;
}

StateVector apply(const UnitaryOp& u, const std::vector<int>& targets,
                  const StateVector& state) {
    const int n = state.n_qubits();
    const int k = u.arity;
    if (static_cast<int>(targets.size()) != k)
        throw DomainError("target count does not match gate arity");
    std::unordered_set<int> seen;
    for (int t : targets) {
        if (t < 0 || t >= n) throw DomainError("target qubit out of range");
        if (!seen.insert(t).second) throw DomainError("duplicate target qubit");
    }

    // masks[j]: bit of targets[j] in the state index; targets[0] is the MSB
    // of the gate's local index.
    std::vector<std::uint64_t> masks(k);
    for (int j = 0; j < k; ++j) masks[j] = state.qubit_mask(targets[j]);
    std::uint64_t target_union = 0;
    for (auto m : masks) target_union |= m;

    const std::uint64_t dim = state.dim();
    const std::uint64_t kd = std::uint64_t(1) << k;
    std::vector<Amplitude> out(state.amplitudes());
    std::vector<std::uint64_t> idx(kd);
    std::vector<Amplitude> in(kd);

    // Iterate over every configuration of the non-target bits.
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_union) continue;
        for (std::uint64_t local = 0; local < kd; ++local) {
            std::uint64_t full = base;
            for (int j = 0; j < k; ++j)
                if (local & (std::uint64_t(1) << (k - 1 - j))) full |= masks[j];
            idx[local] = full;
            in[local] = out[full];
        }
        for (std::uint64_t r = 0; r < kd; ++r) {
            Amplitude acc(0, 0);
            for (std::uint64_t c = 0; c < kd; ++c) acc += u.at(r, c) * in[c];
            out[idx[r]] = acc;
        }
    }
    return StateVector::unchecked(n, std::move(out));
}

bool is_unitary(const UnitaryOp& u) {
    const std::uint64_t d = u.dim();
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            Amplitude acc(0, 0);
            for (std::uint64_t j = 0; j < d; ++j)
                acc += u.at(r, j) * std::conj(u.at(c, j));
            const Amplitude want = (r == c) ? Amplitude(1, 0) : Amplitude(0, 0);
            if (std::abs(acc - want) >= kTol) return false;
        }
    }
    return true;
}

}  // namespace qsim
