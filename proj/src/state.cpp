#include "qsim/state.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace qsim {

namespace {

double norm_of(const std::vector<Amplitude>& amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes) {
    if (n_qubits < 0) throw DomainError("negative qubit count");
    const std::uint64_t want = std::uint64_t(1) << n_qubits;
    if (amplitudes.size() != want)
        throw DomainError("amplitude vector length is not 2^n_qubits");
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw DomainError("non-finite amplitude");
    }
    const double nrm = norm_of(amplitudes);
    const double dev = std::abs(nrm - 1.0);
    if (dev > kNormRejectTol) throw DomainError("state vector is not normalized");
    if (dev > kTol) {
        for (auto& a : amplitudes) a /= nrm;
    }
    n_qubits_ = n_qubits;
    amps_ = std::move(amplitudes);
}

StateVector StateVector::unchecked(int n_qubits, std::vector<Amplitude> amplitudes) {
    StateVector s;
    s.n_qubits_ = n_qubits;
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const { return norm_of(amps_); }

StateVector basis_state(int n_qubits, std::uint64_t x) {
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    if (x >= dim) throw DomainError("basis index out of range");
    std::vector<Amplitude> amps(dim, Amplitude(0, 0));
    amps[x] = Amplitude(1, 0);
    return StateVector::unchecked(n_qubits, std::move(amps));
}

StateVector tensor(const StateVector& v, const StateVector& w) {
    const std::uint64_t dv = v.dim(), dw = w.dim();
    std::vector<Amplitude> amps(dv * dw);
    for (std::uint64_t x = 0; x < dv; ++x)
        for (std::uint64_t y = 0; y < dw; ++y)
            amps[x * dw + y] = v.amp(x) * w.amp(y);
    return StateVector::unchecked(v.n_qubits() + w.n_qubits(), std::move(amps));
}

bool is_product_state_2q(const StateVector& v) {
    if (v.n_qubits() != 2) throw DomainError("is_product_state_2q needs a 2-qubit state");
    const Amplitude det = v.amp(0) * v.amp(3) - v.amp(1) * v.amp(2);
    return std::abs(det) < kTol;
}

namespace {

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

// "0.7071" for real amplitudes, "(0.5+0.5i)" otherwise; the caller has
// already folded a real amplitude's sign into the term separator.
std::string format_amp(const Amplitude& a) {
    if (std::abs(a.imag()) < kTol) return format_real(a.real());
    std::string s = "(" + format_real(a.real());
    s += (a.imag() < 0 ? "-" : "+");
    s += format_real(std::abs(a.imag())) + "i)";
    return s;
}

std::string ket_string(std::uint64_t index, int n_qubits) {
    std::string bits(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
        if (index & (std::uint64_t(1) << (n_qubits - 1 - q))) bits[q] = '1';
    return "|" + bits + "⟩";
}

}  // namespace

std::string format_dirac(const StateVector& v, double threshold) {
    if (threshold < 0) throw DomainError("negative threshold");
    std::string out;
    for (std::uint64_t i = 0; i < v.dim(); ++i) {
        const Amplitude a = v.amp(i);
        // Exact zeros are never printed, even at threshold 0.
        if (std::abs(a) < threshold || a == Amplitude(0, 0)) continue;
        const bool real_neg = std::abs(a.imag()) < kTol && a.real() < 0;
        if (out.empty()) {
            if (real_neg) out += "-";
        } else {
            out += real_neg ? " - " : " + ";
        }
        out += format_amp(real_neg ? -a : a);
        out += ket_string(i, v.n_qubits());
    }
    return out;
}

StateVector parse_ket(const std::string& text) {
    std::string bits = text;
    if (bits.size() >= 4 && bits.front() == '|' &&
        bits.compare(bits.size() - 3, 3, "⟩") == 0) {
        bits = bits.substr(1, bits.size() - 4);
    } else if (bits.size() >= 2 && bits.front() == '|' && bits.back() == '>') {
        bits = bits.substr(1, bits.size() - 2);
    }
    if (bits.empty()) throw DomainError("empty ket string");
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw DomainError("ket string must be binary");
        index = (index << 1) | std::uint64_t(c - '0');
    }
    return basis_state(static_cast<int>(bits.size()), index);
}

double overlap(const StateVector& u, const StateVector& v) {
    if (u.n_qubits() != v.n_qubits()) throw DomainError("qubit count mismatch");
    Amplitude s(0, 0);
    for (std::uint64_t i = 0; i < u.dim(); ++i) s += std::conj(u.amp(i)) * v.amp(i);
    return std::abs(s);
}

}  // namespace qsim
