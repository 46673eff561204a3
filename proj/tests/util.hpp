#ifndef QSIM_TESTS_UTIL_HPP
#define QSIM_TESTS_UTIL_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "qsim/ops.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace testutil {

inline bool close(qsim::Amplitude a, qsim::Amplitude b, double tol = 1e-10) {
    return std::abs(a - b) <= tol;
}

// Max entry-wise deviation between two states of equal width.
inline double max_dev(const qsim::StateVector& a, const qsim::StateVector& b) {
    double m = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        m = std::max(m, std::abs(a.amp(i) - b.amp(i)));
    return m;
}

inline double max_dev(const qsim::UnitaryOp& a, const qsim::UnitaryOp& b) {
    double m = 0.0;
    for (std::uint64_t r = 0; r < a.dim(); ++r)
        for (std::uint64_t c = 0; c < a.dim(); ++c)
            m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    return m;
}

// Haar-ish random state: i.i.d. complex Gaussian-ish amplitudes, normalized.
inline qsim::StateVector random_state(int n, qsim::RngStream& rng) {
    std::vector<qsim::Amplitude> amps(std::uint64_t(1) << n);
    double nrm = 0.0;
    for (auto& a : amps) {
        a = qsim::Amplitude(rng.next_double() - 0.5, rng.next_double() - 0.5);
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : amps) a /= nrm;
    return qsim::StateVector::unchecked(n, std::move(amps));
}

// Dense matrix-vector product, the brute-force oracle for apply().
inline qsim::StateVector mat_vec(const qsim::UnitaryOp& u, const qsim::StateVector& s) {
    std::vector<qsim::Amplitude> out(s.dim(), qsim::Amplitude(0, 0));
    for (std::uint64_t r = 0; r < u.dim(); ++r)
        for (std::uint64_t c = 0; c < u.dim(); ++c) out[r] += u.at(r, c) * s.amp(c);
    return qsim::StateVector::unchecked(s.n_qubits(), std::move(out));
}

// Random complex matrix orthonormalized by modified Gram-Schmidt.
inline qsim::UnitaryOp random_unitary(int arity, qsim::RngStream& rng) {
    const std::uint64_t d = std::uint64_t(1) << arity;
    std::vector<std::vector<qsim::Amplitude>> cols(d, std::vector<qsim::Amplitude>(d));
    for (auto& col : cols)
        for (auto& e : col)
            e = qsim::Amplitude(rng.next_double() - 0.5, rng.next_double() - 0.5);
    for (std::uint64_t c = 0; c < d; ++c) {
        for (std::uint64_t prev = 0; prev < c; ++prev) {
            qsim::Amplitude dot(0, 0);
            for (std::uint64_t r = 0; r < d; ++r)
                dot += std::conj(cols[prev][r]) * cols[c][r];
            for (std::uint64_t r = 0; r < d; ++r) cols[c][r] -= dot * cols[prev][r];
        }
        double nrm = 0.0;
        for (std::uint64_t r = 0; r < d; ++r) nrm += std::norm(cols[c][r]);
        nrm = std::sqrt(nrm);
        for (std::uint64_t r = 0; r < d; ++r) cols[c][r] /= nrm;
    }
    qsim::UnitaryOp u(arity, std::vector<qsim::Amplitude>(d * d));
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) u.at(r, c) = cols[c][r];
    return u;
}

}  // namespace testutil

#endif
