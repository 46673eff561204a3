#include "qsim/hogg.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "qsim/measure.hpp"

namespace qsim {

std::uint64_t atom_mask(const CspInstance& csp, int var, int val) {
    if (var < 0 || var >= csp.n_vars || val < 0 || val >= csp.n_vals)
        throw DomainError("atom out of range");
    const int atom = var * csp.n_vals + val;
    return std::uint64_t(1) << (csp.n_atoms() - 1 - atom);
}

bool is_complete_assignment(const CspInstance& csp, std::uint64_t mask) {
    for (int var = 0; var < csp.n_vars; ++var) {
        int count = 0;
        for (int val = 0; val < csp.n_vals; ++val)
            if (mask & atom_mask(csp, var, val)) ++count;
        if (count != 1) return false;
    }
    return true;
}

bool is_bad_set(const CspInstance& csp, std::uint64_t mask) {
    for (const auto& c : csp.constraints)
        if (!c(mask)) return true;
    return false;
}

bool is_solution(const CspInstance& csp, std::uint64_t mask) {
    return is_complete_assignment(csp, mask) && !is_bad_set(csp, mask);
}

UnitaryOp raw_up_move(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 4)
        throw CapacityError("raw_up_move supports 1..4 atoms (dense SVD path)");
    const std::uint64_t d = std::uint64_t(1) << n_atoms;
    UnitaryOp raw(n_atoms, std::vector<Amplitude>(d * d, Amplitude(0, 0)));
    const std::uint64_t full = d - 1;
    for (std::uint64_t s = 0; s < d; ++s) {
        if (s == full) {
            raw.at(s, s) = Amplitude(1, 0);  // top of the lattice stays put
            continue;
        }
        const int n_supersets = n_atoms - std::popcount(s);
        const double w = 1.0 / std::sqrt(double(n_supersets));
        for (int b = 0; b < n_atoms; ++b) {
            const std::uint64_t bit = std::uint64_t(1) << b;
            if (!(s & bit)) raw.at(s | bit, s) = Amplitude(w, 0);
        }
    }
    return raw;
}

namespace {

// One-sided Jacobi SVD of a real d x d matrix A = U diag(sigma) V^T, then the
// polar factor U V^T. Sizes here are at most 16x16.
UnitaryOp polar_factor(const UnitaryOp& m) {
    const std::uint64_t d = m.dim();
    std::vector<std::vector<double>> g(d, std::vector<double>(d));
    std::vector<std::vector<double>> v(d, std::vector<double>(d, 0.0));
    for (std::uint64_t r = 0; r < d; ++r) {
        v[r][r] = 1.0;
        for (std::uint64_t c = 0; c < d; ++c) g[r][c] = m.at(r, c).real();
    }

    constexpr double kConv = 1e-12;
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::uint64_t i = 0; i + 1 < d; ++i) {
            for (std::uint64_t j = i + 1; j < d; ++j) {
                double aii = 0, ajj = 0, aij = 0;
                for (std::uint64_t r = 0; r < d; ++r) {
                    aii += g[r][i] * g[r][i];
                    ajj += g[r][j] * g[r][j];
                    aij += g[r][i] * g[r][j];
                }
                if (std::abs(aij) <= kConv * std::sqrt(aii * ajj)) continue;
                rotated = true;
                const double tau = (ajj - aii) / (2.0 * aij);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::uint64_t r = 0; r < d; ++r) {
                    const double gi = g[r][i], gj = g[r][j];
                    g[r][i] = cs * gi - sn * gj;
                    g[r][j] = sn * gi + cs * gj;
                    const double vi = v[r][i], vj = v[r][j];
                    v[r][i] = cs * vi - sn * vj;
                    v[r][j] = sn * vi + cs * vj;
                }
            }
        }
        if (!rotated) break;
    }

    // Columns of G are now sigma_i * u_i. Normalize; complete any zero
    // columns to an orthonormal basis by Gram-Schmidt over unit vectors.
    std::vector<std::vector<double>> u(d, std::vector<double>(d, 0.0));
    std::vector<bool> filled(d, false);
    for (std::uint64_t c = 0; c < d; ++c) {
        double nrm = 0;
        for (std::uint64_t r = 0; r < d; ++r) nrm += g[r][c] * g[r][c];
        nrm = std::sqrt(nrm);
        if (nrm > 1e-9) {
            for (std::uint64_t r = 0; r < d; ++r) u[r][c] = g[r][c] / nrm;
            filled[c] = true;
        }
    }
    for (std::uint64_t c = 0; c < d; ++c) {
        if (filled[c]) continue;
        for (std::uint64_t cand = 0; cand < d; ++cand) {
            std::vector<double> col(d, 0.0);
            col[cand] = 1.0;
            for (std::uint64_t c2 = 0; c2 < d; ++c2) {
                if (!filled[c2]) continue;
                double dot = 0;
                for (std::uint64_t r = 0; r < d; ++r) dot += col[r] * u[r][c2];
                for (std::uint64_t r = 0; r < d; ++r) col[r] -= dot * u[r][c2];
            }
            double nrm = 0;
            for (std::uint64_t r = 0; r < d; ++r) nrm += col[r] * col[r];
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (std::uint64_t r = 0; r < d; ++r) u[r][c] = col[r] / nrm;
                filled[c] = true;
                break;
            }
        }
    }

    UnitaryOp out(m.arity, std::vector<Amplitude>(d * d, Amplitude(0, 0)));
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) {
            double acc = 0;
            for (std::uint64_t k = 0; k < d; ++k) acc += u[r][k] * v[c][k];
            out.at(r, c) = Amplitude(acc, 0);
        }
    return out;
}

}  // namespace

UnitaryOp up_move_method1(int n_atoms) { return polar_factor(raw_up_move(n_atoms)); }

UnitaryOp up_move_method2(int n_atoms, const std::vector<Amplitude>& d_entries) {
    if (n_atoms < 1 || n_atoms > 10)
        throw CapacityError("up_move_method2: dense path supports 1..10 atoms");
    if (static_cast<int>(d_entries.size()) != n_atoms + 1)
        throw DomainError("d_entries must have n_atoms + 1 entries");
    for (const auto& e : d_entries)
        if (std::abs(std::abs(e) - 1.0) > kTol)
            throw DomainError("d_entries must be unimodular");

    const std::uint64_t dim = std::uint64_t(1) << n_atoms;
    const UnitaryOp w = walsh(n_atoms);
    UnitaryOp dw(n_atoms, std::vector<Amplitude>(dim * dim));
    for (std::uint64_t r = 0; r < dim; ++r) {
        const Amplitude dr = d_entries[std::popcount(r)];
        for (std::uint64_t c = 0; c < dim; ++c) dw.at(r, c) = dr * w.at(r, c);
    }
    UnitaryOp out(n_atoms, std::vector<Amplitude>(dim * dim));
    for (std::uint64_t r = 0; r < dim; ++r)
        for (std::uint64_t c = 0; c < dim; ++c) {
            Amplitude acc(0, 0);
            for (std::uint64_t k = 0; k < dim; ++k) acc += w.at(r, k) * dw.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

std::vector<Amplitude> default_method2_phases(int n_atoms) {
    std::vector<Amplitude> d(static_cast<std::size_t>(n_atoms) + 1);
    for (int s = 0; s <= n_atoms; ++s)
        d[s] = std::polar(1.0, std::numbers::pi * double(s) / double(n_atoms));
    return d;
}

StateVector apply_phase_policy(PhasePolicy policy, const CspInstance& csp,
                               const StateVector& state, RngStream& rng) {
    if (state.n_qubits() != csp.n_atoms())
        throw DomainError("state width does not match the lattice");
    if (policy == PhasePolicy::none) return state;
    std::vector<Amplitude> amps(state.amplitudes());
    for (std::uint64_t mask = 0; mask < state.dim(); ++mask) {
        if (!is_bad_set(csp, mask)) continue;
        if (policy == PhasePolicy::invert_bad) {
            amps[mask] = -amps[mask];
        } else {
            amps[mask] *= std::polar(1.0, 2.0 * std::numbers::pi * rng.next_double());
        }
    }
    return StateVector::unchecked(state.n_qubits(), std::move(amps));
}

HoggResult hogg_search(const CspInstance& csp, int steps, int method,
                       PhasePolicy policy, RngStream& rng) {
    const int n_atoms = csp.n_atoms();
    if (n_atoms < 1 || n_atoms > 16) throw CapacityError("lattice too large");
    if (steps < 0) throw DomainError("negative step count");
    if (method != 1 && method != 2) throw DomainError("method must be 1 or 2");

    std::vector<int> all(n_atoms);
    for (int q = 0; q < n_atoms; ++q) all[q] = q;

    // Method 2 is applied as H^n, diagonal phases, H^n instead of a dense
    // 2^n x 2^n matrix; method 1 needs the dense SVD path.
    UnitaryOp move1;
    std::vector<Amplitude> phases;
    if (method == 1) {
        move1 = up_move_method1(n_atoms);
    } else {
        phases = default_method2_phases(n_atoms);
    }
    const UnitaryOp h = standard_gate(GateName::H);
    auto apply_move2 = [&](StateVector s) {
        for (int q = 0; q < n_atoms; ++q) s = apply(h, {q}, s);
        std::vector<Amplitude> amps(s.amplitudes());
        for (std::uint64_t i = 0; i < s.dim(); ++i) amps[i] *= phases[std::popcount(i)];
        s = StateVector::unchecked(n_atoms, std::move(amps));
        for (int q = 0; q < n_atoms; ++q) s = apply(h, {q}, s);
        return s;
    };

    StateVector state = basis_state(n_atoms, 0);
    for (int k = 0; k < steps; ++k) {
        state = (method == 1) ? apply(move1, all, state) : apply_move2(state);
        state = apply_phase_policy(policy, csp, state, rng);
    }

    HoggResult out;
    for (std::uint64_t mask = 0; mask < state.dim(); ++mask)
        if (is_solution(csp, mask)) out.solution_probability += std::norm(state.amp(mask));
    out.assignment = measure(state, all, rng).outcome;
    return out;
}

}  // namespace qsim
