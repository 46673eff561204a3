#ifndef QSIM_HOGG_HPP
#define QSIM_HOGG_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/ops.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Small constraint satisfaction problem over n_vars variables with n_vals
// possible values each. A constraint is a predicate on lattice masks that
// returns true when the mask satisfies it.
struct CspInstance {
    int n_vars = 0;
    int n_vals = 0;
    std::vector<std::function<bool(std::uint64_t)>> constraints;

    int n_atoms() const { return n_vars * n_vals; }
};

enum class PhasePolicy { invert_bad, random_phase_bad, none };

// Lattice basis: atom (var, val) pairs enumerated var-major; atom 0 is the
// leftmost ket character, i.e. the most significant bit of the basis index.
std::uint64_t atom_mask(const CspInstance& csp, int var, int val);

// Every variable assigned exactly one value.
bool is_complete_assignment(const CspInstance& csp, std::uint64_t mask);

// Violates at least one constraint.
bool is_bad_set(const CspInstance& csp, std::uint64_t mask);

// Complete and consistent.
bool is_solution(const CspInstance& csp, std::uint64_t mask);

// The superset-spreading move: each set's amplitude split equally among its
// immediate supersets (the raw matrix is not unitary; the full lattice level
// maps to itself). Exposed for testing.
UnitaryOp raw_up_move(int n_atoms);

// Nearest unitary to the raw move matrix, via its singular value
// decomposition (polar factor U·V^T). SVD is a one-sided Jacobi iteration.
UnitaryOp up_move_method1(int n_atoms);

// W·D·W with D diagonal; the entry at basis index b is d_entries[popcount(b)]
// and every entry must be unimodular. d_entries has n_atoms + 1 elements.
UnitaryOp up_move_method2(int n_atoms, const std::vector<Amplitude>& d_entries);

// Documented default for Method 2: phase e^{i pi s / n_atoms} by set size s.
// Not derived from any maximizing principle; callers may override.
std::vector<Amplitude> default_method2_phases(int n_atoms);

StateVector apply_phase_policy(PhasePolicy policy, const CspInstance& csp,
                               const StateVector& state, RngStream& rng);

struct HoggResult {
    std::uint64_t assignment = 0;        // measured lattice mask
    double solution_probability = 0.0;   // exact mass on solutions pre-measurement
};

HoggResult hogg_search(const CspInstance& csp, int steps, int method,
                       PhasePolicy policy, RngStream& rng);

}  // namespace qsim

#endif
