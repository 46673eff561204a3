#ifndef QSIM_GROVER_HPP
#define QSIM_GROVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/ops.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Total boolean predicate on [0, 2^n).
struct Predicate {
    int n = 0;
    std::function<bool(std::uint64_t)> p;
};

struct GroverRun {
    int iterations = 0;
    // Probability mass on solutions after each iteration (index 0 = after the
    // first iteration).
    std::vector<double> success_probability_curve;
    std::uint64_t result = 0;
    bool is_solution = false;
};

// Negates the amplitude of exactly the basis states with p(x) = 1. The fast
// path negates directly; flip_sign_via_ancilla routes through the
// U_P oracle with the (|0⟩-|1⟩)/sqrt(2) ancilla and checks that the ancilla
// stays factored.
StateVector flip_sign(const Predicate& p, const StateVector& state);
StateVector flip_sign_via_ancilla(const Predicate& p, const StateVector& state);

// Inversion about the average as a dense matrix, built as W·R·W with
// R = diag(1, -1, ..., -1). Entries are 2/N on and 2/N - 1 off the diagonal.
UnitaryOp diffusion(int n);

// Uniform start, `iterations` rounds of flip_sign followed by inversion about
// the average, then one measurement. Default iteration count is
// floor(pi/4 * sqrt(2^n)).
GroverRun grover_search(const Predicate& p, std::optional<int> iterations,
                        RngStream& rng);

// sin^2((2k+1) asin(sqrt(n_solutions / 2^n))) for k = 1..iterations.
std::vector<double> analytic_success_curve(int n, std::uint64_t n_solutions,
                                           int iterations);

int default_iterations(int n);

}  // namespace qsim

#endif
