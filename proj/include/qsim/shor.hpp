#ifndef QSIM_SHOR_HPP
#define QSIM_SHOR_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/common.hpp"
#include "qsim/measure.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

struct FactoringConfig {
    std::uint64_t M = 0;
    std::uint64_t seed = 0;
    int max_attempts = 32;
    bool skip_step2_measurement = false;
    // Full state has m + ceil(log2 M) qubits; by default M is capped at 64
    // (2^18 amplitudes). allow_large raises the cap to 512.
    bool allow_large = false;
    std::optional<std::uint64_t> forced_a;
    std::optional<std::uint64_t> forced_u;
    std::optional<std::uint64_t> forced_v;
};

struct ContinuedFractionRow {
    std::uint64_t a = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    double epsilon = 0.0;
};

struct ContinuedFractionState {
    std::vector<ContinuedFractionRow> rows;
    std::uint64_t period = 0;  // denominator of the accepted convergent
};

struct FactoringAttempt {
    std::uint64_t a = 0;
    std::optional<std::uint64_t> u;  // Step-2 measurement, absent if skipped
    std::optional<std::uint64_t> v;  // Step-4 measurement
    std::uint64_t q = 0;             // extracted period guess
    ContinuedFractionState cf;
    std::set<std::uint64_t> factors;
    bool success = false;
    std::string note;  // failure cause or shortcut taken
};

struct FactoringTrace {
    std::uint64_t M = 0;
    int m = 0;  // exponent-register size
    std::vector<FactoringAttempt> attempts;
    bool success = false;
    std::set<std::uint64_t> factors;
};

// Unique m with M^2 <= 2^m < 2 M^2.
int choose_m(std::uint64_t M);

// |x⟩ -> (1/sqrt(2^m)) sum_c e^{2 pi i c x / 2^m} |c⟩, entry (c, x).
UnitaryOp qft_matrix(int m);

// Gate decomposition: m(m+1)/2 H/cphase gates followed by swap-based bit
// reversal; equals qft_matrix on every basis state.
Circuit qft_circuit(int m);

// a^e mod M by square and multiply.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t M);

// Uniform superposition over x tensored with a^x mod M in a ceil(log2 M)-bit
// output register: (1/sqrt(2^m)) sum_x |x, f(x)⟩.
StateVector period_state(std::uint64_t a, std::uint64_t M, int m);

// Continued-fraction expansion of v/2^m; accepts the first convergent whose
// denominator reaches M, or the exact fraction if the expansion terminates
// first. v = 0 carries no information and is rejected.
ContinuedFractionState extract_period(std::uint64_t v, int m, std::uint64_t M);

// The full factoring loop, Steps 1-6.
FactoringTrace factor(const FactoringConfig& cfg);

// Exact x-register distribution after the output register is collapsed to u
// (or over the joint state when u is absent).
Distribution step2_distribution(std::uint64_t M, std::uint64_t a,
                                std::optional<std::uint64_t> u);

// Exact x-register distribution after the QFT is applied on top of the above.
Distribution post_qft_distribution(std::uint64_t M, std::uint64_t a,
                                   std::optional<std::uint64_t> u);

}  // namespace qsim

#endif
