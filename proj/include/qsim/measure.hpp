#ifndef QSIM_MEASURE_HPP
#define QSIM_MEASURE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qsim/common.hpp"
#include "qsim/rng.hpp"
#include "qsim/state.hpp"

namespace qsim {

// Outcome -> probability map over a measured qubit subset.
struct Distribution {
    int n_bits = 0;
    std::map<std::uint64_t, double> probabilities;
};

struct MeasurementOutcome {
    std::uint64_t outcome = 0;   // basis index over the measured subset
    double probability = 0.0;
    StateVector post_state;      // full n qubits, renormalized
};

// Squared-amplitude mass per outcome of the subset, summed over compatible
// full-basis vectors. subset[0] is the most significant bit of the outcome.
Distribution probabilities(const StateVector& state, const std::vector<int>& subset);

// Projective measurement in the standard basis. Sampling is inverse-CDF over
// outcomes in ascending index order; zero-probability outcomes are never
// selected. The post-state is the projection onto the compatible subspace,
// divided by the exact square root of the outcome probability.
MeasurementOutcome measure(const StateVector& state, const std::vector<int>& subset,
                           RngStream& rng);

}  // namespace qsim

#endif
