#include "qsim/measure.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace qsim {

namespace {

std::vector<std::uint64_t> subset_masks(const StateVector& state,
                                        const std::vector<int>& subset) {
    std::unordered_set<int> seen;
    std::vector<std::uint64_t> masks;
    masks.reserve(subset.size());
    for (int q : subset) {
        if (q < 0 || q >= state.n_qubits()) throw DomainError("qubit index out of range");
        if (!seen.insert(q).second) throw DomainError("duplicate qubit in subset");
        masks.push_back(state.qubit_mask(q));
    }
    return masks;
}

std::uint64_t extract_outcome(std::uint64_t index,
                              const std::vector<std::uint64_t>& masks) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < masks.size(); ++j)
        if (index & masks[j]) m |= std::uint64_t(1) << (masks.size() - 1 - j);
    return m;
}

}  // namespace

Distribution probabilities(const StateVector& state, const std::vector<int>& subset) {
    const auto masks = subset_masks(state, subset);
    Distribution dist;
    dist.n_bits = static_cast<int>(subset.size());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state.amp(i));
        if (p == 0.0) continue;
        dist.probabilities[extract_outcome(i, masks)] += p;
    }
    return dist;
}

MeasurementOutcome measure(const StateVector& state, const std::vector<int>& subset,
                           RngStream& rng) {
    const auto masks = subset_masks(state, subset);
    const Distribution dist = probabilities(state, subset);

    const double u = rng.next_double();
    double cum = 0.0;
    std::uint64_t outcome = 0;
    double p_outcome = 0.0;
    for (const auto& [m, p] : dist.probabilities) {
        if (p <= 0.0) continue;
        cum += p;
        outcome = m;
        p_outcome = p;
        if (u < cum) break;  // falls through to the last outcome on rounding
    }

    std::vector<Amplitude> post(state.dim(), Amplitude(0, 0));
    const double scale = 1.0 / std::sqrt(p_outcome);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (extract_outcome(i, masks) == outcome) post[i] = state.amp(i) * scale;
    }
    return MeasurementOutcome{outcome, p_outcome,
                              StateVector::unchecked(state.n_qubits(), std::move(post))};
}

}  // namespace qsim
