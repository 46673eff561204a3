#ifndef QSIM_COMMON_HPP
#define QSIM_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsim {

using Amplitude = std::complex<double>;

// Shared numeric tolerance for unitarity, normalization and state equality.
inline constexpr double kTol = 1e-10;

// Input states whose norm deviates by more than this are rejected outright;
// smaller deviations (but above kTol) are silently renormalized.
inline constexpr double kNormRejectTol = 1e-6;

// Bad arguments: out-of-range indices, overlapping registers, malformed input.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds the dense-representation budget (too many qubits).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A probabilistic consistency check failed (e.g. dense-coding decode fed a
// state outside the code set).
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsim

#endif
