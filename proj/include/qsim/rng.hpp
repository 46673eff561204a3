#ifndef QSIM_RNG_HPP
#define QSIM_RNG_HPP

#include <cstdint>

namespace qsim {

// Seeded SplitMix64 stream. The algorithm is written out here (rather than
// using std::mt19937_64) so that seeded runs are bit-reproducible across
// platforms and standard-library versions.
//
// A stream is single-owner: callers that need independent randomness must
// fork their own stream from a distinct seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa extraction.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - (~0ull % bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace qsim

#endif
