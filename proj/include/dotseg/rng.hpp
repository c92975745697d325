#ifndef DOTSEG_RNG_HPP
#define DOTSEG_RNG_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace dotseg {

// SplitMix64 stream. Every random draw in the corpus generators goes through
// this class so generated benchmarks are reproducible from the seed alone,
// independently of the standard library in use:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi] (inclusive) by rejection: draws below
    // (2^64 - span) mod span are discarded, the rest reduced modulo span.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) {
            return next();
        }
        const std::uint64_t threshold = (0 - span) % span;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) {
                return lo + x % span;
            }
        }
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Fisher-Yates, i = n-1 down to 1, j = uniform(0, i).
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform(0, i - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace dotseg

#endif
