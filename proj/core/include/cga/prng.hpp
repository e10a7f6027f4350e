#ifndef CGA_PRNG_HPP
#define CGA_PRNG_HPP

#include "cga/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace cga {

/// SplitMix64 stream. Chosen over std::mt19937 plus std distributions because
/// its output is fixed by the algorithm alone, which keeps seeded artifacts
/// byte-identical across standard libraries and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, bound), bound >= 1, via multiply-shift.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t mix_keys(std::uint64_t a, std::uint64_t b);

/// Nonzero rational with numerator in +-[1,9] and denominator in [1,4].
Rational small_nonzero_rational(SplitMix64& rng);

/// Rational in the same range but allowing zero (about one draw in five).
Rational small_rational(SplitMix64& rng);

std::vector<Rational> random_coords(SplitMix64& rng, std::size_t n);

}  // namespace cga

#endif
