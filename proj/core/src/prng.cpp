#include "cga/prng.hpp"

namespace cga {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    return next() % bound;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix_keys(std::uint64_t a, std::uint64_t b) {
    SplitMix64 rng(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
    return rng.next();
}

Rational small_nonzero_rational(SplitMix64& rng) {
    const long long num = 1 + static_cast<long long>(rng.next_below(9));
    const long long den = 1 + static_cast<long long>(rng.next_below(4));
    const bool negative = (rng.next() & 1) != 0;
    return Rational(negative ? -num : num, den);
}

Rational small_rational(SplitMix64& rng) {
    if (rng.next_below(5) == 0) {
        return Rational(0);
    }
    return small_nonzero_rational(rng);
}

std::vector<Rational> random_coords(SplitMix64& rng, std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(small_rational(rng));
    }
    return out;
}

}  // namespace cga
