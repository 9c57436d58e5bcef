#ifndef CHAINMOD_RNG_HPP
#define CHAINMOD_RNG_HPP

#include <cstdint>

namespace chainmod {

// SplitMix64. This exact sequence is part of the fixture contract: reference
// outputs are pinned in the tests so fixtures stay portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // next() mod n; the modulo bias is irrelevant for fixture generation and
    // keeps the mapping trivially reproducible.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace chainmod

#endif
