#include "poslab/rng.hpp"

#include <cmath>

namespace poslab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), state_(mix(seed + kGolden)) {}

std::uint64_t RngStream::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

RngStream RngStream::derive(std::uint64_t i) const {
    // Child key decorrelated from both the parent seed and sibling indices.
    return RngStream(mix(seed_ ^ (i + 1) * kGolden));
}

}  // namespace poslab
