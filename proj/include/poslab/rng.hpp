#ifndef POSLAB_RNG_HPP
#define POSLAB_RNG_HPP

#include <cstdint>

namespace poslab {

/// Splittable counter-seeded generator (splitmix64 core). Identical seed and
/// call sequence reproduce the identical output sequence; derive(i) yields an
/// independent child stream keyed on (seed, i). Single-owner: never share an
/// instance across threads, hand each task its own derived stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via the Marsaglia polar method (caches the spare).
    double normal();

    /// Independent child stream for task i.
    RngStream derive(std::uint64_t i) const;

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace poslab

#endif
