#ifndef POSLAB_ERRORS_HPP
#define POSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poslab {

// Invalid argument ranges (k out of [1,n], zero vectors, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A factorization pivot fell below the rank tolerance.
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

// Repeated rank-deficient draws; indicates a broken RNG, not bad luck.
struct SamplerFailure : std::runtime_error {
    explicit SamplerFailure(const std::string& what) : std::runtime_error(what) {}
};

// LP solver exceeded its iteration cap or met an unbounded ray.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poslab

#endif
