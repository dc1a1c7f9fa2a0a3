#ifndef POSLAB_MONTECARLO_HPP
#define POSLAB_MONTECARLO_HPP

#include "poslab/rational.hpp"

#include <cstdint>
#include <string>

namespace poslab {

enum class EstimateMethod { kKernel, kSpan, kHull };

std::string method_name(EstimateMethod m);
EstimateMethod parse_method(const std::string& name);

/// Monte Carlo estimate of p(n, k) with its exact reference. Reruns with the
/// same (seed, n, k, trials, method) reproduce identical successes regardless
/// of thread count: trial i always draws from the derived stream i.
struct Estimate {
    int n;
    int k;
    EstimateMethod method;
    std::int64_t trials;
    std::int64_t successes;
    double p_hat;
    double ci_low;
    double ci_high;
    Rational exact;
    double z_score;
    std::uint64_t seed;
    std::int64_t boundary_count;
};

struct DualityReport {
    int n;
    int k;
    std::int64_t trials;
    std::uint64_t seed;
    std::int64_t xor_holds;
    std::int64_t xor_fails;
    std::int64_t boundary;
    std::int64_t strict_dual_holds;
    std::int64_t strict_dual_fails;
};

/// Wilson score interval for a binomial proportion, clamped to [0, 1].
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials,
                                          double z);

/// Estimate p(n, k) by one of three routes: positivity of a Haar subspace
/// drawn as a Gaussian kernel or Gaussian span, or (method hull, k < n) the
/// origin-in-hull event for n Gaussian points in R^{n-k}, whose probability
/// is p(n, k) by complementation of the half-space event.
/// threads = 0 picks hardware concurrency.
Estimate estimate(int n, int k, std::int64_t trials, std::uint64_t seed,
                  EstimateMethod method, double z = 1.96, int threads = 0);

/// Per trial: V Haar in G(n, k) (kernel and span drawn alternately), checks
/// that exactly one of V, V^perp contains a positive vector and that
/// positivity of V matches absence of a strictly positive vector in V^perp.
/// Trials with any boundary-flagged verdict are counted separately.
DualityReport duality_audit(int n, int k, std::int64_t trials, std::uint64_t seed,
                            int threads = 0);

}  // namespace poslab

#endif
