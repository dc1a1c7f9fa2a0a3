#include "poslab/montecarlo.hpp"

#include "poslab/decide.hpp"
#include "poslab/errors.hpp"
#include "poslab/linalg.hpp"
#include "poslab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace poslab {

namespace {

int resolve_threads(int threads) {
    if (threads < 0) {
        throw DomainError("threads must be >= 0");
    }
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    return threads;
}

// Static partition of [0, trials) across worker threads; State must merge
// commutatively (plain counters here), so the result is order independent.
template <class State, class Body>
State run_trials(std::int64_t trials, int threads, Body body) {
    threads = std::min<std::int64_t>(resolve_threads(threads), trials);
    if (threads <= 1) {
        State state{};
        for (std::int64_t i = 0; i < trials; ++i) body(i, state);
        return state;
    }
    std::vector<State> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            const std::int64_t lo = trials * w / threads;
            const std::int64_t hi = trials * (w + 1) / threads;
            for (std::int64_t i = lo; i < hi; ++i) body(i, partial[w]);
        });
    }
    for (auto& t : workers) t.join();
    State state{};
    for (const State& p : partial) state.merge(p);
    return state;
}

struct EstimateCounts {
    std::int64_t successes = 0;
    std::int64_t boundary = 0;
    void merge(const EstimateCounts& o) {
        successes += o.successes;
        boundary += o.boundary;
    }
};

struct AuditCounts {
    std::int64_t xor_holds = 0;
    std::int64_t xor_fails = 0;
    std::int64_t boundary = 0;
    std::int64_t strict_holds = 0;
    std::int64_t strict_fails = 0;
    void merge(const AuditCounts& o) {
        xor_holds += o.xor_holds;
        xor_fails += o.xor_fails;
        boundary += o.boundary;
        strict_holds += o.strict_holds;
        strict_fails += o.strict_fails;
    }
};

}  // namespace

std::string method_name(EstimateMethod m) {
    switch (m) {
        case EstimateMethod::kKernel: return "kernel";
        case EstimateMethod::kSpan: return "span";
        case EstimateMethod::kHull: return "hull";
    }
    return "?";
}

EstimateMethod parse_method(const std::string& name) {
    if (name == "kernel") return EstimateMethod::kKernel;
    if (name == "span") return EstimateMethod::kSpan;
    if (name == "hull") return EstimateMethod::kHull;
    throw DomainError("unknown method: " + name);
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials,
                                          double z) {
    if (trials < 1 || successes < 0 || successes > trials || z <= 0.0) {
        throw DomainError("wilson_interval: bad arguments");
    }
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half =
        z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    return {std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
}

Estimate estimate(int n, int k, std::int64_t trials, std::uint64_t seed,
                  EstimateMethod method, double z, int threads) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("estimate: need 1 <= k <= n");
    }
    if (trials < 1) {
        throw DomainError("estimate: trials >= 1 required");
    }
    if (method == EstimateMethod::kHull && k >= n) {
        throw DomainError("estimate: method hull requires k < n");
    }
    const RngStream master(seed);

    // G(n, n) is a single point; the kernel construction needs k < n, so the
    // degenerate top cell is drawn by span.
    SubspaceMethod draw = (method == EstimateMethod::kKernel && k < n)
                              ? SubspaceMethod::kKernel
                              : SubspaceMethod::kSpan;

    EstimateCounts counts = run_trials<EstimateCounts>(
        trials, threads, [&](std::int64_t i, EstimateCounts& local) {
            RngStream rng = master.derive(static_cast<std::uint64_t>(i));
            Decision dec;
            if (method == EstimateMethod::kHull) {
                // Origin-in-hull for n Gaussian points in R^{n-k} is exactly
                // the p(n, k) event, complementing the half-space event.
                Matrix pts = gaussian_matrix(n, n - k, rng);
                dec = hull_contains_origin(PointCloud::make(std::move(pts)));
            } else {
                SubspaceBasis basis = haar_subspace(n, k, rng, draw);
                dec = contains_positive(basis);
            }
            if (dec.feasible) ++local.successes;
            if (dec.boundary) ++local.boundary;
        });

    Estimate e;
    e.n = n;
    e.k = k;
    e.method = method;
    e.trials = trials;
    e.successes = counts.successes;
    e.p_hat = static_cast<double>(counts.successes) / static_cast<double>(trials);
    const auto [lo, hi] = wilson_interval(counts.successes, trials, z);
    e.ci_low = lo;
    e.ci_high = hi;
    e.exact = p_exact(n, k);
    const double pe = e.exact.to_double();
    const double var = pe * (1.0 - pe) / static_cast<double>(trials);
    e.z_score = var > 0.0 ? (e.p_hat - pe) / std::sqrt(var) : 0.0;
    e.seed = seed;
    e.boundary_count = counts.boundary;
    return e;
}

DualityReport duality_audit(int n, int k, std::int64_t trials, std::uint64_t seed,
                            int threads) {
    if (n < 2 || k < 1 || k >= n) {
        throw DomainError("duality_audit: need 1 <= k < n");
    }
    if (trials < 1) {
        throw DomainError("duality_audit: trials >= 1 required");
    }
    const RngStream master(seed);

    AuditCounts counts = run_trials<AuditCounts>(
        trials, threads, [&](std::int64_t i, AuditCounts& local) {
            RngStream rng = master.derive(static_cast<std::uint64_t>(i));
            const SubspaceMethod draw =
                (i % 2 == 0) ? SubspaceMethod::kKernel : SubspaceMethod::kSpan;
            SubspaceBasis v = haar_subspace(n, k, rng, draw);
            SubspaceBasis vperp = complement(v);
            const Decision dv = contains_positive(v);
            const Decision dc = contains_positive(vperp);
            const Decision ds = contains_strictly_positive(vperp);
            if (dv.boundary || dc.boundary || ds.boundary) {
                ++local.boundary;
                return;
            }
            if (dv.feasible != dc.feasible) ++local.xor_holds; else ++local.xor_fails;
            if (dv.feasible == !ds.feasible) ++local.strict_holds; else ++local.strict_fails;
        });

    return DualityReport{n,
                         k,
                         trials,
                         seed,
                         counts.xor_holds,
                         counts.xor_fails,
                         counts.boundary,
                         counts.strict_holds,
                         counts.strict_fails};
}

}  // namespace poslab
