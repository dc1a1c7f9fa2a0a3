#include "poslab/errors.hpp"
#include "poslab/montecarlo.hpp"
#include "poslab/rational.hpp"
#include "poslab/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // NumericalFailure, SamplerFailure, failed audit
constexpr int kExitUsage = 2;     // argument errors

struct SeedSpec {
    std::uint64_t value = 0;
    bool randomized = false;
};

SeedSpec resolve_seed(const std::string& spec) {
    if (spec == "random") {
        std::random_device rd;
        const std::uint64_t s =
            (static_cast<std::uint64_t>(rd()) << 32) | rd();
        return {s, true};
    }
    return {std::stoull(spec), false};
}

int env_threads() {
    if (const char* v = std::getenv("POSLAB_THREADS")) {
        return std::atoi(v);
    }
    return 0;
}

void write_out(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    f << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact values and Monte Carlo checks for the probability that a "
                 "random k-dimensional subspace of R^n contains a positive vector"};
    app.require_subcommand(1);

    int n_max = 10;
    int n = 0, k = 0;
    std::int64_t trials = 10000;
    std::string seed_spec = "0";
    std::string method = "kernel";
    std::string format = "text";
    std::string output;
    double z = 1.96;
    int threads = env_threads();

    auto* table = app.add_subcommand("table", "exact p(n,k) for all k <= n <= n-max");
    table->add_option("--n-max", n_max, "largest ambient dimension")->check(CLI::PositiveNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--output,-o", output, "write to file instead of stdout");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of p(n,k)");
    simulate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    simulate->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed_spec, "64-bit seed, or 'random'");
    simulate->add_option("--method", method)->check(CLI::IsMember({"kernel", "span", "hull"}));
    simulate->add_option("--z", z, "confidence z value")->check(CLI::PositiveNumber);
    simulate->add_option("--threads", threads, "worker threads (0 = auto)");
    simulate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    simulate->add_option("--output,-o", output);

    auto* duality = app.add_subcommand("duality", "audit the V / V-perp duality theorem");
    duality->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    duality->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    duality->add_option("--trials", trials)->check(CLI::PositiveNumber);
    duality->add_option("--seed", seed_spec);
    duality->add_option("--threads", threads);
    duality->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    duality->add_option("--output,-o", output);

    auto* plot = app.add_subcommand("plot", "plot-ready p(n,k) records");
    plot->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    plot->add_option("--format", format)->check(CLI::IsMember({"csv"}));
    plot->add_option("--output,-o", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*table) {
            const auto rows = poslab::p_table(n_max);
            if (format == "csv") write_out(poslab::table_csv(rows), output);
            else if (format == "json") write_out(poslab::table_json(rows), output);
            else write_out(poslab::table_text(rows), output);
        } else if (*simulate) {
            const SeedSpec seed = resolve_seed(seed_spec);
            if (seed.randomized) {
                std::cerr << "seed: " << seed.value << "\n";
            }
            const poslab::Estimate e = poslab::estimate(
                n, k, trials, seed.value, poslab::parse_method(method), z, threads);
            write_out(format == "json" ? poslab::estimate_json(e)
                                       : poslab::estimate_text(e),
                      output);
        } else if (*duality) {
            const SeedSpec seed = resolve_seed(seed_spec);
            if (seed.randomized) {
                std::cerr << "seed: " << seed.value << "\n";
            }
            const poslab::DualityReport r =
                poslab::duality_audit(n, k, trials, seed.value, threads);
            write_out(format == "json" ? poslab::duality_json(r)
                                       : poslab::duality_text(r),
                      output);
            if (r.xor_fails > 0 || r.strict_dual_fails > 0) {
                std::cerr << "duality audit FAILED: xor_fails=" << r.xor_fails
                          << " strict_dual_fails=" << r.strict_dual_fails << "\n";
                return kExitFailure;
            }
        } else if (*plot) {
            write_out(poslab::plot_csv(poslab::p_table(n_max)), output);
        }
    } catch (const poslab::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
