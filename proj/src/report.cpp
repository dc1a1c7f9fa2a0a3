#include "poslab/report.hpp"

#include "poslab/errors.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace poslab {

namespace {

using nlohmann::json;

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(s), 1);
    }
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

std::string table_csv(const std::vector<ProbTableRow>& rows) {
    std::ostringstream out;
    out << "n,k,p_num,p_den,p_decimal\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.p.num().str() << ',' << r.p.den().str()
            << ',' << r.p_decimal << '\n';
    }
    return out.str();
}

std::string table_text(const std::vector<ProbTableRow>& rows) {
    std::ostringstream out;
    out << "  n   k  p(n,k)        decimal\n";
    for (const auto& r : rows) {
        std::string frac = r.p.to_string();
        out << (r.n < 10 ? "  " : r.n < 100 ? " " : "") << r.n << ' '
            << (r.k < 10 ? "  " : r.k < 100 ? " " : "") << r.k << "  ";
        out << frac;
        for (std::size_t i = frac.size(); i < 14; ++i) out << ' ';
        out << r.p_decimal << '\n';
    }
    return out.str();
}

std::string table_json(const std::vector<ProbTableRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"k", r.k},
                       {"p", r.p.to_string()},
                       {"p_decimal", r.p_decimal}});
    }
    return arr.dump() + "\n";
}

std::string plot_csv(const std::vector<ProbTableRow>& rows) {
    std::ostringstream out;
    out << "n,k,p\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.p_decimal << '\n';
    }
    return out.str();
}

std::string estimate_json(const Estimate& e) {
    json obj{{"n", e.n},
             {"k", e.k},
             {"method", method_name(e.method)},
             {"trials", e.trials},
             {"successes", e.successes},
             {"p_hat", e.p_hat},
             {"ci_low", e.ci_low},
             {"ci_high", e.ci_high},
             {"exact", e.exact.to_string()},
             {"z_score", e.z_score},
             {"seed", e.seed},
             {"boundary_count", e.boundary_count}};
    return obj.dump() + "\n";
}

Estimate estimate_from_json(const std::string& text) {
    const json obj = json::parse(text);
    Estimate e;
    e.n = obj.at("n").get<int>();
    e.k = obj.at("k").get<int>();
    e.method = parse_method(obj.at("method").get<std::string>());
    e.trials = obj.at("trials").get<std::int64_t>();
    e.successes = obj.at("successes").get<std::int64_t>();
    e.p_hat = obj.at("p_hat").get<double>();
    e.ci_low = obj.at("ci_low").get<double>();
    e.ci_high = obj.at("ci_high").get<double>();
    e.exact = rational_from_string(obj.at("exact").get<std::string>());
    e.z_score = obj.at("z_score").get<double>();
    e.seed = obj.at("seed").get<std::uint64_t>();
    e.boundary_count = obj.at("boundary_count").get<std::int64_t>();
    return e;
}

std::string estimate_text(const Estimate& e) {
    std::ostringstream out;
    out << "p(" << e.n << "," << e.k << ") estimate, method=" << method_name(e.method)
        << ", seed=" << e.seed << "\n"
        << "  trials:    " << e.trials << "\n"
        << "  successes: " << e.successes << "\n"
        << "  p_hat:     " << e.p_hat << "\n"
        << "  95% CI:    [" << e.ci_low << ", " << e.ci_high << "]\n"
        << "  exact:     " << e.exact.to_string() << " = " << e.exact.to_double() << "\n"
        << "  z_score:   " << e.z_score << "\n"
        << "  boundary:  " << e.boundary_count << "\n";
    return out.str();
}

std::string duality_json(const DualityReport& r) {
    json obj{{"n", r.n},
             {"k", r.k},
             {"trials", r.trials},
             {"seed", r.seed},
             {"xor_holds", r.xor_holds},
             {"xor_fails", r.xor_fails},
             {"boundary", r.boundary},
             {"strict_dual_holds", r.strict_dual_holds},
             {"strict_dual_fails", r.strict_dual_fails}};
    return obj.dump() + "\n";
}

std::string duality_text(const DualityReport& r) {
    std::ostringstream out;
    out << "duality audit n=" << r.n << " k=" << r.k << " trials=" << r.trials
        << " seed=" << r.seed << "\n"
        << "  xor_holds:         " << r.xor_holds << "\n"
        << "  xor_fails:         " << r.xor_fails << "\n"
        << "  boundary:          " << r.boundary << "\n"
        << "  strict_dual_holds: " << r.strict_dual_holds << "\n"
        << "  strict_dual_fails: " << r.strict_dual_fails << "\n";
    return out.str();
}

}  // namespace poslab
