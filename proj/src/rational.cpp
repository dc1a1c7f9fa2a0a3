#include "poslab/rational.hpp"

#include "poslab/errors.hpp"

#include <utility>

namespace poslab {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw DomainError("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Rational::to_double() const {
    return static_cast<double>(mp::cpp_rational(num_, den_));
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

BigInt binomial(int n, int j) {
    if (n < 0) {
        throw DomainError("binomial: negative n");
    }
    if (j < 0 || j > n) {
        return 0;
    }
    if (j > n - j) {
        j = n - j;
    }
    // Multiplicative form; each prefix is itself a binomial, so the division
    // below is exact at every step.
    BigInt result = 1;
    for (int i = 1; i <= j; ++i) {
        result = result * (n - j + i) / i;
    }
    return result;
}

Rational p_exact(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("p_exact: need 1 <= k <= n");
    }
    // Accumulate C(n-1, j) incrementally; each division is exact.
    BigInt term = 1;
    BigInt numerator = 1;
    for (int j = 1; j < k; ++j) {
        term = term * (n - j) / j;
        numerator += term;
    }
    return Rational(numerator, BigInt(1) << (n - 1));
}

Rational wendel_halfspace_prob(int n, int d) {
    if (n < 1 || d < 1 || d > n) {
        throw DomainError("wendel_halfspace_prob: need 1 <= d <= n");
    }
    return p_exact(n, d);
}

std::vector<ProbTableRow> p_table(int n_max) {
    if (n_max < 1) {
        throw DomainError("p_table: n_max >= 1 required");
    }
    std::vector<ProbTableRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            Rational p = p_exact(n, k);
            rows.push_back({n, k, p, to_decimal(p, 6)});
        }
    }
    return rows;
}

std::string to_decimal(const Rational& r, int digits) {
    if (digits < 1) {
        throw DomainError("to_decimal: digits >= 1 required");
    }
    const bool negative = r.num() < 0;
    BigInt abs_num = negative ? BigInt(-r.num()) : r.num();
    const BigInt& den = r.den();

    BigInt pow10 = 1;
    for (int i = 0; i < digits; ++i) {
        pow10 *= 10;
    }
    BigInt scaled = abs_num * pow10;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;

    // Round half to even on the discarded remainder.
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) == 1)) {
        ++q;
    }

    BigInt integer_part = q / pow10;
    BigInt frac_part = q % pow10;

    std::string frac = frac_part.str();
    if (static_cast<int>(frac.size()) < digits) {
        frac.insert(0, digits - frac.size(), '0');
    }
    std::string out = integer_part.str() + "." + frac;
    if (negative && q != 0) {
        out.insert(0, 1, '-');
    }
    return out;
}

}  // namespace poslab
