#ifndef POSLAB_RATIONAL_HPP
#define POSLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace poslab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced fraction with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long numerator) : num_(numerator), den_(1) {}  // NOLINT(google-explicit-constructor)

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    double to_double() const;
    std::string to_string() const;  // "num/den", or "num" when den == 1

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

private:
    BigInt num_;
    BigInt den_;  // > 0, coprime with num_
};

struct ProbTableRow {
    int n;
    int k;
    Rational p;
    std::string p_decimal;
};

/// C(n, j), exact. Returns 0 for j < 0 or j > n.
BigInt binomial(int n, int j);

/// Probability that a Haar-random k-dimensional subspace of R^n contains a
/// positive vector: (sum_{j=0}^{k-1} C(n-1, j)) / 2^{n-1}.
Rational p_exact(int n, int k);

/// Probability that n symmetric iid points in R^d lie in a common half-space
/// through the origin. Numerically identical to p_exact(n, d).
Rational wendel_halfspace_prob(int n, int d);

/// All rows 1 <= k <= n <= n_max in lexicographic (n, k) order, with
/// 6-digit decimal expansions.
std::vector<ProbTableRow> p_table(int n_max);

/// Correctly rounded (half-even) decimal expansion of r with `digits`
/// fractional digits.
std::string to_decimal(const Rational& r, int digits);

}  // namespace poslab

#endif
