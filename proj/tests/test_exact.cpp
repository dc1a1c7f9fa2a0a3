#include "poslab/errors.hpp"
#include "poslab/rational.hpp"
#include "poslab/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace poslab;

TEST_CASE("Rational reduces and normalizes sign") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("binomial small values and conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies the Pascal recurrence up to n = 300") {
    // Additive route, independent of the multiplicative implementation.
    for (int n = 1; n <= 300; ++n) {
        for (int j = 1; j < n; ++j) {
            CHECK(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
        }
    }
}

TEST_CASE("p_exact on known cells") {
    CHECK(p_exact(1, 1) == Rational(1));
    CHECK(p_exact(4, 2) == Rational(BigInt(1), BigInt(2)));
    CHECK(p_exact(5, 3) == Rational(BigInt(11), BigInt(16)));
    CHECK(p_exact(3, 2) == Rational(BigInt(3), BigInt(4)));
    CHECK_THROWS_AS(p_exact(3, 0), DomainError);
    CHECK_THROWS_AS(p_exact(3, 4), DomainError);
}

TEST_CASE("p_exact equals the Binomial(n-1, 1/2) CDF at k-1") {
    // Pascal-triangle partial sums, an additive second route.
    std::vector<BigInt> row{1};  // row n-1 of the triangle
    for (int n = 1; n <= 300; ++n) {
        BigInt partial = 0;
        const BigInt denom = BigInt(1) << (n - 1);
        for (int k = 1; k <= n; ++k) {
            partial += row[k - 1];
            CHECK(p_exact(n, k) == Rational(partial, denom));
        }
        std::vector<BigInt> next{1};
        for (int j = 1; j < n; ++j) next.push_back(row[j - 1] + row[j]);
        next.push_back(1);
        row = std::move(next);
    }
}

TEST_CASE("duality, boundary rows and monotonicity up to n = 300") {
    const Rational one(1);
    for (int n = 2; n <= 300; ++n) {
        CHECK(p_exact(n, 1) == Rational(BigInt(1), BigInt(1) << (n - 1)));
        CHECK(p_exact(n, n) == one);
        for (int k = 1; k < n; ++k) {
            CHECK(p_exact(n, k) + p_exact(n, n - k) == one);
            CHECK(p_exact(n, k) < p_exact(n, k + 1));
        }
    }
}

TEST_CASE("wendel_halfspace_prob closed form") {
    CHECK(wendel_halfspace_prob(2, 1) == Rational(BigInt(1), BigInt(2)));
    CHECK(wendel_halfspace_prob(3, 2) == Rational(BigInt(3), BigInt(4)));
    CHECK(wendel_halfspace_prob(4, 4) == Rational(1));
    CHECK_THROWS_AS(wendel_halfspace_prob(3, 0), DomainError);
}

TEST_CASE("wendel n=2 d=1: brute-force sign oracle at 1e6 trials") {
    // Two normals on a line lie in a common half-line iff they share a sign.
    RngStream rng(20260823);
    const int trials = 1000000;
    int same_sign = 0;
    for (int i = 0; i < trials; ++i) {
        const double a = rng.normal();
        const double b = rng.normal();
        if ((a > 0) == (b > 0)) ++same_sign;
    }
    const double p_hat = static_cast<double>(same_sign) / trials;
    CHECK(std::abs(p_hat - 0.5) < 0.002);  // 4 sigma at 1e6
}

TEST_CASE("wendel n=3 d=2: brute-force triangle oracle at 1e6 trials") {
    // Origin inside the triangle iff the three pairwise cross products share
    // a sign; half-space probability is the complement.
    RngStream rng(77);
    const int trials = 1000000;
    int in_half_space = 0;
    for (int i = 0; i < trials; ++i) {
        double x1 = rng.normal(), y1 = rng.normal();
        double x2 = rng.normal(), y2 = rng.normal();
        double x3 = rng.normal(), y3 = rng.normal();
        const double c1 = x1 * y2 - y1 * x2;
        const double c2 = x2 * y3 - y2 * x3;
        const double c3 = x3 * y1 - y3 * x1;
        const bool origin_inside = (c1 > 0 && c2 > 0 && c3 > 0) ||
                                   (c1 < 0 && c2 < 0 && c3 < 0);
        if (!origin_inside) ++in_half_space;
    }
    const double p_hat = static_cast<double>(in_half_space) / trials;
    CHECK(std::abs(p_hat - 0.75) < 0.0018);  // 4 sigma at 1e6
}

TEST_CASE("p_table ordering and contents") {
    const auto t1 = p_table(1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].n == 1);
    CHECK(t1[0].k == 1);
    CHECK(t1[0].p == Rational(1));

    const auto t2 = p_table(2);
    REQUIRE(t2.size() == 3);
    CHECK(t2.back().n == 2);
    CHECK(t2.back().k == 2);
    CHECK(t2.back().p == Rational(1));

    const auto t3 = p_table(3);
    REQUIRE(t3.size() == 6);
    CHECK(t3[3].p == Rational(BigInt(1), BigInt(4)));   // (3,1)
    CHECK(t3[4].p == Rational(BigInt(3), BigInt(4)));   // (3,2)
    CHECK(t3[5].p == Rational(1));                      // (3,3)
    CHECK(t3[4].p_decimal == "0.750000");
}

TEST_CASE("to_decimal is half-even") {
    CHECK(to_decimal(Rational(BigInt(1), BigInt(2)), 3) == "0.500");
    CHECK(to_decimal(Rational(BigInt(11), BigInt(16)), 4) == "0.6875");
    CHECK(to_decimal(Rational(BigInt(1), BigInt(3)), 5) == "0.33333");
    CHECK(to_decimal(Rational(BigInt(2), BigInt(3)), 5) == "0.66667");
    // Ties round to the even digit.
    CHECK(to_decimal(Rational(BigInt(1), BigInt(8)), 2) == "0.12");
    CHECK(to_decimal(Rational(BigInt(3), BigInt(8)), 2) == "0.38");
    CHECK(to_decimal(Rational(BigInt(-1), BigInt(8)), 2) == "-0.12");
    CHECK(to_decimal(Rational(BigInt(5), BigInt(4)), 1) == "1.2");
    CHECK(to_decimal(Rational(BigInt(199), BigInt(100)), 1) == "2.0");
}
