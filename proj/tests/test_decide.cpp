#include "poslab/decide.hpp"
#include "poslab/errors.hpp"
#include "poslab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace poslab;

namespace {

SubspaceBasis line(std::initializer_list<double> coords) {
    Matrix m(static_cast<int>(coords.size()), 1);
    int i = 0;
    for (double c : coords) m(i++, 0) = c;
    m /= m.norm();
    return SubspaceBasis::make(m);
}

// Re-check a positivity certificate against the raw constraints, without any
// solver state.
void check_positive_certificate(const SubspaceBasis& b, const Decision& d,
                                double tol = kDefaultTol) {
    REQUIRE(d.certificate.has_value());
    const Vector& t = *d.certificate;
    REQUIRE(t.size() == b.n);
    CHECK(t.minCoeff() >= -10 * tol);
    CHECK(t.maxCoeff() >= kStrictTol);
    CHECK(std::abs(t.sum() - 1.0) <= 1e-9);
    // t must lie on span(B)
    CHECK((b.projector() * t - t).cwiseAbs().maxCoeff() <= 1e-8);
}

}  // namespace

TEST_CASE("contains_positive on one-dimensional spans") {
    const Decision pos = contains_positive(line({1, 2, 3}));
    CHECK(pos.feasible);
    check_positive_certificate(line({1, 2, 3}), pos);
    // certificate proportional to (1,2,3), normalized to sum 1
    CHECK((*pos.certificate)(2) == doctest::Approx(0.5));

    CHECK_FALSE(contains_positive(line({1, -1})).feasible);
}

TEST_CASE("contains_positive on hyperplanes") {
    Matrix ones(1, 3);
    ones << 1, 1, 1;
    const SubspaceBasis zero_sum = kernel_basis(ones);
    CHECK_FALSE(contains_positive(zero_sum).feasible);

    Matrix mixed(1, 3);
    mixed << 1, -1, 0;
    const SubspaceBasis v = kernel_basis(mixed);
    const Decision d = contains_positive(v);
    CHECK(d.feasible);  // e3 lies in the kernel
    check_positive_certificate(v, d);
}

TEST_CASE("contains_strictly_positive distinguishes orthant interior") {
    const Decision interior = contains_strictly_positive(line({1, 1}));
    CHECK(interior.feasible);
    CHECK((*interior.certificate)(0) == doctest::Approx(0.5));
    CHECK((*interior.certificate)(1) == doctest::Approx(0.5));

    const SubspaceBasis e2 = line({0, 1});
    CHECK_FALSE(contains_strictly_positive(e2).feasible);
    CHECK(contains_positive(e2).feasible);
    CHECK(contains_positive(e2).boundary);  // orthant-boundary instance

    Matrix ones(1, 3);
    ones << 1, 1, 1;
    CHECK_FALSE(contains_strictly_positive(kernel_basis(ones)).feasible);
}

TEST_CASE("hull_contains_origin examples") {
    Matrix pair(2, 1);
    pair << 1, -1;
    const Decision sym = hull_contains_origin(PointCloud::make(pair));
    CHECK(sym.feasible);
    CHECK((*sym.certificate)(0) == doctest::Approx(0.5));
    CHECK((*sym.certificate)(1) == doctest::Approx(0.5));

    Matrix half_plane(3, 2);
    half_plane << 1, 0, 0, 1, 1, 1;
    CHECK_FALSE(hull_contains_origin(PointCloud::make(half_plane)).feasible);

    Matrix tri(3, 2);
    tri << 1, 0, -1, 1, -1, -1;
    const Decision inside = hull_contains_origin(PointCloud::make(tri));
    CHECK(inside.feasible);
    const Vector& lam = *inside.certificate;
    CHECK(lam(0) == doctest::Approx(0.5));
    CHECK(lam(1) == doctest::Approx(0.25));
    CHECK(lam(2) == doctest::Approx(0.25));
    // substitution check: sum(lam_i z_i) = 0
    CHECK((tri.transpose() * lam).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(std::abs(lam.sum() - 1.0) <= 1e-9);
}

TEST_CASE("sign oracles") {
    Vector v(3);
    v << 0, 2, 5;
    CHECK(sign_oracle_line(v));
    v << 1, -1, 0;
    CHECK_FALSE(sign_oracle_line(v));
    v << -3, 0, -1;
    CHECK(sign_oracle_line(v));
    CHECK_THROWS_AS(sign_oracle_line(Vector::Zero(3)), DomainError);

    Vector a(3);
    a << 1, 1, 1;
    CHECK_FALSE(sign_oracle_hyperplane(a));
    a << 1, -2, 3;
    CHECK(sign_oracle_hyperplane(a));
    Vector a2(2);
    a2 << 1, 0;
    CHECK(sign_oracle_hyperplane(a2));
    CHECK_THROWS_AS(sign_oracle_hyperplane(Vector::Zero(2)), DomainError);
}

TEST_CASE("LP agrees with the line oracle on random instances") {
    RngStream rng(404);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 9);
        const Matrix m = gaussian_matrix(n, 1, rng);
        const SubspaceBasis b = orthonormal_columns(m);
        const Decision d = contains_positive(b);
        if (d.boundary) continue;
        CHECK(d.feasible == sign_oracle_line(m.col(0)));
        if (d.feasible) check_positive_certificate(b, d);
    }
}

TEST_CASE("LP agrees with the hyperplane oracle on random instances") {
    RngStream rng(505);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 9);
        const Matrix a = gaussian_matrix(1, n, rng);
        const SubspaceBasis b = kernel_basis(a);
        const Decision d = contains_positive(b);
        if (d.boundary) continue;
        CHECK(d.feasible == sign_oracle_hyperplane(a.row(0).transpose()));
    }
}

TEST_CASE("hull and kernel verdicts coincide on shared instances") {
    RngStream rng(606);
    int boundary = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 6);
        const int d = 1 + static_cast<int>(rng.next_u64() % (n - 1));
        const Matrix a = gaussian_matrix(d, n, rng);
        // columns of A are the points z_i
        const Decision hull = hull_contains_origin(PointCloud::make(a.transpose()));
        const Decision pos = contains_positive(kernel_basis(a));
        if (hull.boundary || pos.boundary) {
            ++boundary;
            continue;
        }
        CHECK(hull.feasible == pos.feasible);
    }
    CHECK(boundary < 20);
}

TEST_CASE("complement duality on sampled subspaces") {
    RngStream rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 6);
        const int k = 1 + static_cast<int>(rng.next_u64() % (n - 1));
        RngStream child = rng.derive(trial);
        const SubspaceBasis v = haar_subspace(n, k, child, SubspaceMethod::kSpan);
        const SubspaceBasis vp = complement(v);
        const Decision dv = contains_positive(v);
        const Decision dp = contains_positive(vp);
        const Decision ds = contains_strictly_positive(vp);
        if (dv.boundary || dp.boundary || ds.boundary) continue;
        CHECK(dv.feasible != dp.feasible);
        CHECK(dv.feasible == !ds.feasible);
    }
}

TEST_CASE("verdicts are scale and rotation invariant") {
    RngStream rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 4);
        const int d = 1 + static_cast<int>(rng.next_u64() % (n - 1));
        const Matrix pts = gaussian_matrix(n, d, rng);
        const Decision base = hull_contains_origin(PointCloud::make(pts));
        const Decision scaled = hull_contains_origin(PointCloud::make(37.5 * pts));
        if (!base.boundary && !scaled.boundary) {
            CHECK(base.feasible == scaled.feasible);
        }

        const int k = n - d;
        RngStream child = rng.derive(trial);
        const SubspaceBasis v = haar_subspace(n, k, child, SubspaceMethod::kSpan);
        const Matrix q = random_orthogonal(k, rng);
        const SubspaceBasis rotated = SubspaceBasis::make(v.basis * q);
        const Decision dv = contains_positive(v);
        const Decision dr = contains_positive(rotated);
        if (!dv.boundary && !dr.boundary) {
            CHECK(dv.feasible == dr.feasible);
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(contains_positive(line({1, 1}), 0.0), DomainError);
    CHECK_THROWS_AS(PointCloud::make(Matrix(0, 0)), DomainError);
}
