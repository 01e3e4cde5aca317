#include "rieszlab/diagnostics.hpp"
#include "rieszlab/duals.hpp"
#include "rieszlab/generators.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace rieszlab;
using testsupport::rel_diff;

TEST_CASE("orthonormal") {
    CHECK(orthonormal(1).columns() == CMatrix::Identity(1, 1));
    CHECK(orthonormal(3).columns() == CMatrix::Identity(3, 3));
    CHECK(gram(orthonormal(5)).entries() == CMatrix::Identity(5, 5));
    CHECK_THROWS_AS(orthonormal(0), InvariantError);
}

TEST_CASE("riesz_from_operator") {
    CHECK(riesz_from_operator(CMatrix::Identity(3, 3)).columns() == orthonormal(3).columns());

    CMatrix v = CMatrix::Zero(2, 2);
    v(0, 0) = 2.0;
    v(1, 1) = 1.0;
    const auto b = riesz_bounds(riesz_from_operator(v));
    CHECK(rel_diff(b.lower, 1.0) < 1e-15);
    CHECK(rel_diff(b.upper, 4.0) < 1e-15);

    CMatrix singular = CMatrix::Ones(3, 3);
    CHECK_THROWS_AS(riesz_from_operator(singular), SingularOperatorError);
    CHECK_THROWS_AS(riesz_from_operator(CMatrix::Ones(2, 3)), DimensionError);
}

TEST_CASE("seeded random Riesz bases are reproducible and well-conditioned") {
    CHECK(random_operator(8, 7) == random_operator(8, 7));
    CHECK(random_operator(8, 7) != random_operator(8, 8));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = random_riesz(2 + seed % 30, seed);
        const auto b = riesz_bounds(f);
        CHECK(b.upper / b.lower <= 1e12 * (1 + 1e-9)); // cond(V)^2
        CHECK(classify(f).kind == VerdictKind::RieszBasis);
        CHECK(duality_identity_residual(f, minimal_dual(f)) <= 1e-8);
    }
}

TEST_CASE("weighted_pair") {
    const auto one = weighted_pair(1);
    CHECK(one.f.columns() == CMatrix::Identity(1, 1));
    CHECK(one.g->columns() == CMatrix::Identity(1, 1));

    const auto w = weighted_pair(5);
    CHECK(rel_diff(bessel_bound(w.f), 1.0) < 1e-15);
    CHECK(rel_diff(bessel_bound(*w.g), 25.0) < 1e-15);
    CHECK((minimal_dual(w.f).columns() - w.g->columns()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(biorthogonality_residual(w.f, *w.g) <= 1e-15);
}

TEST_CASE("alternating_weighted_pair") {
    const auto two = alternating_weighted_pair(2);
    CMatrix f2 = CMatrix::Zero(2, 2), g2 = CMatrix::Zero(2, 2);
    f2(0, 0) = 1.0;
    f2(1, 1) = 2.0;
    g2(0, 0) = 1.0;
    g2(1, 1) = 0.5;
    CHECK(two.f.columns() == f2);
    CHECK(two.g->columns() == g2);

    const auto five = alternating_weighted_pair(5);
    CHECK(rel_diff(bessel_bound(five.f), 16.0) < 1e-15);
    CHECK(rel_diff(bessel_bound(*five.g), 25.0) < 1e-15);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto p = alternating_weighted_pair(n);
        CHECK(biorthogonality_residual(p.f, *p.g) <= 1e-15);
    }
}

TEST_CASE("young_example") {
    const auto one = young_example(1);
    CMatrix f1(2, 1), g1(2, 1);
    f1 << 1.0, 1.0;
    g1 << 0.0, 1.0;
    CHECK(one.f.columns() == f1);
    CHECK(one.g->columns() == g1);

    const auto y = young_example(4);
    CHECK(y.f.dim() == 5);
    CHECK(y.f.count() == 4);
    CHECK(rel_diff(bessel_bound(y.f), 5.0) < 1e-14);
    CHECK(rel_diff(bessel_bound(*y.g), 1.0) < 1e-15);
    CHECK(rel_diff(span_distance(y.f, unit_vector(5, 0)), 1.0 / std::sqrt(5.0)) < 1e-14);
    CHECK(rel_diff(span_distance(*y.g, unit_vector(5, 0)), 1.0) < 1e-15);
}

TEST_CASE("young_general") {
    SUBCASE("complement dimension 1 reduces to young_example") {
        const auto a = young_general(6, 1, 6);
        const auto b = young_example(6);
        CHECK(a.f.columns() == b.f.columns());
        CHECK(a.g->columns() == b.g->columns());
    }
    SUBCASE("dim K = 4, complement 2, N = 4 is biorthogonal with orthonormal G") {
        const auto p = young_general(4, 2, 4);
        CHECK(p.f.dim() == 6);
        CHECK(biorthogonality_residual(p.f, *p.g) == 0.0);
        CHECK(rel_diff(bessel_bound(*p.g), 1.0) < 1e-15);
        // each complement direction is reused
        CHECK(p.f.columns()(0, 0) == 1.0);
        CHECK(p.f.columns()(1, 1) == 1.0);
        CHECK(p.f.columns()(0, 2) == 1.0);
        CHECK(p.f.columns()(1, 3) == 1.0);
    }
    SUBCASE("N < dim K") {
        const auto p = young_general(5, 3, 2);
        CHECK(p.f.count() == 2);
        CHECK(biorthogonality_residual(p.f, *p.g) == 0.0);
    }
    CHECK_THROWS_AS(young_general(3, 1, 4), DimensionError);
    CHECK_THROWS_AS(young_general(3, 0, 2), DimensionError);
}

TEST_CASE("point sets") {
    CHECK(lattice_points(1, 1, 1).size() == 9);
    CHECK(lattice_points(1, 1, 2).size() == 25);
    CHECK(lattice_points(0.5, 2.0, 2).separation() == doctest::Approx(0.5));
    CHECK(lattice_points(1, 1, 1).separation() == doctest::Approx(1.0));

    CHECK(punctured_lattice(1).size() == 8);
    CHECK(punctured_lattice(2).size() == 24);
    CHECK_FALSE(punctured_lattice(2).contains({1.0, 0.0}));
    CHECK(punctured_lattice(2).contains({-1.0, 0.0}));

    const auto als = als_point_set(1);
    CHECK(als.size() == 6);
    const double r2 = std::sqrt(2.0);
    for (const TimeFrequencyNode node : {TimeFrequencyNode{-1, 0}, TimeFrequencyNode{1, 0},
                                         TimeFrequencyNode{0, r2}, TimeFrequencyNode{0, -r2},
                                         TimeFrequencyNode{r2, 0}, TimeFrequencyNode{-r2, 0}})
        CHECK(als.contains(node));
    for (int n = 1; n <= 20; ++n)
        CHECK(als_point_set(n).size() == static_cast<std::size_t>(2 + 4 * n)); // constructor rejects duplicates

    CHECK_THROWS_AS(PointSet2D({{0, 0}, {0, 0}}), InvariantError);
    CHECK(std::isinf(PointSet2D({{0, 0}}).separation()));
}

TEST_CASE("GaborDiscretization") {
    const GaborDiscretization d(6.0, 16);
    CHECK(d.sample_count() == 193);
    CHECK(d.grid_step() * static_cast<double>(d.sample_count() - 1) == doctest::Approx(12.0));
    CHECK(d.grid_point(0) == -6.0);
    CHECK(d.grid_point(192) == doctest::Approx(6.0));
    CHECK(d.safe_time_window() == 3.0);
    CHECK_THROWS_AS(GaborDiscretization(6.0, 0), InvariantError);
    CHECK_THROWS_AS(GaborDiscretization(0.25, 5), InvariantError);
}

TEST_CASE("gaussian_gabor") {
    const GaborDiscretization disc(6.0, 16);
    const double pi = std::numbers::pi;

    SUBCASE("single node column norm is 2^{-1/4}") {
        const auto f = gaussian_gabor(PointSet2D({{0, 0}}), disc);
        const double oracle_norm = std::sqrt(oracle::riemann_gabor_inner(0, 0, 0, 0, 6.0, 16).real());
        CHECK(std::abs(oracle_norm - std::pow(2.0, -0.25)) < 1e-6);
        CHECK(std::abs(f.columns().col(0).norm() - std::pow(2.0, -0.25)) < 1e-6);
        CHECK(f.columns().col(0).norm() == doctest::Approx(0.840896).epsilon(1e-6));
    }
    SUBCASE("unit time and frequency shifts give 2^{-1/2} e^{-pi/2}") {
        const double expected = std::exp(-pi / 2.0) / std::sqrt(2.0);
        CHECK(expected == doctest::Approx(0.1469925).epsilon(1e-6));
        for (const TimeFrequencyNode other : {TimeFrequencyNode{1, 0}, TimeFrequencyNode{0, 1}}) {
            const auto f = gaussian_gabor(PointSet2D({{0, 0}, other}), disc);
            const cplx ip = inner(f.column(0), f.column(1));
            const cplx riemann = oracle::riemann_gabor_inner(0, 0, other.tau, other.mu, 6.0, 16);
            CHECK(std::abs(ip - riemann) < 1e-13);
            CHECK(std::abs(std::abs(ip) - expected) < 1e-5);
        }
    }
    SUBCASE("all pairwise moduli match the twisted Gaussian kernel") {
        const auto points = punctured_lattice(2);
        const auto f = gaussian_gabor(points, disc);
        const GramMatrix g = gram(f);
        double worst = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j)
            for (std::size_t k = 0; k < points.size(); ++k) {
                const auto& a = points.nodes()[j];
                const auto& b = points.nodes()[k];
                const double kernel = oracle::gaussian_kernel_modulus(a.tau, a.mu, b.tau, b.mu);
                worst = std::max(worst, std::abs(std::abs(g.entries()(static_cast<Eigen::Index>(j),
                                                                       static_cast<Eigen::Index>(k))) -
                                                 kernel));
            }
        CHECK(worst < 1e-5);
    }
    SUBCASE("grid refinement changes norms by < 1e-6") {
        const PointSet2D points({{0, 0}, {2.5, -1.0}, {-3.0, 2.0}});
        const auto coarse = gaussian_gabor(points, GaborDiscretization(6.0, 16));
        const auto fine = gaussian_gabor(points, GaborDiscretization(6.0, 32));
        for (Eigen::Index k = 0; k < 3; ++k)
            CHECK(std::abs(coarse.columns().col(k).norm() - fine.columns().col(k).norm()) < 1e-6);
    }
    SUBCASE("nodes outside the safe window are rejected with the offending node") {
        try {
            gaussian_gabor(PointSet2D({{0, 0}, {3.5, 1.0}}), disc);
            FAIL("expected TruncationError");
        } catch (const TruncationError& e) {
            CHECK(e.tau() == 3.5);
            CHECK(e.mu() == 1.0);
        }
        CHECK_NOTHROW(gaussian_gabor(PointSet2D({{3.0, 0}, {-3.0, 0}}), disc));
    }
}

TEST_CASE("named pairs are biorthogonal to 1e-12") {
    for (std::size_t n : {1u, 2u, 7u, 30u}) {
        for (const auto& p : {weighted_pair(n), alternating_weighted_pair(n), young_example(n),
                              young_general(n, 3, n)}) {
            REQUIRE(p.g.has_value());
            CHECK(p.g->dim() == p.f.dim());
            CHECK(p.g->count() == p.f.count());
            CHECK(biorthogonality_residual(p.f, *p.g) <= 1e-12);
        }
    }
}
