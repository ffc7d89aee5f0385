#include <doctest.h>

#include <cmath>

#include "bandlim/density.hpp"
#include "bandlim/errors.hpp"
#include "bandlim/graph.hpp"
#include "bandlim/rng.hpp"

using namespace bandlim;

namespace {

constexpr double kPi = 3.14159265358979323846;

PointCloud random_cloud(int n, int d, std::uint64_t seed) {
    PointCloud c;
    c.points = Mat(n, d);
    c.seed = seed;
    Rng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) c.points(i, j) = rng.normal();
    return c;
}

Vec random_binary(int n, Rng& rng) {
    Vec s(n);
    for (int i = 0; i < n; ++i) s(i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
    return s;
}

}  // namespace

TEST_CASE("kernel closed forms") {
    KernelParams kp{0.1, 2};
    Vec x = Vec::Zero(2), y = Vec::Zero(2);
    // coincident points: (2 pi sigma^2)^-1 in two dimensions
    CHECK(gaussian_kernel(x, y, kp) ==
          doctest::Approx(1.0 / (2.0 * kPi * 0.01)).epsilon(1e-14));
    y << 0.1, 0.0;  // one kernel width apart
    CHECK(gaussian_kernel(x, y, kp) ==
          doctest::Approx(std::exp(-0.5) / (2.0 * kPi * 0.01)).epsilon(1e-14));
    y << 1.0, 0.0;
    CHECK(gaussian_kernel(x, y, kp) ==
          doctest::Approx(std::exp(-50.0) / (2.0 * kPi * 0.01)).epsilon(1e-12));

    KernelParams kp1{0.5, 1};
    Vec a(1), b(1);
    a << 0.0;
    b << 0.25;
    CHECK(gaussian_kernel(a, b, kp1) ==
          doctest::Approx(std::exp(-0.125) / std::sqrt(2.0 * kPi * 0.25)).epsilon(1e-14));
}

TEST_CASE("graph construction matches the kernel entrywise") {
    PointCloud cloud = random_cloud(25, 2, 5);
    KernelParams kp{0.3, 2};
    SimilarityGraph g = build_graph(cloud, kp);
    REQUIRE(g.n == 25);
    CHECK(g.sigma == 0.3);
    for (int i = 0; i < g.n; ++i) {
        REQUIRE(g.W(i, i) == 0.0);
        double deg = 0.0;
        for (int j = 0; j < g.n; ++j) {
            if (i != j) {
                double w = gaussian_kernel(cloud.points.row(i).transpose(),
                                           cloud.points.row(j).transpose(), kp);
                REQUIRE(g.W(i, j) == doctest::Approx(w).epsilon(1e-12));
            }
            REQUIRE(g.W(i, j) == g.W(j, i));
            deg += g.W(i, j);
        }
        REQUIRE(g.D(i) == doctest::Approx(deg).epsilon(1e-12));
    }
}

TEST_CASE("two-node graph by hand") {
    PointCloud cloud;
    cloud.points = Mat(2, 2);
    cloud.points << 0, 0, 0.2, 0;
    KernelParams kp{0.2, 2};
    SimilarityGraph g = build_graph(cloud, kp);
    double w = std::exp(-0.5) / (2.0 * kPi * 0.04);
    CHECK(g.W(0, 1) == doctest::Approx(w).epsilon(1e-14));
    CHECK(g.D(0) == doctest::Approx(w).epsilon(1e-14));

    // L = (1/2) [[w, -w], [-w, w]]; the difference vector is an eigenvector
    Vec f(2);
    f << 1, -1;
    Vec Lf = laplacian_apply(g, f);
    CHECK(Lf(0) == doctest::Approx(w).epsilon(1e-13));
    CHECK(Lf(1) == doctest::Approx(-w).epsilon(1e-13));

    Vec ones = Vec::Ones(2);
    CHECK(laplacian_apply(g, ones).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("laplacian apply agrees with the dense matrix and is linear") {
    PointCloud cloud = random_cloud(40, 3, 11);
    SimilarityGraph g = build_graph(cloud, {0.8, 3});
    Mat L = dense_laplacian(g);
    Rng rng(17);
    for (int rep = 0; rep < 5; ++rep) {
        Vec f(40), h(40);
        for (int i = 0; i < 40; ++i) {
            f(i) = rng.normal();
            h(i) = rng.normal();
        }
        CHECK((laplacian_apply(g, f) - L * f).cwiseAbs().maxCoeff() < 1e-12);
        double a = rng.uniform() * 4 - 2;
        Vec lin = laplacian_apply(g, a * f + h);
        Vec split = a * laplacian_apply(g, f) + laplacian_apply(g, h);
        CHECK((lin - split).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("laplacian is positive semidefinite and kills constants") {
    PointCloud cloud = random_cloud(30, 2, 23);
    SimilarityGraph g = build_graph(cloud, {0.5, 2});
    CHECK(laplacian_apply(g, Vec::Ones(30)).cwiseAbs().maxCoeff() < 1e-12);
    Rng rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        Vec f(30);
        for (int i = 0; i < 30; ++i) f(i) = rng.normal();
        CHECK(f.dot(laplacian_apply(g, f)) >= -1e-12);
    }
}

TEST_CASE("iterated apply equals repeated single applies") {
    PointCloud cloud = random_cloud(20, 2, 41);
    SimilarityGraph g = build_graph(cloud, {0.4, 2});
    Rng rng(43);
    Vec f(20);
    for (int i = 0; i < 20; ++i) f(i) = rng.normal();
    Vec once = f;
    for (int k = 0; k < 7; ++k) once = laplacian_apply(g, once);
    CHECK((laplacian_apply_m(g, f, 7) - once).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((laplacian_apply_m(g, f, 1) - laplacian_apply(g, f)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((laplacian_apply_m(g, f, 0) - f).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cut identity against a brute-force double loop") {
    Rng rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 5 + static_cast<int>(rng.uniform() * 20);
        PointCloud cloud = random_cloud(n, 2, 1000 + rep);
        double sigma = 0.2 + rng.uniform();
        SimilarityGraph g = build_graph(cloud, {sigma, 2});
        Vec s = random_binary(n, rng);

        double brute = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (s(i) == 1.0 && s(j) == 0.0) brute += g.W(i, j);

        CutValue cut = cut_value(g, s);
        REQUIRE(cut.raw == doctest::Approx(brute).epsilon(1e-10));
        REQUIRE(cut.scaled ==
                doctest::Approx(std::sqrt(2.0 * kPi) * brute / (double(n) * n * sigma))
                    .epsilon(1e-10));
    }
}

TEST_CASE("cut of the empty and full sets is zero") {
    PointCloud cloud = random_cloud(12, 2, 77);
    SimilarityGraph g = build_graph(cloud, {0.5, 2});
    CHECK(cut_value(g, Vec::Zero(12)).raw == 0.0);
    CHECK(cut_value(g, Vec::Ones(12)).raw == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cut rejects non-binary signals") {
    PointCloud cloud = random_cloud(6, 2, 9);
    SimilarityGraph g = build_graph(cloud, {0.5, 2});
    Vec s = Vec::Zero(6);
    s(2) = 0.5;
    CHECK_THROWS_AS(cut_value(g, s), InvalidInputError);
}

TEST_CASE("truncation drops small weights only") {
    PointCloud cloud = random_cloud(60, 2, 13);
    KernelParams kp{0.15, 2};
    SimilarityGraph dense = build_graph(cloud, kp);
    double peak = dense.W.maxCoeff();
    double tau = peak * 1e-12;
    SimilarityGraph sparse = build_graph(cloud, kp, tau);
    CHECK(sparse.truncation == tau);
    int zeroed = 0;
    for (int i = 0; i < 60; ++i) {
        for (int j = 0; j < 60; ++j) {
            if (sparse.W(i, j) == 0.0 && dense.W(i, j) != 0.0) {
                REQUIRE(dense.W(i, j) < tau);
                ++zeroed;
            } else {
                REQUIRE(sparse.W(i, j) == dense.W(i, j));
            }
        }
    }
    CHECK(zeroed > 0);  // sigma is small enough that some pairs fall below

    // spectral quantities barely move
    Vec s(60);
    for (int i = 0; i < 60; ++i) s(i) = cloud.points(i, 0) < 0 ? 1.0 : 0.0;
    double wd = s.dot(laplacian_apply_m(dense, s, 8));
    double ws = s.dot(laplacian_apply_m(sparse, s, 8));
    double om_d = std::pow(wd / s.dot(s), 1.0 / 8);
    double om_s = std::pow(ws / s.dot(s), 1.0 / 8);
    CHECK(om_d == doctest::Approx(om_s).epsilon(1e-6));
}

TEST_CASE("graph construction rejects empty input") {
    PointCloud cloud;
    cloud.points = Mat(0, 2);
    CHECK_THROWS_AS(build_graph(cloud, {0.1, 2}), InvalidInputError);
}
