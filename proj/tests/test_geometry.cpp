#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "homcov/body.hpp"

using namespace homcov;
using namespace homcov::testutil;

TEST_CASE("contains: unit square basics") {
    const ConvexBody sq = unit_square();
    CHECK(contains(sq, Vec(0.5, 0.5), 1e-9));
    CHECK(!contains(sq, Vec(1.0 + 1e-6, 0.5), 1e-9));
    CHECK(contains(sq, Vec(1.0, 1.0), 1e-9));  // closed body
}

TEST_CASE("contains: degenerate bodies answer off-hull queries") {
    const ConvexBody seg = convex_hull({Vec(0, 0, 0), Vec(1, 1, 1)}, 3);
    CHECK(contains(seg, Vec(0.5, 0.5, 0.5), 1e-9));
    CHECK(!contains(seg, Vec(0.5, 0.5, 0.6), 1e-9));
    CHECK(!contains(seg, Vec(2, 2, 2), 1e-9));
}

TEST_CASE("containment soundness: convex combinations stay inside") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexBody b = trial % 2 == 0 ? random_polygon(rng, 3 + trial % 5)
                                            : random_polytope3(rng, 6 + trial % 5);
        for (int s = 0; s < 50; ++s) CHECK(contains(b, random_inner_point(rng, b), 1e-9));
    }
}

TEST_CASE("gauge: max-norm square") {
    const ConvexBody sq = symmetric_square();
    CHECK(gauge(sq, Vec(2, 0)) == doctest::Approx(2.0));
    CHECK(gauge(sq, Vec(0, 0)) == doctest::Approx(0.0));
    // max-norm oracle: gauge of (v1, v2) is max(|v1|, |v2|)
    CHECK(gauge(sq, Vec(0.5, 0.5)) == doctest::Approx(0.5));
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const Vec v(u(rng), u(rng));
        CHECK(gauge(sq, v) ==
              doctest::Approx(std::max(std::fabs(v[0]), std::fabs(v[1]))).epsilon(1e-9));
    }
}

TEST_CASE("gauge requires an interior origin") {
    const ConvexBody sq = unit_square();  // origin is a vertex, not interior
    CHECK_THROWS_AS(gauge(sq, Vec(0.5, 0.5)), std::invalid_argument);
}

TEST_CASE("gauge vs contains, and positive homogeneity") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.5, 1.5), t(0.0, 3.0);
    for (int trial = 0; trial < 15; ++trial) {
        ConvexBody raw = trial % 2 == 0 ? random_polygon(rng, 4 + trial % 4)
                                        : random_polytope3(rng, 7);
        // recenter so the origin is interior
        const Vec z = interior_point(raw);
        std::vector<Vec> moved;
        for (const auto& v : raw.vertices()) moved.push_back(v - z);
        const ConvexBody b = convex_hull(moved, raw.ambient_dim());
        for (int s = 0; s < 40; ++s) {
            const Vec v = random_point(rng, b.ambient_dim(), 1.5);
            const double g = gauge(b, v);
            CHECK((g <= 1.0 + 1e-9) == contains(b, v, 1e-9));
            const double scale = t(rng);
            CHECK(gauge(b, scale * v) == doctest::Approx(scale * g).epsilon(1e-8));
        }
    }
}

TEST_CASE("support: square and cube examples") {
    const ConvexBody sq = unit_square();
    auto r = support(sq, Vec(1, 0));
    CHECK(r.value == doctest::Approx(1.0));
    REQUIRE(r.face.size() == 2);  // (1,0) and (1,1)
    for (int idx : r.face) CHECK(sq.vertices()[static_cast<size_t>(idx)][0] == doctest::Approx(1.0));

    r = support(sq, Vec(1, 1));
    CHECK(r.value == doctest::Approx(2.0));
    REQUIRE(r.face.size() == 1);
    CHECK(distance(sq.vertices()[static_cast<size_t>(r.face[0])], Vec(1, 1)) < 1e-12);

    const ConvexBody cube = unit_cube();
    r = support(cube, Vec(0, 0, -1));
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.face.size() == 4);
    CHECK_THROWS_AS(support(cube, Vec(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("support function of opposite directions bounds width") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const ConvexBody b = random_polytope3(rng, 8);
        for (int s = 0; s < 20; ++s) {
            const Vec u = normalized(random_point(rng, 3) + Vec(0.01, 0.02, 0.03));
            CHECK(support(b, u).value + support(b, -u).value >= -1e-12);
        }
    }
}

TEST_CASE("interior_point: centroids") {
    CHECK(distance(interior_point(unit_square()), Vec(0.5, 0.5)) < 1e-12);
    const ConvexBody seg = convex_hull({Vec(0, 0), Vec(1, 0)}, 2);
    CHECK(distance(interior_point(seg), Vec(0.5, 0.0)) < 1e-12);
    const ConvexBody tet =
        convex_hull({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)}, 3);
    CHECK(distance(interior_point(tet), Vec(0.25, 0.25, 0.25)) < 1e-12);
    // strictly interior when full-dimensional
    const ConvexBody sq = unit_square();
    const Vec c = interior_point(sq);
    for (const auto& f : sq.facets()) CHECK(dot(f.normal, c) < f.offset - 1e-6);
}

TEST_CASE("longest_chord: square diagonal via the vertex-pair oracle") {
    const ConvexBody sq = unit_square();
    // oracle: longest chord parallel to (-1,-1) among vertex pairs
    double oracle = 0.0;
    for (const auto& a : sq.vertices())
        for (const auto& b : sq.vertices()) {
            const Vec d = a - b;
            if (norm(d) > 0 && std::fabs(cross2(d, Vec(-1, -1))) < 1e-12 && dot(d, Vec(-1, -1)) > 0)
                oracle = std::max(oracle, norm(d));
        }
    CHECK(oracle == doctest::Approx(std::sqrt(2.0)));

    const AffineChord chord = longest_chord(sq, Vec(-1, -1));
    CHECK(chord.length == doctest::Approx(std::sqrt(2.0)));
    CHECK(distance(chord.u, Vec(0, 0)) < 1e-7);
    CHECK(distance(chord.v, Vec(1, 1)) < 1e-7);
}

TEST_CASE("longest_chord: axis direction and degenerate segment") {
    const ConvexBody sq = unit_square();
    CHECK(longest_chord(sq, Vec(1, 0)).length == doctest::Approx(1.0));

    const ConvexBody seg = convex_hull({Vec(0, 0), Vec(2, 0)}, 2);
    const AffineChord c = longest_chord(seg, Vec(1, 0));
    CHECK(c.length == doctest::Approx(2.0));
    CHECK(distance(c.u, Vec(2, 0)) < 1e-9);
    CHECK(distance(c.v, Vec(0, 0)) < 1e-9);
    CHECK_THROWS_AS(longest_chord(seg, Vec(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(longest_chord(sq, Vec(0, 0)), std::invalid_argument);
}

TEST_CASE("longest_chord dominates random sampled chords") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const ConvexBody b = trial % 2 == 0 ? random_polygon(rng, 5) : random_polytope3(rng, 8);
        const Vec w = normalized(random_point(rng, b.ambient_dim(), 1.0) +
                                 Vec::of(std::vector<double>(static_cast<size_t>(b.ambient_dim()), 0.05)));
        const double best = longest_chord(b, w).length;
        for (int s = 0; s < 60; ++s) {
            const Vec a = random_inner_point(rng, b);
            // longest step from a along +-w inside the body, by bisection
            auto reach = [&](const Vec& dir) {
                double lo = 0.0, hi = 4.0;
                for (int it = 0; it < 40; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (contains(b, a + mid * dir, 1e-9) ? lo : hi) = mid;
                }
                return lo;
            };
            const double len = (reach(w) + reach(-w)) * norm(w);
            CHECK(len <= best + 1e-6);
        }
    }
}
