#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "homcov/body.hpp"

using namespace homcov;
using namespace homcov::testutil;

TEST_CASE("triangle with an interior point drops it") {
    const ConvexBody b =
        convex_hull({Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(0.5, 0.25)}, 2);
    CHECK(b.vertices().size() == 3);
    CHECK(b.affine_dim() == 2);
    CHECK(b.facets().size() == 3);
}

TEST_CASE("axis cube: 8 vertices, 6 facets") {
    const ConvexBody b = unit_cube();
    CHECK(b.vertices().size() == 8);
    CHECK(b.facets().size() == 6);
    CHECK(b.affine_dim() == 3);
    for (const auto& ring : b.facet_vertices()) CHECK(ring.size() == 4);
    // every vertex satisfies every facet inequality
    for (const auto& f : b.facets())
        for (const auto& v : b.vertices()) CHECK(dot(f.normal, v) <= f.offset + 1e-12);
}

TEST_CASE("degenerate segment in 3-space") {
    const ConvexBody b = convex_hull({Vec(0, 0, 0), Vec(1, 1, 1)}, 3);
    CHECK(b.affine_dim() == 1);
    CHECK(b.vertices().size() == 2);
    CHECK(b.facets().empty());
    CHECK(b.intrinsic_facets().size() == 2);
}

TEST_CASE("single point and empty input") {
    const ConvexBody p = convex_hull({Vec(2, 3)}, 2);
    CHECK(p.affine_dim() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK_THROWS_AS(convex_hull({}, 2), std::invalid_argument);
    CHECK_THROWS_AS(convex_hull({Vec(0, 0), Vec(0, 0, 0)}, 2), std::invalid_argument);
}

TEST_CASE("planar polygon embedded in 3-space") {
    const ConvexBody b = convex_hull(
        {Vec(0, 0, 1), Vec(1, 0, 1), Vec(1, 1, 1), Vec(0, 1, 1), Vec(0.5, 0.5, 1)}, 3);
    CHECK(b.affine_dim() == 2);
    CHECK(b.vertices().size() == 4);
    CHECK(b.facets().empty());
    CHECK(b.intrinsic_facets().size() == 4);
}

TEST_CASE("coplanar facet points are merged, edge midpoints dropped") {
    auto pts = unit_cube().vertices();
    pts.push_back(Vec(0.5, 0.5, 0.0));  // bottom facet interior
    pts.push_back(Vec(0.5, 0.0, 0.0));  // bottom edge midpoint
    const ConvexBody b = convex_hull(pts, 3);
    CHECK(b.vertices().size() == 8);
    CHECK(b.facets().size() == 6);
}

TEST_CASE("hull idempotence on random point clouds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = trial % 2 == 0 ? 2 : 3;
        std::vector<Vec> pts;
        const int n = 4 + static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) pts.push_back(random_point(rng, dim));
        const ConvexBody a = convex_hull(pts, dim);
        const ConvexBody b = convex_hull(a.vertices(), dim);
        REQUIRE(a.vertices().size() == b.vertices().size());
        for (const auto& v : a.vertices()) {
            bool found = false;
            for (const auto& w : b.vertices()) found = found || distance(v, w) < 1e-9;
            CHECK(found);
        }
    }
}

TEST_CASE("no hull vertex is a convex combination of the others") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const ConvexBody b = random_polytope3(rng, 10);
        for (size_t i = 0; i < b.vertices().size(); ++i) {
            std::vector<Vec> others;
            for (size_t j = 0; j < b.vertices().size(); ++j)
                if (j != i) others.push_back(b.vertices()[j]);
            const ConvexBody rest = convex_hull(others, 3);
            CHECK(!contains(rest, b.vertices()[i], 1e-9));
        }
    }
}

TEST_CASE("subdivide: right isoceles triangle of diameter 1") {
    const SubdivisionCell cell =
        SubdivisionCell::of({Vec(0, 0), Vec(1, 0), Vec(0.5, 0.5)});
    CHECK(cell.diameter == doctest::Approx(1.0));
    const auto kids = subdivide(cell);
    REQUIRE(kids.size() == 2);
    for (const auto& k : kids) CHECK(k.diameter <= 0.903);
}

TEST_CASE("subdivide: an equilateral child keeps an original edge") {
    const SubdivisionCell cell =
        SubdivisionCell::of({Vec(0, 0), Vec(1, 0), Vec(0.5, std::sqrt(3.0) / 2.0)});
    const auto kids = subdivide(cell);
    const double worst = std::max(kids[0].diameter, kids[1].diameter);
    CHECK(worst == doctest::Approx(1.0));  // per-step halving is impossible here
}

TEST_CASE("subdivide: segment halves; tetra children split the volume") {
    const auto seg = SubdivisionCell::of({Vec(0, 0), Vec(1, 0)});
    const auto halves = subdivide(seg);
    CHECK(halves[0].diameter == doctest::Approx(0.5));
    CHECK(halves[1].diameter == doctest::Approx(0.5));

    const SubdivisionCell tet = SubdivisionCell::of(
        {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0.5, std::sqrt(3.0) / 2.0, 0),
         Vec(0.5, std::sqrt(3.0) / 6.0, std::sqrt(6.0) / 3.0)});
    auto vol = [](const SubdivisionCell& c) {
        return std::fabs(dot(c.verts[1] - c.verts[0],
                             cross(c.verts[2] - c.verts[0], c.verts[3] - c.verts[0]))) / 6.0;
    };
    const auto kids = subdivide(tet);
    CHECK(vol(kids[0]) == doctest::Approx(vol(tet) / 2.0));
    CHECK(vol(kids[1]) == doctest::Approx(vol(tet) / 2.0));
    CHECK_THROWS_AS(subdivide(SubdivisionCell::of({Vec(0, 0)})), std::invalid_argument);
}

TEST_CASE("diameters shrink geometrically under repeated bisection") {
    std::vector<SubdivisionCell> cells = {SubdivisionCell::of(
        {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)})};
    for (int level = 0; level < 12; ++level) {
        std::vector<SubdivisionCell> next;
        for (const auto& c : cells)
            for (auto& k : subdivide(c)) next.push_back(std::move(k));
        cells = std::move(next);
    }
    double worst = 0.0;
    for (const auto& c : cells) worst = std::max(worst, c.diameter);
    CHECK(worst < 0.5);  // diameter sqrt(2) initially
}
