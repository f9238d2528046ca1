#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "homcov/covering.hpp"

using namespace homcov;
using namespace homcov::testutil;

namespace {

const std::vector<Vec> kQuadrantCenters = {Vec(0, 0), Vec(0.5, 0), Vec(0, 0.5), Vec(0.5, 0.5)};

}  // namespace

TEST_CASE("quadrant cover of the unit square is Covered at gamma = 1/2") {
    const ConvexBody sq = unit_square();
    const CoverVerdict v = verify_cover(sq, {0.5, kQuadrantCenters, {}}, 1e-3);
    CHECK(v.kind == VerdictKind::Covered);
    CHECK(v.cells_processed > 0);
}

TEST_CASE("area oracle: gamma = 0.49 cannot cover with 4 homothets") {
    // 4 * 0.49^2 = 0.9604 < 1, so some point is uncovered
    CHECK(4.0 * 0.49 * 0.49 < 1.0);
    const ConvexBody sq = unit_square();
    const CoverVerdict v = verify_cover(sq, {0.49, kQuadrantCenters, {}}, 1e-3);
    REQUIRE(v.kind == VerdictKind::Uncovered);
    REQUIRE(v.witness.has_value());
    CHECK(contains(sq, *v.witness, 1e-9));
    for (const auto& c : kQuadrantCenters) {
        // witness outside every homothet: some facet of c + 0.49*K violated
        bool outside = false;
        for (const auto& f : sq.facets())
            outside = outside || dot(f.normal, *v.witness - c) > 0.49 * f.offset + 1e-9;
        CHECK(outside);
    }
}

TEST_CASE("identity cover") {
    const ConvexBody sq = unit_square();
    const CoverVerdict v = verify_cover(sq, {1.0, {Vec(0, 0)}, {}});
    CHECK(v.kind == VerdictKind::Covered);
}

TEST_CASE("verify_cover errors: bad gamma, center dimension") {
    const ConvexBody sq = unit_square();
    CHECK_THROWS_AS(verify_cover(sq, {0.0, {Vec(0, 0)}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_cover(sq, {-0.2, {Vec(0, 0)}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_cover(sq, {0.5, {Vec(0, 0, 0)}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_cover(sq, {0.5, {}, {}}), std::invalid_argument);
}

TEST_CASE("degenerate 1D body: two halves cover a segment") {
    const ConvexBody seg = convex_hull({Vec(0, 0), Vec(1, 0)}, 2);
    const CoverVerdict v = verify_cover(seg, {0.5, {Vec(0, 0), Vec(0.5, 0)}, {}});
    CHECK(v.kind == VerdictKind::Covered);
    const auto mg = min_gamma_for_centers(seg, {Vec(0, 0), Vec(0.5, 0)});
    REQUIRE(mg.has_value());
    CHECK(*mg == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("min_gamma_for_centers: quadrant centers give 1/2") {
    const ConvexBody sq = unit_square();
    const auto g = min_gamma_for_centers(sq, kQuadrantCenters);
    REQUIRE(g.has_value());
    CHECK(*g == doctest::Approx(0.5).epsilon(1e-4));
    // the brackets: covered at g, not covered two tolerances below
    CHECK(verify_cover(sq, {*g, kQuadrantCenters, {}}).kind == VerdictKind::Covered);
    CHECK(verify_cover(sq, {*g - 2e-6, kQuadrantCenters, {}}).kind != VerdictKind::Covered);
}

TEST_CASE("min_gamma_for_centers: single centered homothet needs gamma = 1") {
    const ConvexBody sq = symmetric_square();  // origin interior
    const auto g = min_gamma_for_centers(sq, {Vec(0, 0)});
    REQUIRE(g.has_value());
    CHECK(*g == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("min_gamma_for_centers: no sub-unit cover reported distinctly") {
    const ConvexBody sq = unit_square();
    CHECK(!min_gamma_for_centers(sq, {Vec(10.0, 10.0)}).has_value());
}

TEST_CASE("gamma_of_point: gauge of the offset") {
    const ConvexBody sq = symmetric_square();
    CHECK(gamma_of_point(sq, Vec(0, 0), Vec(0.5, 0)) == doctest::Approx(0.5));
    CHECK(gamma_of_point(sq, Vec(0.3, -0.2), Vec(0.3, -0.2)) == doctest::Approx(0.0));
    // max-norm oracle on x - center
    CHECK(gamma_of_point(sq, Vec(1, 0), Vec(2, 1)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(gamma_of_point(unit_square(), Vec(0, 0), Vec(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("monotonicity: Covered persists as gamma grows (origin inside)") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> bump(0.0, 0.3);
    int covered_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        ConvexBody raw = trial % 2 == 0 ? random_polygon(rng, 4 + trial % 4)
                                        : random_polytope3(rng, 7);
        std::vector<Vec> moved;
        const Vec z = interior_point(raw);
        for (const auto& v : raw.vertices()) moved.push_back(v - z);
        const ConvexBody body = convex_hull(moved, raw.ambient_dim());

        // shrunk copies anchored at every vertex cover exactly when
        // gamma >= 1 - (min over x of the max barycentric weight)
        HomothetCover cover;
        cover.gamma =
            std::min(0.98, 1.0 - 1.0 / static_cast<double>(body.vertices().size()) + 0.08 +
                               0.2 * bump(rng));
        for (const auto& v : body.vertices())
            cover.centers.push_back((1.0 - cover.gamma) * v);
        const auto v1 = verify_cover(body, cover);
        if (v1.kind != VerdictKind::Covered) continue;
        ++covered_seen;
        HomothetCover grown = cover;
        grown.gamma = std::min(1.0, cover.gamma + bump(rng));
        CHECK(verify_cover(body, grown).kind == VerdictKind::Covered);
    }
    CHECK(covered_seen > 0);
}

TEST_CASE("witness validity on random uncovered instances") {
    std::mt19937_64 rng(111);
    int uncovered_seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const ConvexBody body = trial % 2 == 0 ? random_polygon(rng, 5) : random_polytope3(rng, 7);
        HomothetCover cover;
        cover.gamma = 0.35 + 0.3 * (trial % 3) / 3.0;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) cover.centers.push_back(random_point(rng, body.ambient_dim(), 0.7));
        const auto v = verify_cover(body, cover);
        if (v.kind != VerdictKind::Uncovered) continue;
        ++uncovered_seen;
        REQUIRE(v.witness.has_value());
        CHECK(contains(body, *v.witness, 1e-7));
        for (const auto& c : cover.centers) {
            bool outside = false;
            for (const auto& f : body.facets())
                outside = outside || dot(f.normal, *v.witness - c) > cover.gamma * f.offset + 1e-9;
            CHECK(outside);
        }
    }
    CHECK(uncovered_seen > 5);
}

TEST_CASE("translation law: centers shift by (1-gamma)t, verdicts invariant") {
    std::mt19937_64 rng(121);
    for (int trial = 0; trial < 12; ++trial) {
        const ConvexBody body = trial % 2 == 0 ? random_polygon(rng, 5) : random_polytope3(rng, 7);
        HomothetCover cover;
        cover.gamma = 0.5 + 0.4 * (trial % 4) / 4.0;
        for (int i = 0; i < 3; ++i)
            cover.centers.push_back((1.0 - cover.gamma) * random_inner_point(rng, body));
        const auto base = verify_cover(body, cover);

        const Vec t = random_point(rng, body.ambient_dim(), 2.0);
        std::vector<Vec> moved;
        for (const auto& v : body.vertices()) moved.push_back(v + t);
        const ConvexBody shifted = convex_hull(moved, body.ambient_dim());
        HomothetCover shifted_cover;
        shifted_cover.gamma = cover.gamma;
        for (const auto& c : cover.centers)
            shifted_cover.centers.push_back(c + (1.0 - cover.gamma) * t);
        const auto again = verify_cover(shifted, shifted_cover);
        CHECK(base.kind == again.kind);
        if (base.kind == VerdictKind::Uncovered) {
            // the witness moves with the translation, up to the verifier's freedom
            CHECK(contains(shifted, *again.witness, 1e-7));
        }
    }
}

TEST_CASE("serial reference and parallel verifier agree") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexBody body = trial % 2 == 0 ? random_polygon(rng, 4 + trial % 4)
                                               : random_polytope3(rng, 6 + trial % 4);
        HomothetCover cover;
        cover.gamma = 0.4 + 0.55 * (trial % 5) / 5.0;
        const int m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i)
            cover.centers.push_back((1.0 - cover.gamma) *
                                    random_point(rng, body.ambient_dim(), 1.0));
        const auto a = verify_cover(body, cover);
        const auto b = verify_cover_serial(body, cover);
        CHECK(a.kind == b.kind);
        if (a.kind == VerdictKind::Uncovered) {
            CHECK(contains(body, *a.witness, 1e-7));
            CHECK(contains(body, *b.witness, 1e-7));
        }
    }
}

TEST_CASE("gamma_upper: quadrant-quality cover of the square") {
    const auto r = gamma_upper(unit_square(), 4, 2000, 0);
    CHECK(r.gamma <= 0.5 + 1e-3);
    CHECK(verify_cover(unit_square(), r.cover).kind == VerdictKind::Covered);
}

TEST_CASE("gamma_upper: m = 1 yields the identity cover") {
    const auto r = gamma_upper(unit_square(), 1, 100, 0);
    CHECK(r.gamma == doctest::Approx(1.0));
    CHECK(verify_cover(unit_square(), r.cover).kind == VerdictKind::Covered);
}

TEST_CASE("gamma_upper: deterministic per seed") {
    const auto a = gamma_upper(symmetric_square(), 3, 600, 7);
    const auto b = gamma_upper(symmetric_square(), 3, 600, 7);
    CHECK(a.gamma == b.gamma);
    REQUIRE(a.cover.centers.size() == b.cover.centers.size());
    for (size_t i = 0; i < a.cover.centers.size(); ++i)
        CHECK(distance(a.cover.centers[i], b.cover.centers[i]) == 0.0);
}

TEST_CASE("gamma_upper: warm start never hurts when adding a homothet") {
    std::mt19937_64 rng(141);
    for (int trial = 0; trial < 4; ++trial) {
        const ConvexBody body = random_polygon(rng, 5);
        const auto base = gamma_upper(body, 3, 600, 50 + static_cast<std::uint64_t>(trial));
        const auto more =
            gamma_upper(body, 4, 600, 50 + static_cast<std::uint64_t>(trial), base.cover);
        CHECK(more.gamma <= base.gamma + 1e-6);
    }
}

TEST_CASE("degenerate body: point covers") {
    const ConvexBody pt = convex_hull({Vec(0.5, 0.25)}, 2);
    CHECK(verify_cover(pt, {0.5, {Vec(0.25, 0.125)}, {}}).kind == VerdictKind::Covered);
    CHECK(verify_cover(pt, {0.5, {Vec(0, 0)}, {}}).kind == VerdictKind::Uncovered);
}
