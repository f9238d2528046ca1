#include "homcov/report.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "homcov/compose.hpp"
#include "homcov/covering.hpp"
#include "homcov/illumination.hpp"

namespace homcov {
namespace {

using Clock = std::chrono::steady_clock;

// ---- fixture bodies -------------------------------------------------------

ConvexBody regular_simplex3() {
    return convex_hull({Vec(1, 1, 1), Vec(1, -1, -1), Vec(-1, 1, -1), Vec(-1, -1, 1)}, 3);
}

ConvexBody centered_cube() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m)
        pts.push_back(Vec(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1));
    return convex_hull(pts, 3);
}

// ---- random generators (deterministic per rng state) ----------------------

Vec random_point(std::mt19937_64& rng, int dim, double radius) {
    std::uniform_real_distribution<double> d(-radius, radius);
    Vec p = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) p[i] = d(rng);
    return p;
}

ConvexBody random_polygon(std::mt19937_64& rng, int nv) {
    std::uniform_real_distribution<double> ang_jit(0.0, 1.0), rad(0.5, 1.4);
    std::vector<Vec> pts;
    for (int i = 0; i < nv; ++i) {
        const double a = 2.0 * M_PI * (i + 0.8 * ang_jit(rng)) / nv;
        const double r = rad(rng);
        pts.push_back(Vec(r * std::cos(a), r * std::sin(a)));
    }
    return convex_hull(pts, 2);
}

ConvexBody random_polytope3(std::mt19937_64& rng, int npts) {
    std::vector<Vec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(random_point(rng, 3, 1.0));
    ConvexBody b = convex_hull(pts, 3);
    while (b.affine_dim() < 3) {  // regenerate degenerate draws
        pts.push_back(random_point(rng, 3, 1.0));
        b = convex_hull(pts, 3);
    }
    return b;
}

// random planar polygon embedded in 3-space
ConvexBody random_embedded_polygon(std::mt19937_64& rng, int nv) {
    ConvexBody flat = random_polygon(rng, nv);
    const Vec axis = normalized(random_point(rng, 3, 1.0) + Vec(0.1, 0.2, 1.0));
    Vec e1 = cross(axis, std::fabs(axis[0]) < 0.9 ? Vec(1, 0, 0) : Vec(0, 1, 0));
    e1 = e1 / norm(e1);
    const Vec e2 = cross(axis, e1);
    const Vec off = random_point(rng, 3, 0.8);
    std::vector<Vec> pts;
    for (const auto& v : flat.vertices()) pts.push_back(off + v[0] * e1 + v[1] * e2);
    return convex_hull(pts, 3);
}

// Translate a part and its cover by t; centers move by (1-gamma) t so the
// cover stays valid for the moved body.
HullDecomposition::Part translate_part(const HullDecomposition::Part& part, const Vec& t) {
    std::vector<Vec> pts;
    for (const auto& v : part.body.vertices()) pts.push_back(v + t);
    HullDecomposition::Part out;
    out.body = convex_hull(pts, part.body.ambient_dim());
    out.cover.gamma = part.cover.gamma;
    for (const auto& y : part.cover.centers)
        out.cover.centers.push_back(y + (1.0 - part.cover.gamma) * t);
    return out;
}

// Recenter the decomposition so the hull's vertex average is the origin;
// verifying at ratio + tol is then meaningful (homothets nest).
HullDecomposition recenter(const HullDecomposition& decomp) {
    const Vec z = interior_point(decomposition_hull(decomp));
    HullDecomposition out;
    out.ambient_dim = decomp.ambient_dim;
    for (const auto& part : decomp.parts) out.parts.push_back(translate_part(part, -z));
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

// ---- criteria --------------------------------------------------------------

CriterionResult crit_tetra_composition() {
    CriterionResult res{"1 tetrahedron composition gamma=3/4", false, "", 0.0};
    const ConvexBody simplex = regular_simplex3();
    const HullDecomposition decomp = simplex_segment_decomposition(simplex);
    const HomothetCover cover = compose_cover(decomp);
    if (std::fabs(cover.gamma - 0.75) > 1e-12) {
        res.detail = "composed gamma " + fmt(cover.gamma) + " != 0.75";
        return res;
    }
    if (cover.centers.size() != 4) {
        res.detail = "expected 4 centers, got " + std::to_string(cover.centers.size());
        return res;
    }
    HomothetCover bumped = cover;
    bumped.gamma = 0.75 + 1e-6;
    const CoverVerdict v = verify_cover(simplex, bumped, 1e-3);
    if (v.kind != VerdictKind::Covered) {
        res.detail = "verify at 0.75+1e-6 not Covered";
        return res;
    }
    res.pass = true;
    res.detail = "gamma=0.75 exact, Covered at +1e-6 (" + std::to_string(v.cells_processed) +
                 " cells)";
    return res;
}

CriterionResult crit_simplex_lower_bound(std::uint64_t seed) {
    CriterionResult res{"2 simplex optimizer never beats 3/4", false, "", 0.0};
    const ConvexBody simplex = regular_simplex3();
    const double target = 0.75 - 1e-3;
    for (int s = 0; s < 20; ++s) {
        const auto r = gamma_upper(simplex, 4, 1200, seed + static_cast<std::uint64_t>(s));
        if (r.gamma <= target) {
            res.detail = "seed " + std::to_string(s) + " certified gamma " + fmt(r.gamma);
            return res;
        }
        HomothetCover attempt = r.cover;
        attempt.gamma = target;
        const CoverVerdict v = verify_cover(simplex, attempt);
        if (v.kind == VerdictKind::Covered) {
            res.detail = "seed " + std::to_string(s) + " Covered at 0.75-1e-3";
            return res;
        }
    }
    res.pass = true;
    res.detail = "20 seeds, all attempts at 0.749 rejected";
    return res;
}

CriterionResult crit_decomposition_gap() {
    CriterionResult res{"3 decomposition gap 5/6 vs 3/4", false, "", 0.0};
    const ConvexBody simplex = regular_simplex3();
    const auto& v = simplex.vertices();

    // triangle cover at exactly 2/3 by composing its three vertex parts
    HullDecomposition tri_parts;
    tri_parts.ambient_dim = 3;
    for (int i = 1; i < 4; ++i) {
        HullDecomposition::Part part;
        part.body = convex_hull({v[static_cast<size_t>(i)]}, 3);
        part.cover = HomothetCover{0.0, {v[static_cast<size_t>(i)]}, {}};
        tri_parts.parts.push_back(std::move(part));
    }
    const HomothetCover tri_cover = compose_cover(tri_parts);
    if (std::fabs(tri_cover.gamma - 2.0 / 3.0) > 1e-12) {
        res.detail = "triangle cover gamma " + fmt(tri_cover.gamma) + " != 2/3";
        return res;
    }

    HullDecomposition point_tri;
    point_tri.ambient_dim = 3;
    {
        HullDecomposition::Part pt;
        pt.body = convex_hull({v[0]}, 3);
        pt.cover = HomothetCover{0.0, {v[0]}, {}};
        point_tri.parts.push_back(std::move(pt));
        HullDecomposition::Part tri;
        tri.body = convex_hull({v[1], v[2], v[3]}, 3);
        tri.cover = tri_cover;
        point_tri.parts.push_back(std::move(tri));
    }
    const HomothetCover cover_a = compose_cover(point_tri);
    if (std::fabs(cover_a.gamma - 5.0 / 6.0) > 1e-9) {
        res.detail = "point+triangle gamma " + fmt(cover_a.gamma) + " != 5/6";
        return res;
    }

    const HomothetCover cover_b = compose_cover(simplex_segment_decomposition(simplex));
    if (std::fabs(cover_b.gamma - 0.75) > 1e-9) {
        res.detail = "segment+segment gamma " + fmt(cover_b.gamma) + " != 3/4";
        return res;
    }

    for (const auto* cov : {&cover_a, &cover_b}) {
        HomothetCover bumped = *cov;
        bumped.gamma += 1e-6;
        if (verify_cover(simplex, bumped).kind != VerdictKind::Covered) {
            res.detail = "a composed cover failed to verify";
            return res;
        }
    }
    res.pass = true;
    res.detail = "5/6 and 3/4 exact; both verify";
    return res;
}

CriterionResult crit_composition_suite(std::uint64_t seed) {
    CriterionResult res{"4 theorem 2.1 property suite (200 random)", false, "", 0.0};
    std::mt19937_64 rng(seed ^ 0xc0ffee);
    std::uniform_int_distribution<int> pick_nv(3, 6);
    for (int inst = 0; inst < 200; ++inst) {
        const int n = inst % 2 == 0 ? 2 : 3;
        const int p = 1 + inst % 5;
        HullDecomposition decomp;
        decomp.ambient_dim = n;
        for (int i = 0; i < p; ++i) {
            HullDecomposition::Part part;
            const bool segment = (n == 3) ? (rng() % 2 == 0) : (rng() % 3 == 0);
            if (segment) {
                Vec a = random_point(rng, n, 1.2), b = random_point(rng, n, 1.2);
                while (distance(a, b) < 0.1) b = random_point(rng, n, 1.2);
                part.body = convex_hull({a, b}, n);
                part.cover = segment_cover(part.body, 2);
            } else {
                part.body = n == 2 ? random_polygon(rng, pick_nv(rng))
                                   : random_embedded_polygon(rng, pick_nv(rng));
                const auto up = gamma_upper(part.body, 3, 150, rng());
                part.cover = up.cover;
            }
            decomp.parts.push_back(std::move(part));
        }
        decomp = recenter(decomp);
        const HomothetCover cover = compose_cover(decomp);
        const double want = compose_ratio(decomp);
        if (std::fabs(cover.gamma - want) > 1e-12) {
            res.detail = "instance " + std::to_string(inst) + ": ratio law violated";
            return res;
        }
        std::size_t m = 0;
        for (const auto& part : decomp.parts) m += part.cover.centers.size();
        if (cover.centers.size() != m) {
            res.detail = "instance " + std::to_string(inst) + ": center count law violated";
            return res;
        }
        HomothetCover bumped = cover;
        bumped.gamma += 1e-6;
        const auto v = verify_cover(decomposition_hull(decomp), bumped);
        if (v.kind != VerdictKind::Covered) {
            res.detail = "instance " + std::to_string(inst) + ": composed cover not Covered";
            return res;
        }
    }
    res.pass = true;
    res.detail = "200 instances: ratio law to 1e-12, all covers verify";
    return res;
}

CriterionResult crit_segment_families(std::uint64_t seed) {
    CriterionResult res{"5 corollary 2.3 segment families", false, "", 0.0};
    std::mt19937_64 rng(seed ^ 0x5e95e9);
    for (int p = 1; p <= 3; ++p) {
        for (int rep = 0; rep < 5; ++rep) {
            HullDecomposition decomp;
            decomp.ambient_dim = 3;
            for (int i = 0; i < p; ++i) {
                Vec a = random_point(rng, 3, 1.0), b = random_point(rng, 3, 1.0);
                while (distance(a, b) < 0.1) b = random_point(rng, 3, 1.0);
                HullDecomposition::Part part;
                part.body = convex_hull({a, b}, 3);
                part.cover = segment_cover(part.body, 2);
                decomp.parts.push_back(std::move(part));
            }
            decomp = recenter(decomp);
            const HomothetCover cover = compose_cover(decomp);
            const double want = (2.0 * p - 1.0) / (2.0 * p);
            if (cover.centers.size() != static_cast<size_t>(2 * p) ||
                std::fabs(cover.gamma - want) > 1e-12) {
                res.detail = "p=" + std::to_string(p) + ": wrong ratio or count";
                return res;
            }
            HomothetCover bumped = cover;
            bumped.gamma += 1e-6;
            if (verify_cover(decomposition_hull(decomp), bumped).kind != VerdictKind::Covered) {
                res.detail = "p=" + std::to_string(p) + ": cover not Covered";
                return res;
            }
        }
    }
    res.pass = true;
    res.detail = "p in {1,2,3}: 2p centers at (2p-1)/2p, all verify";
    return res;
}

CriterionResult crit_lemma_suite(std::uint64_t seed) {
    CriterionResult res{"6 lemma 3.1 property suite (500 random)", false, "", 0.0};
    std::mt19937_64 rng(seed ^ 0xab1e);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int merged = 0, antipodal_hits = 0;

    auto boundary_point = [&](const ConvexBody& body) {
        const auto& rings = body.facet_vertices();
        const auto& ring = rings[rng() % rings.size()];
        std::vector<double> w(ring.size());
        double tot = 0.0;
        for (auto& wi : w) tot += (wi = 0.05 + unif(rng));
        Vec p = Vec::zero(body.ambient_dim());
        for (size_t i = 0; i < ring.size(); ++i)
            p += (w[i] / tot) * body.vertices()[static_cast<size_t>(ring[i])];
        return p;
    };

    for (int inst = 0; inst < 500; ++inst) {
        const ConvexBody body =
            inst % 2 == 0 ? random_polygon(rng, 3 + static_cast<int>(rng() % 4))
                          : random_polytope3(rng, 6 + static_cast<int>(rng() % 6));
        Vec x, y;
        if (rng() % 3 == 0) {  // vertex pairs exercise the antipodal branch
            x = body.vertices()[rng() % body.vertices().size()];
            y = body.vertices()[rng() % body.vertices().size()];
        } else {
            x = boundary_point(body);
            y = boundary_point(body);
        }
        std::vector<Vec> X = body.vertices();
        X.push_back(x);
        X.push_back(y);
        const bool anti = distance(x, y) > 1e-12 && antipodal(X, x, y);
        if (anti) {
            ++antipodal_hits;
            try {
                (void)common_illumination_direction(body, x, y);
                res.detail = "instance " + std::to_string(inst) +
                             ": antipodal pair did not raise the precondition error";
                return res;
            } catch (const std::invalid_argument&) {
            }
        } else {
            IlluminationWitness w{};
            try {
                w = common_illumination_direction(body, x, y);
            } catch (const std::exception& e) {
                res.detail = "instance " + std::to_string(inst) + ": construction failed: " + e.what();
                return res;
            }
            if (!illuminates(body, x, w.direction) || !illuminates(body, y, w.direction)) {
                res.detail = "instance " + std::to_string(inst) + ": direction fails a point";
                return res;
            }
            ++merged;
        }
    }

    // the worked example: unit square, x=(0.5,0), y=(1,0.5) -> d ~ (-1,1)
    const ConvexBody square = convex_hull({Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)}, 2);
    const auto w = common_illumination_direction(square, Vec(0.5, 0.0), Vec(1.0, 0.5));
    const Vec dhat = normalized(w.direction);
    const Vec want = normalized(Vec(-1.0, 1.0));
    if (distance(dhat, want) > 1e-9) {
        res.detail = "square example direction " + dhat.str() + " not prop to (-1,1)";
        return res;
    }
    if (merged == 0 || antipodal_hits == 0) {
        res.detail = "degenerate sampling: merged=" + std::to_string(merged) +
                     " antipodal=" + std::to_string(antipodal_hits);
        return res;
    }
    res.pass = true;
    res.detail = std::to_string(merged) + " merged pairs, " + std::to_string(antipodal_hits) +
                 " antipodal rejections, square example d prop to (-1,1)";
    return res;
}

CriterionResult crit_bound_table() {
    CriterionResult res{"7 theorem 3.2 bound table", false, "", 0.0};
    const ConvexBody point = convex_hull({Vec(0, 0, 2)}, 3);
    const ConvexBody square =
        convex_hull({Vec(-1, -1, 0), Vec(1, -1, 0), Vec(1, 1, 0), Vec(-1, 1, 0)}, 3);
    const ConvexBody seg1 = convex_hull({Vec(-1, 0, 1), Vec(1, 0, 1)}, 3);
    const ConvexBody seg2 = convex_hull({Vec(0, -1, -1), Vec(0, 1, -1)}, 3);

    struct Want {
        const ConvexBody *L, *M;
        CaseLabel label;
        std::vector<std::pair<int, double>> pairs;
    };
    const double b1 = 2.0 / 3.0;
    const double b2 = 9.0 / 13.0;
    const double b3 = (1.0 + std::pow(std::sin(3.0 * M_PI / 10.0), 2)) / 2.0;
    const double b4 = (1.0 + std::sqrt(2.0) / 2.0) / 2.0;
    const std::vector<Want> wants = {
        {&point, &square, CaseLabel::Case1, {{8, b1}, {5, b4}}},
        {&seg1, &seg2, CaseLabel::Case2, {{5, b2}}},
        {&seg1, &square, CaseLabel::Case3, {{8, b3}, {6, b4}}},
        {&square, &square, CaseLabel::Case4, {{8, b4}}},
    };
    const std::vector<std::vector<double>> decimals = {
        {0.6667, 0.8536}, {0.6923}, {0.8273, 0.8536}, {0.8536}};

    for (size_t c = 0; c < wants.size(); ++c) {
        const auto rep = theorem32_bound(*wants[c].L, *wants[c].M);
        if (rep.case_label != wants[c].label) {
            res.detail = std::string("wrong case label for ") + case_name(wants[c].label);
            return res;
        }
        std::vector<std::pair<int, double>> got = {{rep.m, rep.gamma_bound}};
        for (const auto& alt : rep.alternates) got.push_back({alt.m, alt.bound});
        if (got.size() != wants[c].pairs.size()) {
            res.detail = std::string(case_name(wants[c].label)) + ": wrong number of bounds";
            return res;
        }
        for (size_t i = 0; i < got.size(); ++i) {
            if (got[i].first != wants[c].pairs[i].first ||
                std::fabs(got[i].second - wants[c].pairs[i].second) > 1e-12 ||
                std::fabs(got[i].second - decimals[c][i]) > 5e-5) {
                res.detail = std::string(case_name(wants[c].label)) + ": bound mismatch";
                return res;
            }
        }
    }
    res.pass = true;
    res.detail = "2/3, 9/13, 0.8273, 0.8536 reproduced to 4 decimals";
    return res;
}

CriterionResult crit_parallelepiped_endpoints() {
    CriterionResult res{"8 parallelepiped equality endpoints", false, "", 0.0};
    const ConvexBody cube = centered_cube();
    const auto ds = illumination_number_upper(cube);
    if (ds.directions.size() != 8 || !ds.exact) {
        res.detail = "cube illumination " + std::to_string(ds.directions.size()) +
                     (ds.exact ? " (exact)" : " (greedy)");
        return res;
    }
    const auto anti = pairwise_antipodal(cube.vertices());
    for (size_t i = 0; i < anti.size(); ++i)
        for (size_t j = 0; j < anti.size(); ++j)
            if ((i == j && anti[i][j]) || (i != j && !anti[i][j])) {
                res.detail = "cube antipodality matrix wrong at " + std::to_string(i) + "," +
                             std::to_string(j);
                return res;
            }
    std::vector<Vec> sheared_pts;
    const Vec e1(1, 0, 0), e2(0.3, 1, 0), e3(0, 0.2, 1), z0(0.5, -0.25, 0.125);
    for (int m = 0; m < 8; ++m) {
        Vec p = z0;
        if (m & 1) p += e1;
        if (m & 2) p += e2;
        if (m & 4) p += e3;
        sheared_pts.push_back(p);
    }
    const ConvexBody sheared = convex_hull(sheared_pts, 3);
    const ConvexBody tetra = regular_simplex3();
    if (!parallelepiped_check(cube) || !parallelepiped_check(sheared) ||
        parallelepiped_check(tetra)) {
        res.detail = "parallelepiped_check misclassified a body";
        return res;
    }
    const auto tetra_ds = illumination_number_upper(tetra);
    const ConvexBody triangle = convex_hull({Vec(0, 0), Vec(1, 0), Vec(0.2, 0.9)}, 2);
    const auto tri_ds = illumination_number_upper(triangle);
    if (tetra_ds.directions.size() != 4 || tri_ds.directions.size() != 3) {
        res.detail = "simplex counts: tetra " + std::to_string(tetra_ds.directions.size()) +
                     ", triangle " + std::to_string(tri_ds.directions.size());
        return res;
    }
    res.pass = true;
    res.detail = "cube=8 (exact, pairwise antipodal), tetra=4, triangle=3, checks agree";
    return res;
}

CriterionResult crit_illumination_covering_crosscheck(std::uint64_t seed) {
    CriterionResult res{"9 gamma/illumination cross-check", false, "", 0.0};
    const auto cube_up = gamma_upper(centered_cube(), 8, 1500, seed);
    const auto simp_up = gamma_upper(regular_simplex3(), 4, 1500, seed);
    if (cube_up.gamma >= 1.0 || simp_up.gamma >= 1.0) {
        res.detail = "cube gamma " + fmt(cube_up.gamma) + ", simplex gamma " + fmt(simp_up.gamma);
        return res;
    }
    res.pass = true;
    res.detail = "cube m=8: gamma " + fmt(cube_up.gamma) + " < 1; simplex m=4: gamma " +
                 fmt(simp_up.gamma) + " < 1";
    return res;
}

CriterionResult crit_soundness_fuzz(std::uint64_t seed) {
    CriterionResult res{"10 verifier soundness fuzz (1000 random)", false, "", 0.0};
    std::mt19937_64 rng(seed ^ 0xf500d);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double tau = Tolerances::global().geometric;
    int covered = 0, uncovered = 0, unknown = 0;

    // facet test of x against the homothet c + gamma*K, via K's ambient H-rep
    auto homothet_violation = [](const ConvexBody& body, const Vec& c, double gamma,
                                 const Vec& x) {
        double worst = -1e300;
        for (const auto& f : body.facets())
            worst = std::max(worst, dot(f.normal, x - c) - gamma * f.offset);
        return worst;  // <= 0 iff inside
    };

    for (int inst = 0; inst < 1000; ++inst) {
        const ConvexBody body =
            inst % 2 == 0 ? random_polygon(rng, 3 + static_cast<int>(rng() % 5))
                          : random_polytope3(rng, 5 + static_cast<int>(rng() % 5));
        HomothetCover cover;
        if (inst % 4 < 2) {  // constructed: centers shrunk toward random interior anchors
            const int m = 2 + static_cast<int>(rng() % 4);
            cover.gamma = 0.55 + 0.4 * unif(rng);
            for (int i = 0; i < m; ++i) {
                std::vector<double> w(body.vertices().size());
                double tot = 0.0;
                for (auto& wi : w) tot += (wi = 0.05 + unif(rng));
                Vec anchor = Vec::zero(body.ambient_dim());
                for (size_t k = 0; k < w.size(); ++k)
                    anchor += (w[k] / tot) * body.vertices()[k];
                cover.centers.push_back((1.0 - cover.gamma) * anchor);
            }
        } else {  // adversarial: random gamma and loose centers
            const int m = 1 + static_cast<int>(rng() % 5);
            cover.gamma = 0.3 + 0.7 * unif(rng);
            for (int i = 0; i < m; ++i)
                cover.centers.push_back(random_point(rng, body.ambient_dim(), 0.8));
        }

        const CoverVerdict v = verify_cover(body, cover);
        if (v.kind == VerdictKind::Covered) {
            ++covered;
            // rejection-sample 1e4 points of K; all must land in a homothet
            Vec lo = body.vertices().front(), hi = lo;
            for (const auto& p : body.vertices())
                for (int d = 0; d < body.ambient_dim(); ++d) {
                    lo[d] = std::min(lo[d], p[d]);
                    hi[d] = std::max(hi[d], p[d]);
                }
            int accepted = 0;
            long draws = 0;
            while (accepted < 10000 && draws < 2000000) {
                ++draws;
                Vec x = Vec::zero(body.ambient_dim());
                for (int d = 0; d < body.ambient_dim(); ++d)
                    x[d] = lo[d] + (hi[d] - lo[d]) * unif(rng);
                if (!contains(body, x, 0.0)) continue;
                ++accepted;
                double best = 1e300;
                for (const auto& c : cover.centers)
                    best = std::min(best, homothet_violation(body, c, cover.gamma, x));
                if (best > 1e-7) {
                    res.detail = "instance " + std::to_string(inst) +
                                 ": Covered but sampled point escapes by " + fmt(best);
                    return res;
                }
            }
        } else if (v.kind == VerdictKind::Uncovered) {
            ++uncovered;
            const Vec w = *v.witness;
            if (!contains(body, w, tau * 100.0)) {
                res.detail = "instance " + std::to_string(inst) + ": witness outside the body";
                return res;
            }
            for (const auto& c : cover.centers)
                if (homothet_violation(body, c, cover.gamma, w) <= tau) {
                    res.detail = "instance " + std::to_string(inst) +
                                 ": witness inside a homothet";
                    return res;
                }
        } else {
            ++unknown;
        }
    }
    if (covered == 0 || uncovered == 0) {
        res.detail = "degenerate mix: covered=" + std::to_string(covered) +
                     " uncovered=" + std::to_string(uncovered);
        return res;
    }
    res.pass = true;
    res.detail = std::to_string(covered) + " covered / " + std::to_string(uncovered) +
                 " uncovered / " + std::to_string(unknown) + " unknown; all certificates valid";
    return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* progress) {
    std::vector<std::function<CriterionResult()>> criteria = {
        [&] { return crit_tetra_composition(); },
        [&] { return crit_simplex_lower_bound(seed); },
        [&] { return crit_decomposition_gap(); },
        [&] { return crit_composition_suite(seed); },
        [&] { return crit_segment_families(seed); },
        [&] { return crit_lemma_suite(seed); },
        [&] { return crit_bound_table(); },
        [&] { return crit_parallelepiped_endpoints(); },
        [&] { return crit_illumination_covering_crosscheck(seed); },
        [&] { return crit_soundness_fuzz(seed); },
    };
    std::vector<CriterionResult> out;
    for (auto& c : criteria) {
        const auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = c();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (progress)
            (*progress) << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << " ("
                        << r.seconds << " s)" << std::endl;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace homcov
