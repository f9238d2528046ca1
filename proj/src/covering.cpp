#include "homcov/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "homcov/lp.hpp"

namespace homcov {
namespace {

constexpr std::uint64_t kMaxCells = 40'000'000;

// The verifier works in the body's affine hull, in coordinates centered at
// the vertex average z. There the intrinsic H-rep has strictly positive
// offsets, and membership of x in center + gamma*K reduces to a gauge ratio.
struct HomothetSystem {
    int k = 0;                      // intrinsic dimension
    std::vector<Vec> normals;       // unit facet normals about z
    std::vector<double> offsets;    // > 0
    double min_offset = 0.0;
    std::vector<Vec> centers;       // z-frame homothet centers (off-hull ones dropped)
    double gamma = 0.0;
    double tau = 0.0;               // ratio tolerance
    double wit_tau = 0.0;           // witness margin on ratios

    const ConvexBody* body = nullptr;
    Vec z_coords;                   // z in body-frame coordinates
    Vec z_ambient;

    double center_ratio(const Vec& x, size_t ci) const {
        const Vec& c = centers[ci];
        double r = 0.0;
        for (size_t f = 0; f < normals.size(); ++f)
            r = std::max(r, (dot(normals[f], x) - dot(normals[f], c)) / offsets[f]);
        return r;
    }
    double best_ratio(const Vec& x) const {
        double r = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < centers.size(); ++i) r = std::min(r, center_ratio(x, i));
        return r;
    }
    Vec to_ambient(const Vec& zframe) const {
        return body->frame().from_coords(zframe + z_coords);
    }
};

HomothetSystem build_system(const ConvexBody& body, const HomothetCover& cover) {
    const double tau = Tolerances::global().geometric;
    if (cover.centers.empty()) throw std::invalid_argument("verify_cover: no centers");
    for (const auto& c : cover.centers) {
        if (c.dim() != body.ambient_dim())
            throw std::invalid_argument("verify_cover: center dimension mismatch");
        if (!c.finite()) throw std::invalid_argument("verify_cover: non-finite center");
    }
    if (cover.gamma <= 0.0 && body.affine_dim() > 0)
        throw std::invalid_argument("verify_cover: gamma must be positive");

    HomothetSystem sys;
    sys.body = &body;
    sys.k = body.affine_dim();
    sys.gamma = cover.gamma;
    sys.tau = tau;
    sys.z_ambient = interior_point(body);
    sys.z_coords = body.frame().to_coords(sys.z_ambient);

    sys.min_offset = std::numeric_limits<double>::infinity();
    for (const auto& f : body.intrinsic_facets()) {
        const double off = f.offset - dot(f.normal, sys.z_coords);
        sys.normals.push_back(f.normal);
        sys.offsets.push_back(off);
        sys.min_offset = std::min(sys.min_offset, off);
    }
    sys.wit_tau = 10.0 * tau * std::max(1.0, 1.0 / sys.min_offset);

    const auto& frame = body.frame();
    const double g = cover.gamma;
    for (const auto& x : cover.centers) {
        // homothet flat  x + g*(aff K)  misses aff K when offset component remains
        Vec d = x - (1.0 - g) * frame.anchor;
        Vec res = d;
        for (const auto& b : frame.basis) res -= dot(b, res) * b;
        if (body.full_dimensional() || norm(res) <= tau * (1.0 + norm(x))) {
            Vec c = Vec::zero(std::max(sys.k, 1));
            for (int i = 0; i < sys.k; ++i)
                c[i] = dot(frame.basis[static_cast<size_t>(i)], d);
            sys.centers.push_back(c - (1.0 - g) * sys.z_coords);
        }
    }
    return sys;
}

std::vector<SubdivisionCell> initial_cells(const HomothetSystem& sys) {
    const ConvexBody& body = *sys.body;
    std::vector<Vec> verts;
    for (const auto& v : body.intrinsic_vertices()) verts.push_back(v - sys.z_coords);
    const int k = sys.k;
    std::vector<SubdivisionCell> cells;
    if (static_cast<int>(verts.size()) == k + 1) {
        cells.push_back(SubdivisionCell::of(verts));
        return cells;
    }
    const Vec origin = Vec::zero(k);  // z itself
    if (k == 2) {
        const int m = static_cast<int>(verts.size());
        for (int i = 0; i < m; ++i)
            cells.push_back(SubdivisionCell::of(
                {origin, verts[static_cast<size_t>(i)], verts[static_cast<size_t>((i + 1) % m)]}));
    } else {
        for (const auto& ring : body.facet_vertices()) {
            for (size_t j = 1; j + 1 < ring.size(); ++j) {
                cells.push_back(SubdivisionCell::of({origin,
                                                     verts[static_cast<size_t>(ring[0])],
                                                     verts[static_cast<size_t>(ring[j])],
                                                     verts[static_cast<size_t>(ring[j + 1])]}));
            }
        }
    }
    return cells;
}

// ---- exact cell-minus-homothets clipping -------------------------------

using Piece = std::vector<Vec>;

Piece clip_piece(const Piece& pts, const Vec& n, double b, bool keep_le) {
    constexpr double kTol = 1e-13;
    std::vector<double> s(pts.size());
    bool any_in = false, all_in = true;
    for (size_t i = 0; i < pts.size(); ++i) {
        s[i] = dot(n, pts[i]) - b;
        if (!keep_le) s[i] = -s[i];
        if (s[i] <= kTol)
            any_in = true;
        else
            all_in = false;
    }
    if (all_in) return pts;
    if (!any_in) return {};
    Piece out;
    for (size_t i = 0; i < pts.size(); ++i)
        if (s[i] <= kTol) out.push_back(pts[i]);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if ((s[i] > kTol && s[j] < -kTol) || (s[i] < -kTol && s[j] > kTol)) {
                const double t = s[i] / (s[i] - s[j]);
                out.push_back(pts[i] + t * (pts[j] - pts[i]));
            }
        }
    return out;
}

Piece prune_piece(const Piece& pts, int k) {
    if (static_cast<int>(pts.size()) <= k + 1) return pts;
    try {
        return convex_hull(pts, k).vertices();
    } catch (const std::exception&) {
        return pts;  // degenerate slivers keep their raw points
    }
}

// Residual of the cell after removing the given homothets; convex pieces as
// point clouds. Sequential complement decomposition per homothet.
std::vector<Piece> residual_pieces(const SubdivisionCell& cell, const HomothetSystem& sys,
                                   const std::vector<size_t>& idx) {
    std::vector<Piece> pieces = {cell.verts};
    for (size_t ci : idx) {
        const Vec& c = sys.centers[ci];
        std::vector<Piece> next;
        for (auto& piece : pieces) {
            Piece rem = std::move(piece);
            for (size_t f = 0; f < sys.normals.size() && !rem.empty(); ++f) {
                // subtract the homothet inflated by the ratio tolerance, the
                // same slack the vertex containment test grants; exact-tiling
                // seams then leave no zero-measure residue
                const double b = (sys.gamma + sys.tau) * sys.offsets[f] + dot(sys.normals[f], c);
                Piece outside = clip_piece(rem, sys.normals[f], b, /*keep_le=*/false);
                if (outside.size() > static_cast<size_t>(sys.k) + 1)
                    outside = prune_piece(outside, sys.k);
                if (!outside.empty()) next.push_back(std::move(outside));
                rem = clip_piece(rem, sys.normals[f], b, /*keep_le=*/true);
                if (rem.size() > 24) rem = prune_piece(rem, sys.k);
            }
        }
        pieces = std::move(next);
        if (pieces.empty()) break;
    }
    return pieces;
}

// ---- per-cell classification -------------------------------------------

enum class Outcome { Covered, Witness, Split, Sliver };

struct CellResult {
    Outcome outcome = Outcome::Covered;
    Vec witness;
    SubdivisionCell child_a, child_b;
};

CellResult classify(const SubdivisionCell& cell, const HomothetSystem& sys, double eps) {
    CellResult res;
    const size_t nc = sys.centers.size();
    const size_t nv = cell.verts.size();

    std::vector<double> vmax(nc, 0.0), vmin(nc, std::numeric_limits<double>::infinity());
    for (size_t ci = 0; ci < nc; ++ci) {
        for (size_t vi = 0; vi < nv; ++vi) {
            const double r = sys.center_ratio(cell.verts[vi], ci);
            vmax[ci] = std::max(vmax[ci], r);
            vmin[ci] = std::min(vmin[ci], r);
        }
        if (vmax[ci] <= sys.gamma + sys.tau) {
            res.outcome = Outcome::Covered;  // all vertices in one homothet
            return res;
        }
    }

    Vec centroid = Vec::zero(std::max(sys.k, 1));
    for (const auto& v : cell.verts) centroid += v;
    centroid *= 1.0 / static_cast<double>(nv);
    if (sys.best_ratio(centroid) > sys.gamma + sys.wit_tau) {
        res.outcome = Outcome::Witness;
        res.witness = centroid;
        return res;
    }

    std::vector<size_t> relevant;
    const double reach = sys.gamma + cell.diameter / sys.min_offset;
    for (size_t ci = 0; ci < nc; ++ci)
        if (vmin[ci] <= reach) relevant.push_back(ci);

    if (relevant.size() <= 2 || cell.diameter < eps) {
        const auto pieces = residual_pieces(cell, sys, relevant);
        bool sliver = false;
        for (const auto& piece : pieces) {
            Vec w = Vec::zero(std::max(sys.k, 1));
            for (const auto& p : piece) w += p;
            w *= 1.0 / static_cast<double>(piece.size());
            if (sys.best_ratio(w) > sys.gamma + sys.wit_tau) {
                res.outcome = Outcome::Witness;
                res.witness = w;
                return res;
            }
            sliver = true;
        }
        res.outcome = sliver ? Outcome::Sliver : Outcome::Covered;
        return res;
    }

    auto children = subdivide(cell);
    res.outcome = Outcome::Split;
    res.child_a = std::move(children[0]);
    res.child_b = std::move(children[1]);
    return res;
}

CoverVerdict finish_uncovered(const HomothetSystem& sys, const Vec& zframe_witness,
                              double resolution, std::uint64_t cells) {
    CoverVerdict v;
    v.kind = VerdictKind::Uncovered;
    v.witness = sys.to_ambient(zframe_witness);
    v.resolution = resolution;
    v.cells_processed = cells;
    return v;
}

CoverVerdict verify_point_body(const ConvexBody& body, const HomothetCover& cover) {
    const double tau = Tolerances::global().geometric;
    const Vec& v = body.vertices().front();
    CoverVerdict verdict;
    verdict.cells_processed = 1;
    for (const auto& x : cover.centers) {
        if (distance(x + cover.gamma * v, v) <= tau * (1.0 + norm(v))) {
            verdict.kind = VerdictKind::Covered;
            return verdict;
        }
    }
    verdict.kind = VerdictKind::Uncovered;
    verdict.witness = v;
    return verdict;
}

CoverVerdict run_verify(const ConvexBody& body, const HomothetCover& cover, double eps,
                        bool parallel) {
    if (body.affine_dim() == 0) return verify_point_body(body, cover);
    HomothetSystem sys = build_system(body, cover);
    if (eps <= 0.0) eps = 1e-4 * body.diameter();

    CoverVerdict verdict;
    verdict.resolution = std::numeric_limits<double>::infinity();

    if (sys.centers.empty()) {
        verdict.kind = VerdictKind::Uncovered;
        verdict.witness = body.vertices().front();
        verdict.cells_processed = 1;
        verdict.resolution = body.diameter();
        return verdict;
    }

    std::vector<SubdivisionCell> level = initial_cells(sys);
    std::uint64_t processed = 0;
    std::uint64_t slivers = 0;
    double min_diam = std::numeric_limits<double>::infinity();

    while (!level.empty()) {
        const size_t n = level.size();
        std::vector<CellResult> results(n);
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (long i = 0; i < static_cast<long>(n); ++i)
                results[static_cast<size_t>(i)] = classify(level[static_cast<size_t>(i)], sys, eps);
        } else {
            for (size_t i = 0; i < n; ++i) results[i] = classify(level[i], sys, eps);
        }

        std::vector<SubdivisionCell> next;
        for (size_t i = 0; i < n; ++i) {
            ++processed;
            min_diam = std::min(min_diam, level[i].diameter);
            auto& r = results[i];
            switch (r.outcome) {
                case Outcome::Covered:
                    break;
                case Outcome::Witness:
                    return finish_uncovered(sys, r.witness, min_diam, processed);
                case Outcome::Sliver:
                    ++slivers;
                    break;
                case Outcome::Split:
                    next.push_back(std::move(r.child_a));
                    next.push_back(std::move(r.child_b));
                    break;
            }
        }
        if (processed > kMaxCells) {
            verdict.kind = VerdictKind::Unknown;
            verdict.resolution = min_diam;
            verdict.cells_processed = processed;
            return verdict;
        }
        level = std::move(next);
    }

    verdict.kind = slivers == 0 ? VerdictKind::Covered : VerdictKind::Unknown;
    verdict.resolution = min_diam;
    verdict.cells_processed = processed;
    return verdict;
}

// Depth-first serial reference; structured independently of the level-wise
// kernel so the two can cross-check each other.
CoverVerdict run_verify_serial(const ConvexBody& body, const HomothetCover& cover, double eps) {
    if (body.affine_dim() == 0) return verify_point_body(body, cover);
    HomothetSystem sys = build_system(body, cover);
    if (eps <= 0.0) eps = 1e-4 * body.diameter();

    CoverVerdict verdict;
    if (sys.centers.empty()) {
        verdict.kind = VerdictKind::Uncovered;
        verdict.witness = body.vertices().front();
        verdict.cells_processed = 1;
        verdict.resolution = body.diameter();
        return verdict;
    }

    std::vector<SubdivisionCell> stack = initial_cells(sys);
    std::reverse(stack.begin(), stack.end());
    std::uint64_t processed = 0, slivers = 0;
    double min_diam = std::numeric_limits<double>::infinity();

    while (!stack.empty()) {
        SubdivisionCell cell = std::move(stack.back());
        stack.pop_back();
        ++processed;
        min_diam = std::min(min_diam, cell.diameter);
        CellResult r = classify(cell, sys, eps);
        switch (r.outcome) {
            case Outcome::Covered:
                break;
            case Outcome::Witness:
                return finish_uncovered(sys, r.witness, min_diam, processed);
            case Outcome::Sliver:
                ++slivers;
                break;
            case Outcome::Split:
                stack.push_back(std::move(r.child_b));
                stack.push_back(std::move(r.child_a));
                break;
        }
        if (processed > kMaxCells) {
            verdict.kind = VerdictKind::Unknown;
            verdict.resolution = min_diam;
            verdict.cells_processed = processed;
            return verdict;
        }
    }
    verdict.kind = slivers == 0 ? VerdictKind::Covered : VerdictKind::Unknown;
    verdict.resolution = min_diam;
    verdict.cells_processed = processed;
    return verdict;
}

}  // namespace

CoverVerdict verify_cover(const ConvexBody& body, const HomothetCover& cover, double eps) {
    return run_verify(body, cover, eps, /*parallel=*/true);
}

CoverVerdict verify_cover_serial(const ConvexBody& body, const HomothetCover& cover, double eps) {
    return run_verify_serial(body, cover, eps);
}

std::optional<double> min_gamma_for_centers(const ConvexBody& body,
                                            const std::vector<Vec>& centers, double tol) {
    if (centers.empty()) throw std::invalid_argument("min_gamma_for_centers: no centers");
    auto covered = [&](double g) {
        return verify_cover(body, {g, centers, {}}).kind == VerdictKind::Covered;
    };
    if (!covered(1.0)) return std::nullopt;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (covered(mid) ? hi : lo) = mid;
    }
    return hi;
}

double gamma_of_point(const ConvexBody& body, const Vec& center, const Vec& x) {
    try {
        return std::max(0.0, gauge(body, x - center));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("gamma_of_point: body is not origin-normalized");
    }
}

// ---- covering-ratio optimizer ------------------------------------------

namespace {

struct OptimizerSpace {
    int k = 0;
    std::vector<Vec> normals;
    std::vector<double> offsets;  // about z, > 0
    Vec z_coords;
    Vec z_ambient;
    const ConvexBody* body = nullptr;

    double ratio(const Vec& x, const Vec& c) const {
        double r = 0.0;
        for (size_t f = 0; f < normals.size(); ++f)
            r = std::max(r, (dot(normals[f], x) - dot(normals[f], c)) / offsets[f]);
        return r;
    }
    Vec literal_center(const Vec& c, double gamma) const {
        const Vec chat = c + (1.0 - gamma) * z_coords;
        Vec x = (1.0 - gamma) * body->frame().anchor;
        for (int i = 0; i < k; ++i)
            x += chat[i] * body->frame().basis[static_cast<size_t>(i)];
        return x;
    }
    Vec normalized_center(const Vec& literal, double gamma) const {
        const Vec d = literal - (1.0 - gamma) * body->frame().anchor;
        Vec c = Vec::zero(std::max(k, 1));
        for (int i = 0; i < k; ++i) c[i] = dot(body->frame().basis[static_cast<size_t>(i)], d);
        return c - (1.0 - gamma) * z_coords;
    }
};

OptimizerSpace make_space(const ConvexBody& body) {
    OptimizerSpace sp;
    sp.body = &body;
    sp.k = body.affine_dim();
    sp.z_ambient = interior_point(body);
    sp.z_coords = body.frame().to_coords(sp.z_ambient);
    for (const auto& f : body.intrinsic_facets()) {
        sp.normals.push_back(f.normal);
        sp.offsets.push_back(f.offset - dot(f.normal, sp.z_coords));
    }
    return sp;
}

std::vector<Vec> make_samples(const OptimizerSpace& sp, std::mt19937_64& rng, size_t target) {
    std::vector<Vec> verts;
    for (const auto& v : sp.body->intrinsic_vertices()) verts.push_back(v - sp.z_coords);
    std::vector<Vec> samples = verts;
    samples.push_back(Vec::zero(std::max(sp.k, 1)));
    if (verts.size() <= 24) {
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                samples.push_back(0.5 * (verts[i] + verts[j]));
    }
    std::exponential_distribution<double> expd(1.0);
    while (samples.size() < target) {
        std::vector<double> w(verts.size());
        double tot = 0.0;
        for (auto& wi : w) tot += (wi = expd(rng));
        Vec p = Vec::zero(std::max(sp.k, 1));
        for (size_t i = 0; i < verts.size(); ++i) p += (w[i] / tot) * verts[i];
        samples.push_back(p);
    }
    return samples;
}

// One-center problem under the body gauge: minimize r with all cluster
// points inside c + r*K'. Extreme points of the cluster suffice.
std::optional<Vec> solve_one_center(const OptimizerSpace& sp, const std::vector<Vec>& cluster) {
    if (cluster.empty()) return std::nullopt;
    std::vector<Vec> pts = cluster;
    if (pts.size() > static_cast<size_t>(sp.k) + 1) {
        try {
            pts = convex_hull(pts, std::max(sp.k, 1)).vertices();
        } catch (const std::exception&) {
        }
    }
    lp::LinearProgram prog;  // vars: c[0..k-1], r ; maximize -r
    prog.objective.assign(static_cast<size_t>(sp.k) + 1, 0.0);
    prog.objective[static_cast<size_t>(sp.k)] = -1.0;
    for (const auto& x : pts) {
        for (size_t f = 0; f < sp.normals.size(); ++f) {
            std::vector<double> row(static_cast<size_t>(sp.k) + 1, 0.0);
            for (int i = 0; i < sp.k; ++i) row[static_cast<size_t>(i)] = -sp.normals[f][i];
            row[static_cast<size_t>(sp.k)] = -sp.offsets[f];
            prog.add_le(row, -dot(sp.normals[f], x));
        }
    }
    for (int i = 0; i < sp.k; ++i) prog.set_bounds(i, -lp::kInf, lp::kInf);
    prog.set_bounds(sp.k, 0.0, lp::kInf);
    const auto out = lp::solve(prog);
    if (out.status != lp::LpStatus::Optimal) return std::nullopt;
    Vec c = Vec::zero(std::max(sp.k, 1));
    for (int i = 0; i < sp.k; ++i) c[i] = out.solution[static_cast<size_t>(i)];
    return c;
}

struct RestartResult {
    double sample_gamma = std::numeric_limits<double>::infinity();
    std::vector<Vec> centers;
};

RestartResult run_restart(const OptimizerSpace& sp, const std::vector<Vec>& samples, int m,
                          std::vector<Vec> centers, long max_lps, long& lps_used) {
    const size_t ns = samples.size();
    auto worst_of = [&](const std::vector<Vec>& cs) {
        double worst = 0.0;
        for (const auto& x : samples) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : cs) best = std::min(best, sp.ratio(x, c));
            worst = std::max(worst, best);
        }
        return worst;
    };

    double prev = worst_of(centers);
    for (int iter = 0; iter < 12 && lps_used < max_lps; ++iter) {
        std::vector<std::vector<Vec>> clusters(static_cast<size_t>(m));
        std::vector<double> worst_sample_ratio(ns);
        for (size_t s = 0; s < ns; ++s) {
            size_t best_i = 0;
            double best = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < centers.size(); ++i) {
                const double r = sp.ratio(samples[s], centers[i]);
                if (r < best) {
                    best = r;
                    best_i = i;
                }
            }
            worst_sample_ratio[s] = best;
            clusters[best_i].push_back(samples[s]);
        }
        // re-seed empty clusters at the worst sample
        size_t worst_s = 0;
        for (size_t s = 1; s < ns; ++s)
            if (worst_sample_ratio[s] > worst_sample_ratio[worst_s]) worst_s = s;
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            auto& cl = clusters[static_cast<size_t>(i)];
            if (cl.empty()) {
                centers[static_cast<size_t>(i)] = samples[worst_s];
                changed = true;
                continue;
            }
            ++lps_used;
            if (auto c = solve_one_center(sp, cl)) {
                if (distance(*c, centers[static_cast<size_t>(i)]) > 1e-12) changed = true;
                centers[static_cast<size_t>(i)] = *c;
            }
        }
        const double now = worst_of(centers);
        if (!changed || now > prev - 1e-9) {
            prev = std::min(prev, now);
            break;
        }
        prev = now;
    }
    return {prev, std::move(centers)};
}

}  // namespace

GammaUpperResult gamma_upper(const ConvexBody& body, int m, long budget, std::uint64_t seed,
                             const std::optional<HomothetCover>& warm_start) {
    if (m < 1) throw std::invalid_argument("gamma_upper: m must be >= 1");
    const Vec origin = Vec::zero(body.ambient_dim());
    GammaUpperResult identity{1.0, {1.0, std::vector<Vec>(static_cast<size_t>(m), origin), {}}};
    if (m == 1 || body.affine_dim() == 0) return identity;

    OptimizerSpace sp = make_space(body);
    std::mt19937_64 rng(seed);
    const auto samples = make_samples(sp, rng, 200);

    const long per_restart = std::max<long>(m * 12L, 1);
    const int restarts =
        static_cast<int>(std::clamp<long>(budget / per_restart, 1, 12)) + (warm_start ? 1 : 0);

    // farthest-point seeding, randomized by the first pick
    auto seed_centers = [&](std::mt19937_64& r) {
        std::vector<Vec> cs;
        std::uniform_int_distribution<size_t> pick(0, samples.size() - 1);
        cs.push_back(samples[pick(r)]);
        while (static_cast<int>(cs.size()) < m) {
            size_t far = 0;
            double best = -1.0;
            for (size_t s = 0; s < samples.size(); ++s) {
                double d = std::numeric_limits<double>::infinity();
                for (const auto& c : cs) d = std::min(d, sp.ratio(samples[s], c));
                if (d > best) {
                    best = d;
                    far = s;
                }
            }
            cs.push_back(samples[far]);
        }
        return cs;
    };

    std::vector<RestartResult> results(static_cast<size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng_r(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1));
        std::vector<Vec> init;
        if (warm_start && r == restarts - 1) {
            for (const auto& x : warm_start->centers)
                init.push_back(sp.normalized_center(x, warm_start->gamma));
            while (static_cast<int>(init.size()) < m) {
                size_t far = 0;
                double best = -1.0;
                for (size_t s = 0; s < samples.size(); ++s) {
                    double d = std::numeric_limits<double>::infinity();
                    for (const auto& c : init) d = std::min(d, sp.ratio(samples[s], c));
                    if (d > best) {
                        best = d;
                        far = s;
                    }
                }
                init.push_back(samples[far]);
            }
            if (static_cast<int>(init.size()) > m) init.resize(static_cast<size_t>(m));
        } else {
            init = seed_centers(rng_r);
        }
        long used = 0;
        results[static_cast<size_t>(r)] = run_restart(sp, samples, m, std::move(init), per_restart, used);
    }

    std::vector<int> order(static_cast<size_t>(restarts));
    for (int i = 0; i < restarts; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ga = results[static_cast<size_t>(a)].sample_gamma;
        const double gb = results[static_cast<size_t>(b)].sample_gamma;
        return ga < gb || (ga == gb && a < b);
    });

    const double tol = Tolerances::global().optimization;

    // Certify a center set by bisection in the normalized frame (monotone
    // there); collects witnesses of failed levels as pinning points.
    auto certify = [&](const std::vector<Vec>& centers, double base_guess,
                       std::vector<Vec>* pins) -> double {
        auto covered = [&](double g) {
            std::vector<Vec> lits;
            for (const auto& c : centers) lits.push_back(sp.literal_center(c, g));
            const auto v = verify_cover(body, {g, lits, {}});
            if (v.kind != VerdictKind::Covered && v.witness && pins) {
                const Vec w = body.frame().to_coords(*v.witness);
                pins->push_back(w - sp.z_coords);
            }
            return v.kind == VerdictKind::Covered;
        };
        double hi = -1.0;
        const double base = std::min(1.0, std::max(base_guess, 1e-6));
        for (double f : {base + tol, base * 1.05, base * 1.2, base * 1.5, base * 2.0, 1.0}) {
            const double g = std::min(f, 1.0);
            if (covered(g)) {
                hi = g;
                break;
            }
            if (g >= 1.0) break;
        }
        if (hi < 0.0) return 2.0;  // not certifiable
        double lo = std::max(0.0, base_guess * (1.0 - 1e-9) - tol);
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (covered(mid) ? hi : lo) = mid;
        }
        return hi;
    };

    for (int oi = 0; oi < std::min(restarts, 3); ++oi) {
        const auto& cand = results[static_cast<size_t>(order[static_cast<size_t>(oi)])];
        if (cand.centers.empty()) continue;
        std::vector<Vec> cur = cand.centers;
        std::vector<Vec> pins;
        double hi = certify(cur, cand.sample_gamma, &pins);
        if (hi > 1.0) continue;

        // witness-augmented refinement: binding points sharpen the sample
        // set, the descent re-places centers, and the bound re-certifies
        std::vector<Vec> aug = samples;
        for (int round = 0; round < 4 && !pins.empty(); ++round) {
            for (const auto& p : pins) aug.push_back(p);
            pins.clear();
            long used = 0;
            const auto rr = run_restart(sp, aug, m, cur, per_restart, used);
            std::vector<Vec> new_pins;
            const double hi2 = certify(rr.centers, rr.sample_gamma, &new_pins);
            if (hi2 < hi - tol * 0.5) {
                hi = hi2;
                cur = rr.centers;
                pins = std::move(new_pins);
            } else {
                break;
            }
        }

        if (hi < 1.0 - tol) {
            std::vector<Vec> lits;
            for (const auto& c : cur) lits.push_back(sp.literal_center(c, hi));
            return {hi, {hi, std::move(lits), {}}};
        }
    }
    return identity;
}

}  // namespace homcov
