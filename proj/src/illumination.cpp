#include "homcov/illumination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "homcov/lp.hpp"

namespace homcov {
namespace {

double body_scale(const ConvexBody& body) {
    double s = 1.0;
    for (const auto& v : body.vertices()) s = std::max(s, norm(v));
    return s;
}

}  // namespace

std::optional<IlluminationWitness> illuminates(const ConvexBody& body, const Vec& x,
                                               const Vec& u) {
    const double tau = Tolerances::global().geometric;
    const double ulen = norm(u);
    if (ulen == 0.0) throw std::invalid_argument("illuminates: zero direction");
    if (x.dim() != body.ambient_dim() || u.dim() != body.ambient_dim())
        throw std::invalid_argument("illuminates: dimension mismatch");
    if (body.affine_dim() == 0)
        throw std::invalid_argument("illuminates: point body has no boundary");

    const double scale = body_scale(body);
    if (!contains(body, x, tau * scale * 10.0))
        throw std::invalid_argument("illuminates: x is not on the boundary (outside)");

    // a direction leaving the affine hull cannot reach the relative interior
    Vec u_res = u;
    for (const auto& b : body.frame().basis) u_res -= dot(b, u_res) * b;
    if (body.full_dimensional()) u_res = Vec::zero(body.ambient_dim());
    if (norm(u_res) > tau * ulen) return std::nullopt;

    const Vec xi = body.frame().to_coords(x);
    Vec ui = Vec::zero(std::max(body.affine_dim(), 1));
    if (body.full_dimensional()) {
        ui = u;
    } else {
        for (int i = 0; i < body.affine_dim(); ++i)
            ui[i] = dot(body.frame().basis[static_cast<size_t>(i)], u);
    }

    const auto& hs = body.intrinsic_facets();
    bool on_boundary = false;
    for (const auto& f : hs) {
        const double slack = f.offset - dot(f.normal, xi);
        if (std::fabs(slack) <= tau * scale * 10.0) {
            on_boundary = true;
            if (dot(f.normal, ui) >= -tau * ulen) return std::nullopt;  // grazing or away
        }
    }
    if (!on_boundary)
        throw std::invalid_argument("illuminates: x is not on the relative boundary");

    double exit = std::numeric_limits<double>::infinity();
    for (const auto& f : hs) {
        const double du = dot(f.normal, ui);
        if (du > tau * ulen) exit = std::min(exit, (f.offset - dot(f.normal, xi)) / du);
    }
    if (!std::isfinite(exit)) exit = 2.0 * body.diameter() / ulen;
    return IlluminationWitness{u, exit * 0.5};
}

bool antipodal(const std::vector<Vec>& X, const Vec& a, const Vec& b) {
    const double tau = Tolerances::global().geometric;
    if (X.size() < 2) throw std::invalid_argument("antipodal: need at least two points");
    const int n = X.front().dim();
    auto member = [&](const Vec& p) {
        for (const auto& x : X)
            if (distance(x, p) <= tau * (1.0 + norm(p))) return true;
        return false;
    };
    if (!member(a) || !member(b)) throw std::invalid_argument("antipodal: a and b must be in X");

    // max <u, a-b>  s.t.  <u, x-a> <= 0 and <u, b-x> <= 0 for all x, |u_i| <= 1
    lp::LinearProgram prog;
    prog.objective.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) prog.objective[static_cast<size_t>(i)] = a[i] - b[i];
    for (const auto& x : X) {
        std::vector<double> r1(static_cast<size_t>(n)), r2(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            r1[static_cast<size_t>(i)] = x[i] - a[i];
            r2[static_cast<size_t>(i)] = b[i] - x[i];
        }
        prog.add_le(r1, 0.0);
        prog.add_le(r2, 0.0);
    }
    for (int i = 0; i < n; ++i) prog.set_bounds(i, -1.0, 1.0);
    const auto out = lp::solve(prog);
    if (out.status != lp::LpStatus::Optimal) return false;
    double scale = 1.0;
    for (const auto& x : X) scale = std::max(scale, norm(x));
    return out.objective_value > tau * scale;
}

std::vector<std::vector<bool>> pairwise_antipodal(const std::vector<Vec>& X) {
    if (X.size() < 2) throw std::invalid_argument("pairwise_antipodal: need at least two points");
    const size_t n = X.size();
    std::vector<std::vector<bool>> mat(n, std::vector<bool>(n, false));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<char> flags(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (long p = 0; p < static_cast<long>(pairs.size()); ++p) {
        const auto& [i, j] = pairs[static_cast<size_t>(p)];
        flags[static_cast<size_t>(p)] = antipodal(X, X[i], X[j]) ? 1 : 0;
    }
    for (size_t p = 0; p < pairs.size(); ++p) {
        const auto& [i, j] = pairs[p];
        mat[i][j] = mat[j][i] = flags[p] != 0;
    }
    return mat;
}

IlluminationWitness common_illumination_direction(const ConvexBody& body, const Vec& x,
                                                  const Vec& y) {
    const double tau = Tolerances::global().geometric;
    const double scale = body_scale(body);
    if (!contains(body, x, tau * scale * 10.0) || !contains(body, y, tau * scale * 10.0))
        throw std::invalid_argument("common_illumination_direction: points must lie on the body");

    const Vec c = interior_point(body);
    if (distance(x, y) <= tau * scale) {
        const Vec d = c - x;
        auto w = illuminates(body, x, d);
        if (!w)
            throw std::invalid_argument("common_illumination_direction: x not on the boundary");
        return *w;
    }

    const AffineChord chord = longest_chord(body, x - y);  // u - v parallel to x - y
    const double lambda = 1.0 - distance(x, y) / chord.length;
    if (lambda <= tau)
        throw std::invalid_argument(
            "common_illumination_direction: antipodal pair (the segment is an affine diameter)");

    const Vec s = lambda * c + (1.0 - lambda) * chord.u;
    const Vec t = lambda * c + (1.0 - lambda) * chord.v;
    const Vec d = 0.5 * (s + t) - 0.5 * (x + y);

    auto wx = illuminates(body, x, d);
    auto wy = illuminates(body, y, d);
    if (!wx || !wy)
        throw std::invalid_argument(
            "common_illumination_direction: construction failed to illuminate both points "
            "(inputs antipodal within tolerance?)");
    return IlluminationWitness{d, std::min(wx->step, wy->step)};
}

namespace {

// Deterministic branch-and-bound set cover over a binary coverage matrix.
struct SetCover {
    int n_elems;
    const std::vector<std::vector<bool>>& covers;  // per candidate: element mask

    std::vector<int> best;

    void run(const std::vector<int>& greedy_seed) {
        best = greedy_seed;
        std::vector<int> chosen;
        std::vector<int> count(static_cast<size_t>(n_elems), 0);
        descend(chosen, count, 0);
    }

    void descend(std::vector<int>& chosen, std::vector<int>& count, int covered) {
        if (covered == n_elems) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (chosen.size() + 1 >= best.size()) return;  // cannot improve
        int elem = -1;  // lowest-index uncovered element
        for (int e = 0; e < n_elems; ++e)
            if (count[static_cast<size_t>(e)] == 0) {
                elem = e;
                break;
            }
        for (size_t c = 0; c < covers.size(); ++c) {
            if (!covers[c][static_cast<size_t>(elem)]) continue;
            int gained = 0;
            for (int e = 0; e < n_elems; ++e)
                if (covers[c][static_cast<size_t>(e)] && count[static_cast<size_t>(e)]++ == 0)
                    ++gained;
            chosen.push_back(static_cast<int>(c));
            descend(chosen, count, covered + gained);
            chosen.pop_back();
            for (int e = 0; e < n_elems; ++e)
                if (covers[c][static_cast<size_t>(e)]) --count[static_cast<size_t>(e)];
        }
    }
};

}  // namespace

DirectionSet illumination_number_upper(const ConvexBody& body, int exact_threshold) {
    if (!body.full_dimensional())
        throw std::invalid_argument("illumination_number_upper: body must be full-dimensional");
    const auto& verts = body.vertices();
    const int nv = static_cast<int>(verts.size());
    const Vec c = interior_point(body);

    // candidate pool: vertex-to-interior, pairwise merged (non-antipodal
    // pairs), negated facet normals
    std::vector<Vec> pool;
    for (const auto& v : verts) pool.push_back(c - v);
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (antipodal(verts, verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]))
                continue;
            try {
                pool.push_back(common_illumination_direction(
                                   body, verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)])
                                   .direction);
            } catch (const std::invalid_argument&) {
                // borderline-antipodal pair; the pool stays valid without it
            }
        }
    }
    for (const auto& f : body.facets()) pool.push_back(-f.normal);

    // coverage per candidate; deduplicate identical coverage sets
    std::vector<std::vector<bool>> covers;
    std::vector<Vec> dirs;
    for (const auto& d : pool) {
        std::vector<bool> row(static_cast<size_t>(nv), false);
        bool any = false;
        for (int v = 0; v < nv; ++v) {
            if (illuminates(body, verts[static_cast<size_t>(v)], d)) {
                row[static_cast<size_t>(v)] = true;
                any = true;
            }
        }
        if (!any) continue;
        bool dup = false;
        for (const auto& prev : covers)
            if (prev == row) {
                dup = true;
                break;
            }
        if (!dup) {
            covers.push_back(std::move(row));
            dirs.push_back(d);
        }
    }

    // every vertex must be reachable (the vertex-to-interior direction)
    for (int v = 0; v < nv; ++v) {
        bool hit = false;
        for (const auto& row : covers) hit = hit || row[static_cast<size_t>(v)];
        if (!hit)
            throw std::logic_error("illumination_number_upper: vertex illuminated by no candidate");
    }

    // greedy: largest new coverage, ties at lowest index
    std::vector<int> greedy;
    {
        std::vector<bool> done(static_cast<size_t>(nv), false);
        int remaining = nv;
        while (remaining > 0) {
            int best_c = -1, best_gain = 0;
            for (size_t cd = 0; cd < covers.size(); ++cd) {
                int gain = 0;
                for (int v = 0; v < nv; ++v)
                    if (covers[cd][static_cast<size_t>(v)] && !done[static_cast<size_t>(v)]) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = static_cast<int>(cd);
                }
            }
            greedy.push_back(best_c);
            for (int v = 0; v < nv; ++v)
                if (covers[static_cast<size_t>(best_c)][static_cast<size_t>(v)] &&
                    !done[static_cast<size_t>(v)]) {
                    done[static_cast<size_t>(v)] = true;
                    --remaining;
                }
        }
    }

    std::vector<int> chosen = greedy;
    bool exact = false;
    if (nv <= std::min(exact_threshold, 64)) {
        SetCover sc{nv, covers, {}};
        sc.run(greedy);
        chosen = sc.best;
        exact = true;
    }

    DirectionSet out;
    out.exact = exact;
    for (int cd : chosen) out.directions.push_back(dirs[static_cast<size_t>(cd)]);
    out.coverage.assign(static_cast<size_t>(nv), -1);
    for (int v = 0; v < nv; ++v)
        for (size_t k = 0; k < chosen.size(); ++k)
            if (covers[static_cast<size_t>(chosen[k])][static_cast<size_t>(v)]) {
                out.coverage[static_cast<size_t>(v)] = static_cast<int>(k);
                break;
            }
    return out;
}

}  // namespace homcov
