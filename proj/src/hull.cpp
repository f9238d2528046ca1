#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "homcov/body.hpp"

namespace homcov {

Vec AffineFrame::to_coords(const Vec& ambient) const {
    const Vec d = ambient - anchor;
    if (basis.empty()) return Vec::zero(1);  // 0-flat: coords unused
    Vec t = Vec::zero(flat_dim());
    for (int i = 0; i < flat_dim(); ++i) t[i] = dot(basis[static_cast<size_t>(i)], d);
    return t;
}

Vec AffineFrame::from_coords(const Vec& coords) const {
    Vec p = anchor;
    for (int i = 0; i < flat_dim(); ++i) p += coords[i] * basis[static_cast<size_t>(i)];
    return p;
}

double AffineFrame::offhull_distance(const Vec& ambient) const {
    Vec d = ambient - anchor;
    for (const auto& b : basis) d -= dot(b, d) * b;
    return norm(d);
}

std::vector<Vec> ConvexBody::intrinsic_vertices() const {
    if (full_dimensional()) return vertices_;
    std::vector<Vec> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(frame_.to_coords(v));
    return out;
}

double ConvexBody::diameter() const {
    double best = 0.0;
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            best = std::max(best, distance(vertices_[i], vertices_[j]));
    return best;
}

std::string ConvexBody::describe() const {
    std::ostringstream os;
    os << "body[dim " << affine_dim_ << "/" << ambient_dim_ << ", " << vertices_.size()
       << " vertices, " << facets_.size() << " facets]";
    return os.str();
}

namespace {

AffineFrame detect_frame(const std::vector<Vec>& pts, int n, double rank_tol) {
    Vec anchor = Vec::zero(n);
    for (const auto& p : pts) anchor += p;
    anchor *= 1.0 / static_cast<double>(pts.size());

    AffineFrame frame{anchor, {}};
    for (const auto& p : pts) {
        Vec r = p - anchor;
        for (const auto& b : frame.basis) r -= dot(b, r) * b;
        if (norm(r) > rank_tol) {
            frame.basis.push_back(r / norm(r));
            if (frame.flat_dim() == n) break;
        }
    }
    return frame;
}

std::vector<Vec> dedup_points(const std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : out)
            if (distance(p, q) <= tol) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(p);
    }
    return out;
}

// Monotone chain on 2D coordinates; strict turns drop collinear points.
// Returns the hull ring counter-clockwise.
std::vector<Vec> hull_2d(std::vector<Vec> p, double area_tol) {
    std::sort(p.begin(), p.end(), lex_less);
    const size_t n = p.size();
    if (n <= 2) return p;
    std::vector<Vec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross2(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= area_tol) --k;
        h[k++] = p[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross2(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= area_tol) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

struct Plane {
    Vec normal;
    double offset;
};

// Every supporting plane spanned by a point triple, deduplicated at the
// coplanarity threshold; planes whose contact set is not 2-dimensional are
// tangent at an edge or vertex, not facets.
std::vector<Plane> supporting_planes_3d(const std::vector<Vec>& p, double plane_tol,
                                        double normal_tol) {
    std::vector<Plane> planes;
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                Vec nv = cross(p[j] - p[i], p[k] - p[i]);
                const double len = norm(nv);
                if (len <= plane_tol) continue;  // thin triple; a facet with spread
                                                 // vertices has a better one
                nv *= 1.0 / len;
                double b = dot(nv, p[i]);
                bool all_le = true, all_ge = true;
                for (size_t l = 0; l < n; ++l) {
                    const double s = dot(nv, p[l]) - b;
                    if (s > plane_tol) all_le = false;
                    if (s < -plane_tol) all_ge = false;
                    if (!all_le && !all_ge) break;
                }
                if (!all_le && !all_ge) continue;
                if (!all_le) {
                    nv = -nv;
                    b = -b;
                }
                bool dup = false;
                for (const auto& q : planes)
                    if (distance(q.normal, nv) <= normal_tol &&
                        std::fabs(q.offset - b) <= plane_tol * 10.0) {
                        dup = true;
                        break;
                    }
                if (!dup) planes.push_back({nv, b});
            }
        }
    }
    // keep true facets only: contact set must have affine rank 2
    std::vector<Plane> facets;
    for (const auto& pl : planes) {
        std::vector<Vec> on;
        for (const auto& q : p)
            if (std::fabs(dot(pl.normal, q) - pl.offset) <= plane_tol) on.push_back(q);
        if (on.size() < 3) continue;
        AffineFrame f = detect_frame(on, 3, plane_tol);
        if (f.flat_dim() >= 2) facets.push_back(pl);
    }
    return facets;
}

// Order the in-plane points counter-clockwise as seen from outside (along n).
std::vector<int> order_facet_ring(const std::vector<Vec>& verts, const std::vector<int>& idx,
                                  const Vec& n) {
    Vec e1 = cross(n, std::fabs(n[0]) < 0.9 ? Vec(1, 0, 0) : Vec(0, 1, 0));
    e1 = e1 / norm(e1);
    const Vec e2 = cross(n, e1);
    Vec c = Vec::zero(3);
    for (int i : idx) c += verts[static_cast<size_t>(i)];
    c *= 1.0 / static_cast<double>(idx.size());
    std::vector<std::pair<double, int>> ang;
    for (int i : idx) {
        const Vec d = verts[static_cast<size_t>(i)] - c;
        ang.push_back({std::atan2(dot(e2, d), dot(e1, d)), i});
    }
    std::sort(ang.begin(), ang.end());
    // (e1, e2, n) is right-handed, so ascending angle is CCW seen from outside.
    std::vector<int> out;
    for (const auto& [a, i] : ang) out.push_back(i);
    return out;
}

}  // namespace

ConvexBody convex_hull(const std::vector<Vec>& points, int ambient_dim, double tol) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    if (ambient_dim < 1 || ambient_dim > 3)
        throw std::invalid_argument("convex_hull: ambient dimension must be 1..3");
    for (const auto& p : points) {
        if (p.dim() != ambient_dim)
            throw std::invalid_argument("convex_hull: point dimension mismatch");
        if (!p.finite()) throw std::invalid_argument("convex_hull: non-finite coordinates");
    }

    double scale = 1.0;
    for (const auto& p : points) scale = std::max(scale, norm(p));
    const double rank_tol = std::max(tol * 100.0, 1e-7) * scale;

    ConvexBody body;
    body.ambient_dim_ = ambient_dim;

    const std::vector<Vec> pts = dedup_points(points, rank_tol * 1e-2);
    AffineFrame frame = detect_frame(pts, ambient_dim, rank_tol);
    const int k = frame.flat_dim();
    body.affine_dim_ = k;

    if (k == 0) {
        body.vertices_ = {pts.front()};
        body.frame_ = frame;
        return body;
    }

    // Work in frame coordinates; full-dimensional bodies use the trivial frame.
    if (k == ambient_dim) {
        frame.anchor = Vec::zero(ambient_dim);
        frame.basis.clear();
        for (int i = 0; i < ambient_dim; ++i) {
            Vec e = Vec::zero(ambient_dim);
            e[i] = 1.0;
            frame.basis.push_back(e);
        }
    }
    std::vector<Vec> local;
    local.reserve(pts.size());
    for (const auto& p : pts) {
        Vec t = frame.to_coords(p);
        if (k == 1) {
            Vec t1 = Vec::zero(1);
            t1[0] = t[0];
            local.push_back(t1);
        } else {
            Vec tk = Vec::zero(k);
            for (int i = 0; i < k; ++i) tk[i] = t[i];
            local.push_back(tk);
        }
    }

    std::vector<Vec> hull_local;
    std::vector<Halfspace> hs_local;
    std::vector<std::vector<int>> facet_idx;

    if (k == 1) {
        size_t imin = 0, imax = 0;
        for (size_t i = 1; i < local.size(); ++i) {
            if (local[i][0] < local[imin][0]) imin = i;
            if (local[i][0] > local[imax][0]) imax = i;
        }
        hull_local = {local[imin], local[imax]};
        Vec plus = Vec::zero(1), minus = Vec::zero(1);
        plus[0] = 1.0;
        minus[0] = -1.0;
        hs_local.push_back({plus, local[imax][0]});
        hs_local.push_back({minus, -local[imin][0]});
        facet_idx = {{1}, {0}};
    } else if (k == 2) {
        hull_local = hull_2d(local, rank_tol * scale);
        const int m = static_cast<int>(hull_local.size());
        for (int i = 0; i < m; ++i) {
            const Vec a = hull_local[static_cast<size_t>(i)];
            const Vec b = hull_local[static_cast<size_t>((i + 1) % m)];
            const Vec d = b - a;
            Vec nrm(d[1], -d[0]);
            nrm = nrm / norm(nrm);
            double off = dot(nrm, a);
            for (const auto& v : hull_local) off = std::max(off, dot(nrm, v));
            hs_local.push_back({nrm, off});
            facet_idx.push_back({i, (i + 1) % m});
        }
        if (m <= 2) {  // collinear leftovers can slip through on exotic inputs
            throw std::logic_error("convex_hull: rank-2 input collapsed to a segment");
        }
    } else {
        const auto planes = supporting_planes_3d(local, rank_tol,
                                                 Tolerances::global().coplanar_normal);
        // extreme points: on >= 3 facet planes of full normal rank
        std::vector<int> keep;
        for (size_t i = 0; i < local.size(); ++i) {
            std::vector<Vec> nrms;
            for (const auto& pl : planes)
                if (std::fabs(dot(pl.normal, local[i]) - pl.offset) <= rank_tol)
                    nrms.push_back(pl.normal);
            // rank of the touching normals
            std::vector<Vec> basis;
            for (const auto& nv : nrms) {
                Vec r = nv;
                for (const auto& b : basis) r -= dot(b, r) * b;
                if (norm(r) > 1e-6) basis.push_back(r / norm(r));
            }
            if (basis.size() >= 3) keep.push_back(static_cast<int>(i));
        }
        if (keep.empty()) throw std::logic_error("convex_hull: no extreme points found (rank-3 input)");
        for (int i : keep) hull_local.push_back(local[static_cast<size_t>(i)]);
        for (const auto& pl : planes) {
            std::vector<int> on;
            for (size_t i = 0; i < hull_local.size(); ++i)
                if (std::fabs(dot(pl.normal, hull_local[i]) - pl.offset) <= rank_tol)
                    on.push_back(static_cast<int>(i));
            if (on.size() < 3) continue;
            double off = pl.offset;
            for (const auto& v : hull_local) off = std::max(off, dot(pl.normal, v));
            hs_local.push_back({pl.normal, off});
            facet_idx.push_back(order_facet_ring(hull_local, on, pl.normal));
        }
    }

    body.frame_ = frame;
    body.intrinsic_facets_ = hs_local;
    body.facet_vertices_ = facet_idx;
    if (k == ambient_dim) {
        body.vertices_ = hull_local;
        body.facets_ = hs_local;
    } else {
        for (const auto& v : hull_local) body.vertices_.push_back(frame.from_coords(v));
        // ambient facets absent for lower-dimensional bodies
    }
    return body;
}

SubdivisionCell SubdivisionCell::of(std::vector<Vec> verts) {
    SubdivisionCell c;
    c.verts = std::move(verts);
    for (size_t i = 0; i < c.verts.size(); ++i)
        for (size_t j = i + 1; j < c.verts.size(); ++j)
            c.diameter = std::max(c.diameter, distance(c.verts[i], c.verts[j]));
    return c;
}

std::vector<SubdivisionCell> subdivide(const SubdivisionCell& cell) {
    const size_t m = cell.verts.size();
    if (m < 2) throw std::invalid_argument("subdivide: degenerate cell");
    if (cell.diameter <= 0.0) throw std::invalid_argument("subdivide: zero-diameter cell");
    size_t bi = 0, bj = 1;
    double best = -1.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const double d = distance(cell.verts[i], cell.verts[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    const Vec mid = (cell.verts[bi] + cell.verts[bj]) * 0.5;
    std::vector<Vec> a = cell.verts, b = cell.verts;
    a[bj] = mid;
    b[bi] = mid;
    return {SubdivisionCell::of(std::move(a)), SubdivisionCell::of(std::move(b))};
}

}  // namespace homcov
