#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcov/tolerances.hpp"
#include "homcov/vec.hpp"

namespace homcov {

/// Closed halfspace { x : <normal, x> <= offset } with a unit normal.
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

/// Orthonormal chart of an affine flat: point(t) = anchor + sum t_i basis_i.
struct AffineFrame {
    Vec anchor;
    std::vector<Vec> basis;

    int ambient_dim() const { return anchor.dim(); }
    int flat_dim() const { return static_cast<int>(basis.size()); }

    Vec to_coords(const Vec& ambient) const;      // orthogonal projection coords
    Vec from_coords(const Vec& coords) const;
    double offhull_distance(const Vec& ambient) const;
};

/// Compact convex polytope in ambient dimension 2 or 3.
///
/// Vertices are the minimal extreme-point list. The ambient H-rep (facets)
/// is present exactly when the body is full-dimensional; lower-dimensional
/// bodies carry an orthonormal frame of their affine hull plus an intrinsic
/// H-rep expressed in frame coordinates, so gauge/containment can operate
/// inside the hull.
class ConvexBody {
public:
    ConvexBody() = default;

    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    /// Vertex indices of each facet, ordered around the facet (3D) or as the
    /// edge pair (2D). Parallel to facets().
    const std::vector<std::vector<int>>& facet_vertices() const { return facet_vertices_; }

    const AffineFrame& frame() const { return frame_; }
    /// H-rep in frame coordinates; equals facets() for full-dimensional
    /// bodies up to the trivial frame.
    const std::vector<Halfspace>& intrinsic_facets() const { return intrinsic_facets_; }
    std::vector<Vec> intrinsic_vertices() const;

    double diameter() const;
    std::string describe() const;

    // Construction is done by convex_hull(); members are wired there.
    friend ConvexBody convex_hull(const std::vector<Vec>& points, int ambient_dim, double tol);

private:
    std::vector<Vec> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<int>> facet_vertices_;
    std::vector<Halfspace> intrinsic_facets_;
    AffineFrame frame_;
    int ambient_dim_ = 0;
    int affine_dim_ = -1;
};

/// Minimal convex hull of the given points. Handles degenerate inputs
/// (point / segment / planar polygon in 3-space); affine_dim is detected
/// within tol. Throws on empty input or dimension mismatch.
ConvexBody convex_hull(const std::vector<Vec>& points, int ambient_dim,
                       double tol = Tolerances::global().geometric);

/// Closed containment within tol. Points off a degenerate body's affine
/// hull by more than tol are simply not contained.
bool contains(const ConvexBody& body, const Vec& x, double tol = Tolerances::global().geometric);

/// Minkowski gauge: the least t >= 0 with v in t*K. Requires the origin in
/// the (relative) interior of K; throws otherwise. Returns +inf for points
/// outside the linear span of a degenerate body.
double gauge(const ConvexBody& body, const Vec& v);

struct SupportResult {
    double value = 0.0;
    std::vector<int> face;  // vertex indices attaining the maximum within tol
};

/// Support function max over vertices of <u, v> plus the attaining face.
SupportResult support(const ConvexBody& body, const Vec& u,
                      double tol = Tolerances::global().geometric);

/// Vertex average; always in the relative interior of a polytope.
Vec interior_point(const ConvexBody& body);

struct AffineChord {
    Vec u;       // head: u - v is a nonnegative multiple of the query direction
    Vec v;       // tail
    double length = 0.0;
};

/// Longest chord of the body parallel to w (an affine diameter in that
/// direction). Solved as an LP: maximize t with p in K and p + t*w in K.
/// Ties broken toward the lexicographically smallest head u.
AffineChord longest_chord(const ConvexBody& body, const Vec& w);

/// Simplex cell used by the covering verifier's subdivision.
struct SubdivisionCell {
    std::vector<Vec> verts;  // k+1 points spanning a k-simplex
    double diameter = 0.0;

    static SubdivisionCell of(std::vector<Vec> verts);
};

/// Longest-edge bisection into two children. Child diameters never exceed
/// the parent's and shrink geometrically over repeated subdivision.
std::vector<SubdivisionCell> subdivide(const SubdivisionCell& cell);

}  // namespace homcov
