#pragma once

#include <optional>
#include <vector>

#include "homcov/body.hpp"

namespace homcov {

/// Certifies that a boundary point is illuminated: stepping `step` along
/// `direction` lands strictly in the (relative) interior.
struct IlluminationWitness {
    Vec direction;
    double step = 0.0;
};

/// Does u illuminate the boundary point x of K? Succeeds iff every facet
/// containing x faces strictly away from u; the returned step is half the
/// exit distance along u. Throws if x is not on the relative boundary or u
/// is zero.
std::optional<IlluminationWitness> illuminates(const ConvexBody& body, const Vec& x, const Vec& u);

/// Are a and b an antipodal pair of X: do distinct parallel hyperplanes
/// through a and b bound a slab containing X? Decided by an LP (positive
/// optimum of <u, a-b> over the supporting-slab feasibility region).
bool antipodal(const std::vector<Vec>& X, const Vec& a, const Vec& b);

/// Symmetric antipodality matrix over X; diagonal false.
std::vector<std::vector<bool>> pairwise_antipodal(const std::vector<Vec>& X);

/// A direction illuminating both boundary points x and y, constructed from
/// the affine diameter parallel to x-y: slide the chord toward an interior
/// point until it matches |x-y|, then translate [x,y] onto it. Requires x, y
/// non-antipodal (else the construction degenerates and throws).
IlluminationWitness common_illumination_direction(const ConvexBody& body, const Vec& x,
                                                  const Vec& y);

struct DirectionSet {
    std::vector<Vec> directions;
    std::vector<int> coverage;  // per body vertex: index into directions
    bool exact = false;         // exact set cover ran (vs greedy only)
};

/// Upper bound on the illumination number: build a candidate direction pool
/// (vertex-to-interior, merged directions for non-antipodal vertex pairs,
/// negated facet normals), then set-cover the vertices. Exact branch-and-
/// bound below exact_threshold vertices, greedy otherwise. Minimality is
/// relative to the pool.
DirectionSet illumination_number_upper(const ConvexBody& body, int exact_threshold = 64);

}  // namespace homcov
