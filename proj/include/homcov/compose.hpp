#pragma once

#include <string>
#include <vector>

#include "homcov/body.hpp"
#include "homcov/covering.hpp"

namespace homcov {

/// K = conv(K_1 u ... u K_p) together with a cover of each part.
struct HullDecomposition {
    struct Part {
        ConvexBody body;
        HomothetCover cover;
    };
    std::vector<Part> parts;
    int ambient_dim = 0;
};

/// Hull of all part vertices.
ConvexBody decomposition_hull(const HullDecomposition& decomp);

/// Cover of conv(K_1 u ... u K_p) built from the part covers.
///
/// With q = min(p, n+1) the ratio is max_i (q-1+gamma_i)/q and the centers
/// are, for each part center y: shift by the hull's vertex average z so the
/// origin is interior (y~ = y - (1-gamma_i) z), scale to y~/q, and shift
/// back (+ (1-ratio) z). The output has sum_i m_i centers.
HomothetCover compose_cover(const HullDecomposition& decomp);

/// The composed ratio alone: max_i (q-1+gamma_i)/q, q = min(p, n+1).
double compose_ratio(const HullDecomposition& decomp);

/// k homothets of ratio 1/k tiling a segment; exact.
HomothetCover segment_cover(const ConvexBody& segment, int k);

/// Pairs the vertices of a simplex into segments (in stored order), covering
/// each by two halves; odd leftover vertices become single-point parts.
/// Composing a (2t-1)-dimensional simplex decomposition yields ratio
/// (2t-1)/2t with one homothet per vertex.
HullDecomposition simplex_segment_decomposition(const ConvexBody& simplex);

enum class CaseLabel { Case1, Case2, Case3, Case4 };

struct BoundEntry {
    int m = 0;
    double bound = 0.0;
    std::string note;
};

/// Covering bound for a 3D hull of two lower-dimensional compact convex
/// sets, by case analysis on the pair of affine dimensions. The constants
/// are cited planar/simplex covering values; no construction is emitted.
struct BoundReport {
    CaseLabel case_label = CaseLabel::Case1;
    int m = 0;              // strongest translate count
    double gamma_bound = 0.0;
    std::string notes;
    std::vector<BoundEntry> alternates;  // further (m, bound) pairs of the case
};

BoundReport theorem32_bound(const ConvexBody& L, const ConvexBody& M);

const char* case_name(CaseLabel c);

/// True iff the body's vertex set is z + {0,e1} + {0,e2} + {0,e3} for some
/// independent e_i (within tolerance).
bool parallelepiped_check(const ConvexBody& body);

}  // namespace homcov
