#include "homcov/compose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace homcov {

ConvexBody decomposition_hull(const HullDecomposition& decomp) {
    if (decomp.parts.empty()) throw std::invalid_argument("decomposition: no parts");
    std::vector<Vec> pts;
    for (const auto& part : decomp.parts) {
        if (part.body.ambient_dim() != decomp.ambient_dim)
            throw std::invalid_argument("decomposition: mixed ambient dimensions");
        for (const auto& v : part.body.vertices()) pts.push_back(v);
    }
    return convex_hull(pts, decomp.ambient_dim);
}

double compose_ratio(const HullDecomposition& decomp) {
    const int p = static_cast<int>(decomp.parts.size());
    const int q = std::min(p, decomp.ambient_dim + 1);
    double ratio = 0.0;
    for (const auto& part : decomp.parts)
        ratio = std::max(ratio, (static_cast<double>(q - 1) + part.cover.gamma) / q);
    return ratio;
}

HomothetCover compose_cover(const HullDecomposition& decomp) {
    const ConvexBody hull = decomposition_hull(decomp);
    const int p = static_cast<int>(decomp.parts.size());
    const int q = std::min(p, decomp.ambient_dim + 1);
    const double ratio = compose_ratio(decomp);
    const Vec z = interior_point(hull);

    HomothetCover out;
    out.gamma = ratio;
    for (const auto& part : decomp.parts) {
        const double gi = part.cover.gamma;
        for (const auto& y : part.cover.centers) {
            const Vec shifted = y - (1.0 - gi) * z;          // part center, origin frame
            out.centers.push_back(shifted * (1.0 / q) + (1.0 - ratio) * z);
        }
    }
    return out;
}

HomothetCover segment_cover(const ConvexBody& segment, int k) {
    if (segment.affine_dim() != 1)
        throw std::invalid_argument("segment_cover: body is not a segment");
    if (k < 1) throw std::invalid_argument("segment_cover: k must be >= 1");
    const Vec a = segment.vertices()[0];
    const Vec b = segment.vertices()[1];
    HomothetCover cover;
    cover.gamma = 1.0 / k;
    for (int j = 0; j < k; ++j) {
        const Vec piece_start = a + (static_cast<double>(j) / k) * (b - a);
        cover.centers.push_back(piece_start - (1.0 / k) * a);
    }
    return cover;
}

HullDecomposition simplex_segment_decomposition(const ConvexBody& simplex) {
    const int k = simplex.affine_dim();
    const auto& verts = simplex.vertices();
    if (static_cast<int>(verts.size()) != k + 1)
        throw std::invalid_argument("simplex_segment_decomposition: not a simplex");

    HullDecomposition decomp;
    decomp.ambient_dim = simplex.ambient_dim();
    size_t i = 0;
    for (; i + 1 < verts.size(); i += 2) {
        HullDecomposition::Part part;
        part.body = convex_hull({verts[i], verts[i + 1]}, decomp.ambient_dim);
        part.cover = segment_cover(part.body, 2);
        decomp.parts.push_back(std::move(part));
    }
    if (i < verts.size()) {  // even affine dimension leaves one vertex over
        HullDecomposition::Part part;
        part.body = convex_hull({verts[i]}, decomp.ambient_dim);
        part.cover = HomothetCover{0.0, {verts[i]}, {}};
        decomp.parts.push_back(std::move(part));
    }
    return decomp;
}

const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::Case4: return "Case4";
    }
    return "?";
}

BoundReport theorem32_bound(const ConvexBody& L, const ConvexBody& M) {
    if (L.ambient_dim() != 3 || M.ambient_dim() != 3)
        throw std::invalid_argument("theorem32_bound: ambient dimension must be 3");
    if (L.affine_dim() == 3 || M.affine_dim() == 3)
        throw std::invalid_argument("theorem32_bound: inputs must have empty interior");

    const int a = std::min(L.affine_dim(), M.affine_dim());
    const int b = std::max(L.affine_dim(), M.affine_dim());

    const double planar_g7 = 0.5;                                    // gamma_7 <= 1/2, planar
    const double planar_g4 = std::sqrt(2.0) / 2.0;                   // gamma_4 <= sqrt(2)/2, planar
    const double planar_g6 = std::pow(std::sin(3.0 * std::numbers::pi / 10.0), 2.0);
    const double simplex_g5 = 9.0 / 13.0;                            // gamma_5 of a 3-simplex
    const double half_mix = (1.0 + planar_g4) / 2.0;                 // (1+sqrt(2)/2)/2

    BoundReport rep;
    if (a == 0 && b == 2) {
        rep.case_label = CaseLabel::Case1;
        rep.m = 8;
        rep.gamma_bound = 1.0 / (2.0 - planar_g7);                   // = 2/3
        rep.notes = "cone bound 1/(2-gamma_7) with planar gamma_7 <= 1/2";
        rep.alternates.push_back({5, half_mix, "(1+gamma_4)/2 with planar gamma_4 <= sqrt(2)/2"});
    } else if (a == 1 && b == 1) {
        rep.case_label = CaseLabel::Case2;
        rep.m = 5;
        rep.gamma_bound = simplex_g5;
        rep.notes = "hull of two skew segments is a 3-simplex; gamma_5 = 9/13";
    } else if (a == 1 && b == 2) {
        rep.case_label = CaseLabel::Case3;
        rep.m = 8;
        rep.gamma_bound = (1.0 + planar_g6) / 2.0;                   // ~ 0.8273
        rep.notes = "(1+gamma_6)/2 with planar gamma_6 <= sin^2(3pi/10)";
        rep.alternates.push_back({6, half_mix, "(1+gamma_4)/2 with planar gamma_4 <= sqrt(2)/2"});
    } else if (a == 2 && b == 2) {
        rep.case_label = CaseLabel::Case4;
        rep.m = 8;
        rep.gamma_bound = half_mix;                                  // ~ 0.8536
        rep.notes = "(1+gamma_4)/2 on both planar parts";
    } else {
        throw std::invalid_argument(
            "theorem32_bound: affine dimension pair outside the case table (hull cannot be "
            "full-dimensional)");
    }
    return rep;
}

bool parallelepiped_check(const ConvexBody& body) {
    if (body.ambient_dim() != 3 || !body.full_dimensional()) return false;
    const auto& v = body.vertices();
    if (v.size() != 8) return false;
    double scale = 1.0;
    for (const auto& p : v) scale = std::max(scale, norm(p));
    const double tol = 1e-7 * scale;

    // lexicographically smallest vertex as the base corner
    size_t base = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (lex_less(v[i], v[base])) base = i;

    std::vector<Vec> others;
    for (size_t i = 0; i < v.size(); ++i)
        if (i != base) others.push_back(v[i]);

    auto matches = [&](const Vec& e1, const Vec& e2, const Vec& e3) {
        const double det = dot(e1, cross(e2, e3));
        if (std::fabs(det) <= tol * scale * scale) return false;
        for (int mask = 0; mask < 8; ++mask) {
            Vec p = v[base];
            if (mask & 1) p += e1;
            if (mask & 2) p += e2;
            if (mask & 4) p += e3;
            bool found = false;
            for (const auto& q : v)
                if (distance(p, q) <= tol) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };

    for (size_t i = 0; i < others.size(); ++i)
        for (size_t j = i + 1; j < others.size(); ++j)
            for (size_t k = j + 1; k < others.size(); ++k)
                if (matches(others[i] - v[base], others[j] - v[base], others[k] - v[base]))
                    return true;
    return false;
}

}  // namespace homcov
