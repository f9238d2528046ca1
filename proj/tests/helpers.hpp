#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "homcov/body.hpp"

namespace homcov::testutil {

inline ConvexBody unit_square() {
    return convex_hull({Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)}, 2);
}

inline ConvexBody symmetric_square() {  // vertices (+-1, +-1)
    return convex_hull({Vec(-1, -1), Vec(1, -1), Vec(1, 1), Vec(-1, 1)}, 2);
}

inline ConvexBody unit_cube() {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m)
        pts.push_back(Vec(m & 1 ? 1 : 0, m & 2 ? 1 : 0, m & 4 ? 1 : 0));
    return convex_hull(pts, 3);
}

inline ConvexBody regular_simplex3() {
    return convex_hull({Vec(1, 1, 1), Vec(1, -1, -1), Vec(-1, 1, -1), Vec(-1, -1, 1)}, 3);
}

inline Vec random_point(std::mt19937_64& rng, int dim, double radius = 1.0) {
    std::uniform_real_distribution<double> d(-radius, radius);
    Vec p = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) p[i] = d(rng);
    return p;
}

inline ConvexBody random_polygon(std::mt19937_64& rng, int nv) {
    std::uniform_real_distribution<double> jit(0.0, 1.0), rad(0.5, 1.4);
    std::vector<Vec> pts;
    for (int i = 0; i < nv; ++i) {
        const double a = 2.0 * M_PI * (i + 0.8 * jit(rng)) / nv;
        const double r = rad(rng);
        pts.push_back(Vec(r * std::cos(a), r * std::sin(a)));
    }
    return convex_hull(pts, 2);
}

inline ConvexBody random_polytope3(std::mt19937_64& rng, int npts) {
    std::vector<Vec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(random_point(rng, 3));
    ConvexBody b = convex_hull(pts, 3);
    while (b.affine_dim() < 3) {
        pts.push_back(random_point(rng, 3));
        b = convex_hull(pts, 3);
    }
    return b;
}

// random strict convex combination of the vertices
inline Vec random_inner_point(std::mt19937_64& rng, const ConvexBody& body) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<double> w(body.vertices().size());
    double tot = 0.0;
    for (auto& wi : w) tot += (wi = unif(rng));
    Vec p = Vec::zero(body.ambient_dim());
    for (size_t i = 0; i < w.size(); ++i) p += (w[i] / tot) * body.vertices()[i];
    return p;
}

}  // namespace homcov::testutil
