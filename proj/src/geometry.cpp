#include <algorithm>
#include <cmath>
#include <limits>

#include "homcov/body.hpp"
#include "homcov/lp.hpp"

namespace homcov {

bool contains(const ConvexBody& body, const Vec& x, double tol) {
    if (x.dim() != body.ambient_dim())
        throw std::invalid_argument("contains: point dimension mismatch");
    if (body.affine_dim() == 0) return distance(x, body.vertices().front()) <= tol;
    if (body.full_dimensional()) {
        for (const auto& f : body.facets())
            if (dot(f.normal, x) > f.offset + tol) return false;
        return true;
    }
    if (body.frame().offhull_distance(x) > tol) return false;
    const Vec t = body.frame().to_coords(x);
    for (const auto& f : body.intrinsic_facets())
        if (dot(f.normal, t) > f.offset + tol) return false;
    return true;
}

double gauge(const ConvexBody& body, const Vec& v) {
    const double tol = Tolerances::global().geometric;
    if (v.dim() != body.ambient_dim())
        throw std::invalid_argument("gauge: dimension mismatch");
    if (body.affine_dim() == 0)
        throw std::invalid_argument("gauge: origin not interior (single-point body)");

    const Vec origin = Vec::zero(body.ambient_dim());
    std::vector<Halfspace> hs;
    Vec vv = v;
    if (body.full_dimensional()) {
        hs = body.facets();
    } else {
        // operate inside the affine hull, which must pass through the origin
        if (body.frame().offhull_distance(origin) > tol)
            throw std::invalid_argument("gauge: origin not interior (off the affine hull)");
        if (body.frame().offhull_distance(v) >
            body.frame().offhull_distance(origin) + tol * (1.0 + norm(v)))
            return std::numeric_limits<double>::infinity();
        // re-anchor the chart at the origin so scaling acts linearly
        const Vec o_coords = body.frame().to_coords(origin);
        hs = body.intrinsic_facets();
        for (auto& f : hs) f.offset -= dot(f.normal, o_coords);
        vv = body.frame().to_coords(v) - o_coords;
    }
    double g = 0.0;
    for (const auto& f : hs) {
        if (f.offset <= tol)
            throw std::invalid_argument("gauge: origin not interior to the body");
        g = std::max(g, dot(f.normal, vv) / f.offset);
    }
    return g;
}

SupportResult support(const ConvexBody& body, const Vec& u, double tol) {
    if (norm(u) == 0.0) throw std::invalid_argument("support: zero direction");
    if (u.dim() != body.ambient_dim())
        throw std::invalid_argument("support: dimension mismatch");
    SupportResult r;
    r.value = -std::numeric_limits<double>::infinity();
    for (const auto& v : body.vertices()) r.value = std::max(r.value, dot(u, v));
    double scale = 1.0;
    for (const auto& v : body.vertices()) scale = std::max(scale, norm(v));
    const double face_tol = tol * norm(u) * scale * 10.0 + tol;
    for (size_t i = 0; i < body.vertices().size(); ++i)
        if (dot(u, body.vertices()[i]) >= r.value - face_tol) r.face.push_back(static_cast<int>(i));
    return r;
}

Vec interior_point(const ConvexBody& body) {
    Vec c = Vec::zero(body.ambient_dim());
    for (const auto& v : body.vertices()) c += v;
    return c * (1.0 / static_cast<double>(body.vertices().size()));
}

AffineChord longest_chord(const ConvexBody& body, const Vec& w) {
    const double tol = Tolerances::global().geometric;
    if (norm(w) == 0.0) throw std::invalid_argument("longest_chord: zero direction");
    if (w.dim() != body.ambient_dim())
        throw std::invalid_argument("longest_chord: dimension mismatch");
    if (body.affine_dim() < 1)
        throw std::invalid_argument("longest_chord: body has no chords");

    // w must be parallel to the affine hull, else no chord exists
    Vec w_res = w;
    for (const auto& b : body.frame().basis) w_res -= dot(b, w_res) * b;
    if (body.full_dimensional()) w_res = Vec::zero(body.ambient_dim());
    if (norm(w_res) > tol * norm(w))
        throw std::invalid_argument("longest_chord: direction leaves the affine hull");

    const int k = body.affine_dim();
    const auto& hs = body.intrinsic_facets();
    Vec w_loc = Vec::zero(k);
    if (body.full_dimensional()) {
        w_loc = w;
    } else {
        for (int i = 0; i < k; ++i) w_loc[i] = dot(body.frame().basis[static_cast<size_t>(i)], w);
    }

    // maximize t subject to p in K and p + t w in K, t >= 0
    auto feasibility = [&](lp::LinearProgram& prog) {
        for (const auto& f : hs) {
            std::vector<double> row(static_cast<size_t>(k) + 1, 0.0);
            for (int i = 0; i < k; ++i) row[static_cast<size_t>(i)] = f.normal[i];
            prog.add_le(row, f.offset);
            std::vector<double> row2(static_cast<size_t>(k) + 1, 0.0);
            for (int i = 0; i < k; ++i) row2[static_cast<size_t>(i)] = f.normal[i];
            row2[static_cast<size_t>(k)] = dot(f.normal, w_loc);
            prog.add_le(row2, f.offset);
        }
        for (int i = 0; i < k; ++i) prog.set_bounds(i, -lp::kInf, lp::kInf);
        prog.set_bounds(k, 0.0, lp::kInf);
    };

    lp::LinearProgram max_t;
    max_t.objective.assign(static_cast<size_t>(k) + 1, 0.0);
    max_t.objective[static_cast<size_t>(k)] = 1.0;
    feasibility(max_t);
    auto out = lp::solve(max_t);
    if (out.status != lp::LpStatus::Optimal)
        throw std::runtime_error("longest_chord: chord LP failed");
    const double t_star = out.objective_value;

    // Tie-break: lexicographically smallest head u = p + t* w, coordinate by
    // coordinate in ambient space.
    std::vector<double> p_loc = out.solution;
    {
        lp::LinearProgram lex;
        lex.objective.assign(static_cast<size_t>(k) + 1, 0.0);
        feasibility(lex);
        std::vector<double> trow(static_cast<size_t>(k) + 1, 0.0);
        trow[static_cast<size_t>(k)] = 1.0;
        lex.add_eq(trow, t_star);
        for (int axis = 0; axis < body.ambient_dim(); ++axis) {
            // head coordinate as a linear function of (p_loc, t)
            std::vector<double> coef(static_cast<size_t>(k) + 1, 0.0);
            double base = 0.0;
            if (body.full_dimensional()) {
                coef[static_cast<size_t>(axis)] = 1.0;
                coef[static_cast<size_t>(k)] = w[axis];
            } else {
                base = body.frame().anchor[axis];
                for (int i = 0; i < k; ++i)
                    coef[static_cast<size_t>(i)] = body.frame().basis[static_cast<size_t>(i)][axis];
                coef[static_cast<size_t>(k)] = w[axis];
            }
            for (size_t i = 0; i < coef.size(); ++i) lex.objective[i] = -coef[i];  // minimize
            auto step = lp::solve(lex);
            if (step.status != lp::LpStatus::Optimal) break;  // keep the last good point
            p_loc = step.solution;
            lex.add_eq(coef, -step.objective_value + 0.0);
            (void)base;
        }
    }

    Vec p = Vec::zero(body.ambient_dim());
    if (body.full_dimensional()) {
        for (int i = 0; i < k; ++i) p[i] = p_loc[static_cast<size_t>(i)];
    } else {
        Vec pk = Vec::zero(k);
        for (int i = 0; i < k; ++i) pk[i] = p_loc[static_cast<size_t>(i)];
        p = body.frame().from_coords(pk);
    }
    AffineChord chord;
    chord.v = p;
    chord.u = p + t_star * w;
    chord.length = distance(chord.u, chord.v);
    return chord;
}

}  // namespace homcov
