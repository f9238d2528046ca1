#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcov {

/// Small fixed-capacity vector for points and directions in dimension 1..3.
/// The spec-level geometry lives in dimensions 2 and 3; dimension 1 shows up
/// internally when degenerate bodies are handled in their own affine hull.
class Vec {
public:
    Vec() = default;
    Vec(double x, double y) : c_{x, y, 0.0}, dim_(2) {}
    Vec(double x, double y, double z) : c_{x, y, z}, dim_(3) {}

    static Vec zero(int dim) {
        Vec v;
        v.dim_ = check_dim(dim);
        return v;
    }
    static Vec of(const std::vector<double>& coords) {
        Vec v;
        v.dim_ = check_dim(static_cast<int>(coords.size()));
        for (int i = 0; i < v.dim_; ++i) v.c_[i] = coords[i];
        return v;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < dim_; ++i) c_[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    bool finite() const {
        for (int i = 0; i < dim_; ++i)
            if (!std::isfinite(c_[i])) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i) {
            if (i) s += ", ";
            s += std::to_string(c_[static_cast<size_t>(i)]);
        }
        return s + ")";
    }

private:
    static int check_dim(int d) {
        if (d < 1 || d > 3) throw std::invalid_argument("Vec: dimension must be 1..3");
        return d;
    }

    std::array<double, 3> c_{};
    int dim_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec cross(const Vec& a, const Vec& b) {
    return Vec(a[1] * b[2] - a[2] * b[1],
               a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]);
}

/// 2D cross product (z-component of the 3D one).
inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec normalized(const Vec& a) {
    double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    return a / n;
}

/// Strict lexicographic order on coordinates; used for deterministic tie-breaking.
inline bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

inline bool approx_eq(const Vec& a, const Vec& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return distance(a, b) <= tol;
}

}  // namespace homcov
