#pragma once

#include <cmath>
#include <stdexcept>

namespace igd {

// Point in R^1 or R^2. Univariate data keeps y == 0 and dim == 1; mixing
// dimensions in an operation is an error, not an implicit zero-fill.
struct Vec {
    double x = 0.0;
    double y = 0.0;
    int dim = 1;

    static Vec make1(double x) { return Vec{x, 0.0, 1}; }
    static Vec make2(double x, double y) { return Vec{x, y, 2}; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline void check_same_dim(const Vec& a, const Vec& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("vector dimension mismatch");
    }
}

inline double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    return a.x * b.x + a.y * b.y;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    return Vec{a.x + b.x, a.y + b.y, a.dim};
}

inline Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    return Vec{a.x - b.x, a.y - b.y, a.dim};
}

inline Vec operator*(double s, const Vec& a) { return Vec{s * a.x, s * a.y, a.dim}; }

// Rotation by +90 or -90 degrees; defined only in dimension 2.
inline Vec rot90(const Vec& a, int orientation) {
    if (a.dim != 2) {
        throw std::invalid_argument("rot90 requires a 2-dimensional vector");
    }
    if (orientation >= 0) return Vec{-a.y, a.x, 2};
    return Vec{a.y, -a.x, 2};
}

}  // namespace igd
