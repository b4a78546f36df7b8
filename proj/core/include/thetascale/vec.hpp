#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "thetascale/errors.hpp"

namespace thetascale {

// Spatial vector with runtime dimension 1..3. Unused components stay zero,
// so norms and dot products can always run over all three slots.
struct Vec {
    int dim = 3;
    std::array<double, 3> c{0.0, 0.0, 0.0};

    Vec() = default;
    explicit Vec(int d) : dim(check_dim(d)) {}
    Vec(double x1, double x2, double x3, int d = 3) : dim(check_dim(d)), c{x1, x2, x3} {}

    static int check_dim(int d) {
        if (d < 1 || d > 3) throw domain_error("vector dimension must be 1..3");
        return d;
    }

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec operator+(const Vec& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], dim}; }
    Vec operator-(const Vec& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], dim}; }
    Vec operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s, dim}; }
    Vec operator/(double s) const { return {c[0] / s, c[1] / s, c[2] / s, dim}; }
    Vec& operator+=(const Vec& o) {
        c[0] += o.c[0];
        c[1] += o.c[1];
        c[2] += o.c[2];
        return *this;
    }

    double dot(const Vec& o) const { return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

// Event: time plus spatial position.
struct Point {
    double t = 0.0;
    Vec x;

    Point() = default;
    Point(double t_, Vec x_) : t(t_), x(x_) {}
};

} // namespace thetascale
