#pragma once

#include <array>
#include <cmath>

namespace spcol {

struct vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline vec2 operator+(vec2 a, vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline vec2 operator-(vec2 a, vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline vec2 operator*(double s, vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(vec2 a, vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(vec2 a) { return std::sqrt(dot(a, a)); }

// 2x2 matrix, row-major; m[i][j] = d u_i / d x_j when used as a gradient.
using mat2 = std::array<std::array<double, 2>, 2>;

// Physical rectangle [x0,x1] x [y0,y1].
struct rect {
    double x0 = 0.0;
    double x1 = 1.0;
    double y0 = 0.0;
    double y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    vec2 center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
};

}  // namespace spcol
