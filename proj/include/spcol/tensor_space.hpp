#pragma once

#include "spcol/bspline.hpp"
#include "spcol/geometry.hpp"

#include <array>
#include <vector>

namespace spcol {

// Flat index of the physical partial d^{a+b} / dx^a dy^b, a + b <= 3.
constexpr int partial_index(int a, int b) {
    constexpr int base[4] = {0, 1, 3, 6};  // start of each total order
    return base[a + b] + b;
}

inline constexpr int partial_count = 10;

// All partials of one function at one point, indexed by partial_index.
struct partials {
    std::array<double, partial_count> v{};

    double operator()(int a, int b) const { return v[partial_index(a, b)]; }
    double& operator()(int a, int b) { return v[partial_index(a, b)]; }
};

// Window of tensor basis functions with their physical partials at a point.
// vals is x-fastest: vals[jx + wx.count * jy] belongs to basis
// (wx.first + jx, wy.first + jy).
struct basis_eval_2d {
    basis_window wx, wy;
    int max_d = 0;
    std::vector<partials> vals;
};

// Tensor-product spline space over a physical rectangle. Both directions use
// the same degree and knot vector; the rectangle is an affine image of the
// parametric unit square and derivatives are chain-ruled through it.
class tensor_space_2d {
public:
    explicit tensor_space_2d(spline_space_1d space, rect domain = {});

    const spline_space_1d& space_x() const { return space_x_; }
    const spline_space_1d& space_y() const { return space_y_; }
    const rect& domain() const { return domain_; }

    int degree() const { return space_x_.degree(); }
    int nx() const { return space_x_.dimension(); }
    int ny() const { return space_y_.dimension(); }
    int dimension() const { return nx() * ny(); }

    int linear_index(int ix, int iy) const { return ix + nx() * iy; }
    std::array<int, 2> tensor_index(int linear) const {
        return {linear % nx(), linear / nx()};
    }

    vec2 to_physical(vec2 param) const {
        return {domain_.x0 + param.x * domain_.width(), domain_.y0 + param.y * domain_.height()};
    }
    vec2 to_parametric(vec2 phys) const {
        return {(phys.x - domain_.x0) / domain_.width(), (phys.y - domain_.y0) / domain_.height()};
    }

    // Physical coordinates of the tensor Greville point (ix, iy).
    vec2 greville_point(int ix, int iy) const {
        return to_physical({space_x_.greville()[ix], space_y_.greville()[iy]});
    }

    // Nonzero basis functions and physical partials up to max_d at a
    // physical point. Throws std::domain_error outside the rectangle.
    void eval_nonzero(vec2 phys, int max_d, basis_eval_2d& out,
                      jump_rule rule = jump_rule::average) const;

private:
    spline_space_1d space_x_;
    spline_space_1d space_y_;
    rect domain_;
};

}  // namespace spcol
