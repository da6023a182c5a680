#include "spcol/tensor_space.hpp"

#include <stdexcept>

namespace spcol {

tensor_space_2d::tensor_space_2d(spline_space_1d space, rect domain)
    : space_x_(space), space_y_(std::move(space)), domain_(domain) {
    if (domain_.width() <= 0.0 || domain_.height() <= 0.0) {
        throw std::invalid_argument("tensor_space_2d: degenerate physical rectangle");
    }
}

void tensor_space_2d::eval_nonzero(vec2 phys, int max_d, basis_eval_2d& out,
                                   jump_rule rule) const {
    const vec2 param = to_parametric(phys);

    thread_local std::vector<double> tx, ty;
    out.wx = space_x_.eval_nonzero(param.x, max_d, rule, tx);
    out.wy = space_y_.eval_nonzero(param.y, max_d, rule, ty);
    out.max_d = max_d;

    const double sx = 1.0 / domain_.width();
    const double sy = 1.0 / domain_.height();
    double scale[4][4];  // scale[a][b] = sx^a sy^b
    for (int a = 0; a <= max_d; ++a) {
        for (int b = 0; a + b <= max_d; ++b) {
            double s = 1.0;
            for (int i = 0; i < a; ++i) s *= sx;
            for (int i = 0; i < b; ++i) s *= sy;
            scale[a][b] = s;
        }
    }

    out.vals.assign(static_cast<std::size_t>(out.wx.count) * out.wy.count, partials{});
    for (int jy = 0; jy < out.wy.count; ++jy) {
        for (int jx = 0; jx < out.wx.count; ++jx) {
            partials& p = out.vals[jx + out.wx.count * jy];
            for (int a = 0; a <= max_d; ++a) {
                for (int b = 0; a + b <= max_d; ++b) {
                    p(a, b) = tx[a * out.wx.count + jx] * ty[b * out.wy.count + jy]
                              * scale[a][b];
                }
            }
        }
    }
}

}  // namespace spcol
