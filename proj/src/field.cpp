#include "spcol/field.hpp"

#include "spcol/errors.hpp"
#include "spcol/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace spcol {

spline_field::spline_field(const tensor_space_2d& space, int components)
    : space_(&space),
      coef_(static_cast<std::size_t>(components) * space.dimension(), 0.0),
      components_(components),
      dim_(space.dimension()) {}

spline_field::spline_field(const tensor_space_2d& space, std::vector<double> coefficients,
                           int components)
    : space_(&space), coef_(std::move(coefficients)), components_(components),
      dim_(space.dimension()) {
    if (static_cast<int>(coef_.size()) != components_ * dim_) {
        throw std::invalid_argument("spline_field: coefficient count "
                                    + std::to_string(coef_.size()) + " does not match "
                                    + std::to_string(components_) + " x "
                                    + std::to_string(dim_));
    }
}

double spline_field::eval(vec2 phys, int a, int b, int component, jump_rule rule) const {
    thread_local basis_eval_2d basis;
    space_->eval_nonzero(phys, a + b, basis, rule);
    const double* c = coef_.data() + static_cast<std::size_t>(component) * dim_;
    double sum = 0.0;
    for (int jy = 0; jy < basis.wy.count; ++jy) {
        const int row = space_->linear_index(basis.wx.first, basis.wy.first + jy);
        for (int jx = 0; jx < basis.wx.count; ++jx) {
            sum += basis.vals[jx + basis.wx.count * jy](a, b) * c[row + jx];
        }
    }
    return sum;
}

vec2 spline_field::eval_vec(vec2 phys, int a, int b, jump_rule rule) const {
    thread_local basis_eval_2d basis;
    space_->eval_nonzero(phys, a + b, basis, rule);
    vec2 out{};
    for (int comp = 0; comp < 2; ++comp) {
        const double* c = coef_.data() + static_cast<std::size_t>(comp) * dim_;
        double sum = 0.0;
        for (int jy = 0; jy < basis.wy.count; ++jy) {
            const int row = space_->linear_index(basis.wx.first, basis.wy.first + jy);
            for (int jx = 0; jx < basis.wx.count; ++jx) {
                sum += basis.vals[jx + basis.wx.count * jy](a, b) * c[row + jx];
            }
        }
        (comp == 0 ? out.x : out.y) = sum;
    }
    return out;
}

void spline_field::shift(int component, double amount) {
    for (int i = 0; i < dim_; ++i) {
        coef_[component * dim_ + i] += amount;
    }
}

spline_field_1d::spline_field_1d(const spline_space_1d& space, std::vector<double> coefficients)
    : space_(&space), coef_(std::move(coefficients)) {
    if (static_cast<int>(coef_.size()) != space.dimension()) {
        throw std::invalid_argument("spline_field_1d: coefficient count mismatch");
    }
}

double spline_field_1d::eval(double x, int deriv, jump_rule rule) const {
    thread_local std::vector<double> table;
    const basis_window w = space_->eval_nonzero(x, deriv, rule, table);
    double sum = 0.0;
    for (int j = 0; j < w.count; ++j) {
        sum += table[deriv * w.count + j] * coef_[w.first + j];
    }
    return sum;
}

namespace {

Eigen::SparseMatrix<double> greville_matrix_1d(const spline_space_1d& space) {
    const int n = space.dimension();
    std::vector<Eigen::Triplet<double>> triplets;
    std::vector<double> table;
    for (int i = 0; i < n; ++i) {
        const basis_window w = space.eval_nonzero(space.greville()[i], 0,
                                                  jump_rule::average, table);
        for (int j = 0; j < w.count; ++j) {
            triplets.emplace_back(i, w.first + j, table[j]);
        }
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(triplets.begin(), triplets.end());
    return A;
}

Eigen::SparseMatrix<double> greville_matrix_2d(const tensor_space_2d& space) {
    const int n = space.dimension();
    std::vector<Eigen::Triplet<double>> triplets;
    basis_eval_2d basis;
    for (int iy = 0; iy < space.ny(); ++iy) {
        for (int ix = 0; ix < space.nx(); ++ix) {
            const int row = space.linear_index(ix, iy);
            space.eval_nonzero(space.greville_point(ix, iy), 0, basis);
            for (int jy = 0; jy < basis.wy.count; ++jy) {
                for (int jx = 0; jx < basis.wx.count; ++jx) {
                    const int col = space.linear_index(basis.wx.first + jx, basis.wy.first + jy);
                    triplets.emplace_back(row, col, basis.vals[jx + basis.wx.count * jy](0, 0));
                }
            }
        }
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(triplets.begin(), triplets.end());
    return A;
}

}  // namespace

greville_interpolator_1d::greville_interpolator_1d(const spline_space_1d& space)
    : space_(&space) {
    try {
        solver_ = std::make_unique<direct_solver>(greville_matrix_1d(space));
    } catch (const singular_system_error& e) {
        throw interpolation_error("greville interpolation singular for degree "
                                  + std::to_string(space.degree()) + ", "
                                  + std::to_string(space.knots().element_count())
                                  + " elements: " + e.what());
    }
}

spline_field_1d greville_interpolator_1d::fit(const std::vector<double>& values) const {
    const int n = space_->dimension();
    if (static_cast<int>(values.size()) != n) {
        throw std::invalid_argument("fit: expected " + std::to_string(n) + " values");
    }
    Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(values.data(), n);
    Eigen::VectorXd c = solver_->solve(b);
    return spline_field_1d(*space_, std::vector<double>(c.data(), c.data() + n));
}

greville_interpolator_2d::greville_interpolator_2d(const tensor_space_2d& space)
    : space_(&space) {
    try {
        solver_ = std::make_unique<direct_solver>(greville_matrix_2d(space));
    } catch (const singular_system_error& e) {
        throw interpolation_error("greville interpolation singular for degree "
                                  + std::to_string(space.degree()) + ", "
                                  + std::to_string(space.space_x().knots().element_count())
                                  + " elements per direction: " + e.what());
    }
}

spline_field greville_interpolator_2d::fit(const std::vector<double>& values,
                                           int components) const {
    const int n = space_->dimension();
    if (static_cast<int>(values.size()) != components * n) {
        throw std::invalid_argument("fit: expected " + std::to_string(components * n)
                                    + " values");
    }
    std::vector<double> coef(values.size());
    for (int comp = 0; comp < components; ++comp) {
        Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(values.data() + comp * n, n);
        Eigen::VectorXd c = solver_->solve(b);
        Eigen::Map<Eigen::VectorXd>(coef.data() + comp * n, n) = c;
    }
    return spline_field(*space_, std::move(coef), components);
}

spline_field_1d fit_spline(const spline_space_1d& space, const std::vector<double>& values) {
    return greville_interpolator_1d(space).fit(values);
}

spline_field fit_spline(const tensor_space_2d& space, const std::vector<double>& values,
                        int components) {
    return greville_interpolator_2d(space).fit(values, components);
}

double quadrature_mean(const spline_field& field, int component) {
    const tensor_space_2d& space = field.space();
    const gauss_rule base = gauss_legendre(space.degree() + 1);
    const auto& bx = space.space_x().knots().breakpoints();
    const auto& by = space.space_y().knots().breakpoints();

    double integral = 0.0;
    for (std::size_t ex = 0; ex + 1 < bx.size(); ++ex) {
        const gauss_rule qx = gauss_on_interval(base, bx[ex], bx[ex + 1]);
        for (std::size_t ey = 0; ey + 1 < by.size(); ++ey) {
            const gauss_rule qy = gauss_on_interval(base, by[ey], by[ey + 1]);
            for (std::size_t ix = 0; ix < qx.nodes.size(); ++ix) {
                for (std::size_t iy = 0; iy < qy.nodes.size(); ++iy) {
                    const vec2 phys = space.to_physical({qx.nodes[ix], qy.nodes[iy]});
                    integral += qx.weights[ix] * qy.weights[iy]
                                * field.eval(phys, 0, 0, component);
                }
            }
        }
    }
    // parametric weights sum to 1, so the area factors of integral and mean
    // cancel and the parametric integral is already the physical mean
    return integral;
}

}  // namespace spcol
