#pragma once

#include "spcol/bspline.hpp"
#include "spcol/geometry.hpp"
#include "spcol/linsys.hpp"
#include "spcol/tensor_space.hpp"

#include <memory>
#include <vector>

namespace spcol {

// Coefficient vector over a tensor spline space, one value (or one per
// component) for every basis function. Component c of basis (ix, iy) lives at
// coefficients[c * dim + linear_index(ix, iy)]. The space is not owned and
// must outlive the field.
class spline_field {
public:
    spline_field() = default;
    spline_field(const tensor_space_2d& space, int components);
    spline_field(const tensor_space_2d& space, std::vector<double> coefficients,
                 int components = 1);

    const tensor_space_2d& space() const { return *space_; }
    int components() const { return components_; }
    const std::vector<double>& coefficients() const { return coef_; }
    std::vector<double>& coefficients() { return coef_; }

    double& coef(int component, int linear) { return coef_[component * dim_ + linear]; }
    double coef(int component, int linear) const { return coef_[component * dim_ + linear]; }

    // d^{a+b} / dx^a dy^b of the given component at a physical point.
    double eval(vec2 phys, int a = 0, int b = 0, int component = 0,
                jump_rule rule = jump_rule::average) const;
    vec2 eval_vec(vec2 phys, int a = 0, int b = 0, jump_rule rule = jump_rule::average) const;

    // Adds `shift` to every coefficient of a component (pressure gauge).
    void shift(int component, double amount);

private:
    const tensor_space_2d* space_ = nullptr;
    std::vector<double> coef_;
    int components_ = 1;
    int dim_ = 0;
};

// Univariate field on the parametric interval [0,1].
class spline_field_1d {
public:
    spline_field_1d() = default;
    spline_field_1d(const spline_space_1d& space, std::vector<double> coefficients);

    const spline_space_1d& space() const { return *space_; }
    const std::vector<double>& coefficients() const { return coef_; }

    double eval(double x, int deriv = 0, jump_rule rule = jump_rule::average) const;

private:
    const spline_space_1d* space_ = nullptr;
    std::vector<double> coef_;
};

// Interpolation at the Greville abscissae, with the collocation matrix
// factorized once so repeated fits (e.g. per Newton iteration) are cheap.
class greville_interpolator_1d {
public:
    explicit greville_interpolator_1d(const spline_space_1d& space);
    spline_field_1d fit(const std::vector<double>& values) const;

private:
    const spline_space_1d* space_;
    std::unique_ptr<direct_solver> solver_;
};

class greville_interpolator_2d {
public:
    explicit greville_interpolator_2d(const tensor_space_2d& space);
    // values[linear_index] for scalar fields; for multi-component fields the
    // layout matches spline_field coefficients.
    spline_field fit(const std::vector<double>& values, int components = 1) const;

private:
    const tensor_space_2d* space_;
    std::unique_ptr<direct_solver> solver_;
};

spline_field_1d fit_spline(const spline_space_1d& space, const std::vector<double>& values);
spline_field fit_spline(const tensor_space_2d& space, const std::vector<double>& values,
                        int components = 1);

// Mean of one component over the physical domain, by Gauss quadrature with
// degree+1 points per knot span and direction.
double quadrature_mean(const spline_field& field, int component = 0);

}  // namespace spcol
