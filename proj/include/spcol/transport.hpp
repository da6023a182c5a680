#pragma once

#include "spcol/boundary.hpp"
#include "spcol/collocation.hpp"
#include "spcol/field.hpp"
#include "spcol/linsys.hpp"

#include <functional>

namespace spcol {

// SUPG parameter tau = 1 / sqrt((2|u|/h)^2 + (c1 kappa / h^2)^2).
double tau_supg_ad(double u_norm, double kappa, double h, double c1 = 4.0);

// ----------------------------------------------------------------------
// Steady advection-diffusion, u . grad(phi) - kappa lap(phi) = f.
// ----------------------------------------------------------------------

struct ad_problem_1d {
    std::function<double(double)> velocity;
    std::function<double(double)> velocity_deriv;
    double kappa = 1.0;
    std::function<double(double)> forcing;
    std::function<double(double)> forcing_deriv;
    double g_left = 0.0;
    double g_right = 0.0;
    bool supg = true;
    double c1 = 4.0;
};

struct ad_problem_2d {
    std::function<vec2(vec2)> velocity;
    std::function<mat2(vec2)> velocity_grad;  // [m][j] = d u_m / d x_j
    double kappa = 1.0;
    std::function<double(vec2)> forcing;
    std::function<vec2(vec2)> forcing_grad;
    // Smooth data is collocated; piecewise-constant segments, when present,
    // switch the boundary to the regularized treatment (boundary coefficients
    // pinned, boundary collocation rows dropped).
    std::function<double(vec2)> dirichlet;
    std::vector<bc_segment<double>> segments;
    bool supg = true;
    double c1 = 4.0;
};

// Per-point SUPG parameter values for the problem; the interpolated field of
// these values supplies the tau derivatives in the stabilized rows.
std::vector<double> tau_values_ad_1d(const ad_problem_1d&, const spline_space_1d&,
                                     const mesh_metrics_1d&);
std::vector<double> tau_values_ad_2d(const ad_problem_2d&, const collocation_set&,
                                     const mesh_metrics&);

linear_system assemble_ad_1d(const ad_problem_1d&, const spline_space_1d&,
                             const mesh_metrics_1d&,
                             const spline_field_1d* tau_override = nullptr);
linear_system assemble_ad_2d(const ad_problem_2d&, const tensor_space_2d&,
                             const collocation_set&, const mesh_metrics&,
                             const spline_field* tau_override = nullptr);

spline_field_1d solve_ad_1d(const ad_problem_1d&, const spline_space_1d&);
spline_field solve_ad_2d(const ad_problem_2d&, const tensor_space_2d&);

// Max |u . grad(phi) - kappa lap(phi) - f| over interior collocation points;
// measures how far a (stabilized) solution is from plain collocation.
double max_interior_residual_1d(const ad_problem_1d&, const spline_space_1d&,
                                const spline_field_1d& phi);
double max_interior_residual_2d(const ad_problem_2d&, const collocation_set&,
                                const spline_field& phi);

}  // namespace spcol
