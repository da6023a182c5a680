#pragma once

#include "spcol/boundary.hpp"
#include "spcol/collocation.hpp"
#include "spcol/field.hpp"
#include "spcol/linsys.hpp"

#include <functional>
#include <optional>

namespace spcol {

enum class flow_form { velocity_pressure, rotational };

// PSPG parameter tau = h^2 / (c2 mu).
double tau_pspg_stokes(double h, double mu, double c2 = 4.0);

struct stokes_problem {
    flow_form form = flow_form::velocity_pressure;
    double mu = 1.0;
    std::function<vec2(vec2)> forcing;
    std::function<mat2(vec2)> forcing_grad;  // [m][j] = d f_m / d x_j
    std::function<vec2(vec2)> dirichlet;
    std::vector<bc_segment<vec2>> segments;  // regularized boundary when nonempty
    double edge_constant = 1.0;              // C in the boundary continuity term
    double c2 = 4.0;
    bool pspg = true;
    bool fix_gauge = true;                   // pure Dirichlet: pin + zero-mean shift
};

struct stokes_solution {
    spline_field u;                      // 2 components
    spline_field p;
    std::optional<spline_field> omega;   // rotational form only
    double gauge_shift = 0.0;            // amount subtracted from p
};

// Unknowns per collocation point: u_x, u_y, p and, in rotational form, omega.
int field_count(flow_form form);

// Unknown / equation slot of (point, field); fields interleave per point.
inline int dof_index(int point_linear, int field, int n_fields) {
    return point_linear * n_fields + field;
}

// Linear id of the collocation point nearest the domain center; its
// continuity row is the one sacrificed for the pressure gauge.
int center_point(const collocation_set& set);

linear_system assemble_stokes(const stokes_problem&, const tensor_space_2d&,
                              const collocation_set&, const mesh_metrics&);

// Replaces the continuity row at the center point with a pressure pin.
void fix_pressure_gauge(linear_system&, const stokes_problem&, const collocation_set&);

stokes_solution solve_stokes(const stokes_problem&, const tensor_space_2d&);

}  // namespace spcol
