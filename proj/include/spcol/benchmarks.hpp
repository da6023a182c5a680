#pragma once

#include "spcol/exact_flow_fields.hpp"
#include "spcol/navier_stokes.hpp"
#include "spcol/stokes.hpp"
#include "spcol/transport.hpp"

#include <string>
#include <vector>

namespace spcol {

// ----------------------------------------------------------------------
// Closed-form benchmark problems
// ----------------------------------------------------------------------

// Scalar manufactured solution: exact field plus a ready-to-solve problem.
struct scalar_ms_1d {
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    ad_problem_1d problem;
};

// phi = (e^{Pe x} - 1) / (e^{Pe} - 1), the exact boundary layer of
// u phi' - kappa phi'' = 0 with u = 1, kappa = 1/Pe, phi(0)=0, phi(1)=1.
scalar_ms_1d boundary_layer_1d(double peclet);
double boundary_layer_exact(double peclet, double x);

// phi = sin(pi x) with Pe = 1 (u = 1, kappa = 1).
scalar_ms_1d sine_ms_1d();

struct scalar_ms_2d {
    std::function<double(vec2)> phi;
    std::function<vec2(vec2)> grad_phi;
    ad_problem_2d problem;
};

// phi = sin(pi x) sin(pi y) with Pe = 1; advection direction angle_deg.
scalar_ms_2d sine_ms_2d(double angle_deg = 45.0);

// Discontinuous inflow data advected at the given angle, Pe large; bottom
// wall and the first tenth of the left wall carry the value 1.
ad_problem_2d skew_advection_problem(double peclet, double angle_deg = 45.0);

enum class equation_kind { stokes_vp, stokes_rot, ns_vp, ns_rot };

// Exact flow fields with the forcing of the chosen governing form.
struct flow_ms {
    rect domain;
    double viscosity = 1.0;
    equation_kind kind = equation_kind::stokes_vp;
    std::function<exact::flow_point(vec2)> fields;
    std::function<void(vec2, double*, double (*)[2])> forcing;  // f[2], grad_f[2][2]
    bool neumann_outflow = false;  // traction data on the right edge
};

flow_ms stokes_vortex_ms(double mu, equation_kind kind);
flow_ms kovasznay_ms(double reynolds, equation_kind kind);
double kovasznay_lambda(double reynolds);

stokes_problem make_stokes_problem(const flow_ms& ms, const stokes_problem& base = {});
ns_problem make_ns_problem(const flow_ms& ms, const ns_problem& base = {});

// Lid-driven cavity on the unit square: regularized lid data (1,0) with
// corners owned by the stationary side walls.
std::vector<bc_segment<vec2>> cavity_lid_segments();
stokes_problem stokes_cavity_problem(flow_form form);
ns_problem ns_cavity_problem(flow_form form, double reynolds);

// ----------------------------------------------------------------------
// Error measurement
// ----------------------------------------------------------------------

struct error_pair {
    double l2 = 0.0;
    double h1 = 0.0;  // seminorm
};

error_pair scalar_error_1d(const spline_field_1d& field,
                           const std::function<double(double)>& exact,
                           const std::function<double(double)>& exact_deriv);
error_pair scalar_error_2d(const spline_field& field, int component,
                           const std::function<double(vec2)>& exact,
                           const std::function<vec2(vec2)>& exact_grad);
error_pair velocity_error(const spline_field& u, const flow_ms& ms);
// Pressure error; in rotational form pass the velocity so the kinematic
// pressure p = P - |u|^2/2 is compared. Means are aligned when adjust_mean.
error_pair pressure_error(const spline_field& pressure, const spline_field* velocity,
                          const flow_ms& ms, bool adjust_mean);

struct error_report {
    int degree = 0;
    int n_elem = 0;
    double h = 0.0;
    int dofs = 0;
    std::string field;
    error_pair error;
};

// Least-squares slope of log(err) vs log(h) over the finest `use_last` meshes.
double fit_rate(const std::vector<double>& h, const std::vector<double>& err,
                int use_last = 3);

// Longest physical knot span (the Bezier mesh size h of a discretization).
double mesh_size(const tensor_space_2d& space);
double mesh_size_1d(const spline_space_1d& space);

// ----------------------------------------------------------------------
// Oscillation, profile, and conservation diagnostics
// ----------------------------------------------------------------------

struct overshoot_result {
    double over = 0.0;
    double under = 0.0;
};

overshoot_result overshoot_metric_1d(const spline_field_1d& field, double lower, double upper,
                                     int samples_per_span = 10);
overshoot_result overshoot_metric_2d(const spline_field& field, int component, double lower,
                                     double upper, int samples_per_span = 10);

struct profile_sample {
    double coord = 0.0;
    double value = 0.0;
};

// u_x along the vertical centerline x = 1/2 and u_y along the horizontal
// centerline y = 1/2 of the unit square.
std::vector<profile_sample> centerline_vertical(const spline_field& u, int n_samples);
std::vector<profile_sample> centerline_horizontal(const spline_field& u, int n_samples);

struct reference_table {
    std::vector<profile_sample> rows;
};

// Plain-text table: '#' comments, two columns "coord value".
reference_table read_reference_table(const std::string& path);

struct profile_deviation {
    double max_abs = 0.0;
    double rms = 0.0;
};

// Deviation of a computed centerline from reference ordinates; orientation
// picks the vertical (u_x) or horizontal (u_y) centerline.
enum class centerline { vertical_ux, horizontal_uy };
profile_deviation compare_reference(const spline_field& u, centerline which,
                                    const reference_table& table);

// max |div u| over the collocation points.
double divergence_max(const spline_field& u, const collocation_set& set);

}  // namespace spcol
