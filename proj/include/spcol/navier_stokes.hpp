#pragma once

#include "spcol/boundary.hpp"
#include "spcol/collocation.hpp"
#include "spcol/field.hpp"
#include "spcol/linsys.hpp"
#include "spcol/stokes.hpp"

#include <functional>
#include <optional>

namespace spcol {

// SUPG/PSPG parameter for the nonlinear schemes; the rotational form scales
// the velocity-pressure value by s_rot.
double tau_supg_pspg_ns(double u_norm, double nu, double h, flow_form form,
                        double c3 = 4.0, double s_rot = 0.1);
double tau_grad_div(double h, double nu);

struct ns_problem {
    flow_form form = flow_form::velocity_pressure;
    double nu = 1.0;
    std::function<vec2(vec2)> forcing;
    std::function<mat2(vec2)> forcing_grad;     // [m][j] = d f_m / d x_j
    std::function<vec2(vec2)> dirichlet;
    std::vector<bc_segment<vec2>> segments;     // regularized boundary when nonempty
    std::vector<domain_edge> neumann_edges;     // corners stay with Dirichlet data
    std::function<vec2(vec2)> neumann;          // (-nu grad(u) n + p n) data
    double edge_constant = 1.0;                 // C
    double c3 = 4.0;
    double s_rot = 0.1;
    bool supg = true;
    bool pspg = true;
    bool graddiv = true;
    bool fix_gauge = true;                      // applies only without Neumann edges
};

struct newton_options {
    int max_iterations = 50;
    double tolerance = 1e-10;
    int max_backtracks = 12;
    // Adds the pointwise dtau/du coupling to the Jacobian; tau interpolation
    // coupling across points is always lagged.
    bool differentiate_tau = false;
    bool verbose = false;
};

enum class ns_initial_guess { zero, stokes_solve };

struct newton_report {
    bool converged = false;
    int iterations = 0;
    std::vector<double> residual_history;
    double scale = 1.0;
    std::string failure;
};

struct ns_solution {
    spline_field u;                      // 2 components
    spline_field pressure;               // kinematic p (vp) or total P (rotational)
    std::optional<spline_field> omega;
    newton_report report;
    double gauge_shift = 0.0;

    // Kinematic pressure at a point; subtracts |u|^2/2 in rotational form.
    double kinematic_pressure(vec2 phys) const;
    vec2 kinematic_pressure_grad(vec2 phys) const;
};

// SUPG/PSPG and grad-div parameter fields; rebuilt from the current Newton
// iterate and frozen within the step.
struct ns_tau_fields {
    spline_field supg;      // also the PSPG field
    spline_field graddiv;
};

// Collocated residual and analytic Jacobian of the stabilized schemes,
// bound to one discretization.
class ns_system {
public:
    ns_system(const ns_problem& prob, const tensor_space_2d& space,
              const collocation_set& set, const mesh_metrics& metrics);

    int fields() const { return nf_; }
    int unknowns() const { return nf_ * set_->size(); }
    const collocation_set& set() const { return *set_; }

    Eigen::VectorXd zero_state() const { return Eigen::VectorXd::Zero(unknowns()); }
    ns_tau_fields build_tau(const Eigen::VectorXd& state) const;

    Eigen::VectorXd residual(const Eigen::VectorXd& state, const ns_tau_fields& taus) const;
    // Jacobian rows, with rhs preloaded to -residual so the returned system
    // solves for the Newton update directly.
    linear_system jacobian(const Eigen::VectorXd& state, const ns_tau_fields& taus,
                           bool differentiate_tau = false) const;

    // One linear solve of the zero-state linearization (a stabilized Stokes
    // solve), usable as a Newton initial guess.
    Eigen::VectorXd stokes_initial() const;

    ns_solution extract(const Eigen::VectorXd& state, newton_report report) const;

    ns_solution solve(const newton_options& opts = {},
                      ns_initial_guess init = ns_initial_guess::zero,
                      const Eigen::VectorXd* given_state = nullptr) const;

private:
    const ns_problem* prob_;
    const tensor_space_2d* space_;
    const collocation_set* set_;
    const mesh_metrics* metrics_;
    greville_interpolator_2d interp_;
    int nf_;
    int gauge_point_ = -1;
    std::vector<char> neumann_point_;
    std::vector<std::optional<vec2>> pinned_;
};

ns_solution solve_ns(const ns_problem&, const tensor_space_2d&, const newton_options& = {},
                     ns_initial_guess init = ns_initial_guess::zero);

// Solves a sequence of Reynolds numbers, reusing each converged state as the
// next initial guess. Returns the solution at the final value.
ns_solution solve_ns_continuation(const std::function<ns_problem(double)>& make_problem,
                                  const std::vector<double>& reynolds_values,
                                  const tensor_space_2d& space, const newton_options& = {});

}  // namespace spcol
