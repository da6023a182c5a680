#include "spcol/transport.hpp"

#include <cmath>
#include <stdexcept>

namespace spcol {

double tau_supg_ad(double u_norm, double kappa, double h, double c1) {
    if (h <= 0.0) {
        throw std::invalid_argument("tau_supg_ad: h must be positive");
    }
    if (u_norm == 0.0 && kappa == 0.0) {
        throw std::invalid_argument("tau_supg_ad: degenerate, u and kappa both zero");
    }
    const double a = 2.0 * u_norm / h;
    const double d = c1 * kappa / (h * h);
    return 1.0 / std::sqrt(a * a + d * d);
}

std::vector<double> tau_values_ad_1d(const ad_problem_1d& prob, const spline_space_1d& space,
                                     const mesh_metrics_1d& metrics) {
    const int n = space.dimension();
    std::vector<double> tau(n);
    for (int i = 0; i < n; ++i) {
        const double u = prob.velocity(space.greville()[i]);
        tau[i] = tau_supg_ad(std::abs(u), prob.kappa, metrics.h[i], prob.c1);
    }
    return tau;
}

std::vector<double> tau_values_ad_2d(const ad_problem_2d& prob, const collocation_set& set,
                                     const mesh_metrics& metrics) {
    std::vector<double> tau(set.size());
    for (int i = 0; i < set.size(); ++i) {
        const vec2 u = prob.velocity(set.point(i).phys);
        tau[i] = tau_supg_ad(norm(u), prob.kappa, metrics.h[i], prob.c1);
    }
    return tau;
}

linear_system assemble_ad_1d(const ad_problem_1d& prob, const spline_space_1d& space,
                             const mesh_metrics_1d& metrics,
                             const spline_field_1d* tau_override) {
    const int n = space.dimension();
    if (prob.supg && space.degree() < 2) {
        throw std::invalid_argument("assemble_ad_1d: SUPG needs degree >= 2");
    }

    spline_field_1d tau_field;
    if (prob.supg && !tau_override) {
        tau_field = fit_spline(space, tau_values_ad_1d(prob, space, metrics));
    }
    const spline_field_1d* tau = tau_override ? tau_override : &tau_field;

    linear_system system(n);
    std::vector<double> table;
    std::vector<std::pair<int, double>> entries;

    // Endpoint basis functions are interpolatory, so the boundary rows reduce
    // to coefficient pins.
    system.set_row(0, {0, "dirichlet"}, {{0, 1.0}}, prob.g_left);
    system.set_row(n - 1, {n - 1, "dirichlet"}, {{n - 1, 1.0}}, prob.g_right);

    for (int i = 1; i < n - 1; ++i) {
        const double x = space.greville()[i];
        const double u = prob.velocity(x);
        const double du = prob.velocity_deriv(x);
        const double f = prob.forcing(x);

        double t = 0.0, dt = 0.0;
        if (prob.supg) {
            t = tau->eval(x, 0);
            dt = tau->eval(x, 1);
        }

        const basis_window w = space.eval_nonzero(x, prob.supg ? 3 : 2,
                                                  jump_rule::average, table);
        entries.clear();
        for (int j = 0; j < w.count; ++j) {
            const double N1 = table[1 * w.count + j];
            const double N2 = table[2 * w.count + j];
            const double core = u * N1 - prob.kappa * N2;
            double coeff = core;
            if (prob.supg) {
                const double N3 = table[3 * w.count + j];
                const double dcore = du * N1 + u * N2 - prob.kappa * N3;
                coeff -= (dt * u + t * du) * core + t * u * dcore;
            }
            entries.emplace_back(w.first + j, coeff);
        }
        double rhs = f;
        if (prob.supg) {
            rhs -= (dt * u + t * du) * f + t * u * prob.forcing_deriv(x);
        }
        system.set_row(i, {i, "interior"}, entries, rhs);
    }
    return system;
}

spline_field_1d solve_ad_1d(const ad_problem_1d& prob, const spline_space_1d& space) {
    const auto metrics = compute_mesh_metrics_1d(space);
    const auto system = assemble_ad_1d(prob, space, metrics);
    const Eigen::VectorXd c = system.solve();
    return spline_field_1d(space, std::vector<double>(c.data(), c.data() + c.size()));
}

linear_system assemble_ad_2d(const ad_problem_2d& prob, const tensor_space_2d& space,
                             const collocation_set& set, const mesh_metrics& metrics,
                             const spline_field* tau_override) {
    if (prob.supg && space.degree() < 2) {
        throw std::invalid_argument("assemble_ad_2d: SUPG needs degree >= 2");
    }
    const int n = space.dimension();

    spline_field tau_field;
    const spline_field* tau = nullptr;
    if (prob.supg) {
        if (tau_override) {
            tau = tau_override;
        } else {
            tau_field = fit_spline(space, tau_values_ad_2d(prob, set, metrics));
            tau = &tau_field;
        }
    }

    const bool regularized = !prob.segments.empty();
    std::vector<std::optional<double>> pinned;
    if (regularized) {
        pinned = assign_segment_values(set, prob.segments);
        for (int id : set.boundary()) {
            if (!pinned[id]) {
                throw std::invalid_argument(
                    "assemble_ad_2d: boundary segments leave point uncovered");
            }
        }
    }

    linear_system system(n);
    basis_eval_2d basis;
    std::vector<std::pair<int, double>> entries;

    for (int id : set.boundary()) {
        const colloc_point& p = set.point(id);
        if (regularized) {
            system.set_row(id, {id, "dirichlet_pin"}, {{id, 1.0}}, *pinned[id]);
        } else {
            space.eval_nonzero(p.phys, 0, basis);
            entries.clear();
            for (int jy = 0; jy < basis.wy.count; ++jy) {
                for (int jx = 0; jx < basis.wx.count; ++jx) {
                    const int col = space.linear_index(basis.wx.first + jx, basis.wy.first + jy);
                    entries.emplace_back(col, basis.vals[jx + basis.wx.count * jy](0, 0));
                }
            }
            system.set_row(id, {id, "dirichlet"}, entries, prob.dirichlet(p.phys));
        }
    }

    for (int id : set.interior()) {
        const colloc_point& p = set.point(id);
        const vec2 u = prob.velocity(p.phys);
        const mat2 gu = prob.velocity_grad(p.phys);
        const double div_u = gu[0][0] + gu[1][1];
        const double f = prob.forcing(p.phys);

        double t = 0.0;
        vec2 gt{};
        if (prob.supg) {
            t = tau->eval(p.phys, 0, 0);
            gt = {tau->eval(p.phys, 1, 0), tau->eval(p.phys, 0, 1)};
        }
        const double drift = dot(gt, u) + t * div_u;

        space.eval_nonzero(p.phys, prob.supg ? 3 : 2, basis);
        entries.clear();
        for (int jy = 0; jy < basis.wy.count; ++jy) {
            for (int jx = 0; jx < basis.wx.count; ++jx) {
                const partials& N = basis.vals[jx + basis.wx.count * jy];
                const double adv = u.x * N(1, 0) + u.y * N(0, 1);
                const double lap = N(2, 0) + N(0, 2);
                const double core = adv - prob.kappa * lap;
                double coeff = core;
                if (prob.supg) {
                    const double dcore_x = gu[0][0] * N(1, 0) + gu[1][0] * N(0, 1)
                                           + u.x * N(2, 0) + u.y * N(1, 1)
                                           - prob.kappa * (N(3, 0) + N(1, 2));
                    const double dcore_y = gu[0][1] * N(1, 0) + gu[1][1] * N(0, 1)
                                           + u.x * N(1, 1) + u.y * N(0, 2)
                                           - prob.kappa * (N(2, 1) + N(0, 3));
                    coeff -= drift * core + t * (u.x * dcore_x + u.y * dcore_y);
                }
                const int col = space.linear_index(basis.wx.first + jx, basis.wy.first + jy);
                entries.emplace_back(col, coeff);
            }
        }
        double rhs = f;
        if (prob.supg) {
            const vec2 gf = prob.forcing_grad(p.phys);
            rhs -= drift * f + t * dot(u, gf);
        }
        system.set_row(id, {id, "interior"}, entries, rhs);
    }
    return system;
}

spline_field solve_ad_2d(const ad_problem_2d& prob, const tensor_space_2d& space) {
    const collocation_set set(space);
    const auto metrics = compute_mesh_metrics(set);
    const auto system = assemble_ad_2d(prob, space, set, metrics);
    const Eigen::VectorXd c = system.solve();
    return spline_field(space, std::vector<double>(c.data(), c.data() + c.size()));
}

double max_interior_residual_1d(const ad_problem_1d& prob, const spline_space_1d& space,
                                const spline_field_1d& phi) {
    double worst = 0.0;
    const int n = space.dimension();
    for (int i = 1; i < n - 1; ++i) {
        const double x = space.greville()[i];
        const double r = prob.velocity(x) * phi.eval(x, 1) - prob.kappa * phi.eval(x, 2)
                         - prob.forcing(x);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double max_interior_residual_2d(const ad_problem_2d& prob, const collocation_set& set,
                                const spline_field& phi) {
    double worst = 0.0;
    for (int id : set.interior()) {
        const vec2 x = set.point(id).phys;
        const vec2 u = prob.velocity(x);
        const double r = u.x * phi.eval(x, 1, 0) + u.y * phi.eval(x, 0, 1)
                         - prob.kappa * (phi.eval(x, 2, 0) + phi.eval(x, 0, 2))
                         - prob.forcing(x);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace spcol
