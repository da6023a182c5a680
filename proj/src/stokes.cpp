#include "spcol/stokes.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace spcol {

double tau_pspg_stokes(double h, double mu, double c2) {
    if (h <= 0.0 || mu <= 0.0) {
        throw std::invalid_argument("tau_pspg_stokes: h and mu must be positive");
    }
    return h * h / (c2 * mu);
}

int field_count(flow_form form) {
    return form == flow_form::velocity_pressure ? 3 : 4;
}

int center_point(const collocation_set& set) {
    const vec2 center = set.space().domain().center();
    int best = 0;
    double best_dist = std::numeric_limits<double>::max();
    for (int id : set.interior()) {
        const double d = norm(set.point(id).phys - center);
        if (d < best_dist) {
            best_dist = d;
            best = id;
        }
    }
    return best;
}

linear_system assemble_stokes(const stokes_problem& prob, const tensor_space_2d& space,
                              const collocation_set& set, const mesh_metrics& metrics) {
    if (space.degree() < 2) {
        throw std::invalid_argument("assemble_stokes: degree >= 2 required");
    }
    const bool vp = prob.form == flow_form::velocity_pressure;
    const int nf = field_count(prob.form);
    const int n_points = set.size();
    constexpr int UX = 0, UY = 1, PP = 2, OM = 3;

    spline_field tau_field;
    if (prob.pspg) {
        std::vector<double> tau(n_points);
        for (int i = 0; i < n_points; ++i) {
            tau[i] = tau_pspg_stokes(metrics.h[i], prob.mu, prob.c2);
        }
        tau_field = fit_spline(space, tau);
    }

    const bool regularized = !prob.segments.empty();
    std::vector<std::optional<vec2>> pinned;
    if (regularized) {
        pinned = assign_segment_values(set, prob.segments);
        for (int id : set.boundary()) {
            if (!pinned[id]) {
                throw std::invalid_argument(
                    "assemble_stokes: boundary segments leave point uncovered");
            }
        }
    }

    linear_system system(n_points * nf);
    basis_eval_2d basis;
    std::vector<std::pair<int, double>> mom_x, mom_y, cont, consti;

    const int max_d = vp && prob.pspg ? 3 : 2;

    for (int id = 0; id < n_points; ++id) {
        const colloc_point& p = set.point(id);
        const vec2 f = prob.forcing(p.phys);

        double t = 0.0;
        vec2 gt{};
        if (prob.pspg) {
            t = tau_field.eval(p.phys, 0, 0);
            gt = {tau_field.eval(p.phys, 1, 0), tau_field.eval(p.phys, 0, 1)};
        }

        space.eval_nonzero(p.phys, max_d, basis);

        mom_x.clear();
        mom_y.clear();
        cont.clear();
        consti.clear();

        const bool boundary = p.on_boundary();
        const vec2 nrm = boundary ? p.combined_normal() : vec2{};
        double ec = boundary && prob.pspg ? prob.edge_constant / metrics.h_b[id] : 0.0;
        if (std::getenv("SPCOL_EC_EXPERIMENT")) {
            const int mode = atoi(std::getenv("SPCOL_EC_EXPERIMENT"));
            if (mode == 1 && p.cls == point_class::corner) ec = 0.0;   // no EC at corners
            if (mode == 2) ec = prob.edge_constant / (1.0 / space.space_x().knots().element_count());  // h_b = element size
            if (mode == 3 && p.cls == point_class::corner) ec *= 0.5;
        }

        for (int jy = 0; jy < basis.wy.count; ++jy) {
            for (int jx = 0; jx < basis.wx.count; ++jx) {
                const partials& N = basis.vals[jx + basis.wx.count * jy];
                const int col = space.linear_index(basis.wx.first + jx, basis.wy.first + jy);
                const double lapN = N(2, 0) + N(0, 2);

                if (boundary) {
                    // Dirichlet rows: collocated data (or pins handled below)
                    mom_x.emplace_back(dof_index(col, UX, nf), N(0, 0));
                    mom_y.emplace_back(dof_index(col, UY, nf), N(0, 0));
                } else if (vp) {
                    mom_x.emplace_back(dof_index(col, UX, nf), -prob.mu * lapN);
                    mom_x.emplace_back(dof_index(col, PP, nf), N(1, 0));
                    mom_y.emplace_back(dof_index(col, UY, nf), -prob.mu * lapN);
                    mom_y.emplace_back(dof_index(col, PP, nf), N(0, 1));
                } else {
                    mom_x.emplace_back(dof_index(col, OM, nf), prob.mu * N(0, 1));
                    mom_x.emplace_back(dof_index(col, PP, nf), N(1, 0));
                    mom_y.emplace_back(dof_index(col, OM, nf), -prob.mu * N(1, 0));
                    mom_y.emplace_back(dof_index(col, PP, nf), N(0, 1));
                }

                // continuity row
                cont.emplace_back(dof_index(col, UX, nf), N(1, 0));
                cont.emplace_back(dof_index(col, UY, nf), N(0, 1));
                if (prob.pspg) {
                    double cp = -(gt.x * N(1, 0) + gt.y * N(0, 1)) - t * lapN;
                    if (boundary) {
                        cp += ec * t * (N(1, 0) * nrm.x + N(0, 1) * nrm.y);
                    }
                    cont.emplace_back(dof_index(col, PP, nf), cp);
                    if (vp) {
                        const double d_lap_x = N(3, 0) + N(1, 2);
                        const double d_lap_y = N(2, 1) + N(0, 3);
                        double cux = prob.mu * (gt.x * lapN + t * d_lap_x);
                        double cuy = prob.mu * (gt.y * lapN + t * d_lap_y);
                        if (boundary) {
                            cux -= ec * t * prob.mu * lapN * nrm.x;
                            cuy -= ec * t * prob.mu * lapN * nrm.y;
                        }
                        cont.emplace_back(dof_index(col, UX, nf), cux);
                        cont.emplace_back(dof_index(col, UY, nf), cuy);
                    } else {
                        double cw = -prob.mu * (gt.x * N(0, 1) - gt.y * N(1, 0));
                        if (boundary) {
                            cw += ec * t * prob.mu * (nrm.x * N(0, 1) - nrm.y * N(1, 0));
                        }
                        cont.emplace_back(dof_index(col, OM, nf), cw);
                    }
                }

                if (!vp) {
                    consti.emplace_back(dof_index(col, OM, nf), N(0, 0));
                    consti.emplace_back(dof_index(col, UX, nf), N(0, 1));
                    consti.emplace_back(dof_index(col, UY, nf), -N(1, 0));
                }
            }
        }

        if (boundary && regularized) {
            const vec2 g = *pinned[id];
            system.set_row(dof_index(id, UX, nf), {id, "dirichlet_pin_x"},
                           {{dof_index(id, UX, nf), 1.0}}, g.x);
            system.set_row(dof_index(id, UY, nf), {id, "dirichlet_pin_y"},
                           {{dof_index(id, UY, nf), 1.0}}, g.y);
        } else if (boundary) {
            const vec2 g = prob.dirichlet(p.phys);
            system.set_row(dof_index(id, UX, nf), {id, "dirichlet_x"}, mom_x, g.x);
            system.set_row(dof_index(id, UY, nf), {id, "dirichlet_y"}, mom_y, g.y);
        } else {
            system.set_row(dof_index(id, UX, nf), {id, "momentum_x"}, mom_x, f.x);
            system.set_row(dof_index(id, UY, nf), {id, "momentum_y"}, mom_y, f.y);
        }

        double cont_rhs = 0.0;
        if (prob.pspg) {
            const mat2 gf = prob.forcing_grad(p.phys);
            cont_rhs = -dot(gt, f) - t * (gf[0][0] + gf[1][1]);
            if (boundary) {
                cont_rhs += ec * t * dot(f, nrm);
            }
        }
        system.set_row(dof_index(id, PP, nf),
                       {id, boundary ? "continuity_boundary" : "continuity"}, cont, cont_rhs);

        if (!vp) {
            system.set_row(dof_index(id, OM, nf), {id, "constitutive"}, consti, 0.0);
        }
    }
    return system;
}

void fix_pressure_gauge(linear_system& system, const stokes_problem& prob,
                        const collocation_set& set) {
    const int nf = field_count(prob.form);
    const int pin = center_point(set);
    system.replace_row(dof_index(pin, 2, nf), {pin, "gauge"},
                       {{dof_index(pin, 2, nf), 1.0}}, 0.0);
}

stokes_solution solve_stokes(const stokes_problem& prob, const tensor_space_2d& space) {
    const collocation_set set(space);
    const auto metrics = compute_mesh_metrics(set);
    auto system = assemble_stokes(prob, space, set, metrics);
    if (prob.fix_gauge) {
        fix_pressure_gauge(system, prob, set);
    }
    const Eigen::VectorXd x = system.solve();

    const int nf = field_count(prob.form);
    const int n = space.dimension();
    stokes_solution sol;
    std::vector<double> uc(2 * n), pc(n), wc(n);
    for (int i = 0; i < n; ++i) {
        uc[i] = x[dof_index(i, 0, nf)];
        uc[n + i] = x[dof_index(i, 1, nf)];
        pc[i] = x[dof_index(i, 2, nf)];
        if (nf == 4) {
            wc[i] = x[dof_index(i, 3, nf)];
        }
    }
    sol.u = spline_field(space, std::move(uc), 2);
    sol.p = spline_field(space, std::move(pc), 1);
    if (nf == 4) {
        sol.omega = spline_field(space, std::move(wc), 1);
    }
    if (prob.fix_gauge) {
        sol.gauge_shift = quadrature_mean(sol.p, 0);
        sol.p.shift(0, -sol.gauge_shift);
    }
    return sol;
}

}  // namespace spcol
