#include "spcol/navier_stokes.hpp"

#include "spcol/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spcol {

namespace {

constexpr int UX = 0, UY = 1, PP = 2, OM = 3;

// State-dependent quantities of the current iterate at one point.
struct local_flow {
    vec2 u{};
    mat2 grad_u{};            // [m][j] = d u_m / d x_j
    double hess_u[2][3]{};    // per component: xx, xy, yy
    double dlap_u[2][2]{};    // [m][j] = d_j (lap u_m)
    double p = 0.0;           // kinematic p (vp) or total P (rotational)
    vec2 grad_p{};
    double hess_p[3]{};       // xx, xy, yy
    double omega = 0.0;
    vec2 grad_omega{};
};

double div_u(const local_flow& s) { return s.grad_u[0][0] + s.grad_u[1][1]; }
double curl_u(const local_flow& s) { return s.grad_u[1][0] - s.grad_u[0][1]; }
vec2 grad_div_u(const local_flow& s) {
    return {s.hess_u[0][0] + s.hess_u[1][1], s.hess_u[0][1] + s.hess_u[1][2]};
}

}  // namespace

double tau_supg_pspg_ns(double u_norm, double nu, double h, flow_form form,
                        double c3, double s_rot) {
    if (h <= 0.0) {
        throw std::invalid_argument("tau_supg_pspg_ns: h must be positive");
    }
    if (u_norm == 0.0 && nu == 0.0) {
        throw std::invalid_argument("tau_supg_pspg_ns: degenerate, u and nu both zero");
    }
    const double a = 2.0 * u_norm / h;
    const double d = c3 * nu / (h * h);
    const double tau = 1.0 / std::sqrt(a * a + d * d);
    return form == flow_form::rotational ? s_rot * tau : tau;
}

double tau_grad_div(double h, double nu) {
    if (h <= 0.0 || nu <= 0.0) {
        throw std::invalid_argument("tau_grad_div: h and nu must be positive");
    }
    return 2.0 * h * h / nu;
}

double ns_solution::kinematic_pressure(vec2 phys) const {
    double value = pressure.eval(phys, 0, 0);
    if (omega) {
        const vec2 v = u.eval_vec(phys, 0, 0);
        value -= 0.5 * dot(v, v);
    }
    return value;
}

vec2 ns_solution::kinematic_pressure_grad(vec2 phys) const {
    vec2 g{pressure.eval(phys, 1, 0), pressure.eval(phys, 0, 1)};
    if (omega) {
        const vec2 v = u.eval_vec(phys, 0, 0);
        const vec2 vx = u.eval_vec(phys, 1, 0);
        const vec2 vy = u.eval_vec(phys, 0, 1);
        g.x -= dot(v, vx);
        g.y -= dot(v, vy);
    }
    return g;
}

ns_system::ns_system(const ns_problem& prob, const tensor_space_2d& space,
                     const collocation_set& set, const mesh_metrics& metrics)
    : prob_(&prob), space_(&space), set_(&set), metrics_(&metrics), interp_(space),
      nf_(field_count(prob.form)) {
    if (space.degree() < 2) {
        throw std::invalid_argument("ns_system: degree >= 2 required");
    }
    neumann_point_.assign(set.size(), 0);
    for (domain_edge e : prob.neumann_edges) {
        for (int id : set.boundary()) {
            const colloc_point& p = set.point(id);
            if (p.cls == point_class::edge && point_on_edge(space, p, e)) {
                neumann_point_[id] = 1;
            }
        }
    }
    if (!prob.segments.empty()) {
        pinned_ = assign_segment_values(set, prob.segments);
        for (int id : set.boundary()) {
            if (!pinned_[id] && !neumann_point_[id]) {
                throw std::invalid_argument("ns_system: boundary segments leave point uncovered");
            }
        }
    }
    if (prob.fix_gauge && prob.neumann_edges.empty()) {
        gauge_point_ = center_point(set);
    }
}

ns_tau_fields ns_system::build_tau(const Eigen::VectorXd& state) const {
    const int n = set_->size();
    std::vector<double> ts(n), tg(n);

    // velocity magnitude of the current iterate at the collocation points
    spline_field ufield(*space_, 2);
    for (int i = 0; i < n; ++i) {
        ufield.coef(0, i) = state[dof_index(i, UX, nf_)];
        ufield.coef(1, i) = state[dof_index(i, UY, nf_)];
    }
    for (int i = 0; i < n; ++i) {
        const double u_norm = norm(ufield.eval_vec(set_->point(i).phys));
        ts[i] = tau_supg_pspg_ns(u_norm, prob_->nu, metrics_->h[i], prob_->form,
                                 prob_->c3, prob_->s_rot);
        tg[i] = tau_grad_div(metrics_->h[i], prob_->nu);
    }
    ns_tau_fields taus;
    taus.supg = interp_.fit(ts);
    taus.graddiv = interp_.fit(tg);
    return taus;
}

namespace {

local_flow eval_local_flow(const tensor_space_2d& space, const Eigen::VectorXd& state,
                           int nf, vec2 phys, int max_d, basis_eval_2d& basis) {
    space.eval_nonzero(phys, max_d, basis);
    local_flow s;
    for (int jy = 0; jy < basis.wy.count; ++jy) {
        for (int jx = 0; jx < basis.wx.count; ++jx) {
            const partials& N = basis.vals[jx + basis.wx.count * jy];
            const int col = space.linear_index(basis.wx.first + jx, basis.wy.first + jy);
            const double cu[2] = {state[dof_index(col, UX, nf)], state[dof_index(col, UY, nf)]};
            const double cp = state[dof_index(col, PP, nf)];
            for (int m = 0; m < 2; ++m) {
                (m == 0 ? s.u.x : s.u.y) += N(0, 0) * cu[m];
                s.grad_u[m][0] += N(1, 0) * cu[m];
                s.grad_u[m][1] += N(0, 1) * cu[m];
                s.hess_u[m][0] += N(2, 0) * cu[m];
                s.hess_u[m][1] += N(1, 1) * cu[m];
                s.hess_u[m][2] += N(0, 2) * cu[m];
                if (max_d >= 3) {
                    s.dlap_u[m][0] += (N(3, 0) + N(1, 2)) * cu[m];
                    s.dlap_u[m][1] += (N(2, 1) + N(0, 3)) * cu[m];
                }
            }
            s.p += N(0, 0) * cp;
            s.grad_p.x += N(1, 0) * cp;
            s.grad_p.y += N(0, 1) * cp;
            s.hess_p[0] += N(2, 0) * cp;
            s.hess_p[1] += N(1, 1) * cp;
            s.hess_p[2] += N(0, 2) * cp;
            if (nf == 4) {
                const double cw = state[dof_index(col, OM, nf)];
                s.omega += N(0, 0) * cw;
                s.grad_omega.x += N(1, 0) * cw;
                s.grad_omega.y += N(0, 1) * cw;
            }
        }
    }
    return s;
}

struct tau_at_point {
    double t = 0.0;   // SUPG = PSPG value
    vec2 gt{};
    double tg = 0.0;  // grad-div value
    vec2 gtg{};
};

tau_at_point eval_tau(const ns_tau_fields& taus, vec2 phys, bool pspg_or_supg, bool graddiv) {
    tau_at_point out;
    if (pspg_or_supg) {
        out.t = taus.supg.eval(phys, 0, 0);
        out.gt = {taus.supg.eval(phys, 1, 0), taus.supg.eval(phys, 0, 1)};
    }
    if (graddiv) {
        out.tg = taus.graddiv.eval(phys, 0, 0);
        out.gtg = {taus.graddiv.eval(phys, 1, 0), taus.graddiv.eval(phys, 0, 1)};
    }
    return out;
}

// Momentum residual pieces of the velocity-pressure form.
struct vp_point_residual {
    vec2 R{};          // strong momentum residual
    mat2 grad_R{};     // [m][j] = d_j R_m
    double divR = 0.0;
};

vp_point_residual vp_strong_residual(const local_flow& s, double nu, vec2 f, const mat2& gf) {
    vp_point_residual r;
    const double conv[2] = {s.u.x * s.grad_u[0][0] + s.u.y * s.grad_u[0][1],
                            s.u.x * s.grad_u[1][0] + s.u.y * s.grad_u[1][1]};
    const double lap[2] = {s.hess_u[0][0] + s.hess_u[0][2], s.hess_u[1][0] + s.hess_u[1][2]};
    r.R.x = -nu * lap[0] + conv[0] + s.grad_p.x - f.x;
    r.R.y = -nu * lap[1] + conv[1] + s.grad_p.y - f.y;
    for (int m = 0; m < 2; ++m) {
        for (int j = 0; j < 2; ++j) {
            double v = -nu * s.dlap_u[m][j];
            for (int l = 0; l < 2; ++l) {
                v += s.grad_u[l][j] * s.grad_u[m][l];
            }
            // u . grad of d_j u_m
            const double hjx = j == 0 ? s.hess_u[m][0] : s.hess_u[m][1];
            const double hjy = j == 0 ? s.hess_u[m][1] : s.hess_u[m][2];
            v += s.u.x * hjx + s.u.y * hjy;
            v += m == j ? (m == 0 ? s.hess_p[0] : s.hess_p[2]) : s.hess_p[1];
            v -= gf[m][j];
            r.grad_R[m][j] = v;
        }
    }
    const double uu = s.grad_u[0][0] * s.grad_u[0][0] + 2.0 * s.grad_u[0][1] * s.grad_u[1][0]
                      + s.grad_u[1][1] * s.grad_u[1][1];
    const vec2 gdiv = grad_div_u(s);
    r.divR = -nu * (s.dlap_u[0][0] + s.dlap_u[1][1]) + uu + dot(s.u, gdiv)
             + (s.hess_p[0] + s.hess_p[2]) - (gf[0][0] + gf[1][1]);
    return r;
}

// Rotational-form strong momentum residual and its divergence.
struct rot_point_residual {
    vec2 R{};
    double divR = 0.0;
};

rot_point_residual rot_strong_residual(const local_flow& s, double nu, vec2 f, const mat2& gf) {
    rot_point_residual r;
    const vec2 perp{s.grad_omega.y, -s.grad_omega.x};
    const vec2 kxu{-s.u.y, s.u.x};
    r.R.x = nu * perp.x + s.omega * kxu.x + s.grad_p.x - f.x;
    r.R.y = nu * perp.y + s.omega * kxu.y + s.grad_p.y - f.y;
    // div(nu perp(omega)) vanishes identically; div(omega k x u) expands to
    // u . perp(omega) - omega curl(u).
    r.divR = dot(s.u, perp) - s.omega * curl_u(s) + (s.hess_p[0] + s.hess_p[2])
             - (gf[0][0] + gf[1][1]);
    return r;
}

}  // namespace

Eigen::VectorXd ns_system::residual(const Eigen::VectorXd& state,
                                    const ns_tau_fields& taus) const {
    const bool vp = prob_->form == flow_form::velocity_pressure;
    const int max_d = vp ? 3 : 2;
    Eigen::VectorXd res(unknowns());
    basis_eval_2d basis;

    for (int id = 0; id < set_->size(); ++id) {
        const colloc_point& p = set_->point(id);
        const local_flow s = eval_local_flow(*space_, state, nf_, p.phys, max_d, basis);
        const vec2 f = prob_->forcing(p.phys);
        const mat2 gf = prob_->forcing_grad(p.phys);
        const tau_at_point tau = eval_tau(taus, p.phys, prob_->supg || prob_->pspg,
                                          prob_->graddiv);
        const bool boundary = p.on_boundary();
        const vec2 nrm = boundary ? p.combined_normal() : vec2{};
        const double ec = boundary && prob_->pspg ? prob_->edge_constant / metrics_->h_b[id]
                                                  : 0.0;

        double mom[2];
        double cont;
        double consti = 0.0;

        if (vp) {
            const vp_point_residual r = vp_strong_residual(s, prob_->nu, f, gf);
            const double drift = dot(tau.gt, s.u) + tau.t * div_u(s);
            for (int m = 0; m < 2; ++m) {
                const double Rm = m == 0 ? r.R.x : r.R.y;
                double v = Rm;
                if (prob_->supg) {
                    v -= drift * Rm + tau.t * (s.u.x * r.grad_R[m][0] + s.u.y * r.grad_R[m][1]);
                }
                if (prob_->graddiv) {
                    const vec2 gdiv = grad_div_u(s);
                    v -= (m == 0 ? tau.gtg.x : tau.gtg.y) * div_u(s)
                         + tau.tg * (m == 0 ? gdiv.x : gdiv.y);
                }
                mom[m] = v;
            }
            cont = div_u(s);
            if (prob_->pspg) {
                cont -= dot(tau.gt, r.R) + tau.t * r.divR;
                if (boundary) {
                    cont += ec * tau.t * dot(r.R, nrm);
                }
            }
        } else {
            const rot_point_residual r = rot_strong_residual(s, prob_->nu, f, gf);
            const vec2 Rcheck{r.R.y, -r.R.x};  // R x (omega k) / omega
            for (int m = 0; m < 2; ++m) {
                double v = m == 0 ? r.R.x : r.R.y;
                if (prob_->supg) {
                    v += tau.t * s.omega * (m == 0 ? Rcheck.x : Rcheck.y);
                }
                if (prob_->graddiv) {
                    const vec2 gdiv = grad_div_u(s);
                    v -= (m == 0 ? tau.gtg.x : tau.gtg.y) * div_u(s)
                         + tau.tg * (m == 0 ? gdiv.x : gdiv.y);
                }
                mom[m] = v;
            }
            cont = div_u(s);
            if (prob_->pspg) {
                cont -= dot(tau.gt, r.R) + tau.t * r.divR;
                if (boundary) {
                    cont += ec * tau.t * dot(r.R, nrm);
                }
            }
            consti = s.omega - curl_u(s);
        }

        if (boundary && neumann_point_[id]) {
            const vec2 h = prob_->neumann(p.phys);
            double pk = s.p;
            if (!vp) {
                pk -= 0.5 * dot(s.u, s.u);  // traction uses kinematic pressure
            }
            for (int m = 0; m < 2; ++m) {
                const double dun = nrm.x * s.grad_u[m][0] + nrm.y * s.grad_u[m][1];
                mom[m] = -prob_->nu * dun + pk * (m == 0 ? nrm.x : nrm.y)
                         - (m == 0 ? h.x : h.y);
            }
        } else if (boundary) {
            if (pinned_.empty()) {
                const vec2 g = prob_->dirichlet(p.phys);
                mom[0] = s.u.x - g.x;
                mom[1] = s.u.y - g.y;
            } else {
                const vec2 g = *pinned_[id];
                mom[0] = state[dof_index(id, UX, nf_)] - g.x;
                mom[1] = state[dof_index(id, UY, nf_)] - g.y;
            }
        }

        res[dof_index(id, UX, nf_)] = mom[0];
        res[dof_index(id, UY, nf_)] = mom[1];
        res[dof_index(id, PP, nf_)] = cont;
        if (nf_ == 4) {
            res[dof_index(id, OM, nf_)] = consti;
        }
    }

    if (gauge_point_ >= 0) {
        res[dof_index(gauge_point_, PP, nf_)] = state[dof_index(gauge_point_, PP, nf_)];
    }
    return res;
}

linear_system ns_system::jacobian(const Eigen::VectorXd& state, const ns_tau_fields& taus,
                                  bool differentiate_tau) const {
    const bool vp = prob_->form == flow_form::velocity_pressure;
    const int max_d = vp ? 3 : 2;
    const Eigen::VectorXd res = residual(state, taus);

    linear_system system(unknowns());
    basis_eval_2d basis;
    std::vector<std::pair<int, double>> mom_x, mom_y, cont, consti;

    for (int id = 0; id < set_->size(); ++id) {
        const colloc_point& p = set_->point(id);
        const local_flow s = eval_local_flow(*space_, state, nf_, p.phys, max_d, basis);
        const vec2 f = prob_->forcing(p.phys);
        const mat2 gf = prob_->forcing_grad(p.phys);
        const tau_at_point tau = eval_tau(taus, p.phys, prob_->supg || prob_->pspg,
                                          prob_->graddiv);
        const bool boundary = p.on_boundary();
        const vec2 nrm = boundary ? p.combined_normal() : vec2{};
        const double ec = boundary && prob_->pspg ? prob_->edge_constant / metrics_->h_b[id]
                                                  : 0.0;
        const bool neumann = boundary && neumann_point_[id];
        const bool dirichlet = boundary && !neumann;

        mom_x.clear();
        mom_y.clear();
        cont.clear();
        consti.clear();

        // dtau/du coupling at the row's own point (optional)
        double dtau_dnorm = 0.0;
        double u_norm = 0.0;
        if (differentiate_tau && (prob_->supg || prob_->pspg)) {
            u_norm = norm(s.u);
            if (u_norm > 1e-14) {
                const double a = 2.0 * u_norm / metrics_->h[id];
                const double scale = prob_->form == flow_form::rotational ? prob_->s_rot : 1.0;
                const double tau_vp = tau.t / scale;
                // tau_vp = (a^2 + d^2)^{-1/2} => dtau_vp/d|u| = -tau_vp^3 a (2/h)
                dtau_dnorm = -scale * tau_vp * tau_vp * tau_vp * a * 2.0 / metrics_->h[id];
            }
        }

        const vp_point_residual rvp = vp ? vp_strong_residual(s, prob_->nu, f, gf)
                                         : vp_point_residual{};
        const rot_point_residual rrot = vp ? rot_point_residual{}
                                           : rot_strong_residual(s, prob_->nu, f, gf);
        const double drift = dot(tau.gt, s.u) + tau.t * div_u(s);
        const vec2 gdiv = grad_div_u(s);
        const vec2 perp{s.grad_omega.y, -s.grad_omega.x};
        const vec2 kxu{-s.u.y, s.u.x};
        const vec2 Rcheck = vp ? vec2{} : vec2{rrot.R.y, -rrot.R.x};

        for (int jy = 0; jy < basis.wy.count; ++jy) {
            for (int jx = 0; jx < basis.wx.count; ++jx) {
                const partials& N = basis.vals[jx + basis.wx.count * jy];
                const int col = space_->linear_index(basis.wx.first + jx,
                                                     basis.wy.first + jy);
                const double lapN = N(2, 0) + N(0, 2);
                const double gradN[2] = {N(1, 0), N(0, 1)};
                const double hessN[3] = {N(2, 0), N(1, 1), N(0, 2)};
                const double dlapN[2] = {N(3, 0) + N(1, 2), N(2, 1) + N(0, 3)};
                const double u_dot_gradN = s.u.x * N(1, 0) + s.u.y * N(0, 1);

                // momentum rows at boundary points carry boundary conditions
                if (dirichlet) {
                    if (pinned_.empty()) {
                        mom_x.emplace_back(dof_index(col, UX, nf_), N(0, 0));
                        mom_y.emplace_back(dof_index(col, UY, nf_), N(0, 0));
                    }
                } else if (neumann) {
                    const double dun = nrm.x * N(1, 0) + nrm.y * N(0, 1);
                    mom_x.emplace_back(dof_index(col, UX, nf_), -prob_->nu * dun);
                    mom_y.emplace_back(dof_index(col, UY, nf_), -prob_->nu * dun);
                    mom_x.emplace_back(dof_index(col, PP, nf_), N(0, 0) * nrm.x);
                    mom_y.emplace_back(dof_index(col, PP, nf_), N(0, 0) * nrm.y);
                    if (!vp) {
                        // kinematic p = P - |u|^2/2
                        for (int c = 0; c < 2; ++c) {
                            const double uc = c == 0 ? s.u.x : s.u.y;
                            const double v = -N(0, 0) * uc;
                            mom_x.emplace_back(dof_index(col, c, nf_), v * nrm.x);
                            mom_y.emplace_back(dof_index(col, c, nf_), v * nrm.y);
                        }
                    }
                }

                // continuity (and constitutive) entries exist at every point
                if (vp) {
                    // d residual_m / d u_c and / d p
                    for (int c = 0; c < 2; ++c) {
                        double dR[2];        // delta R_m
                        double dgradR[2][2]; // delta d_j R_m
                        for (int m = 0; m < 2; ++m) {
                            const double dm = m == c ? 1.0 : 0.0;
                            dR[m] = dm * (-prob_->nu * lapN + u_dot_gradN)
                                    + N(0, 0) * s.grad_u[m][c];
                            for (int j = 0; j < 2; ++j) {
                                double v = dm * (-prob_->nu * dlapN[j]);
                                v += gradN[j] * s.grad_u[m][c];
                                double sum = 0.0;
                                for (int l = 0; l < 2; ++l) {
                                    sum += s.grad_u[l][j] * gradN[l];
                                }
                                v += dm * sum;
                                v += N(0, 0) * s.hess_u[m][j + c];  // hess index: jj=0,xy=1,yy=2
                                v += dm * (s.u.x * hessN[j] + s.u.y * hessN[j + 1]);
                                dgradR[m][j] = v;
                            }
                        }
                        if (!boundary) {
                            const double d_drift = tau.gt.x * (c == 0 ? N(0, 0) : 0.0)
                                                   + tau.gt.y * (c == 1 ? N(0, 0) : 0.0)
                                                   + tau.t * gradN[c];
                            for (int m = 0; m < 2; ++m) {
                                const double Rm = m == 0 ? rvp.R.x : rvp.R.y;
                                const double gRm[2] = {rvp.grad_R[m][0], rvp.grad_R[m][1]};
                                double v = dR[m];
                                if (prob_->supg) {
                                    v -= d_drift * Rm + drift * dR[m];
                                    v -= tau.t * (N(0, 0) * gRm[c] + s.u.x * dgradR[m][0]
                                                  + s.u.y * dgradR[m][1]);
                                    if (dtau_dnorm != 0.0 && u_norm > 1e-14) {
                                        const double uc = c == 0 ? s.u.x : s.u.y;
                                        const double dt = dtau_dnorm * (uc / u_norm) * N(0, 0);
                                        v -= dt * (s.u.x * gRm[0] + s.u.y * gRm[1]);
                                    }
                                }
                                if (prob_->graddiv) {
                                    v -= (m == 0 ? tau.gtg.x : tau.gtg.y) * gradN[c];
                                    // d_m (div delta u) = d_m d_c N
                                    v -= tau.tg * (m == 0 ? hessN[c] : hessN[c + 1]);
                                }
                                (m == 0 ? mom_x : mom_y).emplace_back(dof_index(col, c, nf_), v);
                            }
                        }
                        // continuity w.r.t. u_c
                        double cv = gradN[c];
                        if (prob_->pspg) {
                            double ddivR = -prob_->nu * dlapN[c];
                            double sum = 0.0;
                            for (int m = 0; m < 2; ++m) {
                                sum += gradN[m] * s.grad_u[m][c];
                            }
                            ddivR += 2.0 * sum;
                            ddivR += N(0, 0) * (c == 0 ? gdiv.x : gdiv.y);
                            ddivR += s.u.x * hessN[c] + s.u.y * hessN[c + 1];
                            cv -= tau.gt.x * dR[0] + tau.gt.y * dR[1] + tau.t * ddivR;
                            if (boundary) {
                                cv += ec * tau.t * (dR[0] * nrm.x + dR[1] * nrm.y);
                            }
                            if (dtau_dnorm != 0.0 && u_norm > 1e-14) {
                                const double uc = c == 0 ? s.u.x : s.u.y;
                                const double dt = dtau_dnorm * (uc / u_norm) * N(0, 0);
                                cv -= dt * rvp.divR;
                                if (boundary) {
                                    cv += ec * dt * dot(rvp.R, nrm);
                                }
                            }
                        }
                        cont.emplace_back(dof_index(col, c, nf_), cv);
                    }
                    // pressure column
                    {
                        if (!boundary) {
                            double dR[2] = {gradN[0], gradN[1]};
                            for (int m = 0; m < 2; ++m) {
                                double v = dR[m];
                                if (prob_->supg) {
                                    const double dgr[2] = {m == 0 ? hessN[0] : hessN[1],
                                                           m == 0 ? hessN[1] : hessN[2]};
                                    v -= drift * dR[m]
                                         + tau.t * (s.u.x * dgr[0] + s.u.y * dgr[1]);
                                }
                                (m == 0 ? mom_x : mom_y).emplace_back(dof_index(col, PP, nf_), v);
                            }
                        }

                        double cv = 0.0;
                        if (prob_->pspg) {
                            cv = -(tau.gt.x * gradN[0] + tau.gt.y * gradN[1]) - tau.t * lapN;
                            if (boundary) {
                                cv += ec * tau.t * (gradN[0] * nrm.x + gradN[1] * nrm.y);
                            }
                        }
                        if (cv != 0.0) {
                            cont.emplace_back(dof_index(col, PP, nf_), cv);
                        }
                    }
                } else {
                    // rotational form
                    for (int c = 0; c < 2; ++c) {
                        const vec2 dkxu = c == 0 ? vec2{0.0, N(0, 0)} : vec2{-N(0, 0), 0.0};
                        const vec2 dR{s.omega * dkxu.x, s.omega * dkxu.y};
                        const vec2 dRcheck{dR.y, -dR.x};
                        if (!boundary) {
                            for (int m = 0; m < 2; ++m) {
                                double v = m == 0 ? dR.x : dR.y;
                                if (prob_->supg) {
                                    v += tau.t * s.omega * (m == 0 ? dRcheck.x : dRcheck.y);
                                    if (dtau_dnorm != 0.0 && u_norm > 1e-14) {
                                        const double uc = c == 0 ? s.u.x : s.u.y;
                                        const double dt = dtau_dnorm * (uc / u_norm) * N(0, 0);
                                        v += dt * s.omega * (m == 0 ? Rcheck.x : Rcheck.y);
                                    }
                                }
                                if (prob_->graddiv) {
                                    v -= (m == 0 ? tau.gtg.x : tau.gtg.y) * gradN[c];
                                    const double ddivm = m == 0 ? hessN[c] : hessN[c + 1];
                                    v -= tau.tg * ddivm;
                                }
                                (m == 0 ? mom_x : mom_y).emplace_back(dof_index(col, c, nf_), v);
                            }
                        }
                        double cv = gradN[c];
                        if (prob_->pspg) {
                            const double dcurl = c == 1 ? N(1, 0) : -N(0, 1);
                            const double ddivR = N(0, 0) * (c == 0 ? perp.x : perp.y)
                                                 - s.omega * dcurl;
                            cv -= tau.gt.x * dR.x + tau.gt.y * dR.y + tau.t * ddivR;
                            if (boundary) {
                                cv += ec * tau.t * dot(dR, nrm);
                            }
                            if (dtau_dnorm != 0.0 && u_norm > 1e-14) {
                                const double uc = c == 0 ? s.u.x : s.u.y;
                                const double dt = dtau_dnorm * (uc / u_norm) * N(0, 0);
                                cv -= dt * rrot.divR;
                                if (boundary) {
                                    cv += ec * dt * dot(rrot.R, nrm);
                                }
                            }
                        }
                        cont.emplace_back(dof_index(col, c, nf_), cv);
                        const double dconsti = c == 0 ? N(0, 1) : -N(1, 0);
                        consti.emplace_back(dof_index(col, c, nf_), dconsti);
                    }
                    // omega column
                    {
                        const vec2 perpN{N(0, 1), -N(1, 0)};
                        const vec2 dR{prob_->nu * perpN.x + N(0, 0) * kxu.x,
                                      prob_->nu * perpN.y + N(0, 0) * kxu.y};
                        const vec2 dRcheck{dR.y, -dR.x};
                        if (!boundary) {
                            for (int m = 0; m < 2; ++m) {
                                double v = m == 0 ? dR.x : dR.y;
                                if (prob_->supg) {
                                    v += tau.t * (N(0, 0) * (m == 0 ? Rcheck.x : Rcheck.y)
                                                  + s.omega * (m == 0 ? dRcheck.x : dRcheck.y));
                                }
                                (m == 0 ? mom_x : mom_y).emplace_back(dof_index(col, OM, nf_), v);
                            }
                        }
                        double cv = 0.0;
                        if (prob_->pspg) {
                            const double ddivR = dot(s.u, perpN) - N(0, 0) * curl_u(s);
                            cv = -(tau.gt.x * dR.x + tau.gt.y * dR.y) - tau.t * ddivR;
                            if (boundary) {
                                cv += ec * tau.t * dot(dR, nrm);
                            }
                        }
                        if (cv != 0.0) {
                            cont.emplace_back(dof_index(col, OM, nf_), cv);
                        }
                        consti.emplace_back(dof_index(col, OM, nf_), N(0, 0));
                    }
                    // total pressure column
                    {
                        const vec2 dR{gradN[0], gradN[1]};
                        const vec2 dRcheck{dR.y, -dR.x};
                        if (!boundary) {
                            for (int m = 0; m < 2; ++m) {
                                double v = m == 0 ? dR.x : dR.y;
                                if (prob_->supg) {
                                    v += tau.t * s.omega * (m == 0 ? dRcheck.x : dRcheck.y);
                                }
                                (m == 0 ? mom_x : mom_y).emplace_back(dof_index(col, PP, nf_), v);
                            }
                        }
                        double cv = 0.0;
                        if (prob_->pspg) {
                            cv = -(tau.gt.x * gradN[0] + tau.gt.y * gradN[1]) - tau.t * lapN;
                            if (boundary) {
                                cv += ec * tau.t * (gradN[0] * nrm.x + gradN[1] * nrm.y);
                            }
                        }
                        if (cv != 0.0) {
                            cont.emplace_back(dof_index(col, PP, nf_), cv);
                        }
                    }
                }
            }
        }

        const char* mom_kind = neumann ? "neumann" : (dirichlet ? "dirichlet" : "momentum");
        if (dirichlet && !pinned_.empty()) {
            mom_x.emplace_back(dof_index(id, UX, nf_), 1.0);
            mom_y.emplace_back(dof_index(id, UY, nf_), 1.0);
        }
        system.set_row(dof_index(id, UX, nf_), {id, std::string(mom_kind) + "_x"}, mom_x,
                       -res[dof_index(id, UX, nf_)]);
        system.set_row(dof_index(id, UY, nf_), {id, std::string(mom_kind) + "_y"}, mom_y,
                       -res[dof_index(id, UY, nf_)]);
        system.set_row(dof_index(id, PP, nf_),
                       {id, boundary ? "continuity_boundary" : "continuity"}, cont,
                       -res[dof_index(id, PP, nf_)]);
        if (nf_ == 4) {
            system.set_row(dof_index(id, OM, nf_), {id, "constitutive"}, consti,
                           -res[dof_index(id, OM, nf_)]);
        }
    }

    if (gauge_point_ >= 0) {
        const int row = dof_index(gauge_point_, PP, nf_);
        system.replace_row(row, {gauge_point_, "gauge"}, {{row, 1.0}}, -res[row]);
    }
    return system;
}

Eigen::VectorXd ns_system::stokes_initial() const {
    const Eigen::VectorXd zero = zero_state();
    const ns_tau_fields taus = build_tau(zero);
    return jacobian(zero, taus).solve();
}

ns_solution ns_system::extract(const Eigen::VectorXd& state, newton_report report) const {
    const int n = space_->dimension();
    ns_solution sol;
    std::vector<double> uc(2 * n), pc(n), wc(n);
    for (int i = 0; i < n; ++i) {
        uc[i] = state[dof_index(i, UX, nf_)];
        uc[n + i] = state[dof_index(i, UY, nf_)];
        pc[i] = state[dof_index(i, PP, nf_)];
        if (nf_ == 4) {
            wc[i] = state[dof_index(i, OM, nf_)];
        }
    }
    sol.u = spline_field(*space_, std::move(uc), 2);
    sol.pressure = spline_field(*space_, std::move(pc), 1);
    if (nf_ == 4) {
        sol.omega = spline_field(*space_, std::move(wc), 1);
    }
    sol.report = std::move(report);
    if (gauge_point_ >= 0) {
        sol.gauge_shift = quadrature_mean(sol.pressure, 0);
        sol.pressure.shift(0, -sol.gauge_shift);
    }
    return sol;
}

ns_solution ns_system::solve(const newton_options& opts, ns_initial_guess init,
                             const Eigen::VectorXd* given_state) const {
    newton_report report;

    Eigen::VectorXd state;
    if (given_state) {
        state = *given_state;
    } else if (init == ns_initial_guess::stokes_solve) {
        state = stokes_initial();
    } else {
        state = zero_state();
    }

    {
        const Eigen::VectorXd zero = zero_state();
        const ns_tau_fields taus0 = build_tau(zero);
        report.scale = std::max(1.0, residual(zero, taus0).lpNorm<Eigen::Infinity>());
    }

    ns_tau_fields taus = build_tau(state);
    Eigen::VectorXd res = residual(state, taus);
    double res_norm = res.lpNorm<Eigen::Infinity>();
    report.residual_history.push_back(res_norm);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (res_norm <= opts.tolerance * report.scale) {
            report.converged = true;
            break;
        }
        linear_system jac = jacobian(state, taus, opts.differentiate_tau);
        Eigen::VectorXd delta;
        try {
            delta = jac.solve();
        } catch (const singular_system_error& e) {
            report.failure = e.what();
            break;
        }

        double alpha = 1.0;
        Eigen::VectorXd next;
        ns_tau_fields next_taus;
        Eigen::VectorXd next_res;
        double next_norm = 0.0;
        bool accepted = false;
        for (int bt = 0; bt <= opts.max_backtracks; ++bt) {
            next = state + alpha * delta;
            next_taus = build_tau(next);
            next_res = residual(next, next_taus);
            next_norm = next_res.lpNorm<Eigen::Infinity>();
            if (next_norm < res_norm || next_norm <= opts.tolerance * report.scale) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            report.failure = "line search stalled at residual "
                             + std::to_string(res_norm);
            break;
        }
        state = std::move(next);
        taus = std::move(next_taus);
        res = std::move(next_res);
        res_norm = next_norm;
        report.residual_history.push_back(res_norm);
        report.iterations = iter + 1;
        if (opts.verbose) {
            std::fprintf(stderr, "newton iter %d: |res| = %.3e (step %.3g)\n",
                         report.iterations, res_norm, alpha);
        }
    }
    if (!report.converged) {
        report.converged = res_norm <= opts.tolerance * report.scale;
    }
    return extract(state, std::move(report));
}

ns_solution solve_ns(const ns_problem& prob, const tensor_space_2d& space,
                     const newton_options& opts, ns_initial_guess init) {
    const collocation_set set(space);
    const auto metrics = compute_mesh_metrics(set);
    const ns_system system(prob, space, set, metrics);
    return system.solve(opts, init);
}

ns_solution solve_ns_continuation(const std::function<ns_problem(double)>& make_problem,
                                  const std::vector<double>& reynolds_values,
                                  const tensor_space_2d& space, const newton_options& opts) {
    if (reynolds_values.empty()) {
        throw std::invalid_argument("solve_ns_continuation: empty Reynolds list");
    }
    const collocation_set set(space);
    const auto metrics = compute_mesh_metrics(set);

    std::optional<ns_solution> sol;
    Eigen::VectorXd state;
    for (std::size_t step = 0; step < reynolds_values.size(); ++step) {
        const ns_problem prob = make_problem(reynolds_values[step]);
        const ns_system system(prob, space, set, metrics);
        if (step == 0) {
            sol = system.solve(opts, ns_initial_guess::zero);
        } else {
            sol = system.solve(opts, ns_initial_guess::zero, &state);
        }
        if (!sol->report.converged) {
            return std::move(*sol);
        }
        // repack converged fields as the next initial state
        const int n = space.dimension();
        const int nf = system.fields();
        state.resize(system.unknowns());
        for (int i = 0; i < n; ++i) {
            state[dof_index(i, UX, nf)] = sol->u.coef(0, i);
            state[dof_index(i, UY, nf)] = sol->u.coef(1, i);
            state[dof_index(i, PP, nf)] = sol->pressure.coef(0, i);
            if (nf == 4) {
                state[dof_index(i, OM, nf)] = sol->omega->coef(0, i);
            }
        }
    }
    return std::move(*sol);
}

}  // namespace spcol
