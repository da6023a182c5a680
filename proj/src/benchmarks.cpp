#include "spcol/benchmarks.hpp"

#include "spcol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spcol {

namespace {

const double pi = std::acos(-1.0);

mat2 zero_mat2() { return mat2{{{0.0, 0.0}, {0.0, 0.0}}}; }

}  // namespace

double boundary_layer_exact(double peclet, double x) {
    if (peclet < 1e-8) {
        return x;
    }
    if (peclet <= 30.0) {
        return std::expm1(peclet * x) / std::expm1(peclet);
    }
    // log-domain form, safe for sharp layers
    return std::exp(peclet * (x - 1.0)) * (1.0 - std::exp(-peclet * x))
           / (1.0 - std::exp(-peclet));
}

scalar_ms_1d boundary_layer_1d(double peclet) {
    if (peclet <= 0.0) {
        throw std::invalid_argument("boundary_layer_1d: Pe must be positive");
    }
    scalar_ms_1d ms;
    ms.phi = [peclet](double x) { return boundary_layer_exact(peclet, x); };
    ms.dphi = [peclet](double x) {
        if (peclet < 1e-8) {
            return 1.0;
        }
        if (peclet <= 30.0) {
            return peclet * std::exp(peclet * x) / std::expm1(peclet);
        }
        return peclet * std::exp(peclet * (x - 1.0)) / (1.0 - std::exp(-peclet));
    };
    ms.problem.velocity = [](double) { return 1.0; };
    ms.problem.velocity_deriv = [](double) { return 0.0; };
    ms.problem.kappa = 1.0 / peclet;
    ms.problem.forcing = [](double) { return 0.0; };
    ms.problem.forcing_deriv = [](double) { return 0.0; };
    ms.problem.g_left = 0.0;
    ms.problem.g_right = 1.0;
    return ms;
}

scalar_ms_1d sine_ms_1d() {
    scalar_ms_1d ms;
    ms.phi = [](double x) { return std::sin(pi * x); };
    ms.dphi = [](double x) { return pi * std::cos(pi * x); };
    ms.problem.velocity = [](double) { return 1.0; };
    ms.problem.velocity_deriv = [](double) { return 0.0; };
    ms.problem.kappa = 1.0;
    ms.problem.forcing = [](double x) {
        return pi * std::cos(pi * x) + pi * pi * std::sin(pi * x);
    };
    ms.problem.forcing_deriv = [](double x) {
        return -pi * pi * std::sin(pi * x) + pi * pi * pi * std::cos(pi * x);
    };
    ms.problem.g_left = 0.0;
    ms.problem.g_right = 0.0;
    return ms;
}

scalar_ms_2d sine_ms_2d(double angle_deg) {
    const double theta = angle_deg * pi / 180.0;
    const vec2 u{std::cos(theta), std::sin(theta)};
    scalar_ms_2d ms;
    ms.phi = [](vec2 x) { return std::sin(pi * x.x) * std::sin(pi * x.y); };
    ms.grad_phi = [](vec2 x) {
        return vec2{pi * std::cos(pi * x.x) * std::sin(pi * x.y),
                    pi * std::sin(pi * x.x) * std::cos(pi * x.y)};
    };
    ms.problem.velocity = [u](vec2) { return u; };
    ms.problem.velocity_grad = [](vec2) { return zero_mat2(); };
    ms.problem.kappa = 1.0;
    ms.problem.forcing = [u](vec2 x) {
        const double sx = std::sin(pi * x.x), cx = std::cos(pi * x.x);
        const double sy = std::sin(pi * x.y), cy = std::cos(pi * x.y);
        return u.x * pi * cx * sy + u.y * pi * sx * cy + 2.0 * pi * pi * sx * sy;
    };
    ms.problem.forcing_grad = [u](vec2 x) {
        const double sx = std::sin(pi * x.x), cx = std::cos(pi * x.x);
        const double sy = std::sin(pi * x.y), cy = std::cos(pi * x.y);
        return vec2{-u.x * pi * pi * sx * sy + u.y * pi * pi * cx * cy
                        + 2.0 * pi * pi * pi * cx * sy,
                    u.x * pi * pi * cx * cy - u.y * pi * pi * sx * sy
                        + 2.0 * pi * pi * pi * sx * cy};
    };
    ms.problem.dirichlet = [](vec2) { return 0.0; };
    return ms;
}

ad_problem_2d skew_advection_problem(double peclet, double angle_deg) {
    const double theta = angle_deg * pi / 180.0;
    const vec2 u{std::cos(theta), std::sin(theta)};
    ad_problem_2d prob;
    prob.velocity = [u](vec2) { return u; };
    prob.velocity_grad = [](vec2) { return zero_mat2(); };
    prob.kappa = 1.0 / peclet;
    prob.forcing = [](vec2) { return 0.0; };
    prob.forcing_grad = [](vec2) { return vec2{0.0, 0.0}; };
    // bottom wall and the first tenth of the left wall carry 1; corner
    // coefficients follow the left-edge rule because it is applied last
    prob.segments = {{domain_edge::right, 0.0, 1.0, 0.0},
                     {domain_edge::top, 0.0, 1.0, 0.0},
                     {domain_edge::bottom, 0.0, 1.0, 1.0},
                     {domain_edge::left, 0.0, 0.1, 1.0},
                     {domain_edge::left, 0.1, 1.0, 0.0}};
    return prob;
}

double kovasznay_lambda(double reynolds) {
    return 0.5 * reynolds - std::sqrt(0.25 * reynolds * reynolds + 4.0 * pi * pi);
}

flow_ms stokes_vortex_ms(double viscosity, equation_kind kind) {
    flow_ms ms;
    ms.domain = {0.0, 1.0, 0.0, 1.0};
    ms.viscosity = viscosity;
    ms.kind = kind;
    ms.fields = [](vec2 x) {
        exact::flow_point fp;
        exact::vortex_fields(x.x, x.y, fp);
        return fp;
    };
    const double nu = viscosity;
    switch (kind) {
        case equation_kind::stokes_vp:
            ms.forcing = [nu](vec2 x, double* f, double (*gf)[2]) {
                exact::vortex_forcing_stokes_vp(x.x, x.y, nu, f, gf);
            };
            break;
        case equation_kind::stokes_rot:
            ms.forcing = [nu](vec2 x, double* f, double (*gf)[2]) {
                exact::vortex_forcing_stokes_rot(x.x, x.y, nu, f, gf);
            };
            break;
        case equation_kind::ns_vp:
            ms.forcing = [nu](vec2 x, double* f, double (*gf)[2]) {
                exact::vortex_forcing_ns_vp(x.x, x.y, nu, f, gf);
            };
            break;
        case equation_kind::ns_rot:
            ms.forcing = [nu](vec2 x, double* f, double (*gf)[2]) {
                exact::vortex_forcing_ns_rot(x.x, x.y, nu, f, gf);
            };
            break;
    }
    return ms;
}

flow_ms kovasznay_ms(double reynolds, equation_kind kind) {
    if (kind != equation_kind::ns_vp && kind != equation_kind::ns_rot) {
        throw std::invalid_argument("kovasznay_ms: Navier-Stokes forms only");
    }
    flow_ms ms;
    ms.domain = {-0.5, 1.0, -0.5, 0.5};
    ms.viscosity = 1.0 / reynolds;
    ms.kind = kind;
    const double lam = kovasznay_lambda(reynolds);
    ms.fields = [lam](vec2 x) {
        exact::flow_point fp;
        exact::kovasznay_fields(x.x, x.y, lam, fp);
        return fp;
    };
    const double nu = ms.viscosity;
    if (kind == equation_kind::ns_vp) {
        ms.forcing = [lam, nu](vec2 x, double* f, double (*gf)[2]) {
            exact::kovasznay_forcing_ns_vp(x.x, x.y, lam, nu, f, gf);
        };
    } else {
        ms.forcing = [lam, nu](vec2 x, double* f, double (*gf)[2]) {
            exact::kovasznay_forcing_ns_rot(x.x, x.y, lam, nu, f, gf);
        };
    }
    ms.neumann_outflow = true;
    return ms;
}

namespace {

std::function<vec2(vec2)> forcing_of(const flow_ms& ms) {
    return [fn = ms.forcing](vec2 x) {
        double f[2];
        double gf[2][2];
        fn(x, f, gf);
        return vec2{f[0], f[1]};
    };
}

std::function<mat2(vec2)> forcing_grad_of(const flow_ms& ms) {
    return [fn = ms.forcing](vec2 x) {
        double f[2];
        double gf[2][2];
        fn(x, f, gf);
        return mat2{{{gf[0][0], gf[0][1]}, {gf[1][0], gf[1][1]}}};
    };
}

std::function<vec2(vec2)> dirichlet_of(const flow_ms& ms) {
    return [fields = ms.fields](vec2 x) {
        const exact::flow_point fp = fields(x);
        return vec2{fp.u[0], fp.u[1]};
    };
}

}  // namespace

stokes_problem make_stokes_problem(const flow_ms& ms, const stokes_problem& base) {
    if (ms.kind != equation_kind::stokes_vp && ms.kind != equation_kind::stokes_rot) {
        throw std::invalid_argument("make_stokes_problem: not a Stokes manufactured solution");
    }
    stokes_problem prob = base;
    prob.form = ms.kind == equation_kind::stokes_vp ? flow_form::velocity_pressure
                                                    : flow_form::rotational;
    prob.mu = ms.viscosity;
    prob.forcing = forcing_of(ms);
    prob.forcing_grad = forcing_grad_of(ms);
    prob.dirichlet = dirichlet_of(ms);
    return prob;
}

ns_problem make_ns_problem(const flow_ms& ms, const ns_problem& base) {
    if (ms.kind != equation_kind::ns_vp && ms.kind != equation_kind::ns_rot) {
        throw std::invalid_argument("make_ns_problem: not a Navier-Stokes manufactured solution");
    }
    ns_problem prob = base;
    prob.form = ms.kind == equation_kind::ns_vp ? flow_form::velocity_pressure
                                                : flow_form::rotational;
    prob.nu = ms.viscosity;
    prob.forcing = forcing_of(ms);
    prob.forcing_grad = forcing_grad_of(ms);
    prob.dirichlet = dirichlet_of(ms);
    if (ms.neumann_outflow) {
        prob.neumann_edges = {domain_edge::right};
        const double nu = ms.viscosity;
        prob.neumann = [fields = ms.fields, nu](vec2 x) {
            const exact::flow_point fp = fields(x);
            // outward normal (1, 0): h = -nu du/dx + p n
            return vec2{-nu * fp.grad_u[0][0] + fp.p, -nu * fp.grad_u[1][0]};
        };
        prob.fix_gauge = false;
    }
    return prob;
}

std::vector<bc_segment<vec2>> cavity_lid_segments() {
    // walls come after the lid so the lid corners belong to the walls
    return {{domain_edge::top, 0.0, 1.0, vec2{1.0, 0.0}},
            {domain_edge::bottom, 0.0, 1.0, vec2{0.0, 0.0}},
            {domain_edge::left, 0.0, 1.0, vec2{0.0, 0.0}},
            {domain_edge::right, 0.0, 1.0, vec2{0.0, 0.0}}};
}

stokes_problem stokes_cavity_problem(flow_form form) {
    stokes_problem prob;
    prob.form = form;
    prob.mu = 1.0;
    prob.forcing = [](vec2) { return vec2{0.0, 0.0}; };
    prob.forcing_grad = [](vec2) { return zero_mat2(); };
    prob.segments = cavity_lid_segments();
    return prob;
}

ns_problem ns_cavity_problem(flow_form form, double reynolds) {
    ns_problem prob;
    prob.form = form;
    prob.nu = 1.0 / reynolds;
    prob.forcing = [](vec2) { return vec2{0.0, 0.0}; };
    prob.forcing_grad = [](vec2) { return zero_mat2(); };
    prob.segments = cavity_lid_segments();
    return prob;
}

// ----------------------------------------------------------------------

error_pair scalar_error_1d(const spline_field_1d& field,
                           const std::function<double(double)>& exact,
                           const std::function<double(double)>& exact_deriv) {
    const spline_space_1d& space = field.space();
    const gauss_rule base = gauss_legendre(space.degree() + 1);
    const auto& bp = space.knots().breakpoints();
    double l2 = 0.0, h1 = 0.0;
    for (std::size_t e = 0; e + 1 < bp.size(); ++e) {
        const gauss_rule q = gauss_on_interval(base, bp[e], bp[e + 1]);
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            const double x = q.nodes[i];
            const double de = field.eval(x, 0) - exact(x);
            const double dg = field.eval(x, 1) - exact_deriv(x);
            l2 += q.weights[i] * de * de;
            h1 += q.weights[i] * dg * dg;
        }
    }
    return {std::sqrt(l2), std::sqrt(h1)};
}

namespace {

// Quadrature sweep over the physical domain of a tensor space.
template <typename Body>
void for_each_quad_point(const tensor_space_2d& space, Body&& body) {
    const gauss_rule base = gauss_legendre(space.degree() + 1);
    const auto& bx = space.space_x().knots().breakpoints();
    const auto& by = space.space_y().knots().breakpoints();
    const double area_scale = space.domain().area();
    for (std::size_t ex = 0; ex + 1 < bx.size(); ++ex) {
        const gauss_rule qx = gauss_on_interval(base, bx[ex], bx[ex + 1]);
        for (std::size_t ey = 0; ey + 1 < by.size(); ++ey) {
            const gauss_rule qy = gauss_on_interval(base, by[ey], by[ey + 1]);
            for (std::size_t ix = 0; ix < qx.nodes.size(); ++ix) {
                for (std::size_t iy = 0; iy < qy.nodes.size(); ++iy) {
                    const vec2 phys = space.to_physical({qx.nodes[ix], qy.nodes[iy]});
                    const double w = qx.weights[ix] * qy.weights[iy] * area_scale;
                    body(phys, w);
                }
            }
        }
    }
}

}  // namespace

error_pair scalar_error_2d(const spline_field& field, int component,
                           const std::function<double(vec2)>& exact,
                           const std::function<vec2(vec2)>& exact_grad) {
    double l2 = 0.0, h1 = 0.0;
    for_each_quad_point(field.space(), [&](vec2 x, double w) {
        const double de = field.eval(x, 0, 0, component) - exact(x);
        const vec2 ge = exact_grad(x);
        const double dx = field.eval(x, 1, 0, component) - ge.x;
        const double dy = field.eval(x, 0, 1, component) - ge.y;
        l2 += w * de * de;
        h1 += w * (dx * dx + dy * dy);
    });
    return {std::sqrt(l2), std::sqrt(h1)};
}

error_pair velocity_error(const spline_field& u, const flow_ms& ms) {
    double l2 = 0.0, h1 = 0.0;
    for_each_quad_point(u.space(), [&](vec2 x, double w) {
        const exact::flow_point fp = ms.fields(x);
        for (int m = 0; m < 2; ++m) {
            const double de = u.eval(x, 0, 0, m) - fp.u[m];
            const double dx = u.eval(x, 1, 0, m) - fp.grad_u[m][0];
            const double dy = u.eval(x, 0, 1, m) - fp.grad_u[m][1];
            l2 += w * de * de;
            h1 += w * (dx * dx + dy * dy);
        }
    });
    return {std::sqrt(l2), std::sqrt(h1)};
}

error_pair pressure_error(const spline_field& pressure, const spline_field* velocity,
                          const flow_ms& ms, bool adjust_mean) {
    const bool rotational = ms.kind == equation_kind::stokes_rot
                            || ms.kind == equation_kind::ns_rot;
    auto computed = [&](vec2 x) {
        double p = pressure.eval(x, 0, 0);
        if (rotational && velocity) {
            const vec2 v = velocity->eval_vec(x);
            p -= 0.5 * dot(v, v);
        }
        return p;
    };
    auto computed_grad = [&](vec2 x) {
        vec2 g{pressure.eval(x, 1, 0), pressure.eval(x, 0, 1)};
        if (rotational && velocity) {
            const vec2 v = velocity->eval_vec(x);
            const vec2 vx = velocity->eval_vec(x, 1, 0);
            const vec2 vy = velocity->eval_vec(x, 0, 1);
            g.x -= dot(v, vx);
            g.y -= dot(v, vy);
        }
        return g;
    };

    double shift = 0.0;
    if (adjust_mean) {
        double mean_computed = 0.0, mean_exact = 0.0, area = 0.0;
        for_each_quad_point(pressure.space(), [&](vec2 x, double w) {
            mean_computed += w * computed(x);
            mean_exact += w * ms.fields(x).p;
            area += w;
        });
        shift = (mean_computed - mean_exact) / area;
    }

    double l2 = 0.0, h1 = 0.0;
    for_each_quad_point(pressure.space(), [&](vec2 x, double w) {
        const exact::flow_point fp = ms.fields(x);
        const double de = computed(x) - shift - fp.p;
        const vec2 g = computed_grad(x);
        const double dx = g.x - fp.grad_p[0];
        const double dy = g.y - fp.grad_p[1];
        l2 += w * de * de;
        h1 += w * (dx * dx + dy * dy);
    });
    return {std::sqrt(l2), std::sqrt(h1)};
}

double fit_rate(const std::vector<double>& h, const std::vector<double>& err, int use_last) {
    if (h.size() != err.size() || h.size() < 2) {
        throw std::invalid_argument("fit_rate: need matching h/error sequences of length >= 2");
    }
    const int n = static_cast<int>(h.size());
    const int first = std::max(0, n - use_last);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int i = first; i < n; ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(std::max(err[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    return (count * sxy - sx * sy) / denom;
}

double mesh_size_1d(const spline_space_1d& space) {
    const auto& bp = space.knots().breakpoints();
    double h = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        h = std::max(h, bp[i + 1] - bp[i]);
    }
    return h;
}

double mesh_size(const tensor_space_2d& space) {
    return std::max(mesh_size_1d(space.space_x()) * space.domain().width(),
                    mesh_size_1d(space.space_y()) * space.domain().height());
}

overshoot_result overshoot_metric_1d(const spline_field_1d& field, double lower, double upper,
                                     int samples_per_span) {
    const auto& bp = field.space().knots().breakpoints();
    overshoot_result out;
    for (std::size_t e = 0; e + 1 < bp.size(); ++e) {
        for (int i = 0; i <= samples_per_span; ++i) {
            const double x = bp[e] + (bp[e + 1] - bp[e]) * i / samples_per_span;
            const double v = field.eval(x, 0);
            out.over = std::max(out.over, v - upper);
            out.under = std::max(out.under, lower - v);
        }
    }
    out.over = std::max(out.over, 0.0);
    out.under = std::max(out.under, 0.0);
    return out;
}

overshoot_result overshoot_metric_2d(const spline_field& field, int component, double lower,
                                     double upper, int samples_per_span) {
    const tensor_space_2d& space = field.space();
    const auto& bx = space.space_x().knots().breakpoints();
    const auto& by = space.space_y().knots().breakpoints();
    overshoot_result out;
    for (std::size_t ex = 0; ex + 1 < bx.size(); ++ex) {
        for (int i = 0; i <= samples_per_span; ++i) {
            const double px = bx[ex] + (bx[ex + 1] - bx[ex]) * i / samples_per_span;
            for (std::size_t ey = 0; ey + 1 < by.size(); ++ey) {
                for (int j = 0; j <= samples_per_span; ++j) {
                    const double py = by[ey] + (by[ey + 1] - by[ey]) * j / samples_per_span;
                    const double v = field.eval(space.to_physical({px, py}), 0, 0, component);
                    out.over = std::max(out.over, v - upper);
                    out.under = std::max(out.under, lower - v);
                }
            }
        }
    }
    out.over = std::max(out.over, 0.0);
    out.under = std::max(out.under, 0.0);
    return out;
}

std::vector<profile_sample> centerline_vertical(const spline_field& u, int n_samples) {
    std::vector<profile_sample> out(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double y = static_cast<double>(i) / (n_samples - 1);
        out[i] = {y, u.eval({0.5, y}, 0, 0, 0)};
    }
    return out;
}

std::vector<profile_sample> centerline_horizontal(const spline_field& u, int n_samples) {
    std::vector<profile_sample> out(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double x = static_cast<double>(i) / (n_samples - 1);
        out[i] = {x, u.eval({x, 0.5}, 0, 0, 1)};
    }
    return out;
}

reference_table read_reference_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open reference table: " + path);
    }
    reference_table table;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        double coord = 0.0, value = 0.0;
        if (ss >> coord >> value) {
            table.rows.push_back({coord, value});
        }
    }
    if (table.rows.empty()) {
        throw std::runtime_error("reference table has no data rows: " + path);
    }
    return table;
}

profile_deviation compare_reference(const spline_field& u, centerline which,
                                    const reference_table& table) {
    profile_deviation dev;
    double sum2 = 0.0;
    for (const profile_sample& row : table.rows) {
        const double computed = which == centerline::vertical_ux
                                    ? u.eval({0.5, row.coord}, 0, 0, 0)
                                    : u.eval({row.coord, 0.5}, 0, 0, 1);
        const double d = std::abs(computed - row.value);
        dev.max_abs = std::max(dev.max_abs, d);
        sum2 += d * d;
    }
    dev.rms = std::sqrt(sum2 / table.rows.size());
    return dev;
}

double divergence_max(const spline_field& u, const collocation_set& set) {
    double worst = 0.0;
    for (const colloc_point& p : set.points()) {
        const double div = u.eval(p.phys, 1, 0, 0) + u.eval(p.phys, 0, 1, 1);
        worst = std::max(worst, std::abs(div));
    }
    return worst;
}

}  // namespace spcol
