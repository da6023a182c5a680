#include "spcol/io.hpp"

#include "spcol/benchmarks.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace spcol {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file " + path.string());
    }
    return out;
}

const std::set<std::string> scalar_problems = {"bl1d", "sine1d", "sine2d", "skew"};
const std::set<std::string> flow_problems = {"stokes_vortex", "stokes_cavity", "ns_vortex",
                                             "kovasznay", "ns_cavity"};

struct run_state {
    run_config cfg;
    fs::path dir;
    ordered_json manifest;
    std::vector<error_report> errors;
    std::vector<std::string> artifacts;
    bool converged = true;

    void note_artifact(const fs::path& p) { artifacts.push_back(p.filename().string()); }
};

// Parametric sample coordinates: samples_per_span per knot span plus the
// final breakpoint.
std::vector<double> span_samples(const spline_space_1d& space, int per_span) {
    const auto& bp = space.knots().breakpoints();
    std::vector<double> xs;
    for (std::size_t e = 0; e + 1 < bp.size(); ++e) {
        for (int i = 0; i < per_span; ++i) {
            xs.push_back(bp[e] + (bp[e + 1] - bp[e]) * i / per_span);
        }
    }
    xs.push_back(bp.back());
    return xs;
}

void write_error_csv(run_state& st) {
    if (st.errors.empty()) {
        return;
    }
    auto out = open_output(st.dir / "errors.csv");
    out << "k,n_elem,h,field,norm,error\n";
    for (const error_report& r : st.errors) {
        out << r.degree << "," << r.n_elem << "," << fmt(r.h) << "," << r.field << ",L2,"
            << fmt(r.error.l2) << "\n";
        out << r.degree << "," << r.n_elem << "," << fmt(r.h) << "," << r.field << ",H1,"
            << fmt(r.error.h1) << "\n";
    }
    st.note_artifact(st.dir / "errors.csv");
}

void write_profile_csv_1d(run_state& st, const spline_field_1d& phi) {
    auto out = open_output(st.dir / "field.csv");
    out << "x,phi\n";
    for (double x : span_samples(phi.space(), st.cfg.samples_per_span)) {
        out << fmt(x) << "," << fmt(phi.eval(x)) << "\n";
    }
    st.note_artifact(st.dir / "field.csv");
}

void write_field_csv_2d(run_state& st, const spline_field& phi) {
    const tensor_space_2d& space = phi.space();
    auto out = open_output(st.dir / "field.csv");
    out << "x,y,phi\n";
    const auto xs = span_samples(space.space_x(), st.cfg.samples_per_span);
    const auto ys = span_samples(space.space_y(), st.cfg.samples_per_span);
    for (double py : ys) {
        for (double px : xs) {
            const vec2 phys = space.to_physical({px, py});
            out << fmt(phys.x) << "," << fmt(phys.y) << "," << fmt(phi.eval(phys)) << "\n";
        }
    }
    st.note_artifact(st.dir / "field.csv");
}

void write_flow_csv(run_state& st, const spline_field& u, const spline_field& pressure,
                    const spline_field* omega, bool rotational) {
    const tensor_space_2d& space = u.space();
    auto out = open_output(st.dir / "field.csv");
    out << (omega ? "x,y,u_x,u_y,p,omega\n" : "x,y,u_x,u_y,p\n");
    const auto xs = span_samples(space.space_x(), st.cfg.samples_per_span);
    const auto ys = span_samples(space.space_y(), st.cfg.samples_per_span);
    for (double py : ys) {
        for (double px : xs) {
            const vec2 phys = space.to_physical({px, py});
            const vec2 v = u.eval_vec(phys);
            double p = pressure.eval(phys);
            if (rotational) {
                p -= 0.5 * dot(v, v);  // report kinematic pressure
            }
            out << fmt(phys.x) << "," << fmt(phys.y) << "," << fmt(v.x) << "," << fmt(v.y)
                << "," << fmt(p);
            if (omega) {
                out << "," << fmt(omega->eval(phys));
            }
            out << "\n";
        }
    }
    st.note_artifact(st.dir / "field.csv");
}

// Legacy VTK structured points on a uniform physical grid.
void write_vtk(run_state& st, const spline_field& u, const spline_field* pressure,
               const spline_field* omega, bool rotational) {
    const tensor_space_2d& space = u.space();
    const int nx = st.cfg.samples_per_span * st.cfg.elements + 1;
    const int ny = nx;
    auto out = open_output(st.dir / "field.vtk");
    const rect& d = space.domain();
    out << "# vtk DataFile Version 3.0\n";
    out << "spcol structured field export\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << nx << " " << ny << " 1\n";
    out << "ORIGIN " << fmt(d.x0) << " " << fmt(d.y0) << " 0\n";
    out << "SPACING " << fmt(d.width() / (nx - 1)) << " " << fmt(d.height() / (ny - 1))
        << " 1\n";
    out << "POINT_DATA " << nx * ny << "\n";

    auto point_at = [&](int i, int j) {
        return vec2{d.x0 + d.width() * i / (nx - 1), d.y0 + d.height() * j / (ny - 1)};
    };

    if (u.components() == 2) {
        out << "VECTORS velocity double\n";
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const vec2 v = u.eval_vec(point_at(i, j));
                out << fmt(v.x) << " " << fmt(v.y) << " 0\n";
            }
        }
    } else {
        out << "SCALARS phi double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                out << fmt(u.eval(point_at(i, j))) << "\n";
            }
        }
    }
    if (pressure) {
        out << "SCALARS p double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const vec2 x = point_at(i, j);
                double p = pressure->eval(x);
                if (rotational) {
                    const vec2 v = u.eval_vec(x);
                    p -= 0.5 * dot(v, v);
                }
                out << fmt(p) << "\n";
            }
        }
    }
    if (omega) {
        out << "SCALARS omega double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                out << fmt(omega->eval(point_at(i, j))) << "\n";
            }
        }
    }
    st.note_artifact(st.dir / "field.vtk");
}

void write_centerlines(run_state& st, const spline_field& u) {
    const int n = 4 * st.cfg.samples_per_span * st.cfg.elements + 1;
    {
        auto out = open_output(st.dir / "centerline_u.csv");
        out << "y,u_x\n";
        for (const profile_sample& s : centerline_vertical(u, n)) {
            out << fmt(s.coord) << "," << fmt(s.value) << "\n";
        }
        st.note_artifact(st.dir / "centerline_u.csv");
    }
    {
        auto out = open_output(st.dir / "centerline_v.csv");
        out << "x,u_y\n";
        for (const profile_sample& s : centerline_horizontal(u, n)) {
            out << fmt(s.coord) << "," << fmt(s.value) << "\n";
        }
        st.note_artifact(st.dir / "centerline_v.csv");
    }
}

void dump_system_if_requested(run_state& st, const linear_system& system) {
    if (!st.cfg.dump_system) {
        return;
    }
    auto out = open_output(st.dir / "system.mtx");
    system.write_matrix_market(out);
    st.note_artifact(st.dir / "system.mtx");
}

spline_space_1d make_space_1d(const run_config& cfg) {
    const knot_vector kv = cfg.knots == "stretched"
                               ? stretched_knots(cfg.degree, cfg.elements)
                               : open_uniform_knots(cfg.degree, cfg.elements);
    return spline_space_1d(kv);
}

tensor_space_2d make_space_2d(const run_config& cfg, rect domain) {
    const knot_vector kv = cfg.knots == "stretched"
                               ? stretched_knots(cfg.degree, cfg.elements)
                               : open_uniform_knots(cfg.degree, cfg.elements);
    return tensor_space_2d(spline_space_1d(kv), domain);
}

void record_newton(run_state& st, const newton_report& report) {
    ordered_json hist = ordered_json::array();
    for (double r : report.residual_history) {
        hist.push_back(r);
    }
    st.manifest["newton"] = {{"converged", report.converged},
                             {"iterations", report.iterations},
                             {"scale", report.scale},
                             {"residual_history", hist}};
    if (!report.failure.empty()) {
        st.manifest["newton"]["failure"] = report.failure;
    }
    st.converged = report.converged;
}

void run_ad_1d(run_state& st) {
    const run_config& cfg = st.cfg;
    const spline_space_1d space = make_space_1d(cfg);

    scalar_ms_1d ms = cfg.problem == "bl1d" ? boundary_layer_1d(cfg.peclet) : sine_ms_1d();
    ms.problem.supg = cfg.stabilization.supg;
    ms.problem.c1 = cfg.C1;

    const spline_field_1d phi = solve_ad_1d(ms.problem, space);
    const error_pair err = scalar_error_1d(phi, ms.phi, ms.dphi);
    st.errors.push_back({cfg.degree, cfg.elements, mesh_size_1d(space),
                         space.dimension(), "phi", err});

    const overshoot_result osc = overshoot_metric_1d(phi, 0.0, 1.0);
    st.manifest["diagnostics"] = {{"overshoot", osc.over}, {"undershoot", osc.under}};
    write_profile_csv_1d(st, phi);
    if (cfg.dump_system) {
        const auto metrics = compute_mesh_metrics_1d(space);
        dump_system_if_requested(st, assemble_ad_1d(ms.problem, space, metrics));
    }
}

void run_ad_2d(run_state& st) {
    const run_config& cfg = st.cfg;
    const tensor_space_2d space = make_space_2d(cfg, {});

    ad_problem_2d prob;
    scalar_ms_2d ms;
    const bool has_exact = cfg.problem == "sine2d";
    if (has_exact) {
        ms = sine_ms_2d(cfg.skew_angle_deg);
        prob = ms.problem;
    } else {
        prob = skew_advection_problem(cfg.peclet, cfg.skew_angle_deg);
    }
    prob.supg = cfg.stabilization.supg;
    prob.c1 = cfg.C1;

    const spline_field phi = solve_ad_2d(prob, space);
    if (has_exact) {
        const error_pair err = scalar_error_2d(phi, 0, ms.phi, ms.grad_phi);
        st.errors.push_back({cfg.degree, cfg.elements, mesh_size(space),
                             space.dimension(), "phi", err});
    } else {
        const overshoot_result osc = overshoot_metric_2d(phi, 0, 0.0, 1.0);
        st.manifest["diagnostics"] = {{"overshoot", osc.over}, {"undershoot", osc.under}};
    }
    write_field_csv_2d(st, phi);
    if (cfg.write_vtk) {
        write_vtk(st, phi, nullptr, nullptr, false);
    }
    if (cfg.dump_system) {
        const collocation_set set(space);
        const auto metrics = compute_mesh_metrics(set);
        dump_system_if_requested(st, assemble_ad_2d(prob, space, set, metrics));
    }
}

void run_stokes_driver(run_state& st) {
    const run_config& cfg = st.cfg;
    const flow_form form = cfg.form == "rotational" ? flow_form::rotational
                                                    : flow_form::velocity_pressure;
    const bool cavity = cfg.problem == "stokes_cavity";

    stokes_problem prob;
    flow_ms ms;
    if (cavity) {
        prob = stokes_cavity_problem(form);
        prob.mu = cfg.viscosity;
    } else {
        ms = stokes_vortex_ms(cfg.viscosity, form == flow_form::velocity_pressure
                                                 ? equation_kind::stokes_vp
                                                 : equation_kind::stokes_rot);
        prob = make_stokes_problem(ms);
    }
    prob.edge_constant = cfg.C;
    prob.c2 = cfg.C2;
    prob.pspg = cfg.stabilization.pspg;

    const tensor_space_2d space = make_space_2d(cfg, {});
    const stokes_solution sol = solve_stokes(prob, space);

    if (!cavity) {
        st.errors.push_back({cfg.degree, cfg.elements, mesh_size(space), space.dimension(),
                             "u", velocity_error(sol.u, ms)});
        st.errors.push_back({cfg.degree, cfg.elements, mesh_size(space), space.dimension(),
                             "p", pressure_error(sol.p, &sol.u, ms, true)});
    } else {
        write_centerlines(st, sol.u);
    }
    const collocation_set set(space);
    st.manifest["diagnostics"] = {{"divergence_max", divergence_max(sol.u, set)},
                                  {"gauge_shift", sol.gauge_shift}};

    write_flow_csv(st, sol.u, sol.p, sol.omega ? &*sol.omega : nullptr, false);
    if (cfg.write_vtk) {
        write_vtk(st, sol.u, &sol.p, sol.omega ? &*sol.omega : nullptr, false);
    }
    if (cfg.dump_system) {
        const auto metrics = compute_mesh_metrics(set);
        auto system = assemble_stokes(prob, space, set, metrics);
        if (prob.fix_gauge) {
            fix_pressure_gauge(system, prob, set);
        }
        dump_system_if_requested(st, system);
    }
}

void run_ns_driver(run_state& st) {
    const run_config& cfg = st.cfg;
    const flow_form form = cfg.form == "rotational" ? flow_form::rotational
                                                    : flow_form::velocity_pressure;
    const equation_kind kind = form == flow_form::velocity_pressure ? equation_kind::ns_vp
                                                                    : equation_kind::ns_rot;

    newton_options opts;
    opts.max_iterations = cfg.solver.max_iterations;
    opts.tolerance = cfg.solver.tolerance;
    const ns_initial_guess init = cfg.solver.initial == "stokes"
                                      ? ns_initial_guess::stokes_solve
                                      : ns_initial_guess::zero;

    auto apply_constants = [&](ns_problem& prob) {
        prob.edge_constant = cfg.C;
        prob.c3 = cfg.C3;
        prob.s_rot = cfg.s_rot;
        prob.supg = cfg.stabilization.supg;
        prob.pspg = cfg.stabilization.pspg;
        prob.graddiv = cfg.stabilization.graddiv;
    };

    flow_ms ms;
    ns_solution sol;
    tensor_space_2d space = make_space_2d(
        cfg, cfg.problem == "kovasznay" ? rect{-0.5, 1.0, -0.5, 0.5} : rect{});

    if (cfg.problem == "ns_cavity") {
        auto make_problem = [&](double re) {
            ns_problem prob = ns_cavity_problem(form, re);
            apply_constants(prob);
            return prob;
        };
        std::vector<double> sequence = cfg.solver.continuation;
        if (sequence.empty()) {
            sequence = {cfg.reynolds};
        }
        sol = solve_ns_continuation(make_problem, sequence, space, opts);
    } else {
        const double re = cfg.problem == "kovasznay" ? cfg.reynolds : 1.0 / cfg.viscosity;
        ms = cfg.problem == "kovasznay" ? kovasznay_ms(re, kind)
                                        : stokes_vortex_ms(cfg.viscosity, kind);
        ns_problem prob = make_ns_problem(ms);
        apply_constants(prob);
        sol = solve_ns(prob, space, opts, init);
    }
    record_newton(st, sol.report);

    if (cfg.problem != "ns_cavity") {
        st.errors.push_back({cfg.degree, cfg.elements, mesh_size(space), space.dimension(),
                             "u", velocity_error(sol.u, ms)});
        const bool pure_dirichlet = cfg.problem != "kovasznay";
        st.errors.push_back({cfg.degree, cfg.elements, mesh_size(space), space.dimension(),
                             "p", pressure_error(sol.pressure, &sol.u, ms, pure_dirichlet)});
    } else {
        write_centerlines(st, sol.u);
        ordered_json dev = ordered_json::object();
        if (!cfg.reference_u.empty()) {
            const profile_deviation d = compare_reference(
                sol.u, centerline::vertical_ux, read_reference_table(cfg.reference_u));
            dev["u_centerline"] = {{"max", d.max_abs}, {"rms", d.rms}};
        }
        if (!cfg.reference_v.empty()) {
            const profile_deviation d = compare_reference(
                sol.u, centerline::horizontal_uy, read_reference_table(cfg.reference_v));
            dev["v_centerline"] = {{"max", d.max_abs}, {"rms", d.rms}};
        }
        if (!dev.empty()) {
            st.manifest["reference_deviation"] = dev;
        }
    }

    const collocation_set set(space);
    st.manifest["diagnostics"] = {{"divergence_max", divergence_max(sol.u, set)},
                                  {"gauge_shift", sol.gauge_shift}};
    write_flow_csv(st, sol.u, sol.pressure, sol.omega ? &*sol.omega : nullptr,
                   form == flow_form::rotational);
    if (cfg.write_vtk) {
        write_vtk(st, sol.u, &sol.pressure, sol.omega ? &*sol.omega : nullptr,
                  form == flow_form::rotational);
    }

    if (!sol.report.converged) {
        throw solve_failure("newton did not converge: " + sol.report.failure);
    }
}

ordered_json config_to_json(const run_config& c) {
    ordered_json j;
    j["problem"] = c.problem;
    j["form"] = c.form;
    j["degree"] = c.degree;
    j["elements"] = c.elements;
    j["knots"] = c.knots;
    j["peclet"] = c.peclet;
    j["reynolds"] = c.reynolds;
    j["viscosity"] = c.viscosity;
    j["stabilization"] = {{"supg", c.stabilization.supg},
                          {"pspg", c.stabilization.pspg},
                          {"graddiv", c.stabilization.graddiv}};
    j["constants"] = {{"C", c.C}, {"C1", c.C1}, {"C2", c.C2}, {"C3", c.C3},
                      {"s_rot", c.s_rot}};
    j["solver"] = {{"max_iterations", c.solver.max_iterations},
                   {"tolerance", c.solver.tolerance},
                   {"continuation", c.solver.continuation},
                   {"initial", c.solver.initial}};
    j["output_dir"] = c.output_dir;
    j["samples_per_span"] = c.samples_per_span;
    j["write_vtk"] = c.write_vtk;
    j["dump_system"] = c.dump_system;
    j["reference_u"] = c.reference_u;
    j["reference_v"] = c.reference_v;
    j["skew_angle_deg"] = c.skew_angle_deg;
    return j;
}

void config_from_json(const ordered_json& j, run_config& c) {
    c.problem = j.value("problem", c.problem);
    c.form = j.value("form", c.form);
    c.degree = j.value("degree", c.degree);
    c.elements = j.value("elements", c.elements);
    c.knots = j.value("knots", c.knots);
    c.peclet = j.value("peclet", c.peclet);
    c.reynolds = j.value("reynolds", c.reynolds);
    c.viscosity = j.value("viscosity", c.viscosity);
    if (j.contains("stabilization")) {
        const auto& s = j.at("stabilization");
        c.stabilization.supg = s.value("supg", c.stabilization.supg);
        c.stabilization.pspg = s.value("pspg", c.stabilization.pspg);
        c.stabilization.graddiv = s.value("graddiv", c.stabilization.graddiv);
    }
    if (j.contains("constants")) {
        const auto& k = j.at("constants");
        c.C = k.value("C", c.C);
        c.C1 = k.value("C1", c.C1);
        c.C2 = k.value("C2", c.C2);
        c.C3 = k.value("C3", c.C3);
        c.s_rot = k.value("s_rot", c.s_rot);
    }
    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        c.solver.max_iterations = s.value("max_iterations", c.solver.max_iterations);
        c.solver.tolerance = s.value("tolerance", c.solver.tolerance);
        c.solver.continuation = s.value("continuation", c.solver.continuation);
        c.solver.initial = s.value("initial", c.solver.initial);
    }
    c.output_dir = j.value("output_dir", c.output_dir);
    c.samples_per_span = j.value("samples_per_span", c.samples_per_span);
    c.write_vtk = j.value("write_vtk", c.write_vtk);
    c.dump_system = j.value("dump_system", c.dump_system);
    c.reference_u = j.value("reference_u", c.reference_u);
    c.reference_v = j.value("reference_v", c.reference_v);
    c.skew_angle_deg = j.value("skew_angle_deg", c.skew_angle_deg);
}

}  // namespace

run_config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file " + path);
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("config parse error in " + path + ": " + e.what());
    }
    if (j.contains("config")) {
        j = j.at("config");  // manifest rerun
    }
    run_config cfg;
    try {
        config_from_json(j, cfg);
    } catch (const std::exception& e) {
        throw config_error("bad config value in " + path + ": " + e.what());
    }
    return cfg;
}

void validate_config(const run_config& cfg) {
    if (!scalar_problems.count(cfg.problem) && !flow_problems.count(cfg.problem)) {
        throw config_error("unknown problem '" + cfg.problem + "'");
    }
    if (cfg.form != "vp" && cfg.form != "rotational") {
        throw config_error("form must be 'vp' or 'rotational'");
    }
    if (scalar_problems.count(cfg.problem) && cfg.form == "rotational") {
        throw config_error("rotational form applies to flow problems only");
    }
    if (cfg.degree < 2) {
        throw config_error("degree must be at least 2 (got "
                           + std::to_string(cfg.degree) + ")");
    }
    if (cfg.elements < 1) {
        throw config_error("elements must be positive");
    }
    if (cfg.knots != "uniform" && cfg.knots != "stretched") {
        throw config_error("knots must be 'uniform' or 'stretched'");
    }
    if (cfg.knots == "stretched" && cfg.elements < 2) {
        throw config_error("stretched knots need at least 2 elements");
    }
    if (cfg.peclet <= 0.0 || cfg.reynolds <= 0.0 || cfg.viscosity <= 0.0) {
        throw config_error("Pe, Re, and viscosity must be positive");
    }
    if (cfg.C < 0.0 || cfg.C1 <= 0.0 || cfg.C2 <= 0.0 || cfg.C3 <= 0.0 || cfg.s_rot <= 0.0) {
        throw config_error("stabilization constants out of range");
    }
    if (cfg.samples_per_span < 1) {
        throw config_error("samples_per_span must be positive");
    }
    if (cfg.solver.initial != "zero" && cfg.solver.initial != "stokes") {
        throw config_error("solver.initial must be 'zero' or 'stokes'");
    }
}

namespace {

fs::path resolve_output_dir(const std::string& dir) {
    const char* root = std::getenv("SPCOL_OUTPUT_ROOT");
    fs::path p = dir;
    if (root && *root) {
        p = fs::path(root) / p;
    }
    fs::create_directories(p);
    return p;
}

}  // namespace

std::string run(const run_config& cfg) {
    validate_config(cfg);

    run_state st;
    st.cfg = cfg;
    st.dir = resolve_output_dir(cfg.output_dir);
    st.manifest["version"] = SPCOL_VERSION;
    st.manifest["config"] = config_to_json(cfg);

    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        if (cfg.problem == "bl1d" || cfg.problem == "sine1d") {
            run_ad_1d(st);
        } else if (cfg.problem == "sine2d" || cfg.problem == "skew") {
            run_ad_2d(st);
        } else if (cfg.problem == "stokes_vortex" || cfg.problem == "stokes_cavity") {
            run_stokes_driver(st);
        } else {
            run_ns_driver(st);
        }
    } catch (const solve_failure& e) {
        failure = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    st.manifest["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    write_error_csv(st);
    if (!st.errors.empty()) {
        ordered_json errs = ordered_json::array();
        for (const error_report& r : st.errors) {
            errs.push_back({{"field", r.field}, {"k", r.degree}, {"n_elem", r.n_elem},
                            {"h", r.h}, {"dofs", r.dofs}, {"l2", r.error.l2},
                            {"h1", r.error.h1}});
        }
        st.manifest["errors"] = errs;
    }
    st.manifest["artifacts"] = st.artifacts;

    const fs::path manifest_path = st.dir / "manifest.json";
    {
        auto out = open_output(manifest_path);
        out << st.manifest.dump(2) << "\n";
    }
    if (!failure.empty()) {
        throw solve_failure(failure + " (manifest at " + manifest_path.string() + ")");
    }
    return manifest_path.string();
}

std::string sweep(const run_config& base, const std::string& axis,
                  const std::vector<double>& values) {
    validate_config(base);
    if (values.empty()) {
        throw config_error("sweep: empty value list");
    }
    const std::set<std::string> axes = {"n_elem", "k", "C", "Pe", "Re"};
    if (!axes.count(axis)) {
        throw config_error("sweep: unknown axis '" + axis + "'");
    }

    const fs::path dir = resolve_output_dir(base.output_dir);
    std::vector<std::pair<double, std::vector<error_report>>> collected;

    for (double value : values) {
        run_config cfg = base;
        if (axis == "n_elem") {
            cfg.elements = static_cast<int>(value);
        } else if (axis == "k") {
            cfg.degree = static_cast<int>(value);
        } else if (axis == "C") {
            cfg.C = value;
        } else if (axis == "Pe") {
            cfg.peclet = value;
        } else {
            cfg.reynolds = value;
            cfg.viscosity = 1.0 / value;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "%s_%g", axis.c_str(), value);
        cfg.output_dir = (fs::path(base.output_dir) / label).string();
        const std::string manifest = run(cfg);

        // reload the errors this run reported
        std::ifstream in(manifest);
        ordered_json j;
        in >> j;
        std::vector<error_report> errs;
        if (j.contains("errors")) {
            for (const auto& e : j.at("errors")) {
                error_report r;
                r.field = e.at("field");
                r.degree = e.at("k");
                r.n_elem = e.at("n_elem");
                r.h = e.at("h");
                r.dofs = e.at("dofs");
                r.error.l2 = e.at("l2");
                r.error.h1 = e.at("h1");
                errs.push_back(r);
            }
        }
        collected.emplace_back(value, std::move(errs));
    }

    const fs::path table_path = dir / ("sweep_" + axis + ".csv");
    auto out = open_output(table_path);
    out << axis << ",k,n_elem,h,field,norm,error\n";
    for (const auto& [value, errs] : collected) {
        for (const error_report& r : errs) {
            out << fmt(value) << "," << r.degree << "," << r.n_elem << "," << fmt(r.h) << ","
                << r.field << ",L2," << fmt(r.error.l2) << "\n";
            out << fmt(value) << "," << r.degree << "," << r.n_elem << "," << fmt(r.h) << ","
                << r.field << ",H1," << fmt(r.error.h1) << "\n";
        }
    }

    if (axis == "n_elem" && !collected.empty() && !collected.front().second.empty()) {
        // fitted rates per field/norm over the swept meshes
        std::vector<std::string> fields;
        for (const error_report& r : collected.front().second) {
            fields.push_back(r.field);
        }
        for (const std::string& field : fields) {
            std::vector<double> h, l2, h1;
            for (const auto& [value, errs] : collected) {
                for (const error_report& r : errs) {
                    if (r.field == field) {
                        h.push_back(r.h);
                        l2.push_back(r.error.l2);
                        h1.push_back(r.error.h1);
                    }
                }
            }
            if (h.size() >= 2) {
                out << "rate,,,," << field << ",L2," << fmt(fit_rate(h, l2)) << "\n";
                out << "rate,,,," << field << ",H1," << fmt(fit_rate(h, h1)) << "\n";
            }
        }
    }
    return table_path.string();
}

}  // namespace spcol
