#include "spcol/stokes.hpp"

#include "spcol/benchmarks.hpp"
#include "spcol/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spcol;

namespace {

tensor_space_2d make_space(int k, int n) {
    return tensor_space_2d(spline_space_1d(open_uniform_knots(k, n)));
}

}  // namespace

TEST(TauPspg, FormulaValues) {
    EXPECT_NEAR(tau_pspg_stokes(0.1, 1.0), 0.0025, 1e-15);
    EXPECT_NEAR(tau_pspg_stokes(0.2, 1.0), 0.01, 1e-15);
    EXPECT_NEAR(tau_pspg_stokes(0.1, 0.5), 0.005, 1e-15);
    EXPECT_THROW(tau_pspg_stokes(0.0, 1.0), std::invalid_argument);
}

TEST(Stokes, ConstantStateRecovered) {
    tensor_space_2d space = make_space(3, 4);
    stokes_problem prob;
    prob.mu = 2.0;
    prob.forcing = [](vec2) { return vec2{0.0, 0.0}; };
    prob.forcing_grad = [](vec2) { return mat2{{{0, 0}, {0, 0}}}; };
    prob.dirichlet = [](vec2) { return vec2{0.7, -0.3}; };
    const stokes_solution sol = solve_stokes(prob, space);
    for (double t : {0.15, 0.5, 0.85}) {
        const vec2 u = sol.u.eval_vec({t, 1.0 - t});
        EXPECT_NEAR(u.x, 0.7, 1e-9);
        EXPECT_NEAR(u.y, -0.3, 1e-9);
        EXPECT_NEAR(sol.p.eval({t, t}), 0.0, 1e-9);
    }
}

TEST(Stokes, RotationalRestStateRecovered) {
    tensor_space_2d space = make_space(3, 4);
    stokes_problem prob;
    prob.form = flow_form::rotational;
    prob.forcing = [](vec2) { return vec2{0.0, 0.0}; };
    prob.forcing_grad = [](vec2) { return mat2{{{0, 0}, {0, 0}}}; };
    prob.dirichlet = [](vec2) { return vec2{0.0, 0.0}; };
    const stokes_solution sol = solve_stokes(prob, space);
    ASSERT_TRUE(sol.omega.has_value());
    for (double t : {0.2, 0.6}) {
        EXPECT_NEAR(norm(sol.u.eval_vec({t, t})), 0.0, 1e-10);
        EXPECT_NEAR(sol.omega->eval({t, t}), 0.0, 1e-10);
        EXPECT_NEAR(sol.p.eval({t, t}), 0.0, 1e-10);
    }
}

TEST(Stokes, GaugeSingularityDetected) {
    tensor_space_2d space = make_space(2, 4);
    const collocation_set set(space);
    const auto metrics = compute_mesh_metrics(set);
    const flow_ms ms = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    const stokes_problem prob = make_stokes_problem(ms);

    // pure-Dirichlet pressure nullspace: no gauge row makes the system singular
    linear_system ungauged = assemble_stokes(prob, space, set, metrics);
    EXPECT_THROW(ungauged.solve(), singular_system_error);

    linear_system gauged = assemble_stokes(prob, space, set, metrics);
    fix_pressure_gauge(gauged, prob, set);
    const Eigen::VectorXd x = gauged.solve();
    EXPECT_TRUE(x.allFinite());
}

TEST(Stokes, GaugePinLocationImmaterialUpToTruncation) {
    // Two different pins drop different continuity rows, so their solutions
    // differ by a constant in p only up to the consistency defect of the
    // discrete system; that defect must shrink under refinement.
    const flow_ms ms = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    const stokes_problem prob = make_stokes_problem(ms);
    double previous = 1e300;
    for (int n_elem : {8, 16}) {
        tensor_space_2d space = make_space(4, n_elem);
        const collocation_set set(space);
        const auto metrics = compute_mesh_metrics(set);

        linear_system a = assemble_stokes(prob, space, set, metrics);
        fix_pressure_gauge(a, prob, set);
        const Eigen::VectorXd x = a.solve();

        linear_system b = assemble_stokes(prob, space, set, metrics);
        const int alt = set.interior().front();
        b.replace_row(dof_index(alt, 2, 3), {alt, "gauge"}, {{dof_index(alt, 2, 3), 1.0}},
                      0.0);
        const Eigen::VectorXd y = b.solve();

        const int n = space.dimension();
        double shift = 0.0;
        for (int i = 0; i < n; ++i) {
            shift += (x[dof_index(i, 2, 3)] - y[dof_index(i, 2, 3)]) / n;
        }
        double dev = 0.0;
        for (int i = 0; i < n; ++i) {
            dev = std::max(dev, std::abs(x[dof_index(i, 2, 3)] - y[dof_index(i, 2, 3)]
                                         - shift));
            dev = std::max(dev, std::abs(x[dof_index(i, 0, 3)] - y[dof_index(i, 0, 3)]));
        }
        EXPECT_LT(dev, previous);
        previous = dev;
    }
    EXPECT_LT(previous, 1e-5);
}

TEST(Stokes, PressureMeanIsZeroAfterShift) {
    tensor_space_2d space = make_space(3, 8);
    const flow_ms ms = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    const stokes_solution sol = solve_stokes(make_stokes_problem(ms), space);
    EXPECT_NEAR(quadrature_mean(sol.p, 0), 0.0, 1e-10);
}

TEST(Stokes, VortexConvergenceSmoke) {
    const flow_ms ms = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    const stokes_problem prob = make_stokes_problem(ms);
    std::vector<double> hs, errs;
    for (int n : {4, 8, 16}) {
        tensor_space_2d space = make_space(2, n);
        const stokes_solution sol = solve_stokes(prob, space);
        hs.push_back(mesh_size(space));
        errs.push_back(velocity_error(sol.u, ms).l2);
    }
    EXPECT_NEAR(fit_rate(hs, errs), 2.0, 0.5);
    EXPECT_LT(errs.back(), errs.front());
}

TEST(Stokes, RotationalVortexOddDegreeGainsAccuracy) {
    const flow_ms ms_rot = stokes_vortex_ms(1.0, equation_kind::stokes_rot);
    const flow_ms ms_vp = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    tensor_space_2d space = make_space(3, 16);
    const stokes_solution rot = solve_stokes(make_stokes_problem(ms_rot), space);
    const stokes_solution vp = solve_stokes(make_stokes_problem(ms_vp), space);
    const double err_rot = velocity_error(rot.u, ms_rot).l2;
    const double err_vp = velocity_error(vp.u, ms_vp).l2;
    EXPECT_LT(err_rot, err_vp);  // k+1 vs k-1 rates at the same mesh
}

TEST(Stokes, CavitySymmetryAndPressureSanity) {
    tensor_space_2d space = make_space(3, 16);
    const stokes_problem prob = stokes_cavity_problem(flow_form::velocity_pressure);
    const stokes_solution sol = solve_stokes(prob, space);

    double umax = 0.0, asym = 0.0;
    for (int i = 1; i < 20; ++i) {
        for (int j = 1; j < 20; ++j) {
            const vec2 p{i / 20.0, j / 20.0};
            const vec2 mirrored{1.0 - p.x, p.y};
            const vec2 a = sol.u.eval_vec(p);
            const vec2 b = sol.u.eval_vec(mirrored);
            umax = std::max({umax, std::abs(a.x), std::abs(a.y)});
            asym = std::max({asym, std::abs(a.x - b.x), std::abs(a.y + b.y)});
        }
    }
    EXPECT_LT(asym, 1e-6 * umax);

    // no odd-even pressure oscillation among interior collocation values
    const collocation_set set(space);
    double pmin = 1e300, pmax = -1e300;
    for (int id : set.interior()) {
        const double v = sol.p.eval(set.point(id).phys);
        pmin = std::min(pmin, v);
        pmax = std::max(pmax, v);
    }
    const double range = pmax - pmin;
    ASSERT_TRUE(std::isfinite(range));
    double worst = 0.0;
    for (int id : set.interior()) {
        const colloc_point& p = set.point(id);
        if (p.ix < 2 || p.ix >= space.nx() - 2 || p.iy < 2 || p.iy >= space.ny() - 2) {
            continue;
        }
        const double center = sol.p.eval(p.phys);
        const double mean = 0.25 * (sol.p.eval(space.greville_point(p.ix - 1, p.iy))
                                    + sol.p.eval(space.greville_point(p.ix + 1, p.iy))
                                    + sol.p.eval(space.greville_point(p.ix, p.iy - 1))
                                    + sol.p.eval(space.greville_point(p.ix, p.iy + 1)));
        worst = std::max(worst, std::abs(center - mean));
    }
    EXPECT_LT(worst, 0.5 * range);
}

TEST(Stokes, EdgeConstantSweepSmoke) {
    const flow_ms ms = stokes_vortex_ms(1.0, equation_kind::stokes_vp);
    tensor_space_2d space = make_space(3, 8);
    double lo = 1e300, hi = 0.0;
    for (double c : {0.0, 1.0, 100.0}) {
        stokes_problem prob = make_stokes_problem(ms);
        prob.edge_constant = c;
        const stokes_solution sol = solve_stokes(prob, space);
        const double err = velocity_error(sol.u, ms).l2;
        lo = std::min(lo, err);
        hi = std::max(hi, err);
    }
    EXPECT_LT(hi / lo, 2.0);
}

TEST(Stokes, DegreeTooLowRejected) {
    tensor_space_2d space = make_space(1, 4);
    const stokes_problem prob = stokes_cavity_problem(flow_form::velocity_pressure);
    EXPECT_THROW(solve_stokes(prob, space), std::invalid_argument);
}
