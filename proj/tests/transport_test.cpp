#include "spcol/transport.hpp"

#include "spcol/benchmarks.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spcol;

namespace {

ad_problem_1d linear_exact_problem() {
    // phi = x solves u phi' - kappa phi'' = 1 with u = 1, kappa = 1
    ad_problem_1d prob;
    prob.velocity = [](double) { return 1.0; };
    prob.velocity_deriv = [](double) { return 0.0; };
    prob.kappa = 1.0;
    prob.forcing = [](double) { return 1.0; };
    prob.forcing_deriv = [](double) { return 0.0; };
    prob.g_left = 0.0;
    prob.g_right = 1.0;
    return prob;
}

}  // namespace

TEST(TauSupg, FormulaValues) {
    EXPECT_NEAR(tau_supg_ad(1.0, 0.0, 0.1), 0.05, 1e-15);
    EXPECT_NEAR(tau_supg_ad(0.0, 1.0, 0.1), 0.0025, 1e-15);
    // 1/sqrt((2/0.1)^2 + (4/0.01)^2)
    EXPECT_NEAR(tau_supg_ad(1.0, 1.0, 0.1), 2.4968808471946117e-3, 1e-15);
    EXPECT_THROW(tau_supg_ad(0.0, 0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(tau_supg_ad(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Transport1d, ExactSolutionInSpace) {
    const ad_problem_1d base = linear_exact_problem();
    for (int k : {2, 3, 4}) {
        const spline_space_1d space(open_uniform_knots(k, 8));
        ad_problem_1d prob = base;
        prob.supg = false;
        const spline_field_1d unstab = solve_ad_1d(prob, space);
        prob.supg = true;
        const spline_field_1d stab = solve_ad_1d(prob, space);
        for (int i = 0; i < space.dimension(); ++i) {
            // phi = x has coefficients equal to the greville abscissae
            EXPECT_NEAR(unstab.coefficients()[i], space.greville()[i], 1e-10);
            EXPECT_NEAR(stab.coefficients()[i], space.greville()[i], 1e-9);
        }
    }
}

TEST(Transport1d, UnsupportedDegreeForSupg) {
    // degree-1 splines cannot carry the stabilized operator
    const spline_space_1d space(knot_vector({0, 0, 0.5, 1, 1}, 1));
    const auto metrics = compute_mesh_metrics_1d(space);
    EXPECT_THROW(assemble_ad_1d(linear_exact_problem(), space, metrics),
                 std::invalid_argument);
}

TEST(Transport1d, InteriorResidualVanishes) {
    const scalar_ms_1d ms = sine_ms_1d();
    const spline_space_1d space(open_uniform_knots(4, 16));
    ad_problem_1d prob = ms.problem;
    prob.supg = false;
    const spline_field_1d phi = solve_ad_1d(prob, space);
    double fmax = 0.0;
    for (double g : space.greville()) {
        fmax = std::max(fmax, std::abs(prob.forcing(g)));
    }
    EXPECT_LT(max_interior_residual_1d(prob, space, phi), 1e-8 * fmax);
}

TEST(Transport1d, StabilizationConsistencyUnderRefinement) {
    // the unstabilized residual of the SUPG solution shrinks with the mesh
    const scalar_ms_1d ms = sine_ms_1d();
    double coarse = 0.0, fine = 0.0;
    for (int n : {8, 32}) {
        const spline_space_1d space(open_uniform_knots(3, n));
        const spline_field_1d phi = solve_ad_1d(ms.problem, space);
        const double r = max_interior_residual_1d(ms.problem, space, phi);
        (n == 8 ? coarse : fine) = r;
    }
    EXPECT_LT(fine, coarse);
}

TEST(Transport1d, UpwindPointEquivalence) {
    // with constant u and constant tau the stabilized row equals the plain
    // residual evaluated a distance tau*u upstream, up to O(tau^2); halving
    // tau must shrink the mismatch about fourfold
    const spline_space_1d space(open_uniform_knots(4, 16));
    const auto metrics = compute_mesh_metrics_1d(space);

    ad_problem_1d prob;
    prob.velocity = [](double) { return 1.0; };
    prob.velocity_deriv = [](double) { return 0.0; };
    prob.kappa = 0.02;
    prob.forcing = [](double) { return 0.0; };
    prob.forcing_deriv = [](double) { return 0.0; };

    // smooth test field: fitted cubic polynomial, reproduced exactly
    std::vector<double> values(space.dimension());
    for (int i = 0; i < space.dimension(); ++i) {
        const double x = space.greville()[i];
        values[i] = x * x * x - 2.0 * x * x + x;
    }
    const spline_field_1d phi = fit_spline(space, values);
    const Eigen::VectorXd coef =
        Eigen::Map<const Eigen::VectorXd>(phi.coefficients().data(), space.dimension());

    auto mismatch = [&](double tau_value) {
        const spline_field_1d tau_field =
            fit_spline(space, std::vector<double>(space.dimension(), tau_value));
        const linear_system sys = assemble_ad_1d(prob, space, metrics, &tau_field);
        const Eigen::VectorXd rows = sys.multiply(coef);
        double worst = 0.0;
        for (int i = 2; i < space.dimension() - 2; ++i) {
            const double x = space.greville()[i];
            const double shifted = x - tau_value;  // upstream by tau |u|
            const double upwind_residual =
                phi.eval(shifted, 1) - prob.kappa * phi.eval(shifted, 2);
            worst = std::max(worst, std::abs(rows[i] - upwind_residual));
        }
        return worst;
    };

    const double tau = 0.02;
    const double d1 = mismatch(tau);
    const double d2 = mismatch(tau / 2.0);
    EXPECT_GT(d1, 0.0);
    const double ratio = d1 / d2;
    EXPECT_GT(ratio, 3.0);
    EXPECT_LT(ratio, 5.0);
}

TEST(Transport2d, PureDiffusionConstantData) {
    tensor_space_2d space(spline_space_1d(open_uniform_knots(3, 4)));
    ad_problem_2d prob;
    prob.velocity = [](vec2) { return vec2{0.0, 0.0}; };
    prob.velocity_grad = [](vec2) { return mat2{{{0, 0}, {0, 0}}}; };
    prob.kappa = 1.0;
    prob.forcing = [](vec2) { return 0.0; };
    prob.forcing_grad = [](vec2) { return vec2{0.0, 0.0}; };
    prob.dirichlet = [](vec2) { return 4.0; };
    prob.supg = true;
    const spline_field phi = solve_ad_2d(prob, space);
    for (double t : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(phi.eval({t, 0.4}), 4.0, 1e-10);
    }
}

TEST(Transport2d, SineConvergenceSmoke) {
    const scalar_ms_2d ms = sine_ms_2d();
    std::vector<double> hs, errs;
    for (int n : {8, 16, 32}) {
        tensor_space_2d space(spline_space_1d(open_uniform_knots(2, n)));
        const spline_field phi = solve_ad_2d(ms.problem, space);
        hs.push_back(mesh_size(space));
        errs.push_back(scalar_error_2d(phi, 0, ms.phi, ms.grad_phi).l2);
    }
    EXPECT_NEAR(fit_rate(hs, errs), 2.0, 0.4);
}

TEST(Transport2d, RegularizedSkewBoundaryAssignment) {
    tensor_space_2d space(spline_space_1d(open_uniform_knots(4, 10)));
    const collocation_set set(space);
    const ad_problem_2d prob = skew_advection_problem(1000.0);
    const auto pins = assign_segment_values(set, prob.segments);

    const int nx = space.nx(), ny = space.ny();
    for (int ix = 0; ix < nx; ++ix) {
        EXPECT_DOUBLE_EQ(*pins[space.linear_index(ix, 0)], 1.0) << "bottom ix=" << ix;
    }
    for (int iy = 0; iy < ny; ++iy) {
        const double t = space.space_y().greville()[iy];
        const double expected = t <= 0.1 ? 1.0 : 0.0;
        EXPECT_DOUBLE_EQ(*pins[space.linear_index(0, iy)], expected) << "left iy=" << iy;
    }
    EXPECT_DOUBLE_EQ(*pins[space.linear_index(0, ny - 1)], 0.0);
    EXPECT_DOUBLE_EQ(*pins[space.linear_index(nx - 1, ny - 1)], 0.0);

    // assembled rows for pinned coefficients are unit rows with the data
    const auto metrics = compute_mesh_metrics(set);
    const linear_system sys = assemble_ad_2d(prob, space, set, metrics);
    for (int ix = 0; ix < nx; ++ix) {
        const int id = space.linear_index(ix, 0);
        EXPECT_EQ(sys.label(id).kind, "dirichlet_pin");
        EXPECT_DOUBLE_EQ(sys.rhs()[id], 1.0);
    }
}

TEST(Transport2d, SkewSolveBounded) {
    // Pe = 1000 on a coarse mesh; SUPG keeps the solution in a sane range
    tensor_space_2d space(spline_space_1d(open_uniform_knots(4, 16)));
    const ad_problem_2d prob = skew_advection_problem(1000.0);
    const spline_field phi = solve_ad_2d(prob, space);
    const overshoot_result osc = overshoot_metric_2d(phi, 0, 0.0, 1.0);
    EXPECT_LT(osc.over, 1.0);
    EXPECT_LT(osc.under, 1.0);
}

TEST(Transport1d, BoundaryLayerStabilizationHelps) {
    const scalar_ms_1d ms = boundary_layer_1d(500.0);
    const spline_space_1d space(open_uniform_knots(4, 16));

    ad_problem_1d unstab = ms.problem;
    unstab.supg = false;
    const spline_field_1d phi_unstab = solve_ad_1d(unstab, space);
    const spline_field_1d phi_stab = solve_ad_1d(ms.problem, space);

    const overshoot_result osc_unstab = overshoot_metric_1d(phi_unstab, 0.0, 1.0);
    const overshoot_result osc_stab = overshoot_metric_1d(phi_stab, 0.0, 1.0);
    EXPECT_GT(osc_unstab.over, 0.0);
    EXPECT_LT(osc_stab.over, 0.5 * osc_unstab.over);

    const error_pair err_unstab = scalar_error_1d(phi_unstab, ms.phi, ms.dphi);
    const error_pair err_stab = scalar_error_1d(phi_stab, ms.phi, ms.dphi);
    EXPECT_LT(err_stab.l2, err_unstab.l2);
}
