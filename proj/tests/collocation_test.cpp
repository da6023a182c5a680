#include "spcol/collocation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace spcol;

namespace {

tensor_space_2d make_space(int k, int n) {
    return tensor_space_2d(spline_space_1d(open_uniform_knots(k, n)));
}

}  // namespace

TEST(Collocation, QuadraticTwoElementGrid) {
    const tensor_space_2d space = make_space(2, 2);
    const collocation_set set(space);
    EXPECT_EQ(set.size(), 16);
    EXPECT_EQ(static_cast<int>(set.boundary().size()), 12);
    EXPECT_EQ(static_cast<int>(set.interior().size()), 4);

    int corners = 0;
    for (const colloc_point& p : set.points()) {
        if (p.cls == point_class::corner) {
            ++corners;
        }
    }
    EXPECT_EQ(corners, 4);

    // 1D greville set {0, .25, .75, 1} tensorized
    const colloc_point& p = set.point(space.linear_index(1, 1));
    EXPECT_NEAR(p.phys.x, 0.25, 1e-15);
    EXPECT_NEAR(p.phys.y, 0.25, 1e-15);
}

TEST(Collocation, CubicSingleElement) {
    const tensor_space_2d space = make_space(3, 1);
    const collocation_set set(space);
    EXPECT_EQ(set.size(), 16);
    const auto& g = space.space_x().greville();
    EXPECT_NEAR(g[1], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(g[2], 2.0 / 3.0, 1e-15);
}

TEST(Collocation, CornerNormals) {
    const tensor_space_2d space = make_space(2, 2);
    const collocation_set set(space);
    const colloc_point& corner = set.point(space.linear_index(0, 0));
    ASSERT_EQ(corner.normal_count, 2);
    std::set<std::pair<double, double>> normals{{corner.normals[0].x, corner.normals[0].y},
                                                {corner.normals[1].x, corner.normals[1].y}};
    EXPECT_TRUE(normals.count({-1.0, 0.0}));
    EXPECT_TRUE(normals.count({0.0, -1.0}));
    const vec2 combined = corner.combined_normal();
    EXPECT_NEAR(combined.x, -1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(combined.y, -1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(norm(combined), 1.0, 1e-15);
}

TEST(Collocation, ClassificationPartition) {
    const tensor_space_2d space = make_space(3, 4);
    const collocation_set set(space);
    std::set<int> seen;
    for (int id : set.interior()) {
        EXPECT_TRUE(seen.insert(id).second);
    }
    for (int id : set.boundary()) {
        EXPECT_TRUE(seen.insert(id).second);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), set.size());

    for (const colloc_point& p : set.points()) {
        const bool on_edge = p.param.x == 0.0 || p.param.x == 1.0 || p.param.y == 0.0
                             || p.param.y == 1.0;
        EXPECT_EQ(on_edge, p.on_boundary());
    }
}

TEST(Collocation, CountInvariance) {
    for (int k : {2, 3, 5, 8}) {
        for (int n : {1, 2, 4, 16, 64}) {
            const tensor_space_2d space = make_space(k, n);
            const collocation_set set(space);
            EXPECT_EQ(set.size(), space.dimension());
        }
    }
}

TEST(MeshMetrics, HandComputedQuadraticGrid) {
    const tensor_space_2d space = make_space(2, 2);
    const collocation_set set(space);
    const mesh_metrics m = compute_mesh_metrics(set);

    // point (0.25, 0.25): neighbor distances {0.25, 0.5, 0.25, 0.5}
    EXPECT_NEAR(m.h[space.linear_index(1, 1)], 0.375, 1e-15);
    // boundary point (0, 0.25): inward neighbor (0.25, 0.25)
    EXPECT_NEAR(m.h_b[space.linear_index(0, 1)], 0.25, 1e-15);
    // corner (0,0): nearest inward neighbor distance is 0.25 both ways
    EXPECT_NEAR(m.h_b[space.linear_index(0, 0)], 0.25, 1e-15);
    for (int id : set.interior()) {
        EXPECT_GT(m.h[id], 0.0);
    }
    for (int id : set.boundary()) {
        EXPECT_GT(m.h_b[id], 0.0);
    }
}

TEST(MeshMetrics, UniformSpacingGivesConstantH) {
    // cubic basis: interior greville points are uniformly spaced
    const tensor_space_2d space = make_space(3, 8);
    const collocation_set set(space);
    const mesh_metrics m = compute_mesh_metrics(set);
    double h0 = -1.0;
    for (int id : set.interior()) {
        const colloc_point& p = set.point(id);
        if (p.ix >= 3 && p.ix < space.nx() - 3 && p.iy >= 3 && p.iy < space.ny() - 3) {
            if (h0 < 0.0) {
                h0 = m.h[id];
            }
            EXPECT_NEAR(m.h[id], h0, 1e-14);
        }
    }
    EXPECT_NEAR(h0, 1.0 / 8.0, 1e-14);
}

TEST(MeshMetrics, HalvingElementsHalvesInteriorH) {
    const tensor_space_2d coarse = make_space(3, 8);
    const tensor_space_2d fine = make_space(3, 16);
    const collocation_set cset(coarse), fset(fine);
    const mesh_metrics cm = compute_mesh_metrics(cset);
    const mesh_metrics fm = compute_mesh_metrics(fset);
    // deep-interior h is the uniform greville spacing; compare the two levels
    const double hc = cm.h[coarse.linear_index(5, 5)];
    const double hf = fm.h[fine.linear_index(9, 9)];
    EXPECT_NEAR(hc, 2.0 * hf, 1e-12);
}

TEST(MeshMetrics, Metrics1d) {
    const spline_space_1d space(open_uniform_knots(2, 2));
    const mesh_metrics_1d m = compute_mesh_metrics_1d(space);
    // greville {0, .25, .75, 1}
    EXPECT_NEAR(m.h[0], 0.25, 1e-15);
    EXPECT_NEAR(m.h[1], 0.375, 1e-15);
    EXPECT_NEAR(m.h[2], 0.375, 1e-15);
    EXPECT_NEAR(m.h[3], 0.25, 1e-15);
}

TEST(TauField, ConstantAndLinearReproduction) {
    const tensor_space_2d space = make_space(3, 4);
    const collocation_set set(space);
    const greville_interpolator_2d interp(space);

    std::vector<double> constant(set.size(), 0.125);
    const spline_field tau_c = build_tau_field(interp, constant);
    for (double x : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(tau_c.eval({x, x}, 1, 0), 0.0, 1e-12);
        EXPECT_NEAR(tau_c.eval({x, x}, 0, 1), 0.0, 1e-12);
        EXPECT_NEAR(tau_c.eval({x, x}), 0.125, 1e-12);
    }

    std::vector<double> linear(set.size());
    for (int i = 0; i < set.size(); ++i) {
        linear[i] = 2.0 * set.point(i).phys.x + 1.0;
    }
    const spline_field tau_l = build_tau_field(interp, linear);
    for (double x : {0.2, 0.45, 0.8}) {
        EXPECT_NEAR(tau_l.eval({x, 0.3}, 1, 0), 2.0, 1e-8);
    }
}
