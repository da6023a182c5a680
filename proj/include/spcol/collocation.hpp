#pragma once

#include "spcol/field.hpp"
#include "spcol/geometry.hpp"
#include "spcol/tensor_space.hpp"

#include <vector>

namespace spcol {

enum class point_class { interior, edge, corner };

struct colloc_point {
    int ix = 0, iy = 0;      // tensor index; linear id is space.linear_index(ix, iy)
    vec2 param;              // Greville coordinates in the parametric square
    vec2 phys;
    point_class cls = point_class::interior;
    int normal_count = 0;    // 0 interior, 1 edge, 2 corner
    vec2 normals[2];         // outward unit normals of the touching edges

    // Single outward normal used by the boundary continuity term; corners get
    // the normalized average of their two edge normals.
    vec2 combined_normal() const;
    bool on_boundary() const { return cls != point_class::interior; }
};

// Greville collocation points of a tensor space, classified into interior,
// edge, and corner points. Point i corresponds to basis function i.
class collocation_set {
public:
    explicit collocation_set(const tensor_space_2d& space);

    const tensor_space_2d& space() const { return *space_; }
    const std::vector<colloc_point>& points() const { return points_; }
    const colloc_point& point(int linear) const { return points_[linear]; }
    int size() const { return static_cast<int>(points_.size()); }

    const std::vector<int>& interior() const { return interior_; }
    const std::vector<int>& boundary() const { return boundary_; }

private:
    const tensor_space_2d* space_;
    std::vector<colloc_point> points_;
    std::vector<int> interior_;
    std::vector<int> boundary_;
};

// h: mean physical distance to the axis-adjacent Greville neighbors.
// h_b: for boundary points, distance to the adjacent point in the inward
// normal direction (nearest of the two for corners); zero on interior points.
struct mesh_metrics {
    std::vector<double> h;
    std::vector<double> h_b;
};

mesh_metrics compute_mesh_metrics(const collocation_set& set);

// 1D analogue on the Greville points of a univariate space.
struct mesh_metrics_1d {
    std::vector<double> h;
};

mesh_metrics_1d compute_mesh_metrics_1d(const spline_space_1d& space);

// Interpolates per-collocation-point values (tau, etc.) into the solution
// space so that smooth derivatives of the interpolant are available.
spline_field build_tau_field(const greville_interpolator_2d& interp,
                             const std::vector<double>& values);

}  // namespace spcol
