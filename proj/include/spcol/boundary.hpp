#pragma once

#include "spcol/collocation.hpp"
#include "spcol/geometry.hpp"
#include "spcol/tensor_space.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace spcol {

enum class domain_edge { left, right, bottom, top };

// Piecewise-constant Dirichlet data on a parametric range [t0, t1] of one
// edge. Segments are applied in declaration order and later entries override
// earlier ones, which settles the value of corner coefficients shared by two
// edges.
template <typename Value>
struct bc_segment {
    domain_edge edge;
    double t0 = 0.0;
    double t1 = 1.0;
    Value value{};
};

// Parametric coordinate of a boundary point along an edge.
inline double edge_coordinate(const colloc_point& p, domain_edge e) {
    return (e == domain_edge::left || e == domain_edge::right) ? p.param.y : p.param.x;
}

// True when the point lies on the given edge of the tensor grid.
inline bool point_on_edge(const tensor_space_2d& space, const colloc_point& p, domain_edge e) {
    switch (e) {
        case domain_edge::left: return p.ix == 0;
        case domain_edge::right: return p.ix == space.nx() - 1;
        case domain_edge::bottom: return p.iy == 0;
        case domain_edge::top: return p.iy == space.ny() - 1;
    }
    return false;
}

// Regularized Dirichlet data: the value pinned to each boundary basis
// coefficient, indexed by linear point id (empty optional on interior ids).
template <typename Value>
std::vector<std::optional<Value>> assign_segment_values(
    const collocation_set& set, const std::vector<bc_segment<Value>>& segments) {
    const auto& space = set.space();
    std::vector<std::optional<Value>> assigned(set.size());
    constexpr double tol = 1e-12;
    for (const auto& seg : segments) {
        const auto& greville = (seg.edge == domain_edge::left || seg.edge == domain_edge::right)
                                   ? space.space_y().greville()
                                   : space.space_x().greville();
        for (double breakpoint : {seg.t0, seg.t1}) {
            if (breakpoint <= tol || breakpoint >= 1.0 - tol) {
                continue;
            }
            bool aligned = false;
            for (double g : greville) {
                if (std::abs(g - breakpoint) <= tol) {
                    aligned = true;
                    break;
                }
            }
            if (!aligned) {
                std::fprintf(stderr,
                             "spcol: boundary segment breakpoint %.6g is between Greville "
                             "points; data assigned by nearest Greville coordinate\n",
                             breakpoint);
            }
        }
        for (int id : set.boundary()) {
            const colloc_point& p = set.point(id);
            if (!point_on_edge(space, p, seg.edge)) {
                continue;
            }
            const double t = edge_coordinate(p, seg.edge);
            if (t >= seg.t0 - tol && t <= seg.t1 + tol) {
                assigned[id] = seg.value;
            }
        }
    }
    return assigned;
}

}  // namespace spcol
