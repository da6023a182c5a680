#include "spcol/collocation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spcol {

vec2 colloc_point::combined_normal() const {
    if (normal_count == 0) {
        return {0.0, 0.0};
    }
    if (normal_count == 1) {
        return normals[0];
    }
    vec2 sum = normals[0] + normals[1];
    const double len = norm(sum);
    return {sum.x / len, sum.y / len};
}

collocation_set::collocation_set(const tensor_space_2d& space) : space_(&space) {
    const int nx = space.nx();
    const int ny = space.ny();
    const auto& gx = space.space_x().greville();
    const auto& gy = space.space_y().greville();
    points_.resize(static_cast<std::size_t>(nx) * ny);

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            colloc_point& p = points_[space.linear_index(ix, iy)];
            p.ix = ix;
            p.iy = iy;
            p.param = {gx[ix], gy[iy]};
            p.phys = space.to_physical(p.param);

            if (ix == 0) p.normals[p.normal_count++] = {-1.0, 0.0};
            if (ix == nx - 1) p.normals[p.normal_count++] = {1.0, 0.0};
            if (iy == 0) p.normals[p.normal_count++] = {0.0, -1.0};
            if (iy == ny - 1) p.normals[p.normal_count++] = {0.0, 1.0};

            p.cls = p.normal_count == 0 ? point_class::interior
                  : p.normal_count == 1 ? point_class::edge
                                        : point_class::corner;
        }
    }
    for (int i = 0; i < size(); ++i) {
        (points_[i].on_boundary() ? boundary_ : interior_).push_back(i);
    }
}

mesh_metrics compute_mesh_metrics(const collocation_set& set) {
    const auto& space = set.space();
    const int nx = space.nx();
    const int ny = space.ny();
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("compute_mesh_metrics: degenerate grid");
    }

    mesh_metrics m;
    m.h.resize(set.size(), 0.0);
    m.h_b.resize(set.size(), 0.0);

    auto dist = [&](const colloc_point& a, int jx, int jy) {
        return norm(space.greville_point(jx, jy) - a.phys);
    };

    for (const colloc_point& p : set.points()) {
        const int id = space.linear_index(p.ix, p.iy);
        double sum = 0.0;
        int count = 0;
        if (p.ix > 0) { sum += dist(p, p.ix - 1, p.iy); ++count; }
        if (p.ix < nx - 1) { sum += dist(p, p.ix + 1, p.iy); ++count; }
        if (p.iy > 0) { sum += dist(p, p.ix, p.iy - 1); ++count; }
        if (p.iy < ny - 1) { sum += dist(p, p.ix, p.iy + 1); ++count; }
        m.h[id] = sum / count;

        if (p.on_boundary()) {
            double hb = std::numeric_limits<double>::max();
            if (p.ix == 0) hb = std::min(hb, dist(p, 1, p.iy));
            if (p.ix == nx - 1) hb = std::min(hb, dist(p, nx - 2, p.iy));
            if (p.iy == 0) hb = std::min(hb, dist(p, p.ix, 1));
            if (p.iy == ny - 1) hb = std::min(hb, dist(p, p.ix, ny - 2));
            m.h_b[id] = hb;
        }
    }
    return m;
}

mesh_metrics_1d compute_mesh_metrics_1d(const spline_space_1d& space) {
    const auto& g = space.greville();
    const int n = static_cast<int>(g.size());
    if (n < 2) {
        throw std::invalid_argument("compute_mesh_metrics_1d: degenerate grid");
    }
    mesh_metrics_1d m;
    m.h.resize(n);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        int count = 0;
        if (i > 0) { sum += g[i] - g[i - 1]; ++count; }
        if (i < n - 1) { sum += g[i + 1] - g[i]; ++count; }
        m.h[i] = sum / count;
    }
    return m;
}

spline_field build_tau_field(const greville_interpolator_2d& interp,
                             const std::vector<double>& values) {
    return interp.fit(values);
}

}  // namespace spcol
