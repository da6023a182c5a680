#include "spcol/bspline.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace spcol {

namespace {

constexpr double knot_snap_tol = 1e-12;

double safe_ratio(double num, double den) {
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

double basis_value_raw(const std::vector<double>& knots, int degree, int i, double x,
                       int deriv, side s) {
    assert(i >= 0 && i + degree + 1 < static_cast<int>(knots.size()) + 1);
    if (deriv > degree) {
        return 0.0;
    }
    if (deriv > 0) {
        // N'_{i,k} = k ( N_{i,k-1}/(x_{i+k}-x_i) - N_{i+1,k-1}/(x_{i+k+1}-x_{i+1}) )
        const double a = safe_ratio(basis_value_raw(knots, degree - 1, i, x, deriv - 1, s),
                                    knots[i + degree] - knots[i]);
        const double b = safe_ratio(basis_value_raw(knots, degree - 1, i + 1, x, deriv - 1, s),
                                    knots[i + degree + 1] - knots[i + 1]);
        return degree * (a - b);
    }
    if (degree == 0) {
        const bool in = s == side::right ? (knots[i] <= x && x < knots[i + 1])
                                         : (knots[i] < x && x <= knots[i + 1]);
        return in ? 1.0 : 0.0;
    }
    const double a = safe_ratio(x - knots[i], knots[i + degree] - knots[i]);
    const double b = safe_ratio(knots[i + degree + 1] - x, knots[i + degree + 1] - knots[i + 1]);
    return a * basis_value_raw(knots, degree - 1, i, x, 0, s)
         + b * basis_value_raw(knots, degree - 1, i + 1, x, 0, s);
}

int find_span(const std::vector<double>& knots, int degree, double x, side s) {
    const int n = static_cast<int>(knots.size()) - degree - 1;
    const int lo = degree;
    const int hi = n - 1;  // last valid span
    if (x <= knots[lo]) {
        return lo;
    }
    if (x >= knots[n]) {
        return hi;
    }
    int low = lo, high = hi;
    while (low < high) {
        const int mid = (low + high) / 2;
        const bool go_right = s == side::right ? (x >= knots[mid + 1]) : (x > knots[mid + 1]);
        if (go_right) {
            low = mid + 1;
        } else if (s == side::right ? (x < knots[mid]) : (x <= knots[mid])) {
            high = mid - 1;
        } else {
            return mid;
        }
    }
    return low;
}

void ders_basis_funs(const std::vector<double>& knots, int degree, int span, double x,
                     int max_d, double* table) {
    const int k = degree;
    const int cols = k + 1;
    std::fill(table, table + (max_d + 1) * cols, 0.0);

    // Triangular table of basis values and knot differences.
    std::vector<double> ndu((k + 1) * (k + 1));
    std::vector<double> left(k + 1), right(k + 1);
    std::vector<double> a(2 * (k + 1));
    auto NDU = [&](int r, int c) -> double& { return ndu[r * (k + 1) + c]; };

    NDU(0, 0) = 1.0;
    for (int j = 1; j <= k; ++j) {
        left[j] = x - knots[span + 1 - j];
        right[j] = knots[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            NDU(j, r) = right[r + 1] + left[j - r];
            const double temp = NDU(r, j - 1) / NDU(j, r);
            NDU(r, j) = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        NDU(j, j) = saved;
    }
    for (int j = 0; j <= k; ++j) {
        table[j] = NDU(j, k);
    }

    const int nd = std::min(max_d, k);
    for (int r = 0; r <= k; ++r) {
        int s1 = 0, s2 = 1;
        a[0] = 1.0;
        for (int d = 1; d <= nd; ++d) {
            double der = 0.0;
            const int rk = r - d;
            const int pk = k - d;
            auto A = [&](int row, int col) -> double& { return a[row * (k + 1) + col]; };
            if (r >= d) {
                A(s2, 0) = A(s1, 0) / NDU(pk + 1, rk);
                der = A(s2, 0) * NDU(rk, pk);
            }
            const int j1 = rk >= -1 ? 1 : -rk;
            const int j2 = r - 1 <= pk ? d - 1 : k - r;
            for (int j = j1; j <= j2; ++j) {
                A(s2, j) = (A(s1, j) - A(s1, j - 1)) / NDU(pk + 1, rk + j);
                der += A(s2, j) * NDU(rk + j, pk);
            }
            if (r <= pk) {
                A(s2, d) = -A(s1, d - 1) / NDU(pk + 1, r);
                der += A(s2, d) * NDU(r, pk);
            }
            table[d * cols + r] = der;
            std::swap(s1, s2);
        }
    }
    double factor = k;
    for (int d = 1; d <= nd; ++d) {
        for (int j = 0; j <= k; ++j) {
            table[d * cols + j] *= factor;
        }
        factor *= k - d;
    }
}

knot_vector::knot_vector(std::vector<double> knots, int degree)
    : knots_(std::move(knots)), degree_(degree) {
    if (degree_ < 1) {
        throw std::invalid_argument("knot_vector: degree must be at least 1");
    }
    const int n = static_cast<int>(knots_.size()) - degree_ - 1;
    if (n < degree_ + 1) {
        throw std::invalid_argument("knot_vector: too few knots for degree "
                                    + std::to_string(degree_));
    }
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (knots_[i] < knots_[i - 1]) {
            throw std::invalid_argument("knot_vector: knots must be nondecreasing");
        }
    }
    for (int i = 0; i <= degree_; ++i) {
        if (knots_[i] != knots_.front() || knots_[knots_.size() - 1 - i] != knots_.back()) {
            throw std::invalid_argument("knot_vector: end knots must repeat degree+1 times");
        }
    }
    for (int i = degree_; i < n; ++i) {
        if (!(knots_[i] < knots_[i + 1])) {
            throw std::invalid_argument("knot_vector: interior knots must be strictly increasing");
        }
    }
    breakpoints_.push_back(knots_[degree_]);
    for (int i = degree_ + 1; i <= n; ++i) {
        if (knots_[i] > breakpoints_.back()) {
            breakpoints_.push_back(knots_[i]);
        }
    }
}

knot_vector open_uniform_knots(int degree, int n_elem) {
    if (n_elem < 1) {
        throw std::invalid_argument("open_uniform_knots: need at least one element");
    }
    std::vector<double> knots;
    knots.reserve(2 * (degree + 1) + n_elem - 1);
    knots.insert(knots.end(), degree + 1, 0.0);
    for (int i = 1; i < n_elem; ++i) {
        knots.push_back(static_cast<double>(i) / n_elem);
    }
    knots.insert(knots.end(), degree + 1, 1.0);
    return knot_vector(std::move(knots), degree);
}

knot_vector stretched_knots(int degree, int n_elem) {
    if (n_elem < 2) {
        throw std::invalid_argument("stretched_knots: need at least two elements");
    }
    const double h = 1.0 / n_elem;
    auto profile = [&](int i) {
        return 0.5 * (1.0 + std::tanh(3.0 * i * h - 2.0) / std::tanh(2.0));
    };
    const double scale = profile(n_elem);  // profile(0) is exactly 0
    std::vector<double> knots;
    knots.insert(knots.end(), degree + 1, 0.0);
    for (int i = 1; i < n_elem; ++i) {
        knots.push_back(profile(i) / scale);
    }
    knots.insert(knots.end(), degree + 1, 1.0);
    return knot_vector(std::move(knots), degree);
}

spline_space_1d::spline_space_1d(knot_vector kv) : kv_(std::move(kv)) {
    const int n = kv_.dimension();
    const int k = kv_.degree();
    const auto& knots = kv_.knots();
    greville_.resize(n);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 1; j <= k; ++j) {
            sum += knots[i + j];
        }
        greville_[i] = sum / k;
    }
    greville_.front() = knots.front();
    greville_.back() = knots.back();
}

bool spline_space_1d::at_interior_knot(double x, double& knot) const {
    const auto& bp = kv_.breakpoints();
    auto it = std::lower_bound(bp.begin(), bp.end(), x - knot_snap_tol);
    if (it == bp.end() || std::abs(*it - x) > knot_snap_tol) {
        return false;
    }
    if (it == bp.begin() || it + 1 == bp.end()) {
        return false;  // domain endpoints are one-sided anyway
    }
    knot = *it;
    return true;
}

basis_window spline_space_1d::eval_nonzero(double x, int max_d, jump_rule rule,
                                           std::vector<double>& table) const {
    if (max_d > max_derivative_order) {
        throw std::invalid_argument("eval_nonzero: derivative order "
                                    + std::to_string(max_d) + " unsupported");
    }
    const auto& knots = kv_.knots();
    if (x < knots.front() - knot_snap_tol || x > knots.back() + knot_snap_tol) {
        throw std::domain_error("eval_nonzero: point " + std::to_string(x)
                                + " outside knot span");
    }
    x = std::clamp(x, knots.front(), knots.back());
    const int k = kv_.degree();

    double knot = 0.0;
    if (!at_interior_knot(x, knot)) {
        const int span = find_span(knots, k, x);
        table.resize((max_d + 1) * (k + 1));
        ders_basis_funs(knots, k, span, x, max_d, table.data());
        if (suppress_third_derivatives() && max_d >= 3) {
            std::fill(table.begin() + 3 * (k + 1), table.begin() + 4 * (k + 1), 0.0);
        }
        return {span - k, k + 1};
    }

    // On an interior knot: merge the two adjacent spans. Functions leaving or
    // entering the support at the knot carry a zero column on the far side.
    const int span_l = find_span(knots, k, knot, side::left);
    const int span_r = find_span(knots, k, knot, side::right);
    assert(span_r == span_l + 1);
    const int count = k + 2;
    std::vector<double> tl((max_d + 1) * (k + 1)), tr((max_d + 1) * (k + 1));
    ders_basis_funs(knots, k, span_l, knot, max_d, tl.data());
    ders_basis_funs(knots, k, span_r, knot, max_d, tr.data());

    table.assign((max_d + 1) * count, 0.0);
    for (int d = 0; d <= max_d; ++d) {
        for (int j = 0; j < count; ++j) {
            const int idx = span_l - k + j;
            const double vl = j <= k ? tl[d * (k + 1) + j] : 0.0;
            const double vr = idx >= span_r - k ? tr[d * (k + 1) + (idx - (span_r - k))] : 0.0;
            double v = 0.0;
            if (d < k) {
                // continuous order: sides agree, prefer the interior one
                v = j <= k ? vl : vr;
            } else {
                switch (rule) {
                    case jump_rule::left: v = vl; break;
                    case jump_rule::right: v = vr; break;
                    case jump_rule::average: v = 0.5 * (vl + vr); break;
                }
            }
            table[d * count + j] = v;
        }
    }
    if (suppress_third_derivatives() && max_d >= 3) {
        std::fill(table.begin() + 3 * count, table.begin() + 4 * count, 0.0);
    }
    return {span_l - k, count};
}

double spline_space_1d::eval_basis(int i, double x, int deriv, jump_rule rule) const {
    if (deriv > max_derivative_order) {
        throw std::invalid_argument("eval_basis: derivative order "
                                    + std::to_string(deriv) + " unsupported");
    }
    if (i < 0 || i >= dimension()) {
        throw std::out_of_range("eval_basis: basis index out of range");
    }
    std::vector<double> table;
    const basis_window w = eval_nonzero(x, deriv, rule, table);
    if (i < w.first || i >= w.first + w.count) {
        return 0.0;
    }
    return table[deriv * w.count + (i - w.first)];
}

}  // namespace spcol
