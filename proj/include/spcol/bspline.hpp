#pragma once

#include <vector>

namespace spcol {

// Which one-sided limit to take when an evaluation point sits on a knot.
enum class side { left, right };

// How to report a derivative whose order exceeds the basis continuity at a
// knot: take a one-sided limit or the mean of the two.
enum class jump_rule { left, right, average };

// Highest derivative order supported by the evaluation routines.
inline constexpr int max_derivative_order = 3;

// Plain recursive evaluation of N_{i,k} and its d-th derivative on an
// arbitrary nondecreasing knot sequence. Reference implementation: slow but
// direct, useful for spot checks and cross-validation of the table-based
// evaluator below. `s` picks the one-sided limit at breakpoints.
double basis_value_raw(const std::vector<double>& knots, int degree, int i, double x,
                       int deriv = 0, side s = side::right);

// Index of the knot span containing x, restricted to the nonempty spans of
// the valid domain [knots[degree], knots[n]]. side::left treats spans as
// half-open on the left, so a point exactly on an interior knot selects the
// span ending there.
int find_span(const std::vector<double>& knots, int degree, double x, side s = side::right);

// Derivative table of the degree+1 basis functions that are nonzero on the
// span: table[d * (degree+1) + j] is the d-th derivative of basis function
// (span - degree + j) at x, for d = 0..max_d. Values are the derivatives of
// the polynomial piece owning the span, i.e. one-sided limits when x sits on
// the span boundary. Orders above the degree are zero.
void ders_basis_funs(const std::vector<double>& knots, int degree, int span, double x,
                     int max_d, double* table);

// Open knot vector on [0,1] with unrepeated (maximal-continuity) interior
// knots.
class knot_vector {
public:
    knot_vector(std::vector<double> knots, int degree);

    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
    int element_count() const { return static_cast<int>(breakpoints_.size()) - 1; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

private:
    std::vector<double> knots_;
    std::vector<double> breakpoints_;
    int degree_;
};

knot_vector open_uniform_knots(int degree, int n_elem);

// Knots clustered toward both ends of [0,1] through a tanh profile; the raw
// profile does not reach 1, so the sequence is rescaled to end exactly at 1.
knot_vector stretched_knots(int degree, int n_elem);

// Contiguous range of basis indices with nonzero entries at a point. At an
// interior knot the windows of the two adjacent spans are merged, so count is
// degree+2 there and degree+1 everywhere else.
struct basis_window {
    int first = 0;
    int count = 0;
};

// Univariate spline space: knot vector plus cached Greville abscissae.
class spline_space_1d {
public:
    explicit spline_space_1d(knot_vector kv);

    int degree() const { return kv_.degree(); }
    int dimension() const { return kv_.dimension(); }
    const knot_vector& knots() const { return kv_; }
    const std::vector<double>& greville() const { return greville_; }

    // Third derivatives of quadratic splines vanish on element interiors and
    // have no pointwise meaning at knots; they are reported as zero.
    bool suppress_third_derivatives() const { return degree() == 2; }

    // All nonzero basis functions with derivatives 0..max_d at x.
    // `table` is resized to (max_d+1) * window.count, layout [d][j] row-major
    // with j relative to window.first. Derivative orders exceeding the basis
    // continuity at an interior knot follow `rule`.
    basis_window eval_nonzero(double x, int max_d, jump_rule rule,
                              std::vector<double>& table) const;

    // Single basis function derivative; thin wrapper over eval_nonzero.
    double eval_basis(int i, double x, int deriv, jump_rule rule = jump_rule::average) const;

    // True when x coincides (to tolerance) with an interior breakpoint;
    // `knot` receives the snapped coordinate.
    bool at_interior_knot(double x, double& knot) const;

private:
    knot_vector kv_;
    std::vector<double> greville_;
};

}  // namespace spcol
