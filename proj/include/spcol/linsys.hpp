#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace spcol {

// Identifies a row for diagnostics: the collocation point it was generated
// from and the kind of equation ("momentum_x", "continuity", ...).
struct row_label {
    int point = -1;
    std::string kind;
};

std::string to_string(const row_label& label);

// Square sparse system assembled row by row. Every row must be set exactly
// once; the assembled matrix is independent of the order rows arrive in.
class linear_system {
public:
    explicit linear_system(int dimension);

    int dimension() const { return n_; }

    // Entries may repeat a column; repeats are summed in the order given.
    void set_row(int row, row_label label,
                 const std::vector<std::pair<int, double>>& entries, double rhs);

    // Replaces an already-set row (used by gauge fixing).
    void replace_row(int row, row_label label,
                     const std::vector<std::pair<int, double>>& entries, double rhs);

    bool row_set(int row) const { return row_defined_[row] != 0; }
    const row_label& label(int row) const { return labels_[row]; }
    const Eigen::VectorXd& rhs() const { return rhs_; }

    // Compressed matrix; builds it on first use and verifies completeness.
    const Eigen::SparseMatrix<double>& matrix() const;

    // Factorize + solve + one step of iterative refinement, then verify
    //   |Ax - b|_inf <= 1e-10 (|A|_inf |x|_inf + |b|_inf).
    // Throws singular_system_error naming the most suspect row otherwise.
    Eigen::VectorXd solve() const;

    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
    double matrix_infinity_norm() const;

    void write_matrix_market(std::ostream& os) const;

private:
    void check_complete() const;

    int n_;
    std::vector<std::vector<std::pair<int, double>>> rows_;
    Eigen::VectorXd rhs_;
    std::vector<row_label> labels_;
    std::vector<char> row_defined_;
    mutable Eigen::SparseMatrix<double> matrix_;
    mutable bool compressed_ = false;
};

// Reusable LU factorization for repeated solves against the same matrix.
class direct_solver {
public:
    explicit direct_solver(Eigen::SparseMatrix<double> matrix);

    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
    const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }

private:
    Eigen::SparseMatrix<double> matrix_;
    std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> lu_;
};

}  // namespace spcol
