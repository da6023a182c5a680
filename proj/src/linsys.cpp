#include "spcol/linsys.hpp"

#include "spcol/errors.hpp"

#include <cmath>
#include <ostream>

namespace spcol {

std::string to_string(const row_label& label) {
    return label.kind + " @ point " + std::to_string(label.point);
}

linear_system::linear_system(int dimension)
    : n_(dimension),
      rows_(dimension),
      rhs_(Eigen::VectorXd::Zero(dimension)),
      labels_(dimension),
      row_defined_(dimension, 0) {}

void linear_system::set_row(int row, row_label label,
                            const std::vector<std::pair<int, double>>& entries, double rhs) {
    if (row < 0 || row >= n_) {
        throw assembly_error("row index " + std::to_string(row) + " out of range");
    }
    if (row_defined_[row]) {
        throw assembly_error("duplicate row " + std::to_string(row) + " (" + to_string(label)
                             + "), already set as " + to_string(labels_[row]));
    }
    rows_[row] = entries;
    rhs_[row] = rhs;
    labels_[row] = std::move(label);
    row_defined_[row] = 1;
    compressed_ = false;
}

void linear_system::replace_row(int row, row_label label,
                                const std::vector<std::pair<int, double>>& entries, double rhs) {
    if (!row_defined_[row]) {
        throw assembly_error("replace_row: row " + std::to_string(row) + " was never set");
    }
    row_defined_[row] = 0;
    set_row(row, std::move(label), entries, rhs);
}

void linear_system::check_complete() const {
    for (int r = 0; r < n_; ++r) {
        if (!row_defined_[r]) {
            throw assembly_error("missing row " + std::to_string(r) + " of "
                                 + std::to_string(n_));
        }
    }
}

const Eigen::SparseMatrix<double>& linear_system::matrix() const {
    if (!compressed_) {
        check_complete();
        std::vector<Eigen::Triplet<double>> triplets;
        std::size_t nnz = 0;
        for (const auto& row : rows_) {
            nnz += row.size();
        }
        triplets.reserve(nnz);
        for (int r = 0; r < n_; ++r) {
            for (const auto& [c, v] : rows_[r]) {
                if (c < 0 || c >= n_) {
                    throw assembly_error("column index out of range in row "
                                         + to_string(labels_[r]));
                }
                triplets.emplace_back(r, c, v);
            }
        }
        matrix_.resize(n_, n_);
        matrix_.setFromTriplets(triplets.begin(), triplets.end());
        matrix_.makeCompressed();
        compressed_ = true;
    }
    return matrix_;
}

double linear_system::matrix_infinity_norm() const {
    const auto& A = matrix();
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n_);
    for (int k = 0; k < A.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
            row_sums[it.row()] += std::abs(it.value());
        }
    }
    return row_sums.maxCoeff();
}

Eigen::VectorXd linear_system::multiply(const Eigen::VectorXd& x) const {
    return matrix() * x;
}

Eigen::VectorXd linear_system::solve() const {
    const auto& A = matrix();
    direct_solver solver(A);
    Eigen::VectorXd x = solver.solve(rhs_);

    if (!x.allFinite()) {
        throw singular_system_error("solve produced non-finite values; system singular");
    }
    const Eigen::VectorXd residual = rhs_ - A * x;
    const double bound = 1e-10 * (matrix_infinity_norm() * x.lpNorm<Eigen::Infinity>()
                                  + rhs_.lpNorm<Eigen::Infinity>());
    const double res_norm = residual.lpNorm<Eigen::Infinity>();
    if (res_norm > bound) {
        int worst = 0;
        residual.cwiseAbs().maxCoeff(&worst);
        throw singular_system_error("solve residual " + std::to_string(res_norm)
                                    + " exceeds bound " + std::to_string(bound)
                                    + "; suspect row: " + to_string(labels_[worst]));
    }
    return x;
}

void linear_system::write_matrix_market(std::ostream& os) const {
    const auto& A = matrix();
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << A.rows() << " " << A.cols() << " " << A.nonZeros() << "\n";
    for (int k = 0; k < A.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
            os << it.row() + 1 << " " << it.col() + 1 << " ";
            os.precision(17);
            os << it.value() << "\n";
        }
    }
}

direct_solver::direct_solver(Eigen::SparseMatrix<double> matrix)
    : matrix_(std::move(matrix)),
      lu_(std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>()) {
    matrix_.makeCompressed();
    lu_->analyzePattern(matrix_);
    lu_->factorize(matrix_);
    if (lu_->info() != Eigen::Success) {
        throw singular_system_error("factorization failed: " + lu_->lastErrorMessage());
    }

    // one-probe condition estimate; a rank-deficient matrix that still
    // factorizes (tiny pivot) blows the inverse norm up to ~1/eps
    const int n = static_cast<int>(matrix_.rows());
    Eigen::VectorXd probe(n);
    for (int i = 0; i < n; ++i) {
        probe[i] = i % 2 == 0 ? 1.0 : -1.0;
    }
    const Eigen::VectorXd z = lu_->solve(probe);
    double row_norm = 0.0;
    {
        Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
        for (int k = 0; k < matrix_.outerSize(); ++k) {
            for (Eigen::SparseMatrix<double>::InnerIterator it(matrix_, k); it; ++it) {
                sums[it.row()] += std::abs(it.value());
            }
        }
        row_norm = sums.maxCoeff();
    }
    const double cond_estimate = z.lpNorm<Eigen::Infinity>() * row_norm;
    if (!z.allFinite() || cond_estimate > 1e14) {
        throw singular_system_error("matrix numerically singular (condition estimate "
                                    + std::to_string(cond_estimate) + ")");
    }
}

Eigen::VectorXd direct_solver::solve(const Eigen::VectorXd& b) const {
    Eigen::VectorXd x = lu_->solve(b);
    if (lu_->info() != Eigen::Success) {
        throw singular_system_error("triangular solve failed");
    }
    // one step of iterative refinement
    const Eigen::VectorXd r = b - matrix_ * x;
    x += lu_->solve(r);
    return x;
}

}  // namespace spcol
