#include "spcol/linsys.hpp"

#include "spcol/bspline.hpp"
#include "spcol/errors.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace spcol;

TEST(LinearSystem, IdentityStencils) {
    linear_system sys(3);
    for (int i = 0; i < 3; ++i) {
        sys.set_row(i, {i, "pin"}, {{i, 1.0}}, i + 1.0);
    }
    const Eigen::VectorXd x = sys.solve();
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 2.0);
    EXPECT_DOUBLE_EQ(x[2], 3.0);
}

TEST(LinearSystem, Diagonal) {
    linear_system sys(2);
    sys.set_row(0, {0, "row"}, {{0, 2.0}}, 2.0);
    sys.set_row(1, {1, "row"}, {{1, 4.0}}, 4.0);
    const Eigen::VectorXd x = sys.solve();
    EXPECT_DOUBLE_EQ(x[0], 1.0);
    EXPECT_DOUBLE_EQ(x[1], 1.0);
}

TEST(LinearSystem, DuplicateAndMissingRows) {
    linear_system sys(2);
    sys.set_row(0, {7, "continuity"}, {{0, 1.0}}, 0.0);
    try {
        sys.set_row(0, {7, "momentum_x"}, {{0, 1.0}}, 0.0);
        FAIL() << "expected assembly_error";
    } catch (const assembly_error& e) {
        EXPECT_NE(std::string(e.what()).find("momentum_x"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
    }
    EXPECT_THROW(sys.matrix(), assembly_error);  // row 1 missing
}

TEST(LinearSystem, RowOrderIndependence) {
    auto build = [](bool permuted) {
        linear_system sys(3);
        const std::vector<std::vector<std::pair<int, double>>> rows{
            {{0, 2.0}, {1, -1.0}}, {{0, -1.0}, {1, 2.0}, {2, -1.0}}, {{1, -1.0}, {2, 2.0}}};
        const std::vector<int> order = permuted ? std::vector<int>{2, 0, 1}
                                                : std::vector<int>{0, 1, 2};
        for (int r : order) {
            sys.set_row(r, {r, "row"}, rows[r], r * 1.0);
        }
        return sys;
    };
    linear_system a = build(false);
    linear_system b = build(true);
    const auto& ma = a.matrix();
    const auto& mb = b.matrix();
    ASSERT_EQ(ma.nonZeros(), mb.nonZeros());
    for (int i = 0; i < ma.nonZeros(); ++i) {
        EXPECT_EQ(ma.valuePtr()[i], mb.valuePtr()[i]);
        EXPECT_EQ(ma.innerIndexPtr()[i], mb.innerIndexPtr()[i]);
    }
    const Eigen::VectorXd xa = a.solve();
    const Eigen::VectorXd xb = b.solve();
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(xa[i], xb[i]);  // bit-identical
    }
}

TEST(LinearSystem, RandomRoundTrip) {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int n = 120;
    linear_system sys(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, double>> entries;
        double offdiag = 0.0;
        for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 3); ++j) {
            if (j == i) {
                continue;
            }
            const double v = unif(rng);
            offdiag += std::abs(v);
            entries.emplace_back(j, v);
        }
        entries.emplace_back(i, offdiag + 1.0);  // diagonally dominant
        sys.set_row(i, {i, "row"}, entries, unif(rng));
    }
    const Eigen::VectorXd x = sys.solve();
    const Eigen::VectorXd r = sys.rhs() - sys.multiply(x);
    const double bound = 1e-10 * (sys.matrix_infinity_norm() * x.lpNorm<Eigen::Infinity>()
                                  + sys.rhs().lpNorm<Eigen::Infinity>());
    EXPECT_LE(r.lpNorm<Eigen::Infinity>(), bound);
}

TEST(LinearSystem, Determinism) {
    auto build = []() {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        const int n = 60;
        linear_system sys(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, double>> entries{{i, 4.0}};
            if (i > 0) entries.emplace_back(i - 1, unif(rng));
            if (i + 1 < n) entries.emplace_back(i + 1, unif(rng));
            sys.set_row(i, {i, "row"}, entries, unif(rng));
        }
        return sys.solve();
    };
    const Eigen::VectorXd a = build();
    const Eigen::VectorXd b = build();
    for (int i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i], b[i]);
    }
}

TEST(LinearSystem, QuadraticLaplaceCollocation1d) {
    // knots {0,0,0,.5,1,1,1}, greville {0,.25,.75,1}: collocate -phi'' = 0
    const spline_space_1d space(open_uniform_knots(2, 2));
    const int n = space.dimension();
    linear_system sys(n);
    std::vector<double> table;
    sys.set_row(0, {0, "dirichlet"}, {{0, 1.0}}, 0.0);
    sys.set_row(n - 1, {n - 1, "dirichlet"}, {{n - 1, 1.0}}, 1.0);
    for (int i = 1; i < n - 1; ++i) {
        const double x = space.greville()[i];
        const basis_window w = space.eval_nonzero(x, 2, jump_rule::average, table);
        std::vector<std::pair<int, double>> entries;
        for (int j = 0; j < w.count; ++j) {
            entries.emplace_back(w.first + j, -table[2 * w.count + j]);
        }
        sys.set_row(i, {i, "laplace"}, entries, 0.0);
    }
    ASSERT_EQ(sys.dimension(), 4);
    const Eigen::VectorXd x = sys.solve();
    // -phi'' = 0 with phi(0)=0, phi(1)=1 is phi = x; linear reproduction
    // makes the coefficients the greville abscissae
    for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(x[i], space.greville()[i], 1e-12);
    }
}

TEST(LinearSystem, SingularityDetected) {
    linear_system sys(2);
    sys.set_row(0, {0, "row"}, {{0, 1.0}, {1, 1.0}}, 1.0);
    sys.set_row(1, {1, "row"}, {{0, 1.0}, {1, 1.0}}, 2.0);
    EXPECT_THROW(sys.solve(), singular_system_error);
}

TEST(LinearSystem, MatrixMarketExport) {
    linear_system sys(2);
    sys.set_row(0, {0, "row"}, {{0, 2.0}, {1, 1.0}}, 0.0);
    sys.set_row(1, {1, "row"}, {{1, 3.0}}, 0.0);
    std::ostringstream out;
    sys.write_matrix_market(out);
    const std::string text = out.str();
    EXPECT_NE(text.find("%%MatrixMarket matrix coordinate real general"), std::string::npos);
    EXPECT_NE(text.find("2 2 3"), std::string::npos);
}
