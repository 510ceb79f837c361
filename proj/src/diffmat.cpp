#include "ssgbeam/diffmat.hpp"

#include <stdexcept>

namespace ssgbeam {

MatD first_derivative_matrix(const Grid& grid) {
    const int n = grid.n_points;
    const auto& x = grid.coords;
    MatD a = MatD::Zero(n, n);
    // M(x_i) = prod_{k != i} (x_i - x_k)
    std::vector<long double> m(static_cast<size_t>(n), 1.0L);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (k != i) m[static_cast<size_t>(i)] *= (long double)x[i] - x[k];
    for (int i = 0; i < n; ++i) {
        long double diag = 0.0L;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            a(i, j) = static_cast<double>(
                m[static_cast<size_t>(i)] /
                (((long double)x[i] - x[j]) * m[static_cast<size_t>(j)]));
            diag += 1.0L / ((long double)x[i] - x[j]);
        }
        a(i, i) = static_cast<double>(diag);
    }
    return a;
}

ConventionalWeights conventional_matrices(const MatD& a) {
    ConventionalWeights w;
    w.a = a;
    w.b = a * a;
    w.c = w.b * a;
    w.d = w.b * w.b;
    return w;
}

namespace {

// Interior-truncated product: sum over k = 2..N-1 of X_ik Y_kj.
MatD trunc(const MatD& x, const MatD& y) {
    const Eigen::Index n = x.rows();
    return x.middleCols(1, n - 2) * y.middleRows(1, n - 2);
}

}  // namespace

ModifiedWeightSet modified_matrices(const Grid& grid) {
    const int n = grid.n_points;
    if (n < 5) throw std::invalid_argument("modified_matrices: N >= 5 required");
    ConventionalWeights cw = conventional_matrices(first_derivative_matrix(grid));
    const MatD &a = cw.a, &b = cw.b, &c = cw.c, &d = cw.d;
    const MatD a6 = c * c;

    ModifiedWeightSet mw;
    mw.abar = MatD::Zero(n, n + 6);
    mw.abar.leftCols(n) = a;

    // Second order: interior rows conventional, boundary rows split through
    // the slope DOFs (Eqs. 18-19).
    mw.bbar = MatD::Zero(n, n + 6);
    mw.bbar.block(1, 0, n - 2, n) = b.middleRows(1, n - 2);
    {
        MatD t = trunc(a, a);
        for (int i : {0, n - 1}) {
            mw.bbar.block(i, 0, 1, n) = t.row(i);
            mw.bbar(i, n + 0) = a(i, 0);
            mw.bbar(i, n + 1) = a(i, n - 1);
        }
    }

    // Third order: boundary rows split through the curvature DOFs. The
    // printed truncated sum is read as sum_k A_ik B_kj so the rows stay exact
    // on polynomials; the curvature columns are as printed.
    mw.cbar = MatD::Zero(n, n + 6);
    mw.cbar.block(1, 0, n - 2, n) = c.middleRows(1, n - 2);
    {
        MatD t = trunc(a, b);
        for (int i : {0, n - 1}) {
            mw.cbar.block(i, 0, 1, n) = t.row(i);
            mw.cbar(i, n + 2) = a(i, 0);
            mw.cbar(i, n + 3) = a(i, n - 1);
        }
    }

    mw.dbar = b * mw.bbar;

    // Fourth-order intermediate with curvature columns; interior rows are the
    // conventional product so every row stays exact.
    mw.v = MatD::Zero(n, n + 6);
    mw.v.block(1, 0, n - 2, n) = d.middleRows(1, n - 2);
    {
        MatD t = trunc(b, b);
        for (int i : {0, n - 1}) {
            mw.v.block(i, 0, 1, n) = t.row(i);
            mw.v(i, n + 2) = b(i, 0);
            mw.v(i, n + 3) = b(i, n - 1);
        }
    }

    mw.ebar = a * mw.v;
    mw.fbar = b * mw.v;

    // Sixth-order intermediate with triple-derivative columns.
    mw.y = MatD::Zero(n, n + 6);
    mw.y.block(1, 0, n - 2, n) = a6.middleRows(1, n - 2);
    {
        MatD t = trunc(c, c);
        for (int i : {0, n - 1}) {
            mw.y.block(i, 0, 1, n) = t.row(i);
            mw.y(i, n + 4) = c(i, 0);
            mw.y(i, n + 5) = c(i, n - 1);
        }
    }

    mw.gbar = a * mw.y;
    mw.hbar = b * mw.y;
    return mw;
}

VecD extend_state(const VecD& values, const VecD& end_derivs) {
    if (end_derivs.size() != 6)
        throw std::invalid_argument("extend_state: need exactly 6 end derivatives");
    VecD out(values.size() + 6);
    out.head(values.size()) = values;
    out.tail(6) = end_derivs;
    return out;
}

}  // namespace ssgbeam
