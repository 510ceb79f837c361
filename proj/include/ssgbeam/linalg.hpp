#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ssgbeam {

// Construction and condensation run in extended precision: the N=21 systems
// carry row norms up to ~1e13 and plain double loses the last three digits
// the reference tables require.
using Real = long double;
using MatX = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;
using Cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;

inline MatD to_double(const MatX& m) { return m.cast<double>(); }
inline VecD to_double(const VecX& v) { return v.cast<double>(); }

/// Dense solve with partial pivoting in extended precision.
inline MatX lu_solve(const MatX& a, const MatX& b) {
    Eigen::PartialPivLU<MatX> lu(a);
    return lu.solve(b);
}

inline VecX lu_solve(const MatX& a, const VecX& b) {
    Eigen::PartialPivLU<MatX> lu(a);
    return lu.solve(b);
}

/// 1-norm condition estimate via explicit inverse (matrices here are <= ~64x64).
inline double condition_estimate(const MatX& a) {
    Eigen::FullPivLU<MatX> lu(a);
    if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
    MatX inv = lu.inverse();
    Real na = 0, ni = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        na = std::max<Real>(na, a.col(j).cwiseAbs().sum());
        ni = std::max<Real>(ni, inv.col(j).cwiseAbs().sum());
    }
    return static_cast<double>(na * ni);
}

/// log|det| and phase of a complex square matrix by LU with partial pivoting.
/// Returns {-inf, 0} for an exactly singular matrix.
std::pair<double, double> scaled_log_det(const MatC& m);

}  // namespace ssgbeam
