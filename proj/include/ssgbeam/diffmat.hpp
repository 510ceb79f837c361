#pragma once

#include <vector>
#include "ssgbeam/grid.hpp"
#include "ssgbeam/linalg.hpp"

namespace ssgbeam {

/// Conventional Lagrange differentiation matrices, orders 1-4.
/// b, c, d are the exact matrix products a*a, b*a, b*b.
struct ConventionalWeights {
    MatD a, b, c, d;
};

/// The eight N x (N+6) modified derivative matrices with slope, curvature and
/// triple-derivative degrees of freedom at the two ends, plus the stored
/// intermediates v (fourth order, curvature-split boundary rows) and
/// y (sixth order, triple-derivative-split boundary rows).
///
/// Extension column layout: {w'_1, w'_N, w''_1, w''_N, w'''_1, w'''_N}.
struct ModifiedWeightSet {
    MatD abar, bbar, cbar, dbar, ebar, fbar, gbar, hbar;
    MatD v, y;
};

/// First-order DQ weighting coefficients on the grid.
MatD first_derivative_matrix(const Grid& grid);

/// Higher-order conventional weights from the first-order matrix.
ConventionalWeights conventional_matrices(const MatD& a);

/// Modified N x (N+6) matrices. Boundary rows of bbar use the
/// interior-truncated sums with slope columns; cbar uses curvature columns;
/// v and y carry curvature/triple columns; dbar..hbar are the products
/// B*bbar, A*v, B*v, A*y, B*y.
ModifiedWeightSet modified_matrices(const Grid& grid);

/// Orders {w_1..w_N, w'_1, w'_N, w''_1, w''_N, w'''_1, w'''_N}.
VecD extend_state(const VecD& values, const VecD& end_derivs);

}  // namespace ssgbeam
