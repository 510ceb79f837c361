#pragma once

#include <memory>
#include <optional>
#include <vector>
#include "ssgbeam/grid.hpp"
#include "ssgbeam/linalg.hpp"

namespace ssgbeam {

/// Interpolation basis behind the solver's derivative matrices: the N+6
/// cardinal functions matching N nodal values plus w', w'', w''' at the two
/// ends. The plain basis is Chebyshev T_0..T_{N+5}. When the static
/// characteristic layers e^{-n1 x}, e^{-m1 x} are too steep for the grid
/// (n1 * h_min above the activation threshold) the four highest modes are
/// replaced by the layer functions anchored at each end, which keeps the
/// system well behaved down to the classical limit.
class CollocationBasis {
  public:
    CollocationBasis(const Grid& grid, double g1, double g2,
                     double enrich_threshold = 2.0);

    /// m-th derivative rows of all N+6 cardinal functions at the points.
    MatX derivative_matrix(const std::vector<double>& points, int order) const;

    bool enriched() const { return enriched_; }
    const Grid& grid() const { return grid_; }

  private:
    VecX column_values(int k, const std::vector<double>& pts, int order) const;

    Grid grid_;
    int n_basis_ = 0;
    int n_poly_ = 0;
    bool enriched_ = false;
    // decaying layers: (rate, anchored_at_right_end)
    std::vector<std::pair<Real, bool>> layers_;
    VecX col_scale_;
    MatX cond_inv_;  // inverse of the scaled condition matrix
};

/// The eight nodal derivative matrices (orders 1..8) used by the assembly,
/// all derived from one interpolant so the discrete operator is consistent
/// across orders. Shape and column layout match ModifiedWeightSet.
struct WeightSet {
    Grid grid;
    bool enriched = false;
    // orders 1..8 at the grid nodes, each N x (N+6); kept in extended
    // precision for the assembly.
    std::vector<MatX> orders;
    std::shared_ptr<const CollocationBasis> basis;

    const MatX& order(int m) const { return orders[static_cast<size_t>(m - 1)]; }
};

WeightSet collocation_weight_set(const Grid& grid, double g1, double g2);

}  // namespace ssgbeam
