#include "ssgbeam/collocation.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace ssgbeam {

namespace {

/// Chebyshev coefficient differentiation on [-1,1], scaled by ds/dx.
std::vector<Real> cheb_derive(const std::vector<Real>& c, Real scale) {
    const int n = static_cast<int>(c.size());
    std::vector<Real> d(static_cast<size_t>(std::max(n - 1, 1)), Real(0));
    if (n <= 1) return d;
    // standard backward recurrence: d_{k-1} = d_{k+1} + 2 k c_k
    std::vector<Real> tmp(static_cast<size_t>(n + 1), Real(0));
    for (int k = n - 1; k >= 1; --k)
        tmp[static_cast<size_t>(k - 1)] = tmp[static_cast<size_t>(k + 1)] + Real(2 * k) * c[static_cast<size_t>(k)];
    tmp[0] *= Real(0.5);
    for (int k = 0; k < n - 1; ++k) d[static_cast<size_t>(k)] = tmp[static_cast<size_t>(k)] * scale;
    return d;
}

Real cheb_eval(const std::vector<Real>& c, Real t) {
    // Clenshaw
    Real b1 = 0, b2 = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        Real b0 = c[static_cast<size_t>(k)] + Real(2) * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c.empty() ? Real(0) : c[0] + t * b1 - b2;
}

std::optional<std::pair<double, double>> static_layer_rates(double g1, double g2) {
    if (!(g2 > 0.0)) return std::nullopt;
    double disc = g1 * g1 * g1 * g1 - 4.0 * g2 * g2 * g2 * g2;
    if (!(disc > 0.0)) return std::nullopt;
    double s = std::sqrt(disc);
    double n1 = std::sqrt((g1 * g1 + s) / (2.0 * g2 * g2 * g2 * g2));
    double m1 = std::sqrt((g1 * g1 - s) / (2.0 * g2 * g2 * g2 * g2));
    return std::make_pair(n1, m1);
}

}  // namespace

CollocationBasis::CollocationBasis(const Grid& grid, double g1, double g2,
                                   double enrich_threshold)
    : grid_(grid) {
    const int n = grid.n_points;
    n_basis_ = n + 6;
    const double h0 = grid.coords[1] - grid.coords[0];
    auto rates = static_layer_rates(g1, g2);
    enriched_ = rates && rates->first * h0 > enrich_threshold;
    if (enriched_) {
        layers_ = {{Real(rates->first), false},
                   {Real(rates->first), true},
                   {Real(rates->second), false},
                   {Real(rates->second), true}};
    }
    n_poly_ = n_basis_ - static_cast<int>(layers_.size());

    // condition matrix: N value rows + 6 end-derivative rows
    MatX mc(n_basis_, n_basis_);
    std::vector<double> ends = {0.0, grid.length};
    for (int k = 0; k < n_basis_; ++k) {
        mc.col(k).head(n) = column_values(k, grid.coords, 0);
        for (int m = 1; m <= 3; ++m) {
            VecX v = column_values(k, ends, m);
            mc(n + 2 * (m - 1), k) = v(0);
            mc(n + 2 * (m - 1) + 1, k) = v(1);
        }
    }
    col_scale_ = VecX::Ones(n_basis_);
    for (int k = 0; k < n_basis_; ++k) {
        Real mx = mc.col(k).cwiseAbs().maxCoeff();
        if (mx > 0) col_scale_(k) = Real(1) / mx;
        mc.col(k) *= col_scale_(k);
    }
    Eigen::PartialPivLU<MatX> lu(mc);
    cond_inv_ = lu.inverse();
}

VecX CollocationBasis::column_values(int k, const std::vector<double>& pts,
                                     int order) const {
    const Real L = Real(grid_.length);
    VecX out(static_cast<Eigen::Index>(pts.size()));
    if (k < n_poly_) {
        std::vector<Real> c(static_cast<size_t>(n_poly_), Real(0));
        c[static_cast<size_t>(k)] = Real(1);
        const Real scale = Real(2) / L;
        for (int m = 0; m < order; ++m) c = cheb_derive(c, scale);
        for (size_t i = 0; i < pts.size(); ++i) {
            Real t = Real(2) * Real(pts[i]) / L - Real(1);
            out(static_cast<Eigen::Index>(i)) = cheb_eval(c, t);
        }
        return out;
    }
    const auto& [rate, right] = layers_[static_cast<size_t>(k - n_poly_)];
    for (size_t i = 0; i < pts.size(); ++i) {
        Real x = Real(pts[i]);
        Real v;
        if (!right) {
            Real sgn = (order % 2 == 0) ? Real(1) : Real(-1);
            v = sgn * std::pow(rate, Real(order)) * std::exp(-rate * x);
        } else {
            v = std::pow(rate, Real(order)) * std::exp(-rate * (L - x));
        }
        out(static_cast<Eigen::Index>(i)) = v;
    }
    return out;
}

MatX CollocationBasis::derivative_matrix(const std::vector<double>& points,
                                         int order) const {
    MatX dm(static_cast<Eigen::Index>(points.size()), n_basis_);
    for (int k = 0; k < n_basis_; ++k)
        dm.col(k) = column_values(k, points, order) * col_scale_(k);
    return dm * cond_inv_;
}

WeightSet collocation_weight_set(const Grid& grid, double g1, double g2) {
    WeightSet ws;
    ws.grid = grid;
    ws.basis = std::make_shared<CollocationBasis>(grid, g1, g2);
    ws.enriched = ws.basis->enriched();
    ws.orders.reserve(8);
    for (int m = 1; m <= 8; ++m)
        ws.orders.push_back(ws.basis->derivative_matrix(grid.coords, m));
    return ws;
}

}  // namespace ssgbeam
