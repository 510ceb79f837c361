#pragma once

#include <vector>
#include "ssgbeam/linalg.hpp"

namespace ssgbeam {

/// Gauss-Lobatto-Chebyshev collocation grid on [0, L].
/// Endpoints are assigned exactly 0 and L; boundary rows anchor to them.
struct Grid {
    int n_points = 0;
    double length = 0.0;
    std::vector<double> coords;

    double operator[](int i) const { return coords[static_cast<size_t>(i)]; }
};

/// x_i = (L/2) (1 - cos((i-1)pi/(N-1))), i = 1..N.
/// Requires n_points >= 5 (eight boundary conditions plus at least one
/// interior equation triple) and length > 0.
Grid make_grid(int n_points, double length);

}  // namespace ssgbeam
