#include "ssgbeam/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ssgbeam {

Grid make_grid(int n_points, double length) {
    if (n_points < 5)
        throw std::invalid_argument(
            "make_grid: need at least 5 points to host 8 boundary conditions "
            "and one interior equation");
    if (!(length > 0.0))
        throw std::invalid_argument("make_grid: length must be positive");

    Grid g;
    g.n_points = n_points;
    g.length = length;
    g.coords.resize(static_cast<size_t>(n_points));
    const long double L = length;
    const long double pi = 3.141592653589793238462643383279502884L;
    for (int i = 0; i < n_points; ++i) {
        long double x = (L / 2.0L) * (1.0L - std::cos(i * pi / (n_points - 1)));
        g.coords[static_cast<size_t>(i)] = static_cast<double>(x);
    }
    g.coords.front() = 0.0;
    g.coords.back() = length;
    return g;
}

}  // namespace ssgbeam
