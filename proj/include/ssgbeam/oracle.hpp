#pragma once

#include <array>
#include <complex>
#include <vector>
#include "ssgbeam/model.hpp"

namespace ssgbeam {

/// Exponents of the exact static solution basis; n1 = -n2 > m1 = -m2 > 0.
/// Requires g1 > sqrt(2) g2 and g2 > 0 (real distinct roots).
struct StaticRoots {
    double n1, n2, m1, m2;
};
StaticRoots static_roots(const LengthScales& scales);

/// Closed-form static solution from the exponential-plus-polynomial basis
/// with the particular term q x^4 / (24 EI); the eight integration constants
/// come from applying the boundary operators to each basis function.
/// Supports: SimplySupported, Clamped, Cantilever.
class ExactStatic {
  public:
    ExactStatic(SupportKind kind, const BeamCase& c);

    /// m-th derivative (m = 0..8) of the solution at x.
    double value(int deriv_order, double x) const;
    double force(ForceKind force, double x) const;
    const std::array<double, 8>& constants() const { return c_; }

  private:
    double basis_deriv(int j, int m, double x) const;
    double particular_deriv(int m, double x) const;
    double apply_op_basis(ForceKind f, int j, double x) const;
    double apply_op_particular(ForceKind f, double x) const;

    BeamCase case_;
    std::array<double, 4> exps_{};  // n1, n2, m1, m2
    std::array<double, 8> c_{};
};

/// Roots of g2^4 k^8 - g1^2 k^6 + k^4 - omega^2/beta^2 = 0 via the companion
/// matrix. omega is the physical circular frequency.
std::vector<std::complex<double>> vibration_char_roots(double omega,
                                                       const BeamProperties& props,
                                                       const LengthScales& scales);

struct ScanResult {
    std::vector<double> roots;  // nondimensional, ascending
    bool shortfall = false;     // fewer roots than requested in range
};

/// Determinant-search natural frequencies (nondimensional), all supports.
/// The complex determinant is deflated by the Vandermonde factor of the
/// characteristic roots so basis degeneracies do not masquerade as roots.
ScanResult exact_frequencies(SupportKind kind, const BeamCase& c, int count,
                             double scan_max = 4000.0, double step = 0.25);

/// Determinant-search critical load (nondimensional).
/// Supports: SimplySupported, Clamped, Cantilever, ProppedCantilever.
ScanResult exact_buckling(SupportKind kind, const BeamCase& c,
                          double scan_max = 300.0, double step = 0.25);

}  // namespace ssgbeam
