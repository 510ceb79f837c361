#pragma once

#include <complex>
#include <vector>
#include "ssgbeam/assembly.hpp"

namespace ssgbeam {

/// Static solution with continuous evaluation through the collocation basis.
class StaticSolution {
  public:
    StaticSolution(VecX wbar, PartitionedSystem sys);

    /// Raw m-th derivative (m = 0..3) at any station x in [0, L].
    double value(int deriv_order, double x) const;
    /// Raw end force.
    double end_force(ForceKind force, End end) const;

    const VecD& state() const { return state_; }
    const BeamCase& beam() const { return sys_.beam; }
    /// max |K w - f| over all N+6 assembled equations (extended precision).
    double residual_inf() const { return residual_; }
    double rhs_norm() const { return rhs_norm_; }
    /// max per-equation backward error |r_i| / (||K_i||_1 ||w||_inf + |f_i|);
    /// the absolute residual of the eighth-order rows sits at the evaluation
    /// floor, this is the meaningful solve-quality measure.
    double backward_error() const { return backward_error_; }

  private:
    VecX wbar_;
    VecD state_;
    PartitionedSystem sys_;
    double residual_ = 0.0;
    double rhs_norm_ = 0.0;
    double backward_error_ = 0.0;
};

struct ModalResult {
    std::vector<double> frequencies;  // nondimensional, ascending
    int discarded_count = 0;
};

struct BucklingResult {
    double critical_load = 0.0;  // nondimensional
    int spectrum_size = 0;
};

/// Full complex spectrum, deterministically ordered by (Re, Im). Backward
/// error of three sampled eigenpairs is verified against 1e-10 ||m||.
std::vector<std::complex<double>> eigen_spectrum(const MatD& m);

StaticSolution solve_static(const PartitionedSystem& sys);

/// Frequencies from the condensed operator with collocated diagonal mass.
/// Rigid modes (free-free) are discarded below max(1e-3, noise floor).
ModalResult solve_modal(const PartitionedSystem& sys, int count);

/// Smallest positive real eigenvalue of K w = P G w over the full extended
/// system (the free-end shear row carries a boundary geometric term). When
/// the boundary geometric blocks vanish, the condensed-pencil route runs as
/// a cross-check and both values must agree.
BucklingResult solve_buckling(const PartitionedSystem& sys);

/// First eigenvalue from the condensed pencil g_red^{-1} k_red; available
/// when the boundary geometric blocks are zero. Used as the agreement
/// cross-check for solve_buckling.
double buckling_condensed_path(const PartitionedSystem& sys);

}  // namespace ssgbeam
