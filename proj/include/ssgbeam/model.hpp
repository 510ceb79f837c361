#pragma once

#include <array>
#include <string>
#include <vector>
#include "ssgbeam/linalg.hpp"

namespace ssgbeam {

/// Material and section data. beta_sq = EI / m enters the vibration
/// nondimensionalization.
struct BeamProperties {
    double elastic_modulus = 3.0e6;
    double second_moment = 1.0 / 12000.0;  // b=1, h=0.1 rectangle
    double mass_per_length = 0.1;          // rho = 1, A = 0.1
    double length = 1.0;

    double bending_stiffness() const { return elastic_modulus * second_moment; }
    double beta_sq() const { return bending_stiffness() / mass_per_length; }
    void validate() const;
};

/// Intrinsic length scales of the second-gradient theory.
struct LengthScales {
    double g1 = 0.0;
    double g2 = 0.0;

    /// The closed-form static solution needs real distinct exponents.
    bool oracle_eligible() const;
    void validate() const;
};

enum class SupportKind { SimplySupported, Clamped, Cantilever, ProppedCantilever, FreeFree };

std::string to_string(SupportKind k);
SupportKind support_from_string(const std::string& name);

enum class Dof { W, Wp, Wpp, Wppp };
enum class ForceKind { V, M, Mbar, Mbbar };
enum class End { Left, Right };

/// One boundary condition: either an essential constraint on an end DOF or a
/// homogeneous natural (force) condition.
struct BoundaryCondition {
    End end{};
    bool essential = true;
    Dof dof{};          // valid when essential
    ForceKind force{};  // valid when natural
};

using BoundaryConditionSet = std::array<BoundaryCondition, 8>;

/// Classical + non-classical catalog from the support kind.
BoundaryConditionSet boundary_condition_set(SupportKind kind);

enum class LoadKind { Static, Vibration, Buckling };

struct LoadCase {
    LoadKind kind = LoadKind::Static;
    double q = 1.0;      // uniform load for Static
    int mode_count = 6;  // for Vibration
};

struct BeamCase {
    BeamProperties props;
    LengthScales scales;
    SupportKind support = SupportKind::SimplySupported;
    LoadCase load;
};

enum class Quantity {
    Deflection,      // 100 EI w / (q L^4)
    Slope,           // raw
    SlopeTimesL,     // w' L
    Curvature,       // w'' L
    TripleDeriv,     // w''' L^2
    BendingMoment,   // M / (q L^2)
    DoubleMoment,    // Mbar / (q L^3)
    TripleMoment,    // Mbbar / (q L^4)
    Frequency,       // omega L^2 sqrt(m / EI)
    BucklingLoad     // P L^2 / EI
};

/// Nondimensional reporting per the static-table conventions and the
/// classical-limit-fixed frequency/load normalizations.
double nondimensionalize(Quantity kind, double raw_value, const BeamCase& c);

}  // namespace ssgbeam
