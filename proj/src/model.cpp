#include "ssgbeam/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ssgbeam {

void BeamProperties::validate() const {
    if (!(elastic_modulus > 0) || !(second_moment > 0) ||
        !(mass_per_length > 0) || !(length > 0))
        throw std::invalid_argument("BeamProperties: all fields must be positive");
}

bool LengthScales::oracle_eligible() const {
    return g2 > 0.0 && g1 > std::sqrt(2.0) * g2;
}

void LengthScales::validate() const {
    if (g1 < 0 || g2 < 0)
        throw std::invalid_argument("LengthScales: g1, g2 must be nonnegative");
}

std::string to_string(SupportKind k) {
    switch (k) {
        case SupportKind::SimplySupported: return "ss";
        case SupportKind::Clamped: return "clamped";
        case SupportKind::Cantilever: return "cantilever";
        case SupportKind::ProppedCantilever: return "propped";
        case SupportKind::FreeFree: return "free-free";
    }
    return "?";
}

SupportKind support_from_string(const std::string& name) {
    if (name == "ss" || name == "simply-supported") return SupportKind::SimplySupported;
    if (name == "clamped") return SupportKind::Clamped;
    if (name == "cantilever") return SupportKind::Cantilever;
    if (name == "propped" || name == "propped-cantilever") return SupportKind::ProppedCantilever;
    if (name == "free-free" || name == "freefree") return SupportKind::FreeFree;
    throw std::invalid_argument("unknown support kind: " + name);
}

namespace {
BoundaryCondition ess(End e, Dof d) { return {e, true, d, ForceKind::V}; }
BoundaryCondition nat(End e, ForceKind f) { return {e, false, Dof::W, f}; }
}  // namespace

BoundaryConditionSet boundary_condition_set(SupportKind kind) {
    using E = End;
    switch (kind) {
        case SupportKind::SimplySupported:
            return {ess(E::Left, Dof::W),    nat(E::Left, ForceKind::M),
                    ess(E::Left, Dof::Wpp),  ess(E::Left, Dof::Wppp),
                    ess(E::Right, Dof::W),   nat(E::Right, ForceKind::M),
                    ess(E::Right, Dof::Wpp), ess(E::Right, Dof::Wppp)};
        case SupportKind::Clamped:
            return {ess(E::Left, Dof::W),    ess(E::Left, Dof::Wp),
                    ess(E::Left, Dof::Wpp),  ess(E::Left, Dof::Wppp),
                    ess(E::Right, Dof::W),   ess(E::Right, Dof::Wp),
                    ess(E::Right, Dof::Wpp), ess(E::Right, Dof::Wppp)};
        case SupportKind::Cantilever:
            return {ess(E::Left, Dof::W),         ess(E::Left, Dof::Wp),
                    ess(E::Left, Dof::Wpp),       ess(E::Left, Dof::Wppp),
                    nat(E::Right, ForceKind::V),  nat(E::Right, ForceKind::M),
                    nat(E::Right, ForceKind::Mbar), nat(E::Right, ForceKind::Mbbar)};
        case SupportKind::ProppedCantilever:
            return {ess(E::Left, Dof::W),    ess(E::Left, Dof::Wp),
                    ess(E::Left, Dof::Wpp),  ess(E::Left, Dof::Wppp),
                    ess(E::Right, Dof::W),   nat(E::Right, ForceKind::M),
                    ess(E::Right, Dof::Wpp), ess(E::Right, Dof::Wppp)};
        case SupportKind::FreeFree:
            return {nat(E::Left, ForceKind::V),    nat(E::Left, ForceKind::M),
                    nat(E::Left, ForceKind::Mbar), nat(E::Left, ForceKind::Mbbar),
                    nat(E::Right, ForceKind::V),   nat(E::Right, ForceKind::M),
                    nat(E::Right, ForceKind::Mbar), nat(E::Right, ForceKind::Mbbar)};
    }
    throw std::invalid_argument("boundary_condition_set: bad kind");
}

double nondimensionalize(Quantity kind, double raw, const BeamCase& c) {
    const double EI = c.props.bending_stiffness();
    const double L = c.props.length;
    // a zero load keeps the solution identically zero; report zeros rather
    // than 0/0 in the load-scaled quantities
    const double q = (c.load.q == 0.0) ? 1.0 : c.load.q;
    const double m = c.props.mass_per_length;
    switch (kind) {
        case Quantity::Deflection: return 100.0 * EI * raw / (q * L * L * L * L);
        case Quantity::Slope: return raw;
        case Quantity::SlopeTimesL: return raw * L;
        case Quantity::Curvature: return raw * L;
        case Quantity::TripleDeriv: return raw * L * L;
        case Quantity::BendingMoment: return raw / (q * L * L);
        case Quantity::DoubleMoment: return raw / (q * L * L * L);
        case Quantity::TripleMoment: return raw / (q * L * L * L * L);
        case Quantity::Frequency: return raw * L * L * std::sqrt(m / EI);
        case Quantity::BucklingLoad: return raw * L * L / EI;
    }
    throw std::invalid_argument("nondimensionalize: unknown quantity kind");
}

}  // namespace ssgbeam
