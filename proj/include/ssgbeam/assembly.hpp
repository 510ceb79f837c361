#pragma once

#include <memory>
#include "ssgbeam/collocation.hpp"
#include "ssgbeam/model.hpp"

namespace ssgbeam {

/// Partitioned algebraic system. Boundary DOF order is
/// {w_1, w_N, w'_1, w'_N, w''_1, w''_N, w'''_1, w'''_N}; domain DOFs are
/// {w_2..w_{N-1}}. g_bb/g_bd carry the geometric contribution of free-end
/// shear rows (zero for all other rows); mass_dd is the collocated diagonal.
struct PartitionedSystem {
    int n_points = 0;
    BeamCase beam;
    MatD k_bb, k_bd, k_db, k_dd;
    VecD f_b, f_d;
    VecD mass_dd;          // diagonal entries
    MatD g_bb, g_bd, g_db, g_dd;
    double k_bb_condition = 0.0;
    bool ill_posed_warning = false;

    // extended-precision copies used by the solvers
    struct Work {
        MatX k_bb, k_bd, k_db, k_dd, g_bb, g_bd, g_db, g_dd;
        VecX f_b, f_d;
    };
    std::shared_ptr<const Work> work;
    std::shared_ptr<const WeightSet> weights;
};

/// Interior collocation rows EI (D4 - g1^2 D6 + g2^4 D8), one per interior
/// grid node, over the N+6 extended DOFs.
MatD interior_rows(const WeightSet& ws, const BeamProperties& props,
                   const LengthScales& scales);

/// One natural boundary condition row (shear, moment, double or triple
/// moment) at the chosen end, over the N+6 extended DOFs.
VecD boundary_force_row(const WeightSet& ws, const BeamProperties& props,
                        const LengthScales& scales, ForceKind force, End end);

/// Build the partitioned system for the case. Static interior rows are
/// collocated at the Chebyshev-Gauss points of the interpolant; eigenvalue
/// analyses use the interior grid nodes with collocated mass.
PartitionedSystem assemble(const BeamCase& c, const WeightSet& ws);

struct CondensedSystem {
    MatX k_red, g_red;
    VecX f_red;
    MatX kbb_inv_kbd;  // recovery map for the boundary DOFs
    VecX kbb_inv_fb;
};

/// Schur complement onto the domain DOFs.
CondensedSystem condense(const PartitionedSystem& sys);

}  // namespace ssgbeam
