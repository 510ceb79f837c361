#include "ssgbeam/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace ssgbeam {

namespace {

constexpr double kPi = 3.14159265358979323846;

VecX force_row_ld(const WeightSet& ws, const BeamProperties& props,
                  const LengthScales& scales, ForceKind force, End end) {
    const int n = ws.grid.n_points;
    const int i = (end == End::Left) ? 0 : n - 1;
    const Real ei = Real(props.bending_stiffness());
    const Real g1s = Real(scales.g1) * Real(scales.g1);
    const Real g2q = Real(scales.g2) * Real(scales.g2) * Real(scales.g2) * Real(scales.g2);
    switch (force) {
        case ForceKind::V:
            return ei * (ws.order(3).row(i) - g1s * ws.order(5).row(i) +
                         g2q * ws.order(7).row(i)).transpose();
        case ForceKind::M:
            return ei * (ws.order(2).row(i) - g1s * ws.order(4).row(i) +
                         g2q * ws.order(6).row(i)).transpose();
        case ForceKind::Mbar:
            return ei * (g1s * ws.order(3).row(i) - g2q * ws.order(5).row(i)).transpose();
        case ForceKind::Mbbar:
            return ei * g2q * ws.order(4).row(i).transpose();
    }
    throw std::invalid_argument("boundary_force_row: bad force kind");
}

int dof_index(Dof dof, End end, int n) {
    const int right = (end == End::Right) ? 1 : 0;
    switch (dof) {
        case Dof::W: return right ? n - 1 : 0;
        case Dof::Wp: return n + right;
        case Dof::Wpp: return n + 2 + right;
        case Dof::Wppp: return n + 4 + right;
    }
    throw std::invalid_argument("dof_index: bad dof");
}

}  // namespace

MatD interior_rows(const WeightSet& ws, const BeamProperties& props,
                   const LengthScales& scales) {
    const int n = ws.grid.n_points;
    const Real ei = Real(props.bending_stiffness());
    const Real g1s = Real(scales.g1) * Real(scales.g1);
    const Real g2q = Real(scales.g2) * Real(scales.g2) * Real(scales.g2) * Real(scales.g2);
    MatX rows = ei * (ws.order(4).middleRows(1, n - 2) -
                      g1s * ws.order(6).middleRows(1, n - 2) +
                      g2q * ws.order(8).middleRows(1, n - 2));
    return to_double(rows);
}

VecD boundary_force_row(const WeightSet& ws, const BeamProperties& props,
                        const LengthScales& scales, ForceKind force, End end) {
    return to_double(force_row_ld(ws, props, scales, force, end));
}

PartitionedSystem assemble(const BeamCase& c, const WeightSet& ws) {
    c.props.validate();
    c.scales.validate();
    if (!(c.scales.g2 > 0.0))
        throw std::invalid_argument(
            "assemble: g2 must be positive (the eight-condition DOF structure "
            "embodies the eighth-order theory)");
    if (c.support == SupportKind::FreeFree && c.load.kind == LoadKind::Static)
        throw std::invalid_argument(
            "assemble: free-free static load is rigid-body indeterminate");

    const int n = ws.grid.n_points;
    const int nd = n - 2;
    const Real ei = Real(c.props.bending_stiffness());
    const Real g1s = Real(c.scales.g1) * Real(c.scales.g1);
    const Real g2q = Real(c.scales.g2) * Real(c.scales.g2) * Real(c.scales.g2) * Real(c.scales.g2);

    // 8 boundary equations
    MatX kb = MatX::Zero(8, n + 6);
    MatX gb = MatX::Zero(8, n + 6);
    const BoundaryConditionSet bcs = boundary_condition_set(c.support);
    for (int r = 0; r < 8; ++r) {
        const BoundaryCondition& bc = bcs[static_cast<size_t>(r)];
        if (bc.essential) {
            kb(r, dof_index(bc.dof, bc.end, n)) = Real(1);
        } else {
            kb.row(r) = force_row_ld(ws, c.props, c.scales, bc.force, bc.end).transpose();
            if (bc.force == ForceKind::V) {
                // free-end effective shear: V + P w' = 0
                gb(r, dof_index(Dof::Wp, bc.end, n)) = Real(-1);
            }
        }
    }

    // interior equations
    MatX kd(nd, n + 6);
    if (c.load.kind == LoadKind::Static) {
        // collocate at the Chebyshev-Gauss points of the interpolant
        std::vector<double> pts(static_cast<size_t>(nd));
        const double L = c.props.length;
        for (int j = 1; j <= nd; ++j)
            pts[static_cast<size_t>(j - 1)] =
                (L / 2.0) * (1.0 - std::cos((2.0 * j - 1.0) * kPi / (2.0 * nd)));
        const MatX d4 = ws.basis->derivative_matrix(pts, 4);
        const MatX d6 = ws.basis->derivative_matrix(pts, 6);
        const MatX d8 = ws.basis->derivative_matrix(pts, 8);
        kd = ei * (d4 - g1s * d6 + g2q * d8);
    } else {
        kd = ei * (ws.order(4).middleRows(1, nd) -
                   g1s * ws.order(6).middleRows(1, nd) +
                   g2q * ws.order(8).middleRows(1, nd));
    }
    MatX gd = -ws.order(2).middleRows(1, nd);

    // partition into boundary/domain DOF columns
    std::vector<int> bidx = {0, n - 1, n, n + 1, n + 2, n + 3, n + 4, n + 5};
    auto split = [&](const MatX& m, MatX& b, MatX& d) {
        b.resize(m.rows(), 8);
        for (int j = 0; j < 8; ++j) b.col(j) = m.col(bidx[static_cast<size_t>(j)]);
        d = m.middleCols(1, nd);
    };

    auto work = std::make_shared<PartitionedSystem::Work>();
    split(kb, work->k_bb, work->k_bd);
    split(kd, work->k_db, work->k_dd);
    split(gb, work->g_bb, work->g_bd);
    split(gd, work->g_db, work->g_dd);
    work->f_b = VecX::Zero(8);
    work->f_d = VecX::Constant(nd, (c.load.kind == LoadKind::Static) ? Real(c.load.q) : Real(0));

    PartitionedSystem sys;
    sys.n_points = n;
    sys.beam = c;
    sys.k_bb = to_double(work->k_bb);
    sys.k_bd = to_double(work->k_bd);
    sys.k_db = to_double(work->k_db);
    sys.k_dd = to_double(work->k_dd);
    sys.g_bb = to_double(work->g_bb);
    sys.g_bd = to_double(work->g_bd);
    sys.g_db = to_double(work->g_db);
    sys.g_dd = to_double(work->g_dd);
    sys.f_b = to_double(work->f_b);
    sys.f_d = to_double(work->f_d);
    sys.mass_dd = VecD::Constant(nd, c.props.mass_per_length);
    sys.work = work;
    sys.weights = std::make_shared<WeightSet>(ws);

    // equilibrated condition check of the boundary block
    MatX kbb_eq = work->k_bb;
    for (int r = 0; r < 8; ++r) {
        Real mx = kbb_eq.row(r).cwiseAbs().maxCoeff();
        if (!(mx > 0))
            throw std::runtime_error("assemble: singular boundary block (inconsistent BC set)");
        kbb_eq.row(r) /= mx;
    }
    sys.k_bb_condition = condition_estimate(kbb_eq);
    if (!std::isfinite(sys.k_bb_condition))
        throw std::runtime_error("assemble: singular boundary block (inconsistent BC set)");
    sys.ill_posed_warning = sys.k_bb_condition > 1e12;
    return sys;
}

CondensedSystem condense(const PartitionedSystem& sys) {
    if (!sys.work) throw std::invalid_argument("condense: system lacks assembly data");
    const auto& w = *sys.work;
    // row-equilibrate the boundary equations before elimination
    MatX kbb = w.k_bb, kbd = w.k_bd;
    VecX fb = w.f_b;
    for (int r = 0; r < 8; ++r) {
        Real mx = std::max(kbb.row(r).cwiseAbs().maxCoeff(),
                           kbd.row(r).cwiseAbs().maxCoeff());
        kbb.row(r) /= mx;
        kbd.row(r) /= mx;
        fb(r) /= mx;
    }
    Eigen::PartialPivLU<MatX> lu(kbb);
    CondensedSystem out;
    out.kbb_inv_kbd = lu.solve(kbd);
    out.kbb_inv_fb = lu.solve(fb);
    out.k_red = w.k_dd - w.k_db * out.kbb_inv_kbd;
    out.g_red = w.g_dd - w.g_db * out.kbb_inv_kbd;
    out.f_red = w.f_d - w.k_db * out.kbb_inv_fb;
    return out;
}

}  // namespace ssgbeam
