#include "ssgbeam/solve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssgbeam {

namespace {

// assemble the full (N+6) x (N+6) equation set from the partition blocks
void full_system(const PartitionedSystem& sys, MatX& k, MatX& g, VecX& f) {
    const auto& w = *sys.work;
    const int n = sys.n_points;
    const int nd = n - 2;
    std::vector<int> bidx = {0, n - 1, n, n + 1, n + 2, n + 3, n + 4, n + 5};
    k = MatX::Zero(n + 6, n + 6);
    g = MatX::Zero(n + 6, n + 6);
    f = VecX::Zero(n + 6);
    for (int j = 0; j < 8; ++j) {
        k.col(bidx[static_cast<size_t>(j)]).head(8) = w.k_bb.col(j);
        k.col(bidx[static_cast<size_t>(j)]).tail(nd) = w.k_db.col(j);
        g.col(bidx[static_cast<size_t>(j)]).head(8) = w.g_bb.col(j);
        g.col(bidx[static_cast<size_t>(j)]).tail(nd) = w.g_db.col(j);
    }
    k.block(0, 1, 8, nd) = w.k_bd;
    k.block(8, 1, nd, nd) = w.k_dd;
    g.block(0, 1, 8, nd) = w.g_bd;
    g.block(8, 1, nd, nd) = w.g_dd;
    f.head(8) = w.f_b;
    f.tail(nd) = w.f_d;
}

VecX recover_state(const PartitionedSystem& sys, const CondensedSystem& cs,
                   const VecX& dd) {
    const int n = sys.n_points;
    VecX db = cs.kbb_inv_fb - cs.kbb_inv_kbd * dd;
    VecX wbar = VecX::Zero(n + 6);
    std::vector<int> bidx = {0, n - 1, n, n + 1, n + 2, n + 3, n + 4, n + 5};
    for (int j = 0; j < 8; ++j) wbar(bidx[static_cast<size_t>(j)]) = db(j);
    wbar.segment(1, n - 2) = dd;
    return wbar;
}

bool effectively_real(const std::complex<double>& z) {
    return std::abs(z.imag()) <= 1e-6 * std::abs(z);
}

}  // namespace

namespace {

// Parlett-Reinsch balancing by radix powers: a diagonal similarity that
// equalizes row and column norms. Eigen's QR iteration does not balance and
// loses the small eigenvalues of badly scaled operators without this.
MatD balance(MatD a) {
    const Eigen::Index n = a.rows();
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 50) {
        changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
            double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            while (c < r / 2.0) { c *= 2.0; r /= 2.0; f *= 2.0; }
            while (c > r * 2.0) { c /= 2.0; r *= 2.0; f /= 2.0; }
            if (c + r < 0.95 * s) {
                changed = true;
                a.col(i) *= f;
                a.row(i) /= f;
            }
        }
    }
    return a;
}

}  // namespace

std::vector<std::complex<double>> eigen_spectrum(const MatD& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigen_spectrum: matrix must be square");
    if (m.rows() > 64)
        throw std::invalid_argument("eigen_spectrum: size capped at 64");
    if (!m.allFinite())
        throw std::invalid_argument("eigen_spectrum: entries must be finite");
    MatD b = balance(m);
    Eigen::EigenSolver<MatD> es(b, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigen_spectrum: QR iteration did not converge");
    std::vector<std::complex<double>> vals(static_cast<size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) vals[static_cast<size_t>(i)] = es.eigenvalues()(i);

    // backward-error sampling on three eigenpairs of the balanced operator
    const double scale = std::max(b.cwiseAbs().maxCoeff(), 1.0);
    const Eigen::Index nsample = std::min<Eigen::Index>(3, m.rows());
    for (Eigen::Index s = 0; s < nsample; ++s) {
        Eigen::Index i = s * (m.rows() - 1) / std::max<Eigen::Index>(1, nsample - 1);
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        double res = (b.cast<std::complex<double>>() * v - es.eigenvalues()(i) * v).norm() / v.norm();
        if (res > 1e-10 * scale * static_cast<double>(m.rows()))
            throw std::runtime_error("eigen_spectrum: eigenpair residual too large");
    }
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b2) {
        if (a.real() != b2.real()) return a.real() < b2.real();
        return a.imag() < b2.imag();
    });
    return vals;
}

StaticSolution::StaticSolution(VecX wbar, PartitionedSystem sys)
    : wbar_(std::move(wbar)), sys_(std::move(sys)) {
    state_ = to_double(wbar_);
    MatX k, g;
    VecX f;
    full_system(sys_, k, g, f);
    VecX r = k * wbar_ - f;
    residual_ = static_cast<double>(r.cwiseAbs().maxCoeff());
    rhs_norm_ = static_cast<double>(f.cwiseAbs().maxCoeff());
    const Real wmax = wbar_.cwiseAbs().maxCoeff();
    Real worst = 0;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        Real denom = k.row(i).cwiseAbs().sum() * wmax + std::abs(f(i));
        worst = std::max(worst, std::abs(r(i)) / denom);
    }
    backward_error_ = static_cast<double>(worst);
}

double StaticSolution::value(int deriv_order, double x) const {
    if (deriv_order < 0 || deriv_order > 3)
        throw std::invalid_argument("StaticSolution::value: order 0..3");
    const auto& basis = *sys_.weights->basis;
    MatX row = basis.derivative_matrix({x}, deriv_order);
    return static_cast<double>((row * wbar_)(0));
}

double StaticSolution::end_force(ForceKind force, End end) const {
    VecD row = boundary_force_row(*sys_.weights, sys_.beam.props, sys_.beam.scales,
                                  force, end);
    long double acc = 0;
    for (Eigen::Index i = 0; i < row.size(); ++i)
        acc += (long double)row(i) * (long double)wbar_(i);
    return static_cast<double>(acc);
}

StaticSolution solve_static(const PartitionedSystem& sys) {
    if (sys.beam.load.kind != LoadKind::Static)
        throw std::invalid_argument("solve_static: case is not a static load case");
    CondensedSystem cs = condense(sys);
    Eigen::PartialPivLU<MatX> lu(cs.k_red);
    VecX dd = lu.solve(cs.f_red);
    if (!dd.allFinite())
        throw std::runtime_error("solve_static: singular condensed operator (mechanism)");
    return StaticSolution(recover_state(sys, cs, dd), sys);
}

ModalResult solve_modal(const PartitionedSystem& sys, int count) {
    if (count < 1) throw std::invalid_argument("solve_modal: count >= 1");
    CondensedSystem cs = condense(sys);
    const double m = sys.beam.props.mass_per_length;
    MatD a = to_double(cs.k_red) / m;
    auto lam = eigen_spectrum(a);

    const double L = sys.beam.props.length;
    const double to_nd = L * L * std::sqrt(m / sys.beam.props.bending_stiffness());
    // rigid modes occur only for the free-free support; their numerical
    // eigenvalues sit at the operator-norm roundoff floor rather than at
    // exact zero, so the 1e-3 threshold carries a noise-aware companion
    const bool free_free = sys.beam.support == SupportKind::FreeFree;
    const double norm_inf = a.cwiseAbs().rowwise().sum().maxCoeff();
    const double lam_noise = norm_inf * std::numeric_limits<double>::epsilon() * 512.0;
    const double rigid_tol =
        free_free ? std::max(1e-3, std::sqrt(lam_noise) * to_nd) : 0.0;

    std::vector<double> omega;
    int discarded = 0;
    for (const auto& z : lam) {
        if (!effectively_real(z)) continue;
        if (z.real() <= 0.0) {
            if (free_free && std::abs(z.real()) <= lam_noise) ++discarded;
            continue;
        }
        double om = std::sqrt(z.real()) * to_nd;
        if (om < rigid_tol) {
            ++discarded;
            continue;
        }
        omega.push_back(om);
    }
    std::sort(omega.begin(), omega.end());
    if (static_cast<int>(omega.size()) > count) omega.resize(static_cast<size_t>(count));
    ModalResult out;
    out.frequencies = std::move(omega);
    out.discarded_count = discarded;
    return out;
}

double buckling_condensed_path(const PartitionedSystem& sys) {
    CondensedSystem cs = condense(sys);
    Eigen::PartialPivLU<MatX> lu(cs.g_red);
    MatD a = to_double(MatX(lu.solve(cs.k_red)));
    auto lam = eigen_spectrum(a);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : lam)
        if (effectively_real(z) && z.real() > 1e-8) best = std::min(best, z.real());
    if (!std::isfinite(best))
        throw std::runtime_error("buckling: no positive real eigenvalue (condensed path)");
    const double L = sys.beam.props.length;
    return best * L * L / sys.beam.props.bending_stiffness();
}

BucklingResult solve_buckling(const PartitionedSystem& sys) {
    MatX k, g;
    VecX f;
    full_system(sys, k, g, f);
    // row-equilibrate, then W = K^{-1} G; the dominant eigenvalue of W is the
    // reciprocal of the smallest buckling load and is the best-conditioned
    // eigenpair of the problem.
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
        Real mx = std::max(k.row(r).cwiseAbs().maxCoeff(), g.row(r).cwiseAbs().maxCoeff());
        k.row(r) /= mx;
        g.row(r) /= mx;
    }
    Eigen::PartialPivLU<MatX> lu(k);
    MatD w = to_double(MatX(lu.solve(g)));
    auto lam = eigen_spectrum(w);

    // the essential-condition rows make G rank deficient, so the pencil has
    // infinite eigenvalues that surface as near-zero reciprocals; keep only
    // reciprocals within a physical window of the dominant one
    double spectrum_max = 0.0;
    for (const auto& z : lam) spectrum_max = std::max(spectrum_max, std::abs(z));
    const double floor = spectrum_max * 1e-8;

    double best = 0.0;
    int spectrum = 0;
    for (const auto& z : lam) {
        if (std::abs(z) <= floor) continue;
        ++spectrum;
        if (effectively_real(z) && z.real() > 0.0) best = std::max(best, z.real());
    }
    if (!(best > 0.0))
        throw std::runtime_error("solve_buckling: no positive real eigenvalue found");
    const double L = sys.beam.props.length;
    BucklingResult out;
    out.critical_load =
        (1.0 / best) * L * L / sys.beam.props.bending_stiffness();
    out.spectrum_size = spectrum;
    return out;
}

}  // namespace ssgbeam
