#include "ssgbeam/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ssgbeam {

namespace {

constexpr double kLog10 = 2.302585092994046;

struct BcOp {
    End end;
    bool essential;
    Dof dof;
    ForceKind force;
};

std::vector<BcOp> oracle_bcs(SupportKind kind) {
    std::vector<BcOp> out;
    for (const BoundaryCondition& bc : boundary_condition_set(kind))
        out.push_back({bc.end, bc.essential, bc.dof, bc.force});
    return out;
}

}  // namespace

std::pair<double, double> scaled_log_det(const MatC& m_in) {
    MatC m = m_in;
    const Eigen::Index n = m.rows();
    double logmag = 0.0;
    double phase = 0.0;
    int sign_swaps = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        double best = std::abs(m(k, k));
        for (Eigen::Index i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > best) { best = std::abs(m(i, k)); piv = i; }
        if (best == 0.0)
            return {-std::numeric_limits<double>::infinity(), 0.0};
        if (piv != k) { m.row(piv).swap(m.row(k)); ++sign_swaps; }
        const Cplx d = m(k, k);
        logmag += std::log(std::abs(d));
        phase += std::arg(d);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            Cplx f = m(i, k) / d;
            m.row(i).tail(n - k - 1) -= f * m.row(k).tail(n - k - 1);
        }
    }
    if (sign_swaps % 2) phase += 3.14159265358979323846;
    return {logmag, phase};
}

StaticRoots static_roots(const LengthScales& scales) {
    const double g1 = scales.g1, g2 = scales.g2;
    if (!(g2 > 0.0) || !(g1 > std::sqrt(2.0) * g2))
        throw std::invalid_argument(
            "static_roots: exact static solution needs g1 > sqrt(2) g2 > 0");
    const double disc = std::sqrt(g1 * g1 * g1 * g1 - 4.0 * g2 * g2 * g2 * g2);
    const double g2q = g2 * g2 * g2 * g2;
    StaticRoots r{};
    r.n1 = std::sqrt((g1 * g1 + disc) / (2.0 * g2q));
    r.n2 = -r.n1;
    r.m1 = std::sqrt((g1 * g1 - disc) / (2.0 * g2q));
    r.m2 = -r.m1;
    return r;
}

ExactStatic::ExactStatic(SupportKind kind, const BeamCase& c) : case_(c) {
    if (kind != SupportKind::SimplySupported && kind != SupportKind::Clamped &&
        kind != SupportKind::Cantilever)
        throw std::invalid_argument(
            "ExactStatic: closed-form static set covers ss, clamped, cantilever");
    StaticRoots r = static_roots(c.scales);
    exps_ = {r.n1, r.n2, r.m1, r.m2};

    const double L = c.props.length;
    // column scaling keeps the growing exponential columns near unit size
    std::array<double, 8> colscale;
    for (int j = 0; j < 8; ++j)
        colscale[static_cast<size_t>(j)] =
            (j < 4) ? 1.0 : std::exp(-std::max(exps_[static_cast<size_t>(j - 4)], 0.0) * L);

    MatD k(8, 8);
    VecD rhs(8);
    int row = 0;
    for (const BcOp& bc : oracle_bcs(kind)) {
        const double x = (bc.end == End::Left) ? 0.0 : L;
        for (int j = 0; j < 8; ++j) {
            double v = bc.essential
                           ? basis_deriv(j, static_cast<int>(bc.dof), x)
                           : apply_op_basis(bc.force, j, x);
            k(row, j) = v * colscale[static_cast<size_t>(j)];
        }
        double p = bc.essential
                       ? particular_deriv(static_cast<int>(bc.dof), x)
                       : apply_op_particular(bc.force, x);
        rhs(row) = -p;
        ++row;
    }
    Eigen::FullPivLU<MatD> lu(k);
    if (!lu.isInvertible())
        throw std::runtime_error("ExactStatic: singular boundary system");
    VecD sol = lu.solve(rhs);
    for (int j = 0; j < 8; ++j) c_[static_cast<size_t>(j)] = sol(j) * colscale[static_cast<size_t>(j)];
}

double ExactStatic::basis_deriv(int j, int m, double x) const {
    if (j < 4) {  // x^j
        if (j < m) return 0.0;
        double f = 1.0;
        for (int t = 0; t < m; ++t) f *= (j - t);
        return f * std::pow(x, j - m);
    }
    const double kk = exps_[static_cast<size_t>(j - 4)];
    return std::pow(kk, m) * std::exp(kk * x);
}

double ExactStatic::particular_deriv(int m, double x) const {
    if (m > 4) return 0.0;
    double f = 1.0;
    for (int t = 0; t < m; ++t) f *= (4 - t);
    return case_.load.q * f * std::pow(x, 4 - m) /
           (24.0 * case_.props.bending_stiffness());
}

namespace {
double apply_force_op(ForceKind f, double ei, double g1s, double g2q,
                      const std::function<double(int)>& d) {
    switch (f) {
        case ForceKind::V: return ei * (d(3) - g1s * d(5) + g2q * d(7));
        case ForceKind::M: return ei * (d(2) - g1s * d(4) + g2q * d(6));
        case ForceKind::Mbar: return ei * (g1s * d(3) - g2q * d(5));
        case ForceKind::Mbbar: return ei * g2q * d(4);
    }
    throw std::invalid_argument("apply_force_op: bad kind");
}
}  // namespace

double ExactStatic::apply_op_basis(ForceKind f, int j, double x) const {
    const double g1s = case_.scales.g1 * case_.scales.g1;
    const double g2q = std::pow(case_.scales.g2, 4);
    return apply_force_op(f, case_.props.bending_stiffness(), g1s, g2q,
                          [&](int m) { return basis_deriv(j, m, x); });
}

double ExactStatic::apply_op_particular(ForceKind f, double x) const {
    const double g1s = case_.scales.g1 * case_.scales.g1;
    const double g2q = std::pow(case_.scales.g2, 4);
    return apply_force_op(f, case_.props.bending_stiffness(), g1s, g2q,
                          [&](int m) { return particular_deriv(m, x); });
}

double ExactStatic::value(int m, double x) const {
    double acc = particular_deriv(m, x);
    for (int j = 0; j < 8; ++j) acc += c_[static_cast<size_t>(j)] * basis_deriv(j, m, x);
    return acc;
}

double ExactStatic::force(ForceKind f, double x) const {
    const double g1s = case_.scales.g1 * case_.scales.g1;
    const double g2q = std::pow(case_.scales.g2, 4);
    return apply_force_op(f, case_.props.bending_stiffness(), g1s, g2q,
                          [&](int m) { return value(m, x); });
}

std::vector<std::complex<double>> vibration_char_roots(double omega,
                                                       const BeamProperties& props,
                                                       const LengthScales& scales) {
    if (!(omega > 0)) throw std::invalid_argument("vibration_char_roots: omega > 0");
    const double g2q = std::pow(scales.g2, 4);
    if (!(g2q > 0))
        throw std::invalid_argument("vibration_char_roots: degenerate leading coefficient");
    // monic k^8 + c6 k^6 + c4 k^4 + c0 = 0
    const double c6 = -scales.g1 * scales.g1 / g2q;
    const double c4 = 1.0 / g2q;
    const double c0 = -(omega * omega / props.beta_sq()) / g2q;
    VecD coeffs = VecD::Zero(8);
    coeffs(0) = c0;
    coeffs(4) = c4;
    coeffs(6) = c6;
    MatD comp = MatD::Zero(8, 8);
    for (int i = 1; i < 8; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < 8; ++i) comp(i, 7) = -coeffs(i);
    Eigen::EigenSolver<MatD> es(comp, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("vibration_char_roots: companion eigensolve failed");
    std::vector<std::complex<double>> roots(8);
    for (int i = 0; i < 8; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);

    // residual check against the characteristic polynomial
    const double cmax = std::max({std::abs(c0), std::abs(c4), std::abs(c6), 1.0});
    for (const auto& k : roots) {
        Cplx k2 = k * k, k4 = k2 * k2;
        Cplx val = k4 * k4 + c6 * k4 * k2 + c4 * k4 + c0;
        if (std::abs(val) > 1e-8 * cmax * std::max(1.0, std::pow(std::abs(k), 8)))
            throw std::runtime_error("vibration_char_roots: root residual too large");
    }
    return roots;
}

namespace {

// log|Vandermonde| of the exponent multiset; deflates basis degeneracies.
double log_vandermonde(const std::vector<std::complex<double>>& k) {
    double s = 0.0;
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j) {
            double d = std::abs(k[j] - k[i]);
            s += (d > 0) ? std::log(d) : -700.0;
        }
    return s;
}

// boundary operator applied to e^{k x}, with the column pre-shifted by
// exp(-max(Re k, 0) L) for overflow control.
Cplx op_exp_col(const BcOp& bc, Cplx k, double x, double L, double g1s, double g2q,
                double p_over_ei) {
    Cplx e = std::exp(k * x - std::max(k.real(), 0.0) * L);
    if (bc.essential) {
        switch (bc.dof) {
            case Dof::W: return e;
            case Dof::Wp: return k * e;
            case Dof::Wpp: return k * k * e;
            case Dof::Wppp: return k * k * k * e;
        }
    }
    Cplx k2 = k * k, k3 = k2 * k, k4 = k2 * k2, k5 = k4 * k, k6 = k4 * k2, k7 = k4 * k3;
    switch (bc.force) {
        case ForceKind::V: return (k3 - g1s * k5 + g2q * k7) * e + p_over_ei * k * e;
        case ForceKind::M: return (k2 - g1s * k4 + g2q * k6) * e;
        case ForceKind::Mbar: return (g1s * k3 - g2q * k5) * e;
        case ForceKind::Mbbar: return g2q * k4 * e;
    }
    return {};
}

struct DetSample {
    double mag;    // deflated log10 |det|
    double phase;  // raw accumulated phase
};

// deflated log10 |det F| for the vibration problem at nondimensional omega
DetSample vib_log_det(double omega_nd, SupportKind kind, const BeamCase& c) {
    const double L = c.props.length;
    const double omega = omega_nd / (L * L * std::sqrt(c.props.mass_per_length /
                                                       c.props.bending_stiffness()));
    auto roots = vibration_char_roots(omega, c.props, c.scales);
    const double g1s = c.scales.g1 * c.scales.g1;
    const double g2q = std::pow(c.scales.g2, 4);
    auto bcs = oracle_bcs(kind);
    MatC f(8, 8);
    for (int i = 0; i < 8; ++i) {
        const double x = (bcs[static_cast<size_t>(i)].end == End::Left) ? 0.0 : L;
        for (int j = 0; j < 8; ++j)
            f(i, j) = op_exp_col(bcs[static_cast<size_t>(i)], roots[static_cast<size_t>(j)], x, L,
                                 g1s, g2q, 0.0);
    }
    auto [lg, ph] = scaled_log_det(f);
    return {(lg - log_vandermonde(roots)) / kLog10, ph};
}

// exponents of the buckling basis at nondimensional load p_nd
std::vector<std::complex<double>> buckling_exponents(double p_nd, const BeamCase& c) {
    const double L = c.props.length;
    const double g2q = std::pow(c.scales.g2, 4);
    const double g1s = c.scales.g1 * c.scales.g1;
    // g2^4 u^3 - g1^2 u^2 + u + P/EI = 0, u = s^2, P/EI = p_nd / L^2
    const double a2 = -g1s / g2q, a1 = 1.0 / g2q, a0 = (p_nd / (L * L)) / g2q;
    MatD comp = MatD::Zero(3, 3);
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    comp(0, 2) = -a0;
    comp(1, 2) = -a1;
    comp(2, 2) = -a2;
    Eigen::EigenSolver<MatD> es(comp, false);
    std::vector<std::complex<double>> s;
    for (int i = 0; i < 3; ++i) {
        Cplx u = es.eigenvalues()(i);
        // residual check of the cubic root
        Cplx res = g2q * u * u * u - g1s * u * u + u + p_nd / (L * L);
        double scale = std::max({std::abs(g2q * u * u * u), std::abs(g1s * u * u),
                                 std::abs(u), std::abs(p_nd / (L * L)), 1e-30});
        if (std::abs(res) > 1e-10 * scale * 1e2)
            throw std::runtime_error("exact_buckling: cubic root residual too large");
        Cplx r = std::sqrt(u);
        s.push_back(r);
        s.push_back(-r);
    }
    return s;
}

DetSample buck_log_det(double p_nd, SupportKind kind, const BeamCase& c) {
    const double L = c.props.length;
    auto s = buckling_exponents(p_nd, c);
    const double g1s = c.scales.g1 * c.scales.g1;
    const double g2q = std::pow(c.scales.g2, 4);
    const double p_over_ei = p_nd / (L * L);
    auto bcs = oracle_bcs(kind);
    MatC f(8, 8);
    for (int i = 0; i < 8; ++i) {
        const BcOp& bc = bcs[static_cast<size_t>(i)];
        const double x = (bc.end == End::Left) ? 0.0 : L;
        // columns 0,1: basis {1, x}
        double c0 = 0, c1 = 0;
        if (bc.essential) {
            c0 = (bc.dof == Dof::W) ? 1.0 : 0.0;
            c1 = (bc.dof == Dof::W) ? x : (bc.dof == Dof::Wp ? 1.0 : 0.0);
        } else if (bc.force == ForceKind::V) {
            c1 = p_over_ei;  // effective shear on the linear mode
        }
        f(i, 0) = c0;
        f(i, 1) = c1;
        for (int j = 0; j < 6; ++j)
            f(i, 2 + j) = op_exp_col(bc, s[static_cast<size_t>(j)], x, L, g1s, g2q, p_over_ei);
    }
    auto [lg, ph] = scaled_log_det(f);
    return {(lg - log_vandermonde(s)) / kLog10, ph};
}

/// scan for roots of the complex determinant: candidates are deep local
/// minima of the deflated log-magnitude plus intervals where the accumulated
/// phase jumps by ~pi (a simple root can hide between samples while the
/// magnitude stays monotone); each candidate is golden-refined and accepted
/// on the decade-drop criterion.
ScanResult scan_minima(const std::function<DetSample(double)>& fun, double lo,
                       double hi, double step, int count, double drop_decades) {
    ScanResult out;
    std::vector<double> xs, vs, ph;
    for (double x = lo; x <= hi; x += step) {
        DetSample s = fun(x);
        xs.push_back(x);
        vs.push_back(s.mag);
        ph.push_back(s.phase);
    }
    const double gr = 0.6180339887498949;
    const double pi = 3.14159265358979323846;
    auto refine = [&](double a, double b, double neighbor) {
        double cpt = b - gr * (b - a), dpt = a + gr * (b - a);
        double fc = fun(cpt).mag, fd = fun(dpt).mag;
        double deepest = std::min(fc, fd);
        while (b - a > 1e-10) {
            if (fc < fd) {
                b = dpt; dpt = cpt; fd = fc;
                cpt = b - gr * (b - a); fc = fun(cpt).mag;
            } else {
                a = cpt; cpt = dpt; fc = fd;
                dpt = a + gr * (b - a); fd = fun(dpt).mag;
            }
            deepest = std::min(deepest, std::min(fc, fd));
        }
        double xm = 0.5 * (a + b);
        deepest = std::min(deepest, fun(xm).mag);
        if (deepest <= neighbor - drop_decades) {
            for (double r : out.roots)
                if (std::abs(r - xm) < 1e-6) return;
            out.roots.push_back(xm);
        }
    };
    for (size_t i = 1; i + 1 < xs.size(); ++i) {
        if (static_cast<int>(out.roots.size()) >= count) break;
        bool local_min = vs[i] < vs[i - 1] && vs[i] < vs[i + 1];
        double dph = std::remainder(ph[i] - ph[i - 1], 2.0 * pi);
        bool phase_jump = std::abs(dph) > pi / 2.0;
        if (local_min)
            refine(xs[i - 1], xs[i + 1], std::min(vs[i - 1], vs[i + 1]));
        else if (phase_jump)
            refine(xs[i - 1], xs[i], std::max(vs[i - 1], vs[i]));
    }
    std::sort(out.roots.begin(), out.roots.end());
    if (static_cast<int>(out.roots.size()) > count)
        out.roots.resize(static_cast<size_t>(count));
    out.shortfall = static_cast<int>(out.roots.size()) < count;
    return out;
}

}  // namespace

ScanResult exact_frequencies(SupportKind kind, const BeamCase& c, int count,
                             double scan_max, double step) {
    if (count < 1) throw std::invalid_argument("exact_frequencies: count >= 1");
    return scan_minima([&](double w) { return vib_log_det(w, kind, c); }, 0.1,
                       scan_max, step, count, 6.0);
}

ScanResult exact_buckling(SupportKind kind, const BeamCase& c, double scan_max,
                          double step) {
    if (kind == SupportKind::FreeFree)
        throw std::invalid_argument("exact_buckling: free-free has no buckling problem");
    return scan_minima([&](double p) { return buck_log_det(p, kind, c); }, 0.1,
                       scan_max, step, 1, 6.0);
}

}  // namespace ssgbeam
