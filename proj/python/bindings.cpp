#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssgbeam/diffmat.hpp"
#include "ssgbeam/oracle.hpp"
#include "ssgbeam/report.hpp"
#include "ssgbeam/solve.hpp"

namespace py = pybind11;
using namespace ssgbeam;

namespace {

BeamCase build_case(const std::string& support, double g1, double g2, LoadKind kind,
                    double E, double I, double m, double L, double q, int modes) {
    BeamCase c;
    c.support = support_from_string(support);
    c.scales = {g1, g2};
    c.props.elastic_modulus = E;
    c.props.second_moment = I;
    c.props.mass_per_length = m;
    c.props.length = L;
    c.load.kind = kind;
    c.load.q = q;
    c.load.mode_count = modes;
    return c;
}

}  // namespace

PYBIND11_MODULE(_ssgbeam, mod) {
    mod.doc() = "differential quadrature element for second strain gradient "
                "Euler-Bernoulli beams, with analytical oracles";

    mod.def("grid", [](int n, double length) { return make_grid(n, length).coords; },
            py::arg("n"), py::arg("length") = 1.0,
            "Gauss-Lobatto-Chebyshev collocation points on [0, L]");

    mod.def("modified_matrices", [](int n, double length) {
        ModifiedWeightSet mw = modified_matrices(make_grid(n, length));
        py::dict out;
        out["abar"] = mw.abar; out["bbar"] = mw.bbar; out["cbar"] = mw.cbar;
        out["dbar"] = mw.dbar; out["ebar"] = mw.ebar; out["fbar"] = mw.fbar;
        out["gbar"] = mw.gbar; out["hbar"] = mw.hbar;
        out["v"] = mw.v; out["y"] = mw.y;
        return out;
    }, py::arg("n"), py::arg("length") = 1.0,
       "the eight modified N x (N+6) derivative matrices plus the v, y intermediates");

    mod.def("solve_static", [](const std::string& support, double g1, double g2, int n,
                               double E, double I, double m, double L, double q) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Static, E, I, m, L, q, 6);
        StaticReport r = static_report(c, n);
        py::dict out;
        out["stations"] = r.stations;
        out["w_nd"] = r.w_nd;
        out["slope"] = r.slope_raw;
        out["slope_wl"] = r.slope_wl;
        out["curvature_l"] = r.curvature_l;
        out["triple_l2"] = r.triple_l2;
        out["bm"] = std::vector<double>{r.bm[0], r.bm[1]};
        out["dm"] = std::vector<double>{r.dm[0], r.dm[1]};
        out["tm"] = std::vector<double>{r.tm[0], r.tm[1]};
        out["enriched"] = r.basis_enriched;
        return out;
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("n") = 21,
       py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0, py::arg("m") = 0.1,
       py::arg("L") = 1.0, py::arg("q") = 1.0,
       "station-wise nondimensional static response under a uniform load");

    mod.def("solve_modal", [](const std::string& support, double g1, double g2, int n,
                              int modes, double E, double I, double m, double L) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Vibration, E, I, m, L, 1.0, modes);
        ModalResult r = modal_report(c, n, modes);
        py::dict out;
        out["frequencies"] = r.frequencies;
        out["discarded"] = r.discarded_count;
        return out;
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("n") = 21,
       py::arg("modes") = 6, py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0,
       py::arg("m") = 0.1, py::arg("L") = 1.0,
       "nondimensional natural frequencies omega L^2 sqrt(m/EI)");

    mod.def("solve_buckling", [](const std::string& support, double g1, double g2, int n,
                                 double E, double I, double m, double L) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Buckling, E, I, m, L, 1.0, 6);
        return buckling_report(c, n).critical_load;
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("n") = 21,
       py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0, py::arg("m") = 0.1,
       py::arg("L") = 1.0,
       "nondimensional critical load P L^2 / EI");

    mod.def("exact_static", [](const std::string& support, double g1, double g2,
                               const std::vector<double>& stations, int order,
                               double E, double I, double L, double q) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Static, E, I, 0.1, L, q, 6);
        ExactStatic ex(c.support, c);
        std::vector<double> out;
        out.reserve(stations.size());
        for (double x : stations) out.push_back(ex.value(order, x));
        return out;
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("stations"),
       py::arg("order") = 0, py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0,
       py::arg("L") = 1.0, py::arg("q") = 1.0,
       "closed-form static solution (raw derivative of given order at the stations)");

    mod.def("exact_frequencies", [](const std::string& support, double g1, double g2,
                                    int count, double scan_max, double E, double I,
                                    double m, double L) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Vibration, E, I, m, L, 1.0, count);
        ScanResult s = exact_frequencies(c.support, c, count, scan_max);
        return s.roots;
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("count") = 6,
       py::arg("scan_max") = 4000.0, py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0,
       py::arg("m") = 0.1, py::arg("L") = 1.0,
       "determinant-search natural frequencies (nondimensional)");

    mod.def("exact_buckling", [](const std::string& support, double g1, double g2,
                                 double scan_max, double E, double I, double L) {
        BeamCase c = build_case(support, g1, g2, LoadKind::Buckling, E, I, 0.1, L, 1.0, 6);
        return exact_buckling(c.support, c, scan_max).roots.at(0);
    }, py::arg("support"), py::arg("g1"), py::arg("g2"), py::arg("scan_max") = 300.0,
       py::arg("E") = 3.0e6, py::arg("I") = 1.0 / 12000.0, py::arg("L") = 1.0,
       "determinant-search critical load (nondimensional)");
}
