#include <doctest.h>

#include <cmath>
#include "ssgbeam/report.hpp"
#include "ssgbeam/solve.hpp"

using namespace ssgbeam;

namespace {
PartitionedSystem build(SupportKind kind, double g1, double g2, int n, LoadKind load) {
    BeamCase c = default_case(kind, g1, g2, load);
    Grid g = make_grid(n, c.props.length);
    return assemble(c, collocation_weight_set(g, g1, g2));
}
}  // namespace

TEST_CASE("eigen_spectrum basics") {
    auto id3 = eigen_spectrum(MatD::Identity(3, 3));
    for (const auto& z : id3) {
        CHECK(z.real() == doctest::Approx(1.0));
        CHECK(z.imag() == doctest::Approx(0.0));
    }

    MatD rot(2, 2);
    rot << 0, 1, -1, 0;
    auto pair = eigen_spectrum(rot);
    CHECK(pair[0].imag() == doctest::Approx(-1.0));
    CHECK(pair[1].imag() == doctest::Approx(1.0));

    // companion of k^4 - 1: roots of unity
    MatD comp = MatD::Zero(4, 4);
    comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
    comp(0, 3) = 1.0;
    auto roots = eigen_spectrum(comp);
    CHECK(roots[0].real() == doctest::Approx(-1.0));
    CHECK(roots[3].real() == doctest::Approx(1.0));
    CHECK(roots[1].imag() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(roots[2].imag() == doctest::Approx(1.0).epsilon(1e-9));

    MatD big = MatD::Identity(65, 65);
    CHECK_THROWS_AS(eigen_spectrum(big), std::invalid_argument);
}

TEST_CASE("zero load gives the zero solution") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    c.load.q = 0.0;
    Grid g = make_grid(11, 1.0);
    StaticSolution sol = solve_static(assemble(c, collocation_weight_set(g, 0.1, 0.05)));
    CHECK(sol.state().cwiseAbs().maxCoeff() < 1e-20);
}

TEST_CASE("static midspan values against the reference tables") {
    StaticReport r = static_report(default_case(SupportKind::SimplySupported, 0.1, 0.05), 21);
    CHECK(r.w_nd[10] == doctest::Approx(1.1743).epsilon(2e-4));
    CHECK(std::abs(r.curvature_l[10]) * 1e3 == doctest::Approx(0.4598).epsilon(2e-4));
    CHECK(std::abs(r.dm[0]) * 1e3 == doctest::Approx(5.0252).epsilon(2e-4));
    CHECK(std::abs(r.tm[0]) * 1e3 == doctest::Approx(0.1218).epsilon(5e-4));

    StaticReport c2 = static_report(default_case(SupportKind::Clamped, 0.15, 0.1), 21);
    CHECK(c2.w_nd[10] == doctest::Approx(0.0313).epsilon(2e-3));
    CHECK(std::abs(c2.dm[0]) * 1e3 == doctest::Approx(9.4123).epsilon(1e-3));
}

TEST_CASE("static mirror symmetry for symmetric supports") {
    for (SupportKind kind : {SupportKind::SimplySupported, SupportKind::Clamped}) {
        StaticReport r = static_report(default_case(kind, 0.15, 0.1), 15);
        const size_t n = r.w_nd.size();
        for (size_t i = 0; i < n; ++i) {
            double a = r.w_nd[i], b = r.w_nd[n - 1 - i];
            CHECK(std::abs(a - b) <= 1e-8 * std::max(std::abs(a), 1e-3));
        }
    }
}

TEST_CASE("modal frequencies: simply supported vs analytical row") {
    const double want[] = {10.4058, 47.6156, 127.2946, 271.1597, 505.4257, 860.6195};
    ModalResult m = solve_modal(build(SupportKind::SimplySupported, 0.1, 0.05, 21,
                                      LoadKind::Vibration), 6);
    REQUIRE(m.frequencies.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(m.frequencies[static_cast<size_t>(i)] ==
              doctest::Approx(want[i]).epsilon(2e-3));
    CHECK(m.discarded_count == 0);
}

TEST_CASE("free-free discards two rigid modes") {
    ModalResult m = solve_modal(build(SupportKind::FreeFree, 0.15, 0.1, 21,
                                      LoadKind::Vibration), 6);
    CHECK(m.discarded_count == 2);
    REQUIRE(!m.frequencies.empty());
    CHECK(m.frequencies[0] == doctest::Approx(24.3239).epsilon(2e-3));
}

TEST_CASE("clamped classical frequency limit") {
    ModalResult m = solve_modal(build(SupportKind::Clamped, 1e-3, 5e-4, 21,
                                      LoadKind::Vibration), 1);
    REQUIRE(!m.frequencies.empty());
    CHECK(m.frequencies[0] == doctest::Approx(22.373).epsilon(5e-3));
}

TEST_CASE("retained frequencies are simple and ascending") {
    for (SupportKind kind : {SupportKind::SimplySupported, SupportKind::Clamped,
                             SupportKind::Cantilever, SupportKind::FreeFree}) {
        ModalResult m = solve_modal(build(kind, 0.1, 0.05, 21, LoadKind::Vibration), 6);
        for (size_t i = 0; i + 1 < m.frequencies.size(); ++i)
            CHECK(m.frequencies[i + 1] - m.frequencies[i] > 1e-6);
    }
}

TEST_CASE("buckling loads against the reference tables") {
    CHECK(solve_buckling(build(SupportKind::SimplySupported, 0.1, 0.05, 21,
                               LoadKind::Buckling)).critical_load ==
          doctest::Approx(10.9704).epsilon(1e-3));
    CHECK(solve_buckling(build(SupportKind::ProppedCantilever, 0.15, 0.1, 21,
                               LoadKind::Buckling)).critical_load ==
          doctest::Approx(53.9331).epsilon(1e-3));
}

TEST_CASE("cantilever classical buckling limit") {
    BucklingResult b = solve_buckling(build(SupportKind::Cantilever, 1e-3, 5e-4, 21,
                                            LoadKind::Buckling));
    CHECK(b.critical_load == doctest::Approx(M_PI * M_PI / 4.0).epsilon(5e-3));
}

TEST_CASE("buckling full-pencil and condensed paths agree without boundary G") {
    for (SupportKind kind : {SupportKind::SimplySupported, SupportKind::Clamped,
                             SupportKind::ProppedCantilever}) {
        PartitionedSystem sys = build(kind, 0.1, 0.05, 15, LoadKind::Buckling);
        double full = solve_buckling(sys).critical_load;
        double cond = buckling_condensed_path(sys);
        CHECK(std::abs(full - cond) <= 1e-6 * std::abs(full));
    }
}

TEST_CASE("nondimensional results invariant under EI scaling") {
    BeamCase base = default_case(SupportKind::Clamped, 0.1, 0.05, LoadKind::Vibration);
    BeamCase stiff = base;
    stiff.props.elastic_modulus *= 4.0;
    Grid g = make_grid(15, 1.0);
    WeightSet ws = collocation_weight_set(g, 0.1, 0.05);
    ModalResult m1 = solve_modal(assemble(base, ws), 3);
    ModalResult m2 = solve_modal(assemble(stiff, ws), 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(m1.frequencies[static_cast<size_t>(i)] -
                       m2.frequencies[static_cast<size_t>(i)]) <=
              1e-10 * m1.frequencies[static_cast<size_t>(i)]);

    base.load.kind = stiff.load.kind = LoadKind::Buckling;
    double p1 = solve_buckling(assemble(base, ws)).critical_load;
    double p2 = solve_buckling(assemble(stiff, ws)).critical_load;
    CHECK(std::abs(p1 - p2) <= 1e-10 * p1);
}

TEST_CASE("static convergence toward the oracle, decreasing 15 to 21") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    const double exact = 1.17431612;  // oracle midspan deflection, nondim
    double e15 = std::abs(static_report(c, 15).w_nd[7] - exact);
    double e21 = std::abs(static_report(c, 21).w_nd[10] - exact);
    CHECK(e21 < e15);
}

TEST_CASE("modal and buckling convergence toward the oracle, decreasing 15 to 21") {
    // oracle values for the simply supported g=(0.1,0.05) case
    const double om_exact = 10.405396;
    const double p_exact = 10.969707;
    double em15 = std::abs(solve_modal(build(SupportKind::SimplySupported, 0.1, 0.05, 15,
                                             LoadKind::Vibration), 1).frequencies.at(0) - om_exact);
    double em21 = std::abs(solve_modal(build(SupportKind::SimplySupported, 0.1, 0.05, 21,
                                             LoadKind::Vibration), 1).frequencies.at(0) - om_exact);
    CHECK(em21 < em15);
    double eb15 = std::abs(solve_buckling(build(SupportKind::SimplySupported, 0.1, 0.05, 15,
                                                LoadKind::Buckling)).critical_load - p_exact);
    double eb21 = std::abs(solve_buckling(build(SupportKind::SimplySupported, 0.1, 0.05, 21,
                                                LoadKind::Buckling)).critical_load - p_exact);
    CHECK(eb21 < eb15);
}
