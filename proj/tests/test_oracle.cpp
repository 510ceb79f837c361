#include <doctest.h>

#include <cmath>
#include "ssgbeam/oracle.hpp"
#include "ssgbeam/report.hpp"

using namespace ssgbeam;

TEST_CASE("static roots: eligibility and signs") {
    StaticRoots r = static_roots(LengthScales{0.1, 0.05});
    CHECK(r.n1 > r.m1);
    CHECK(r.m1 > 0);
    CHECK(r.n2 == -r.n1);
    CHECK(r.m2 == -r.m1);
    CHECK_THROWS_AS(static_roots(LengthScales{0.1, 0.0999}), std::invalid_argument);
    CHECK_THROWS_AS(static_roots(LengthScales{0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("exact static reproduces the table values") {
    BeamCase a = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    ExactStatic ex_a(SupportKind::SimplySupported, a);
    CHECK(nondimensionalize(Quantity::Deflection, ex_a.value(0, 0.5), a) ==
          doctest::Approx(1.1743).epsilon(1e-4));

    BeamCase b = default_case(SupportKind::SimplySupported, 0.15, 0.1);
    ExactStatic ex_b(SupportKind::SimplySupported, b);
    CHECK(nondimensionalize(Quantity::Deflection, ex_b.value(0, 0.5), b) ==
          doctest::Approx(0.9936).epsilon(1e-4));

    BeamCase c = default_case(SupportKind::Clamped, 0.1, 0.05);
    ExactStatic ex_c(SupportKind::Clamped, c);
    CHECK(nondimensionalize(Quantity::Deflection, ex_c.value(0, 0.5), c) ==
          doctest::Approx(0.0810).epsilon(2e-3));
}

TEST_CASE("zero load gives identically zero constants") {
    BeamCase c = default_case(SupportKind::Clamped, 0.1, 0.05);
    c.load.q = 0.0;
    ExactStatic ex(SupportKind::Clamped, c);
    for (double ci : ex.constants()) CHECK(std::abs(ci) < 1e-25);
    CHECK(ex.value(0, 0.3) == 0.0);
}

TEST_CASE("oracle residual of the governing equation") {
    for (SupportKind kind : {SupportKind::SimplySupported, SupportKind::Clamped,
                             SupportKind::Cantilever}) {
        BeamCase c = default_case(kind, 0.15, 0.1);
        ExactStatic ex(kind, c);
        const double ei = c.props.bending_stiffness();
        const double g1s = c.scales.g1 * c.scales.g1;
        const double g2q = std::pow(c.scales.g2, 4);
        for (int s = 0; s <= 50; ++s) {
            double x = s / 50.0;
            double r = ei * (ex.value(4, x) - g1s * ex.value(6, x) + g2q * ex.value(8, x));
            CHECK(std::abs(r - c.load.q) <= 1e-6 * c.load.q);
        }
    }
}

TEST_CASE("oracle satisfies its eight boundary conditions") {
    BeamCase c = default_case(SupportKind::Cantilever, 0.1, 0.05);
    ExactStatic ex(SupportKind::Cantilever, c);
    const double L = c.props.length;
    // dominant scale: tip deflection times EI over L powers
    const double scale = std::max(std::abs(ex.value(0, L)) * c.props.bending_stiffness(), 1.0);
    for (int m = 0; m <= 3; ++m) CHECK(std::abs(ex.value(m, 0.0)) <= 1e-8 * scale);
    for (ForceKind f : {ForceKind::V, ForceKind::M, ForceKind::Mbar, ForceKind::Mbbar})
        CHECK(std::abs(ex.force(f, L)) <= 1e-8 * scale);
}

TEST_CASE("characteristic roots satisfy the polynomial") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    double omega = 10.4058 / (1.0 * std::sqrt(c.props.mass_per_length /
                                              c.props.bending_stiffness()));
    auto roots = vibration_char_roots(omega, c.props, c.scales);
    CHECK(roots.size() == 8);
    // degenerate leading coefficient rejected
    CHECK_THROWS_AS(vibration_char_roots(omega, c.props, LengthScales{0.1, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(vibration_char_roots(-1.0, c.props, c.scales), std::invalid_argument);
}

TEST_CASE("scaled_log_det basics") {
    MatC id = MatC::Identity(8, 8);
    auto [lg, ph] = scaled_log_det(id);
    CHECK(lg == doctest::Approx(0.0));
    CHECK(ph == doctest::Approx(0.0));

    MatC d = MatC::Identity(8, 8);
    d(0, 0) = 2.0;
    d(1, 1) = 0.5;
    auto [lg2, ph2] = scaled_log_det(d);
    CHECK(lg2 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(std::remainder(ph2, 2 * M_PI)) < 1e-12);

    MatC sing = MatC::Zero(4, 4);
    sing(0, 0) = 1.0;
    auto [lg3, ph3] = scaled_log_det(sing);
    CHECK(lg3 == -std::numeric_limits<double>::infinity());
    (void)ph3;
}

TEST_CASE("exact frequencies match the analytical rows") {
    BeamCase a = default_case(SupportKind::SimplySupported, 0.1, 0.05, LoadKind::Vibration);
    ScanResult s = exact_frequencies(SupportKind::SimplySupported, a, 6, 1000.0);
    REQUIRE(s.roots.size() == 6);
    const double want[] = {10.4058, 47.6156, 127.2946, 271.1597, 505.4257, 860.6195};
    for (int i = 0; i < 6; ++i)
        CHECK(s.roots[static_cast<size_t>(i)] == doctest::Approx(want[i]).epsilon(1e-3));

    BeamCase b = default_case(SupportKind::Clamped, 0.15, 0.1, LoadKind::Vibration);
    ScanResult sc = exact_frequencies(SupportKind::Clamped, b, 1, 100.0);
    REQUIRE(!sc.roots.empty());
    CHECK(sc.roots[0] == doctest::Approx(65.4235).epsilon(1e-3));

    BeamCase f = default_case(SupportKind::FreeFree, 0.1, 0.05, LoadKind::Vibration);
    ScanResult sf = exact_frequencies(SupportKind::FreeFree, f, 1, 100.0);
    REQUIRE(!sf.roots.empty());
    CHECK(sf.roots[0] == doctest::Approx(23.4398).epsilon(1e-3));
}

TEST_CASE("shortfall is flagged when the range holds fewer roots") {
    BeamCase a = default_case(SupportKind::SimplySupported, 0.1, 0.05, LoadKind::Vibration);
    ScanResult s = exact_frequencies(SupportKind::SimplySupported, a, 6, 60.0);
    CHECK(s.shortfall);
    CHECK(s.roots.size() == 2);
}

TEST_CASE("exact buckling loads match the analytical rows") {
    BeamCase a = default_case(SupportKind::SimplySupported, 0.1, 0.05, LoadKind::Buckling);
    CHECK(exact_buckling(SupportKind::SimplySupported, a).roots.at(0) ==
          doctest::Approx(10.9704).epsilon(1e-3));

    BeamCase b = default_case(SupportKind::Clamped, 0.15, 0.1, LoadKind::Buckling);
    CHECK(exact_buckling(SupportKind::Clamped, b).roots.at(0) ==
          doctest::Approx(229.9456).epsilon(1e-3));

    BeamCase c = default_case(SupportKind::SimplySupported, 1e-3, 5e-4, LoadKind::Buckling);
    CHECK(exact_buckling(SupportKind::SimplySupported, c).roots.at(0) ==
          doctest::Approx(M_PI * M_PI).epsilon(5e-3));
}

TEST_CASE("refined roots are insensitive to the scan step") {
    BeamCase a = default_case(SupportKind::SimplySupported, 0.15, 0.1, LoadKind::Buckling);
    double r1 = exact_buckling(SupportKind::SimplySupported, a, 300.0, 0.25).roots.at(0);
    double r2 = exact_buckling(SupportKind::SimplySupported, a, 300.0, 0.11).roots.at(0);
    CHECK(std::abs(r1 - r2) <= 1e-7);
}

TEST_CASE("basis degeneracies are not reported as roots") {
    // the double-root locus of the buckling cubic sits near P=31.32 for
    // g=(0.15,0.1); the deflated scan must pass through it and find the true
    // clamped root far beyond
    BeamCase b = default_case(SupportKind::Clamped, 0.15, 0.1, LoadKind::Buckling);
    ScanResult s = exact_buckling(SupportKind::Clamped, b);
    REQUIRE(!s.roots.empty());
    CHECK(s.roots[0] > 200.0);
}

TEST_CASE("narrow determinant dips are caught at the default scan step") {
    // the propped-cantilever g=(0.15,0.1) second mode hides between 0.25-step
    // samples of the log-magnitude; the phase-jump detector must find it
    BeamCase c = default_case(SupportKind::ProppedCantilever, 0.15, 0.1, LoadKind::Vibration);
    ScanResult s = exact_frequencies(SupportKind::ProppedCantilever, c, 3, 400.0, 0.25);
    REQUIRE(s.roots.size() == 3);
    CHECK(s.roots[0] == doctest::Approx(28.3640).epsilon(1e-4));
    CHECK(s.roots[1] == doctest::Approx(120.2151).epsilon(1e-4));
    CHECK(s.roots[2] == doctest::Approx(332.5963).epsilon(1e-4));
}
