#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include "ssgbeam/report.hpp"

using namespace ssgbeam;

TEST_CASE("csv emission basics") {
    ReportTable t;
    t.title = "t";
    t.columns = {"label", "a", "b"};

    std::ostringstream empty;
    write_csv(t, empty);
    CHECK(empty.str() == "label,a,b,source\n");

    t.add("r1", {1.0, 0.123456789012345});
    std::ostringstream one;
    write_csv(t, one);
    CHECK(one.str() == "label,a,b,source\nr1,1,0.123456789,dq\n");
}

TEST_CASE("csv round trips at ten significant digits") {
    ReportTable t;
    t.columns = {"label", "v"};
    const double vals[] = {1.174312345678, -9.87654321e-3, 5.0252e-3, 860.6195123};
    for (double v : vals) t.add("x", {v});
    std::ostringstream os;
    write_csv(t, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);  // header
    for (double v : vals) {
        std::getline(is, line);
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        double parsed = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(std::abs(parsed - v) <= 1e-9 * std::abs(v));
    }
}

TEST_CASE("csv output is deterministic") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    auto render = [&]() {
        StaticReport r = static_report(c, 9);
        ReportTable t;
        t.columns = {"x", "w"};
        for (size_t i = 0; i < r.stations.size(); ++i)
            t.add(std::to_string(i), {r.w_nd[i]});
        std::ostringstream os;
        write_csv(t, os);
        return os.str();
    };
    CHECK(render() == render());
}

TEST_CASE("csv writes LF line endings to file") {
    ReportTable t;
    t.columns = {"label", "v"};
    t.add("a", {1.5});
    const std::string path = "report_test_tmp.csv";
    write_csv_file(t, path);
    std::ifstream f(path, std::ios::binary);
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(all == "label,v,source\na,1.5,dq\n");
    std::remove(path.c_str());
}

TEST_CASE("convergence table rows: one per N plus the analytical row") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05, LoadKind::Buckling);
    ReportTable t = convergence_table("buckle", c,
                                      {5, 7, 9, 11, 13, 15, 17, 19, 21}, true);
    CHECK(t.rows.size() == 10);
    CHECK(t.rows.back().provenance == "oracle");
    CHECK(t.rows[8].values.at(0) == doctest::Approx(10.9704).epsilon(2e-3));
    CHECK(t.rows[9].values.at(0) == doctest::Approx(10.9704).epsilon(1e-3));
}

TEST_CASE("unknown analysis is rejected") {
    BeamCase c = default_case(SupportKind::SimplySupported, 0.1, 0.05);
    CHECK_THROWS_AS(convergence_table("torsion", c, {5}, false), std::invalid_argument);
}
