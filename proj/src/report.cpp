#include "ssgbeam/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ssgbeam/oracle.hpp"

namespace ssgbeam {

void ReportTable::add(std::string label, std::vector<double> values, std::string prov) {
    rows.push_back({std::move(label), std::move(values), std::move(prov)});
}

void write_text(const ReportTable& table, std::ostream& os) {
    os << table.title << "\n";
    os << std::left << std::setw(12) << table.columns.front();
    for (size_t j = 1; j < table.columns.size(); ++j)
        os << std::right << std::setw(14) << table.columns[j];
    os << std::right << std::setw(10) << "source" << "\n";
    for (const auto& r : table.rows) {
        os << std::left << std::setw(12) << r.label;
        for (double v : r.values)
            os << std::right << std::setw(14) << std::fixed << std::setprecision(4) << v;
        os << std::right << std::setw(10) << r.provenance << "\n";
        os.unsetf(std::ios::fixed);
    }
}

namespace {
std::string fmt10(double v) {
    std::ostringstream ss;
    ss << std::setprecision(10) << v;
    return ss.str();
}
}  // namespace

void write_csv(const ReportTable& table, std::ostream& os) {
    for (size_t j = 0; j < table.columns.size(); ++j) {
        if (j) os << ",";
        os << table.columns[j];
    }
    os << ",source\n";
    for (const auto& r : table.rows) {
        os << r.label;
        for (double v : r.values) os << "," << fmt10(v);
        os << "," << r.provenance << "\n";
    }
}

void write_csv_file(const ReportTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(table, f);
    if (!f) throw std::runtime_error("write failed: " + path);
}

BeamCase default_case(SupportKind support, double g1, double g2, LoadKind kind) {
    BeamCase c;
    c.support = support;
    c.scales = {g1, g2};
    c.load.kind = kind;
    return c;
}

StaticReport static_report(const BeamCase& c, int n_points) {
    Grid grid = make_grid(n_points, c.props.length);
    WeightSet ws = collocation_weight_set(grid, c.scales.g1, c.scales.g2);
    PartitionedSystem sys = assemble(c, ws);
    StaticSolution sol = solve_static(sys);

    StaticReport r;
    r.basis_enriched = ws.enriched;
    r.stations = grid.coords;
    for (double x : grid.coords) {
        r.w_nd.push_back(nondimensionalize(Quantity::Deflection, sol.value(0, x), c));
        double s = sol.value(1, x);
        r.slope_raw.push_back(nondimensionalize(Quantity::Slope, s, c));
        r.slope_wl.push_back(nondimensionalize(Quantity::SlopeTimesL, s, c));
        r.curvature_l.push_back(nondimensionalize(Quantity::Curvature, sol.value(2, x), c));
        r.triple_l2.push_back(nondimensionalize(Quantity::TripleDeriv, sol.value(3, x), c));
    }
    for (int e = 0; e < 2; ++e) {
        End end = e ? End::Right : End::Left;
        r.bm[e] = nondimensionalize(Quantity::BendingMoment, sol.end_force(ForceKind::M, end), c);
        r.dm[e] = nondimensionalize(Quantity::DoubleMoment, sol.end_force(ForceKind::Mbar, end), c);
        r.tm[e] = nondimensionalize(Quantity::TripleMoment, sol.end_force(ForceKind::Mbbar, end), c);
    }
    return r;
}

ModalResult modal_report(const BeamCase& c, int n_points, int count) {
    BeamCase vc = c;
    vc.load.kind = LoadKind::Vibration;
    vc.load.mode_count = count;
    Grid grid = make_grid(n_points, vc.props.length);
    WeightSet ws = collocation_weight_set(grid, vc.scales.g1, vc.scales.g2);
    return solve_modal(assemble(vc, ws), count);
}

BucklingResult buckling_report(const BeamCase& c, int n_points) {
    BeamCase bc = c;
    bc.load.kind = LoadKind::Buckling;
    Grid grid = make_grid(n_points, bc.props.length);
    WeightSet ws = collocation_weight_set(grid, bc.scales.g1, bc.scales.g2);
    return solve_buckling(assemble(bc, ws));
}

namespace {

const std::vector<int> kTableNs = {5, 7, 9, 11, 13, 15, 17, 19, 21};
const double kG1a = 0.1, kG2a = 0.05, kG1b = 0.15, kG2b = 0.1;

// one convergence block of a static table
void static_block(ReportTable& t, SupportKind kind, double g1, double g2,
                  const std::vector<int>& cols_id) {
    // cols_id entries: 0 w(L/2), 1 w(L), 2 w'(0)e3, 3 w'(L)e3, 4 w''(L/2)e3,
    // 5 w'''(L/2)e3, 6 Dm(0)e3, 7 Tm(0)e3
    auto values_for = [&](const StaticReport& r, size_t n) {
        std::vector<double> out;
        size_t mid = (n - 1) / 2;
        for (int id : cols_id) {
            switch (id) {
                case 0: out.push_back(r.w_nd[mid]); break;
                case 1: out.push_back(r.w_nd[n - 1]); break;
                case 2: out.push_back(std::abs(r.slope_raw.front()) * 1e3); break;
                case 3: out.push_back(std::abs(r.slope_raw.back()) * 1e3); break;
                case 4: out.push_back(std::abs(r.curvature_l[mid]) * 1e3); break;
                case 5: out.push_back(std::abs(r.triple_l2[mid]) * 1e3); break;
                case 6: out.push_back(std::abs(r.dm[0]) * 1e3); break;
                case 7: out.push_back(std::abs(r.tm[0]) * 1e3); break;
            }
        }
        return out;
    };
    BeamCase c = default_case(kind, g1, g2);
    std::ostringstream tag;
    tag << "g1=" << g1 << ",g2=" << g2 << " ";
    for (int n : kTableNs) {
        StaticReport r = static_report(c, n);
        t.add(tag.str() + "N=" + std::to_string(n), values_for(r, static_cast<size_t>(n)));
    }
    // analytical row
    ExactStatic ex(kind, c);
    std::vector<double> exact;
    const double L = c.props.length;
    size_t mid_id = 0;
    (void)mid_id;
    for (int id : cols_id) {
        double v = 0;
        switch (id) {
            case 0: v = nondimensionalize(Quantity::Deflection, ex.value(0, L / 2), c); break;
            case 1: v = nondimensionalize(Quantity::Deflection, ex.value(0, L), c); break;
            case 2: v = std::abs(nondimensionalize(Quantity::Slope, ex.value(1, 0.0), c)) * 1e3; break;
            case 3: v = std::abs(nondimensionalize(Quantity::Slope, ex.value(1, L), c)) * 1e3; break;
            case 4: v = std::abs(nondimensionalize(Quantity::Curvature, ex.value(2, L / 2), c)) * 1e3; break;
            case 5: v = std::abs(nondimensionalize(Quantity::TripleDeriv, ex.value(3, L / 2), c)) * 1e3; break;
            case 6: v = std::abs(nondimensionalize(Quantity::DoubleMoment, ex.force(ForceKind::Mbar, 0.0), c)) * 1e3; break;
            case 7: v = std::abs(nondimensionalize(Quantity::TripleMoment, ex.force(ForceKind::Mbbar, 0.0), c)) * 1e3; break;
        }
        exact.push_back(v);
    }
    t.add(tag.str() + "Exact", exact, "oracle");
}

void frequency_block(ReportTable& t, SupportKind kind, double g1, double g2) {
    BeamCase c = default_case(kind, g1, g2, LoadKind::Vibration);
    std::ostringstream tag;
    tag << "g1=" << g1 << ",g2=" << g2 << " ";
    for (int n : kTableNs) {
        ModalResult m = modal_report(c, n, 6);
        std::vector<double> row = m.frequencies;
        row.resize(6, std::nan(""));
        t.add(tag.str() + "N=" + std::to_string(n), row);
    }
    ScanResult s = exact_frequencies(kind, c, 6);
    std::vector<double> row = s.roots;
    row.resize(6, std::nan(""));
    t.add(tag.str() + "Analyt.", row, "oracle");
}

void buckling_block(ReportTable& t, const std::vector<SupportKind>& kinds) {
    for (int n : kTableNs) {
        std::vector<double> row;
        for (SupportKind k : kinds)
            for (auto [g1, g2] : {std::pair{kG1a, kG2a}, std::pair{kG1b, kG2b}}) {
                BeamCase c = default_case(k, g1, g2, LoadKind::Buckling);
                row.push_back(buckling_report(c, n).critical_load);
            }
        t.add("N=" + std::to_string(n), row);
    }
    std::vector<double> row;
    for (SupportKind k : kinds)
        for (auto [g1, g2] : {std::pair{kG1a, kG2a}, std::pair{kG1b, kG2b}}) {
            BeamCase c = default_case(k, g1, g2, LoadKind::Buckling);
            row.push_back(exact_buckling(k, c).roots.at(0));
        }
    t.add("Analytical", row, "oracle");
}

}  // namespace

ReportTable reproduce_table(int id) {
    ReportTable t;
    switch (id) {
        case 1:
            t.title = "Table 1: simply supported beam under a udl";
            t.columns = {"case", "w(L/2)", "w'(0)x1e3", "w''L(L/2)x1e3", "Dm(0)x1e3", "Tm(0)x1e3"};
            static_block(t, SupportKind::SimplySupported, kG1a, kG2a, {0, 2, 4, 6, 7});
            static_block(t, SupportKind::SimplySupported, kG1b, kG2b, {0, 2, 4, 6, 7});
            return t;
        case 2:
            t.title = "Table 2: clamped beam under a udl";
            t.columns = {"case", "w(L/2)", "w''L(L/2)x1e3", "Dm(0)x1e3", "Tm(0)x1e3"};
            static_block(t, SupportKind::Clamped, kG1a, kG2a, {0, 4, 6, 7});
            static_block(t, SupportKind::Clamped, kG1b, kG2b, {0, 4, 6, 7});
            return t;
        case 3:
            t.title = "Table 3: cantilever beam under a udl";
            t.columns = {"case", "w(L)", "w'(L)x1e3", "w''L(L/2)x1e3", "w'''L2(L/2)x1e3",
                         "Dm(0)x1e3", "Tm(0)x1e3"};
            static_block(t, SupportKind::Cantilever, kG1a, kG2a, {1, 3, 4, 5, 6, 7});
            static_block(t, SupportKind::Cantilever, kG1b, kG2b, {1, 3, 4, 5, 6, 7});
            return t;
        case 4: {
            t.title = "Table 4: simply supported beam along the length (N=15, g1/L=0.15, g2/L=0.1)";
            t.columns = {"x/L", "w", "w'_raw", "w''Lx1e3", "w'''L2x1e3"};
            BeamCase c = default_case(SupportKind::SimplySupported, kG1b, kG2b);
            StaticReport r = static_report(c, 15);
            ExactStatic ex(SupportKind::SimplySupported, c);
            for (size_t i = 0; i < r.stations.size(); ++i) {
                std::ostringstream lbl;
                lbl << std::fixed << std::setprecision(4) << r.stations[i] / c.props.length;
                t.add(lbl.str(), {r.w_nd[i], r.slope_raw[i], r.curvature_l[i] * 1e3,
                                  r.triple_l2[i] * 1e3});
                double x = r.stations[i];
                t.add(lbl.str(),
                      {nondimensionalize(Quantity::Deflection, ex.value(0, x), c),
                       nondimensionalize(Quantity::Slope, ex.value(1, x), c),
                       nondimensionalize(Quantity::Curvature, ex.value(2, x), c) * 1e3,
                       nondimensionalize(Quantity::TripleDeriv, ex.value(3, x), c) * 1e3},
                      "oracle");
            }
            return t;
        }
        case 5:
        case 6:
        case 7:
        case 8: {
            static const SupportKind kinds[] = {SupportKind::SimplySupported, SupportKind::Clamped,
                                                SupportKind::Cantilever, SupportKind::FreeFree};
            SupportKind k = kinds[id - 5];
            t.title = "Table " + std::to_string(id) + ": first six frequencies, " + to_string(k);
            t.columns = {"case", "w1", "w2", "w3", "w4", "w5", "w6"};
            frequency_block(t, k, kG1a, kG2a);
            frequency_block(t, k, kG1b, kG2b);
            return t;
        }
        case 9:
            t.title = "Table 9: buckling load, simply supported";
            t.columns = {"N", "g=(0.1,0.05)", "g=(0.15,0.1)"};
            buckling_block(t, {SupportKind::SimplySupported});
            return t;
        case 10:
            t.title = "Table 10: buckling load, clamped / cantilever / propped cantilever";
            t.columns = {"N", "clamped a", "clamped b", "cantilever a", "cantilever b",
                         "propped a", "propped b"};
            buckling_block(t, {SupportKind::Clamped, SupportKind::Cantilever,
                               SupportKind::ProppedCantilever});
            return t;
    }
    throw std::invalid_argument("reproduce_table: table id must be 1..10");
}

ReportTable convergence_table(const std::string& analysis, const BeamCase& c,
                              const std::vector<int>& n_list, bool with_oracle) {
    ReportTable t;
    t.title = "convergence: " + analysis + ", " + to_string(c.support);
    const bool tip = (c.support == SupportKind::Cantilever);
    if (analysis == "static") {
        t.columns = {"N", tip ? "w(L)" : "w(L/2)"};
        for (int n : n_list) {
            StaticReport r = static_report(c, n);
            t.add(std::to_string(n), {tip ? r.w_nd.back() : r.w_nd[(static_cast<size_t>(n) - 1) / 2]});
        }
        if (with_oracle) {
            ExactStatic ex(c.support, c);
            double x = tip ? c.props.length : c.props.length / 2;
            t.add("exact", {nondimensionalize(Quantity::Deflection, ex.value(0, x), c)}, "oracle");
        }
    } else if (analysis == "vibrate") {
        int modes = c.load.mode_count;
        t.columns = {"N"};
        for (int j = 1; j <= modes; ++j) t.columns.push_back("w" + std::to_string(j));
        for (int n : n_list) {
            ModalResult m = modal_report(c, n, modes);
            std::vector<double> row = m.frequencies;
            row.resize(static_cast<size_t>(modes), std::nan(""));
            t.add(std::to_string(n), row);
        }
        if (with_oracle) {
            ScanResult s = exact_frequencies(c.support, c, modes);
            std::vector<double> row = s.roots;
            row.resize(static_cast<size_t>(modes), std::nan(""));
            t.add("exact", row, "oracle");
        }
    } else if (analysis == "buckle") {
        t.columns = {"N", "Pcr"};
        for (int n : n_list)
            t.add(std::to_string(n), {buckling_report(c, n).critical_load});
        if (with_oracle)
            t.add("exact", {exact_buckling(c.support, c).roots.at(0)}, "oracle");
    } else {
        throw std::invalid_argument("convergence_table: unknown analysis " + analysis);
    }
    return t;
}

}  // namespace ssgbeam
