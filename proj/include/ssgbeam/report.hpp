#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>
#include "ssgbeam/model.hpp"
#include "ssgbeam/solve.hpp"

namespace ssgbeam {

/// A labelled numeric table; text rendering mirrors the 4-decimal table
/// style, CSV keeps 10 significant digits.
struct ReportTable {
    std::string title;
    std::vector<std::string> columns;  // first column is the row label
    struct Row {
        std::string label;
        std::vector<double> values;
        std::string provenance;  // "dq", "oracle" or empty
    };
    std::vector<Row> rows;

    void add(std::string label, std::vector<double> values, std::string prov = "dq");
};

void write_text(const ReportTable& table, std::ostream& os);
void write_csv(const ReportTable& table, std::ostream& os);
void write_csv_file(const ReportTable& table, const std::string& path);

/// Station-wise static report for one case.
struct StaticReport {
    std::vector<double> stations;                       // x values (grid nodes)
    std::vector<double> w_nd, slope_raw, slope_wl;      // per station
    std::vector<double> curvature_l, triple_l2;         // per station
    double bm[2], dm[2], tm[2];                         // end forces, nondim
    bool basis_enriched = false;
};

StaticReport static_report(const BeamCase& c, int n_points);
ModalResult modal_report(const BeamCase& c, int n_points, int count);
BucklingResult buckling_report(const BeamCase& c, int n_points);

BeamCase default_case(SupportKind support, double g1, double g2,
                      LoadKind kind = LoadKind::Static);

/// Reproduction of one of the ten reference tables (convergence histories
/// with the analytical row appended).
ReportTable reproduce_table(int table_id);

/// One row per N plus the analytical row, for the requested analysis.
ReportTable convergence_table(const std::string& analysis, const BeamCase& c,
                              const std::vector<int>& n_list, bool with_oracle);

}  // namespace ssgbeam
