// Command-line front end: static, free-vibration and buckling analyses of
// the second-strain-gradient beam element, convergence studies and the
// reference-table reproductions, as aligned text and CSV.
#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ssgbeam/oracle.hpp"
#include "ssgbeam/report.hpp"

using namespace ssgbeam;

namespace {

struct RunConfig {
    std::string bc = "ss";
    std::optional<double> g1_ratio, g2_ratio, g1_abs, g2_abs;
    int n = 21;
    std::vector<int> n_list;
    int modes = 6;
    double E = 3.0e6, I = 1.0 / 12000.0, m = 0.1, L = 1.0, q = 1.0;
    std::string oracle = "on";
    std::string csv_path;
    std::string config_path;
    std::string analysis = "static";  // for convergence
    int table_id = 1;

    BeamCase make_case(LoadKind kind) const {
        BeamCase c;
        c.support = support_from_string(bc);
        c.props.elastic_modulus = E;
        c.props.second_moment = I;
        c.props.mass_per_length = m;
        c.props.length = L;
        c.load.kind = kind;
        c.load.q = q;
        c.load.mode_count = modes;
        double g1v = g1_ratio ? *g1_ratio * L : g1_abs.value_or(0.1 * L);
        double g2v = g2_ratio ? *g2_ratio * L : g2_abs.value_or(0.05 * L);
        c.scales = {g1v, g2v};
        return c;
    }
    bool oracle_on() const { return oracle == "on"; }
};

struct SubOpts {
    CLI::App* cmd = nullptr;
    std::map<std::string, CLI::Option*> by_key;
};

SubOpts add_common(CLI::App* cmd, RunConfig& cfg) {
    SubOpts so;
    so.cmd = cmd;
    auto reg = [&](const std::string& key, CLI::Option* opt) {
        so.by_key[key] = opt;
        return opt;
    };
    reg("bc", cmd->add_option("--bc", cfg.bc,
                              "support: ss|clamped|cantilever|propped|free-free")
        ->check(CLI::IsMember({"ss", "clamped", "cantilever", "propped", "free-free"})));
    auto* g1r = reg("g1-ratio", cmd->add_option("--g1-ratio", cfg.g1_ratio, "g1 / L"));
    auto* g2r = reg("g2-ratio", cmd->add_option("--g2-ratio", cfg.g2_ratio, "g2 / L"));
    auto* g1a = reg("g1", cmd->add_option("--g1", cfg.g1_abs, "g1 (absolute)"));
    auto* g2a = reg("g2", cmd->add_option("--g2", cfg.g2_abs, "g2 (absolute)"));
    g1r->excludes(g1a);
    g2r->excludes(g2a);
    g1a->excludes(g1r);
    g2a->excludes(g2r);
    reg("n", cmd->add_option("--n", cfg.n, "grid points")->check(CLI::Range(5, 41)));
    reg("modes", cmd->add_option("--modes", cfg.modes, "mode count")->check(CLI::PositiveNumber));
    reg("E", cmd->add_option("--E", cfg.E, "Young's modulus"));
    reg("I", cmd->add_option("--I", cfg.I, "second moment of area"));
    reg("m", cmd->add_option("--m", cfg.m, "mass per unit length"));
    reg("L", cmd->add_option("--L", cfg.L, "length"));
    reg("q", cmd->add_option("--q", cfg.q, "uniform load"));
    reg("oracle", cmd->add_option("--oracle", cfg.oracle, "analytical cross-check on|off")
        ->check(CLI::IsMember({"on", "off"})));
    reg("csv", cmd->add_option("--csv", cfg.csv_path, "write the report as CSV"));
    cmd->add_option("--config", cfg.config_path, "key = value config file");
    return so;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
}

// plain `key = value` lines with # comments; CLI flags take precedence,
// unknown keys are rejected
void apply_config(const SubOpts& so, RunConfig& cfg) {
    if (cfg.config_path.empty()) return;
    std::ifstream f(cfg.config_path);
    if (!f) throw std::invalid_argument("config: cannot open " + cfg.config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        auto it = so.by_key.find(key);
        bool known = it != so.by_key.end();
        bool extra_ok = false;
        if (!known) {
            // subcommand-specific keys handled below
            extra_ok = (key == "analysis" || key == "n-list" || key == "table-id");
            if (!extra_ok)
                throw std::invalid_argument("config: unknown key '" + key + "'");
        }
        if (known && it->second->count() > 0) continue;  // flag wins
        if (key == "bc") cfg.bc = val;
        else if (key == "g1-ratio") cfg.g1_ratio = std::stod(val);
        else if (key == "g2-ratio") cfg.g2_ratio = std::stod(val);
        else if (key == "g1") cfg.g1_abs = std::stod(val);
        else if (key == "g2") cfg.g2_abs = std::stod(val);
        else if (key == "n") cfg.n = std::stoi(val);
        else if (key == "modes") cfg.modes = std::stoi(val);
        else if (key == "E") cfg.E = std::stod(val);
        else if (key == "I") cfg.I = std::stod(val);
        else if (key == "m") cfg.m = std::stod(val);
        else if (key == "L") cfg.L = std::stod(val);
        else if (key == "q") cfg.q = std::stod(val);
        else if (key == "oracle") cfg.oracle = val;
        else if (key == "csv") cfg.csv_path = val;
        else if (key == "analysis") cfg.analysis = val;
        else if (key == "table-id") cfg.table_id = std::stoi(val);
        else if (key == "n-list") {
            cfg.n_list.clear();
            std::istringstream ss(val);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.n_list.push_back(std::stoi(trim(tok)));
        }
    }
    if (cfg.g1_ratio && cfg.g1_abs)
        throw std::invalid_argument("config: g1 and g1-ratio are mutually exclusive");
    if (cfg.g2_ratio && cfg.g2_abs)
        throw std::invalid_argument("config: g2 and g2-ratio are mutually exclusive");
}

int classify_error(const std::string& what) {
    if (what.rfind("assemble:", 0) == 0) return 3;
    if (what.rfind("static_roots:", 0) == 0 || what.rfind("ExactStatic:", 0) == 0 ||
        what.rfind("exact_", 0) == 0 || what.rfind("vibration_char_roots:", 0) == 0)
        return 5;
    if (what.rfind("solve", 0) == 0 || what.rfind("eigen_spectrum:", 0) == 0 ||
        what.rfind("buckling", 0) == 0 || what.rfind("condense:", 0) == 0)
        return 4;
    return 2;
}

void emit(const ReportTable& t, const RunConfig& cfg) {
    write_text(t, std::cout);
    if (!cfg.csv_path.empty()) write_csv_file(t, cfg.csv_path);
}

int run_static(const RunConfig& cfg) {
    BeamCase c = cfg.make_case(LoadKind::Static);
    bool oracle_possible = c.support != SupportKind::ProppedCantilever &&
                           c.support != SupportKind::FreeFree;
    if (cfg.oracle_on() && oracle_possible && !c.scales.oracle_eligible())
        throw std::invalid_argument(
            "config: length scales ineligible for the static oracle "
            "(need g1 > sqrt(2) g2); pass --oracle off for the DQ-only run");
    StaticReport r = static_report(c, cfg.n);
    ReportTable t;
    t.title = "static " + to_string(c.support) + " N=" + std::to_string(cfg.n) +
              (r.basis_enriched ? " [layer-enriched basis]" : "");
    t.columns = {"x", "w_nd", "slope_raw", "slope_wL", "w''L", "w'''L^2"};
    for (size_t i = 0; i < r.stations.size(); ++i) {
        std::ostringstream lbl;
        lbl << std::setprecision(6) << r.stations[i];
        t.add(lbl.str(), {r.w_nd[i], r.slope_raw[i], r.slope_wl[i], r.curvature_l[i],
                          r.triple_l2[i]});
    }
    t.add("Bm(0)/Bm(L)", {r.bm[0], r.bm[1]});
    t.add("Dm(0)/Dm(L)", {r.dm[0], r.dm[1]});
    t.add("Tm(0)/Tm(L)", {r.tm[0], r.tm[1]});
    if (cfg.oracle_on() && oracle_possible) {
        ExactStatic ex(c.support, c);
        for (size_t i = 0; i < r.stations.size(); ++i) {
            double x = r.stations[i];
            std::ostringstream lbl;
            lbl << std::setprecision(6) << x;
            t.add(lbl.str(),
                  {nondimensionalize(Quantity::Deflection, ex.value(0, x), c),
                   nondimensionalize(Quantity::Slope, ex.value(1, x), c),
                   nondimensionalize(Quantity::SlopeTimesL, ex.value(1, x), c),
                   nondimensionalize(Quantity::Curvature, ex.value(2, x), c),
                   nondimensionalize(Quantity::TripleDeriv, ex.value(3, x), c)},
                  "oracle");
        }
    }
    emit(t, cfg);
    return 0;
}

int run_vibrate(const RunConfig& cfg) {
    BeamCase c = cfg.make_case(LoadKind::Vibration);
    ModalResult m = modal_report(c, cfg.n, cfg.modes);
    ReportTable t;
    t.title = "frequencies " + to_string(c.support) + " N=" + std::to_string(cfg.n) +
              " (discarded rigid modes: " + std::to_string(m.discarded_count) + ")";
    t.columns = {"mode", "omega_nd"};
    for (size_t i = 0; i < m.frequencies.size(); ++i)
        t.add(std::to_string(i + 1), {m.frequencies[i]});
    if (cfg.oracle_on()) {
        ScanResult s = exact_frequencies(c.support, c, cfg.modes);
        for (size_t i = 0; i < s.roots.size(); ++i)
            t.add(std::to_string(i + 1), {s.roots[i]}, "oracle");
    }
    emit(t, cfg);
    return 0;
}

int run_buckle(const RunConfig& cfg) {
    BeamCase c = cfg.make_case(LoadKind::Buckling);
    BucklingResult b = buckling_report(c, cfg.n);
    ReportTable t;
    t.title = "buckling " + to_string(c.support) + " N=" + std::to_string(cfg.n);
    t.columns = {"quantity", "P_nd"};
    t.add("Pcr", {b.critical_load});
    if (cfg.oracle_on())
        t.add("Pcr", {exact_buckling(c.support, c).roots.at(0)}, "oracle");
    emit(t, cfg);
    return 0;
}

int run_convergence(const RunConfig& cfg) {
    LoadKind kind = cfg.analysis == "vibrate"  ? LoadKind::Vibration
                    : cfg.analysis == "buckle" ? LoadKind::Buckling
                                               : LoadKind::Static;
    BeamCase c = cfg.make_case(kind);
    std::vector<int> ns = cfg.n_list.empty()
                              ? std::vector<int>{5, 7, 9, 11, 13, 15, 17, 19, 21}
                              : cfg.n_list;
    ReportTable t = convergence_table(cfg.analysis, c, ns, cfg.oracle_on());
    emit(t, cfg);
    return 0;
}

int run_table(const RunConfig& cfg) {
    ReportTable t = reproduce_table(cfg.table_id);
    emit(t, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second strain gradient Euler-Bernoulli beam: DQ element + analytical oracles"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* c_static = app.add_subcommand("static", "static deflection under a uniform load");
    auto* c_vib = app.add_subcommand("vibrate", "natural frequencies");
    auto* c_buck = app.add_subcommand("buckle", "critical buckling load");
    auto* c_conv = app.add_subcommand("convergence", "one row per N plus the analytical row");
    auto* c_tab = app.add_subcommand("table", "reproduce a reference table (1..10)");
    std::vector<SubOpts> opts;
    for (auto* cmd : {c_static, c_vib, c_buck, c_conv, c_tab})
        opts.push_back(add_common(cmd, cfg));
    opts[3].by_key["analysis"] =
        c_conv->add_option("--analysis", cfg.analysis, "static|vibrate|buckle")
            ->check(CLI::IsMember({"static", "vibrate", "buckle"}));
    opts[3].by_key["n-list"] =
        c_conv->add_option("--n-list", cfg.n_list, "comma separated list of N")->delimiter(',');
    opts[4].by_key["table-id"] =
        c_tab->add_option("--table-id", cfg.table_id, "table number 1..10")->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* active[] = {c_static, c_vib, c_buck, c_conv, c_tab};
        for (size_t i = 0; i < 5; ++i)
            if (app.got_subcommand(active[i])) apply_config(opts[i], cfg);
        if (app.got_subcommand(c_static)) return run_static(cfg);
        if (app.got_subcommand(c_vib)) return run_vibrate(cfg);
        if (app.got_subcommand(c_buck)) return run_buckle(cfg);
        if (app.got_subcommand(c_conv)) return run_convergence(cfg);
        if (app.got_subcommand(c_tab)) return run_table(cfg);
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.rfind("cannot open for writing", 0) == 0 ||
            what.rfind("write failed", 0) == 0)
            return 6;
        return classify_error(what);
    }
    return 2;
}
