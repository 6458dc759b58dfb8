// Command-line front end: value queries, verification sweeps, conjecture
// scans, and figure-data emission. Machine output is deterministic; exact
// values serialize as "num/den" strings. Exit codes: 0 all checks pass
// (SKIP/DISCREPANCY allowed), 1 any FAIL or computation error, 2 bad
// arguments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpolya/bounds.hpp"
#include "lpolya/eulerian.hpp"
#include "lpolya/fsequence.hpp"
#include "lpolya/hessian.hpp"
#include "lpolya/jtable.hpp"
#include "lpolya/report.hpp"
#include "lpolya/sigma.hpp"

using namespace lpolya;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string command;
    long n = 0, r = 0, m = 0, l = 0, k = 0;
    long n_max = 200, m_max = 20, p_max = 100;
    double tol = 1e-8;
    double t = 0.0;
    std::string coords;
    std::string format = "text";
    std::string output;
    std::string which = "fig1";
    bool serial = false;
    bool report = false;
    bool ratios = false;
    bool quadrature = false;
    bool row = false;
};

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_out(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + cfg.output);
    os << payload;
}

int emit_report(const RunConfig& cfg, const VerificationReport& rep) {
    if (cfg.format == "json")
        write_out(cfg, to_json(rep));
    else if (cfg.format == "csv")
        write_out(cfg, to_csv(rep));
    else
        write_out(cfg, to_text(rep));
    return rep.any_fail() ? 1 : 0;
}

// Scalar results as a small key/value payload in the requested format.
int emit_values(const RunConfig& cfg, const KV& kv) {
    if (cfg.format == "json") {
        ordered_json j;
        for (const auto& [key, value] : kv) j[key] = value;
        write_out(cfg, j.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::string header, row;
        for (const auto& [key, value] : kv) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += key;
            row += value;
        }
        write_out(cfg, header + "\n" + row + "\n");
    } else {
        // Text mode prints just the primary value for single-value queries,
        // a key:value listing otherwise.
        if (kv.size() == 1) {
            write_out(cfg, kv[0].second + "\n");
        } else {
            std::string s;
            for (const auto& [key, value] : kv) s += key + ": " + value + "\n";
            write_out(cfg, s);
        }
    }
    return 0;
}

DirectionQ parse_coords(const std::string& text) {
    DirectionQ coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        coords.push_back(rat_parse(item));
    }
    if (coords.empty()) throw std::invalid_argument("sigma: empty coordinate list");
    return coords;
}

int cmd_jn(const RunConfig& cfg, JTable& table) {
    Rat value = jn(table, static_cast<int>(cfg.n), cfg.r);
    return emit_values(cfg, {{"jn", rat_str(value)}});
}

int cmd_eulerian(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    if (cfg.ratios) return emit_report(cfg, verify_eulerian_ratios(table, cfg.m_max, exec));
    if (cfg.row) {
        std::vector<Int> row = eulerian_row(table, static_cast<int>(cfg.m));
        KV kv;
        for (long l = 1; l <= cfg.m; ++l)
            kv.push_back({"A(" + std::to_string(cfg.m) + "," + std::to_string(l) + ")",
                          row[static_cast<std::size_t>(l - 1)].get_str()});
        return emit_values(cfg, kv);
    }
    Int value = eulerian(table, static_cast<int>(cfg.m), cfg.l);
    return emit_values(cfg, {{"eulerian", value.get_str()}});
}

int cmd_fm(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    if (cfg.report) {
        VerificationReport rep = verify_f_ratios(table, cfg.p_max, exec);
        rep.merge(verify_f_convexity(table, cfg.p_max, exec));
        rep.merge(logconvexity_scan_even(table, cfg.p_max, exec));
        return emit_report(cfg, rep);
    }
    FRecord rec = f_value(table, cfg.m);
    return emit_values(cfg, {{"m", std::to_string(rec.m)},
                             {"max_eulerian", rec.max_value.get_str()},
                             {"f", rat_str(rec.f)},
                             {"f_float", fmt_double(rat_double(rec.f))}});
}

int cmd_bounds(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    return emit_report(cfg, two_step_report(verify_two_step(table, cfg.n_max, exec)));
}

int cmd_central(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    return emit_report(cfg, verify_central(table, cfg.n_max, exec));
}

int cmd_pn(const RunConfig& cfg) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    return emit_report(cfg, pn_identities(cfg.n_max, exec));
}

int cmd_conjectures(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    VerificationReport rep = conjecture_scan(table, cfg.n_max, exec);
    rep.merge(logconvexity_scan_even(table, cfg.p_max, exec));
    return emit_report(cfg, rep);
}

int cmd_sigma(const RunConfig& cfg) {
    DirectionQ coords = parse_coords(cfg.coords);
    Rat exact = sigma_exact(coords);
    KV kv{{"sigma", rat_str(exact)}, {"sigma_float", fmt_double(rat_double(exact))}};
    if (cfg.quadrature) {
        DirectionF v;
        v.reserve(coords.size());
        for (const Rat& q : coords) v.push_back(rat_double(q));
        kv.push_back({"sigma_quadrature", fmt_double(sigma_quadrature(v, cfg.tol))});
    }
    return emit_values(cfg, kv);
}

int cmd_hessian(const RunConfig& cfg, JTable& table) {
    Exec exec = cfg.serial ? Exec::serial : Exec::parallel;
    if (cfg.report) return emit_report(cfg, verify_hessian(table, exec));
    HessianDiag h = hessian_diag_entries(table, cfg.k);
    return emit_values(cfg, {{"k", std::to_string(h.k)},
                             {"alpha", h.alpha.str()},
                             {"beta", h.beta.str()},
                             {"gamma", h.gamma.str()},
                             {"delta", h.delta.str()},
                             {"alpha_float", fmt_double(h.alpha.to_double())},
                             {"beta_float", fmt_double(h.beta.to_double())},
                             {"gamma_float", fmt_double(h.gamma.to_double())},
                             {"delta_float", fmt_double(h.delta.to_double())}});
}

int cmd_classify(const RunConfig& cfg, JTable& table) {
    Classification c = classify_diagonal(table, cfg.n, cfg.k);
    write_out(cfg, classification_json(c, cfg.n, cfg.k));
    return 0;
}

int cmd_hexagon(const RunConfig& cfg) {
    HexagonDerivatives d = hexagon_derivatives();
    return emit_values(cfg, {{"t", fmt_double(cfg.t)},
                             {"area", fmt_double(hexagon_area(cfg.t))},
                             {"a1", d.a1.str()},
                             {"a2", d.a2.str()},
                             {"a3", d.a3.str()},
                             {"a3_float", fmt_double(d.a3.to_double())}});
}

int cmd_figures(const RunConfig& cfg, JTable& table) {
    if (cfg.which == "fig1") {
        std::vector<Fig1Row> rows = figure1_rows(table, cfg.n_max);
        if (cfg.format == "json") {
            ordered_json root;
            root["rows"] = ordered_json::array();
            for (const Fig1Row& r : rows) {
                ordered_json j;
                j["n"] = r.n;
                j["ratio"] = rat_str(r.ratio);
                j["ratio_float"] = fmt_double(rat_double(r.ratio));
                j["lower_gap"] = rat_str(r.lower_gap);
                j["upper_gap"] = rat_str(r.upper_gap);
                j["conjectured_gap"] = rat_str(r.conjectured_gap);
                root["rows"].push_back(std::move(j));
            }
            write_out(cfg, root.dump(2) + "\n");
        } else {
            std::string out = "n,ratio,ratio_float,lower_gap,upper_gap,conjectured_gap\n";
            for (const Fig1Row& r : rows) {
                out += std::to_string(r.n) + "," + rat_str(r.ratio) + "," +
                       fmt_double(rat_double(r.ratio)) + "," + rat_str(r.lower_gap) + "," +
                       rat_str(r.upper_gap) + "," + rat_str(r.conjectured_gap) + "\n";
            }
            write_out(cfg, out);
        }
        return 0;
    }
    if (cfg.which == "fig2") {
        std::vector<Fig2Row> rows = figure2_rows(table, cfg.m_max);
        if (cfg.format == "json") {
            ordered_json root;
            root["rows"] = ordered_json::array();
            for (const Fig2Row& r : rows) {
                ordered_json j;
                j["m"] = r.m;
                j["parity"] = r.odd ? "odd" : "even";
                j["f_num"] = r.f.get_num().get_str();
                j["f_den"] = r.f.get_den().get_str();
                j["f_float"] = fmt_double(r.f_float);
                j["log_f"] = fmt_double(r.log_f);
                root["rows"].push_back(std::move(j));
            }
            write_out(cfg, root.dump(2) + "\n");
        } else {
            std::string out = "m,parity,f_num,f_den,f_float,log_f\n";
            for (const Fig2Row& r : rows) {
                out += std::to_string(r.m) + "," + (r.odd ? "odd" : "even") + "," +
                       r.f.get_num().get_str() + "," + r.f.get_den().get_str() + "," +
                       fmt_double(r.f_float) + "," + fmt_double(r.log_f) + "\n";
            }
            write_out(cfg, out);
        }
        return 0;
    }
    throw std::invalid_argument("figures: --which must be fig1 or fig2");
}

int run(const RunConfig& cfg) {
    JTable table;
    if (cfg.command == "jn") return cmd_jn(cfg, table);
    if (cfg.command == "eulerian") return cmd_eulerian(cfg, table);
    if (cfg.command == "fm") return cmd_fm(cfg, table);
    if (cfg.command == "bounds") return cmd_bounds(cfg, table);
    if (cfg.command == "central") return cmd_central(cfg, table);
    if (cfg.command == "pn") return cmd_pn(cfg);
    if (cfg.command == "sigma") return cmd_sigma(cfg);
    if (cfg.command == "hessian") return cmd_hessian(cfg, table);
    if (cfg.command == "classify") return cmd_classify(cfg, table);
    if (cfg.command == "hexagon") return cmd_hexagon(cfg);
    if (cfg.command == "conjectures") return cmd_conjectures(cfg, table);
    if (cfg.command == "figures") return cmd_figures(cfg, table);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact evaluation and verification of cube-section and "
                 "Eulerian-number inequalities"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--output", cfg.output, "write to file instead of stdout");
        sub->add_flag("--serial", cfg.serial, "run sweeps on the serial reference path");
    };

    CLI::App* jn_cmd = app.add_subcommand("jn", "exact J_n(r)");
    jn_cmd->add_option("--n", cfg.n, "order n >= 2")->required();
    jn_cmd->add_option("--r", cfg.r, "integer argument r");
    add_common(jn_cmd);

    CLI::App* eu = app.add_subcommand("eulerian", "Eulerian numbers and ratio sweep");
    eu->add_option("--m", cfg.m, "row index m >= 1");
    eu->add_option("--l", cfg.l, "column index l");
    eu->add_flag("--row", cfg.row, "print the full row A(m, 1..m)");
    eu->add_flag("--ratios", cfg.ratios, "run the consecutive-ratio sandwich sweep");
    eu->add_option("--m-max", cfg.m_max, "sweep bound for --ratios (default 60)");
    add_common(eu);

    CLI::App* fm = app.add_subcommand("fm", "normalized central Eulerian value f(m)");
    fm->add_option("--m", cfg.m, "index m >= 1");
    fm->add_flag("--report", cfg.report, "run the f-sequence verification sweeps");
    fm->add_option("--p-max", cfg.p_max, "sweep bound for --report");
    add_common(fm);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "two-step ratio sandwich sweep");
    bounds_cmd->add_option("--n-max", cfg.n_max, "sweep bound (default 200)");
    add_common(bounds_cmd);

    CLI::App* central = app.add_subcommand("central", "central-value claim sweep");
    central->add_option("--n-max", cfg.n_max, "sweep bound (default 200)");
    add_common(central);

    CLI::App* pn = app.add_subcommand("pn", "cubic-polynomial identity checks");
    pn->add_option("--n-max", cfg.n_max, "sweep bound (default 100)");
    add_common(pn);

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "central section value");
    sigma_cmd->add_option("--coords", cfg.coords, "comma-separated rational coordinates")
        ->required();
    sigma_cmd->add_flag("--quadrature", cfg.quadrature, "also evaluate by quadrature");
    sigma_cmd->add_option("--tol", cfg.tol, "quadrature tolerance (default 1e-8)");
    add_common(sigma_cmd);

    CLI::App* hess = app.add_subcommand("hessian", "exact Hessian entries / sweep");
    hess->add_option("--k", cfg.k, "diagonal order k >= 4");
    hess->add_flag("--report", cfg.report, "run the minor/sign verification sweep");
    add_common(hess);

    CLI::App* cls = app.add_subcommand("classify", "diagonal-direction classification");
    cls->add_option("--n", cfg.n, "ambient dimension n >= 4")->required();
    cls->add_option("--k", cfg.k, "diagonal order, 3 <= k <= n-1")->required();
    add_common(cls);

    CLI::App* hex = app.add_subcommand("hexagon", "rotating-hexagon area and derivatives");
    hex->add_option("--t", cfg.t, "rotation parameter in [-1, 1]");
    add_common(hex);

    CLI::App* conj = app.add_subcommand("conjectures", "conjecture and cited-claim scans");
    conj->add_option("--n-max", cfg.n_max, "central-scan bound (default 200)");
    conj->add_option("--p-max", cfg.p_max, "log-convexity scan bound (default 100)");
    add_common(conj);

    CLI::App* figs = app.add_subcommand("figures", "figure data emission");
    figs->add_option("--which", cfg.which, "fig1 or fig2")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    figs->add_option("--n-max", cfg.n_max, "fig1 row bound");
    figs->add_option("--m-max", cfg.m_max, "fig2 row bound (default 20)");
    add_common(figs);

    // Per-command defaults that differ from the struct initializers.
    eu->callback([&] {
        if (eu->count("--m-max") == 0) cfg.m_max = 60;
    });
    pn->callback([&] {
        if (pn->count("--n-max") == 0) cfg.n_max = 100;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return run(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
