#include "cartinc/experiment.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "cartinc/apps.hpp"
#include "cartinc/bounds.hpp"
#include "cartinc/partition.hpp"

namespace cartinc {

using nlohmann::json;

namespace {

json rat_node(const Rational& r) {
    return {{"exact", rational_string(r)}, {"approx", decimal_string(r)}};
}

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit_report(const ExperimentConfig& cfg, json report) {
    if (cfg.emit_timestamp) report["timestamp"] = now_iso8601();
    std::string text = report.dump(2) + "\n";
    if (cfg.out_path.empty())
        std::cout << text;
    else
        write_file_atomic(cfg.out_path, text);
}

json bound_report_json(const BoundReport& rep) {
    json terms = json::array();
    for (const auto& t : rep.terms) {
        json node = rat_node(t.value);
        node["name"] = t.name;
        node["is_exact"] = t.exact;
        terms.push_back(node);
    }
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    json out{{"formula", rep.formula},
             {"params", params},
             {"terms", terms},
             {"dominant", rep.dominant},
             {"total", rat_node(rep.total())}};
    if (rep.observed) out["observed"] = *rep.observed;
    if (rep.ratio) out["ratio"] = rat_node(*rep.ratio);
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

std::vector<GaussianRational> app_point_set(const ExperimentConfig& cfg, long long n,
                                            bool zero_based) {
    SetKind kind = parse_set_kind(cfg.set_kind == "file" ? "arithmetic" : cfg.set_kind);
    if (cfg.set_kind == "file") {
        if (cfg.in_path.empty()) fail(Err::InvalidArgument, "--set file needs --in PATH");
        return parse_instance_file(cfg.in_path).points.A;
    }
    Instance inst = generate_instance(kind, static_cast<int>(n), cfg.seed);
    std::vector<GaussianRational> a = inst.points.A;
    if (zero_based && kind == SetKind::arithmetic)
        for (auto& v : a) v = v - GaussianRational(Rational(1));
    return a;
}

void append_trend_row(const ExperimentConfig& cfg, const std::string& app, long long n,
                      long long observed, const BoundReport& bound, long long incidences,
                      const Rational& app_ratio) {
    if (cfg.trend_path.empty()) return;
    bool fresh = !std::ifstream(cfg.trend_path).good();
    std::ofstream out(cfg.trend_path, std::ios::app);
    if (!out) fail(Err::IoError, "cannot append to '" + cfg.trend_path + "'");
    if (fresh) out << "app,n,observed,term1,term2,term3,incidence_ratio,app_ratio\n";
    Rational inc_ratio = round_sig(Rational(incidences) / bound.total());
    out << app << "," << n << "," << observed;
    for (const auto& t : bound.terms) out << "," << decimal_string(t.value);
    out << "," << decimal_string(inc_ratio) << "," << decimal_string(app_ratio) << "\n";
}

int run_gen(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty()) fail(Err::EmptyRange, "gen needs --n");
    Instance inst = generate_instance(parse_set_kind(cfg.set_kind),
                                      static_cast<int>(cfg.n_values.front()), cfg.seed,
                                      cfg.gen_curves, cfg.gen_degree);
    std::string text = instance_to_json_text(inst);
    if (cfg.out_path.empty())
        std::cout << text;
    else
        write_file_atomic(cfg.out_path, text);
    return 0;
}

int run_count(const ExperimentConfig& cfg) {
    if (cfg.in_path.empty()) fail(Err::InvalidArgument, "count needs --in PATH");
    Instance inst = parse_instance_file(cfg.in_path);
    auto graph = build_incidence_graph(inst.points, inst.curves);
    json per_curve = json::array();
    auto order = inst.curves.label_order();
    for (int c : order)
        per_curve.push_back({{"label", inst.curves[c].label},
                             {"count", graph.points_on_curve(c).size()}});
    emit_report(cfg, json{{"command", "count"},
                          {"instance", inst.name},
                          {"n_a", inst.points.A.size()},
                          {"n_b", inst.points.B.size()},
                          {"n_points", inst.points.point_count()},
                          {"n_curves", inst.curves.size()},
                          {"max_degree", inst.curves.max_degree()},
                          {"incidences", graph.edge_count()},
                          {"per_curve", per_curve}});
    if (!cfg.csv_path.empty()) write_file_atomic(cfg.csv_path, graph_to_csv(graph, inst));
    return 0;
}

int run_kst(const ExperimentConfig& cfg) {
    if (cfg.in_path.empty()) fail(Err::InvalidArgument, "kst needs --in PATH");
    Instance inst = parse_instance_file(cfg.in_path);
    auto graph = build_incidence_graph(inst.points, inst.curves);
    auto witness = verify_no_kst(graph, cfg.s, cfg.t, cfg.cap);
    json report{{"command", "kst"}, {"s", cfg.s}, {"t", cfg.t},
                {"pass", !witness.has_value()}};
    if (witness) {
        json pts = json::array(), curves = json::array();
        for (const auto& [ia, ib] : witness->points)
            pts.push_back({{"iA", ia},
                           {"iB", ib},
                           {"a", format_gaussian(inst.points.A[ia])},
                           {"b", format_gaussian(inst.points.B[ib])}});
        for (int c : witness->curves) curves.push_back(graph.labels()[c]);
        report["witness"] = {{"points", pts}, {"curves", curves}};
    }
    emit_report(cfg, std::move(report));
    return witness ? 2 : 0;
}

int run_bezout(const ExperimentConfig& cfg) {
    if (cfg.f_path.empty() || cfg.g_path.empty())
        fail(Err::InvalidArgument, "bezout needs --f and --g polynomial files");
    GaussianBiPoly f = poly_from_json_file(cfg.f_path);
    GaussianBiPoly g = poly_from_json_file(cfg.g_path);
    auto summary = bezout_check(f, g);
    json report{{"command", "bezout"},
                {"deg_f", f.degree()},
                {"deg_g", g.degree()},
                {"common_component", summary.common_component}};
    if (!summary.common_component) {
        report["distinct_x_bound"] = summary.distinct_x_bound;
        report["bezout_bound"] = f.degree() * g.degree();
        report["within_bezout_bound"] =
            summary.distinct_x_bound <= f.degree() * g.degree();
    }
    emit_report(cfg, std::move(report));
    return 0;
}

int run_partition(const ExperimentConfig& cfg) {
    if (cfg.in_path.empty()) fail(Err::InvalidArgument, "partition needs --in PATH");
    Instance inst = parse_instance_file(cfg.in_path);
    auto pts = inst.real_points();
    auto fam = inst.real_curves();
    if (fam.empty()) fail(Err::InvalidArgument, "partition needs at least one curve");

    json r_info;
    int r;
    if (cfg.r_mode == "auto") {
        auto sel = select_r(std::max(1, fam.max_degree()), cfg.m_rich, pts.point_count(),
                            static_cast<long long>(fam.size()),
                            static_cast<long long>(pts.A.size()));
        r = sel.r;
        r_info = {{"mode", "auto"},
                  {"lower_clamped", sel.lower_clamped},
                  {"upper_clamped", sel.upper_clamped}};
    } else {
        r = std::stoi(cfg.r_mode);
        r_info = {{"mode", "fixed"}};
    }
    r = static_cast<int>(std::min<long long>(r, pts.A.size()));
    r = std::max(r, 1);
    r_info["r"] = r;

    auto grid = make_grid(pts, r);
    auto crossings = gridline_crossings(fam, grid);
    int crossings_max = 0;
    for (const auto& row : crossings) crossings_max = std::max(crossings_max, row.count);

    auto graph = build_incidence_graph(pts, fam);
    std::vector<CellCount> cells;
    auto rep = decompose_incidences(graph, pts, grid, &cells);
    rep.crossings_per_line_max = crossings_max;

    json cuts_x = json::array(), cuts_y = json::array();
    for (const auto& c : grid.cuts_x) cuts_x.push_back(rational_string(c));
    for (const auto& c : grid.cuts_y) cuts_y.push_back(rational_string(c));
    emit_report(cfg, json{{"command", "partition"},
                          {"instance", inst.name},
                          {"r", r_info},
                          {"cuts_x", cuts_x},
                          {"cuts_y", cuts_y},
                          {"i1", rep.i1},
                          {"i2", rep.i2},
                          {"total", rep.total},
                          {"identity_ok", rep.i1 + rep.i2 == rep.total},
                          {"per_cell_max", rep.per_cell_max},
                          {"crossings_per_line_max", rep.crossings_per_line_max},
                          {"max_degree", fam.max_degree()}});
    if (!cfg.csv_path.empty()) {
        std::ostringstream os;
        os << "cellX,cellY,curve_label,count\n";
        for (const auto& c : cells)
            os << c.cell_x << "," << c.cell_y << "," << c.curve_label << "," << c.count
               << "\n";
        write_file_atomic(cfg.csv_path, os.str());
    }
    return 0;
}

long long need_param(const ExperimentConfig& cfg, const std::string& name) {
    auto it = cfg.params.find(name);
    if (it == cfg.params.end())
        fail(Err::InvalidArgument, "bounds formula '" + cfg.formula + "' needs --" + name);
    return it->second;
}

int run_bounds(const ExperimentConfig& cfg) {
    BoundReport rep;
    if (cfg.formula == "main")
        rep = bound_main(need_param(cfg, "d"), need_param(cfg, "M"), need_param(cfg, "nP"),
                         need_param(cfg, "nC"), cfg.observed);
    else if (cfg.formula == "real")
        rep = bound_real(need_param(cfg, "d"), need_param(cfg, "M"), need_param(cfg, "nP"),
                         need_param(cfg, "nC"), cfg.observed);
    else if (cfg.formula == "kst")
        rep = bound_kst(need_param(cfg, "s"), need_param(cfg, "t"), need_param(cfg, "nX"),
                        need_param(cfg, "nY"), cfg.observed);
    else if (cfg.formula == "general")
        rep = bound_general_st(need_param(cfg, "s"), need_param(cfg, "nP"),
                               need_param(cfg, "nC"), cfg.observed);
    else
        fail(Err::InvalidArgument, "unknown formula '" + cfg.formula + "'");
    json out = bound_report_json(rep);
    out["command"] = "bounds";
    emit_report(cfg, std::move(out));
    return 0;
}

int run_app(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty()) fail(Err::EmptyRange, "empty range: app needs --n values");
    const std::string app = cfg.command.substr(4);
    json runs = json::array();
    bool all_pass = true;

    for (long long n : cfg.n_values) {
        if (n < 1) fail(Err::InvalidArgument, "n must be >= 1");
        json node;
        if (app == "inversion") {
            auto A = app_point_set(cfg, n, false);
            auto rep = inversion_app(A, cfg.k, cfg.cap);
            auto bound = bound_main(2, 2, rep.n * rep.n, std::max(1LL, rep.map_count));
            node = {{"app", "inversion"},
                    {"n", rep.n},
                    {"k", rep.k},
                    {"maps", rep.map_count},
                    {"incidences", rep.incidence_total},
                    {"richness_pass", rep.richness_pass},
                    {"kst_pass", rep.kst_pass},
                    {"ratio_k3_n4", rat_node(rep.ratio_k3_n4)},
                    {"bound", bound_report_json(bound)}};
            all_pass = all_pass && rep.richness_pass && rep.kst_pass;
            append_trend_row(cfg, "inversion", rep.n, rep.map_count, bound,
                             rep.incidence_total, rep.ratio_k3_n4);
        } else if (app == "sumset") {
            auto A = app_point_set(cfg, n, false);
            auto rep = sumset_expander(A, cfg.cap);
            auto bound = bound_main(2, 2, rep.size_sum * rep.size_inv_sum,
                                    std::max(1LL, rep.n * rep.n));
            node = {{"app", "sumset"},
                    {"n", rep.n},
                    {"size_sum", rep.size_sum},
                    {"size_inv_sum", rep.size_inv_sum},
                    {"size_mixed", rep.size_mixed},
                    {"curves", rep.curves_checked},
                    {"incidences", rep.incidence_total},
                    {"richness_pass", rep.richness_pass},
                    {"kst_pass", rep.kst_pass},
                    {"ratio_mixed_n54", rat_node(rep.ratio_mixed_n54)},
                    {"ratio_product_n52", rat_node(rep.ratio_product_n52)},
                    {"bound", bound_report_json(bound)}};
            all_pass = all_pass && rep.richness_pass && rep.kst_pass;
            append_trend_row(cfg, "sumset", rep.n, rep.size_mixed, bound, rep.incidence_total,
                             rep.ratio_mixed_n54);
        } else if (app == "distance") {
            GaussianRational m = parse_gaussian(cfg.m_value);
            auto A = app_point_set(cfg, n, true);
            json dist_node;
            bool pass;
            long long observed, incidences;
            Rational app_ratio;
            if (cfg.complex_field) {
                auto rep = line_distance_set<GaussianRational>(A, A, m, cfg.cap);
                pass = rep.kst_pass;
                observed = rep.distance_count;
                incidences = rep.energy;
                app_ratio = rep.ratio_n43;
                dist_node = {{"app", "distance"},
                             {"field", "complex"},
                             {"n", rep.n},
                             {"m", format_gaussian(rep.slope)},
                             {"distances", rep.distance_count},
                             {"energy", rep.energy},
                             {"energy_floor", rat_node(rep.energy_floor)},
                             {"kst_pass", rep.kst_pass},
                             {"ratio_n43", rat_node(rep.ratio_n43)}};
            } else {
                if (!m.is_real())
                    fail(Err::InvalidArgument, "--m must be real unless --complex is given");
                std::vector<Rational> ar;
                for (const auto& v : A) {
                    if (!v.is_real())
                        fail(Err::InvalidArgument, "point set must be real without --complex");
                    ar.push_back(v.re);
                }
                auto rep = line_distance_set<Rational>(ar, ar, m.re, cfg.cap);
                pass = rep.kst_pass;
                observed = rep.distance_count;
                incidences = rep.energy;
                app_ratio = rep.ratio_n43;
                dist_node = {{"app", "distance"},
                             {"field", "real"},
                             {"n", rep.n},
                             {"m", rational_string(rep.slope)},
                             {"distances", rep.distance_count},
                             {"energy", rep.energy},
                             {"energy_floor", rat_node(rep.energy_floor)},
                             {"kst_pass", rep.kst_pass},
                             {"ratio_n43", rat_node(rep.ratio_n43)}};
            }
            auto bound = bound_main(2, 2, n * n, std::max(1LL, n * (n - 1)));
            dist_node["bound"] = bound_report_json(bound);
            node = std::move(dist_node);
            all_pass = all_pass && pass;
            append_trend_row(cfg, "distance", n, observed, bound, incidences, app_ratio);
        } else {
            fail(Err::InvalidArgument, "unknown app '" + app + "'");
        }
        runs.push_back(std::move(node));
    }
    emit_report(cfg, json{{"command", cfg.command}, {"runs", runs}, {"all_pass", all_pass}});
    return all_pass ? 0 : 2;
}

int classify_error(const WorkbenchError& e) {
    switch (e.code()) {
        case Err::DegenerateLine:
        case Err::ComplexityGuard:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
    try {
        if (cfg.command == "gen") return run_gen(cfg);
        if (cfg.command == "count") return run_count(cfg);
        if (cfg.command == "kst") return run_kst(cfg);
        if (cfg.command == "bezout") return run_bezout(cfg);
        if (cfg.command == "partition") return run_partition(cfg);
        if (cfg.command == "bounds") return run_bounds(cfg);
        if (cfg.command.rfind("app:", 0) == 0) return run_app(cfg);
        fail(Err::InvalidArgument, "unknown command '" + cfg.command + "'");
    } catch (const WorkbenchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cartinc
