// Command-line front end: exact incidence counting, K_{s,t} checks, Bezout
// summaries, grid partitions, bound evaluation and the three applications.
// Exit codes: 0 all checks pass, 1 input error, 2 invariant violation.

#include "CLI11.hpp"

#include "cartinc/experiment.hpp"

using cartinc::ExperimentConfig;

int main(int argc, char** argv) {
    CLI::App cli{"cartinc: exact incidence workbench for Cartesian-product point sets"};
    cli.require_subcommand(1);

    ExperimentConfig cfg;
    long long observed_flag = -1;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--in", cfg.in_path, "input instance JSON");
        cmd->add_option("--out", cfg.out_path, "output report JSON (stdout when omitted)");
    };

    auto* gen = cli.add_subcommand("gen", "generate an instance file");
    gen->add_option("--kind", cfg.set_kind, "arithmetic|geometric|random")
        ->default_val("arithmetic");
    gen->add_option("--n", cfg.n_values, "set size")->required();
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--curves", cfg.gen_curves, "number of curves to generate");
    gen->add_option("--degree", cfg.gen_degree, "max curve degree")->default_val(2);
    gen->add_option("--out", cfg.out_path, "output instance path");
    gen->callback([&] { cfg.command = "gen"; });

    auto* incidence = cli.add_subcommand("incidence", "incidence graph commands");
    incidence->require_subcommand(1);
    auto* count = incidence->add_subcommand("count", "count exact incidences");
    add_io(count);
    count->add_option("--csv", cfg.csv_path, "edge CSV output path");
    count->callback([&] { cfg.command = "count"; });

    auto* kst = incidence->add_subcommand("kst", "search for a K_{s,t}");
    add_io(kst);
    kst->add_option("--s", cfg.s, "points side")->required();
    kst->add_option("--t", cfg.t, "curves side")->required();
    kst->add_option("--cap", cfg.cap, "pair-test cap");
    kst->callback([&] { cfg.command = "kst"; });

    auto* bezout = cli.add_subcommand("bezout", "common components and intersection bound");
    bezout->add_option("--f", cfg.f_path, "first polynomial JSON")->required();
    bezout->add_option("--g", cfg.g_path, "second polynomial JSON")->required();
    bezout->add_option("--out", cfg.out_path, "output report JSON");
    bezout->callback([&] { cfg.command = "bezout"; });

    auto* partition = cli.add_subcommand("partition", "grid partition commands");
    partition->require_subcommand(1);
    auto* prun = partition->add_subcommand("run", "I1/I2 decomposition and crossings");
    add_io(prun);
    prun->add_option("--r", cfg.r_mode, "auto or an integer")->default_val("auto");
    prun->add_option("--M", cfg.m_rich, "richness bound used by auto r");
    prun->add_option("--cells", cfg.csv_path, "per-cell CSV output path");
    prun->callback([&] { cfg.command = "partition"; });

    auto* bounds = cli.add_subcommand("bounds", "bound evaluators");
    bounds->require_subcommand(1);
    auto* beval = bounds->add_subcommand("eval", "evaluate a bound formula");
    beval->add_option("--formula", cfg.formula, "main|real|kst|general")->required();
    long long p_d = 0, p_m = 0, p_np = 0, p_nc = 0, p_s = 0, p_t = 0, p_nx = 0, p_ny = 0;
    beval->add_option("--d", p_d, "curve degree");
    beval->add_option("--M", p_m, "two-point curve bound");
    beval->add_option("--nP", p_np, "number of points");
    beval->add_option("--nC", p_nc, "number of curves");
    beval->add_option("--s", p_s, "K_{s,t} s");
    beval->add_option("--t", p_t, "K_{s,t} t");
    beval->add_option("--nX", p_nx, "bipartite side X");
    beval->add_option("--nY", p_ny, "bipartite side Y");
    beval->add_option("--observed", observed_flag, "observed incidence count");
    beval->add_option("--out", cfg.out_path, "output report JSON");
    beval->callback([&] {
        cfg.command = "bounds";
        auto put = [&](const char* name, long long v) {
            if (beval->get_option(std::string("--") + name)->count()) cfg.params[name] = v;
        };
        put("d", p_d);
        put("M", p_m);
        put("nP", p_np);
        put("nC", p_nc);
        put("s", p_s);
        put("t", p_t);
        put("nX", p_nx);
        put("nY", p_ny);
    });

    auto* app = cli.add_subcommand("app", "rich-transformation, sumset and distance applications");
    app->require_subcommand(1);
    auto add_app_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n_values, "set sizes (repeatable)");
        cmd->add_option("--set", cfg.set_kind, "arithmetic|geometric|random|file")
            ->default_val("arithmetic");
        cmd->add_option("--in", cfg.in_path, "instance file when --set file");
        cmd->add_option("--seed", cfg.seed, "seed for random sets");
        cmd->add_option("--out", cfg.out_path, "output report JSON");
        cmd->add_option("--trend", cfg.trend_path, "trend CSV to append to");
        cmd->add_option("--cap", cfg.cap, "pair-test cap");
    };
    auto* inv = app->add_subcommand("inversion", "rich inversion transformations");
    add_app_common(inv);
    inv->add_option("--k", cfg.k, "richness threshold")->default_val(2);
    inv->callback([&] { cfg.command = "app:inversion"; });

    auto* sumset = app->add_subcommand("sumset", "sum sets of A and 1/A");
    add_app_common(sumset);
    sumset->callback([&] { cfg.command = "app:sumset"; });

    auto* distance = app->add_subcommand("distance", "distances between points on two lines");
    add_app_common(distance);
    distance->add_option("--m", cfg.m_value, "slope parameter (GR grammar)")->default_val("1");
    distance->add_flag("--complex", cfg.complex_field, "run over Q(i)");
    distance->callback([&] { cfg.command = "app:distance"; });

    CLI11_PARSE(cli, argc, argv);
    if (observed_flag >= 0) cfg.observed = observed_flag;
    return cartinc::run_experiment(cfg);
}
