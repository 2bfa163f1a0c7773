#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartinc/io.hpp"

namespace cartinc {

/// One experiment per process invocation. Same config + same seed gives
/// byte-identical outputs, modulo the timestamp field.
struct ExperimentConfig {
    std::string command;  // gen | count | kst | bezout | partition | bounds |
                          // app:inversion | app:sumset | app:distance
    std::string in_path;
    std::string out_path;       // JSON report (stdout when empty)
    std::string csv_path;       // per-command CSV side output
    std::string trend_path;     // trend CSV, appended per app run
    std::string f_path, g_path;  // bezout inputs

    std::string set_kind = "arithmetic";
    std::vector<long long> n_values;
    std::uint64_t seed = 0;
    int gen_curves = 0;
    int gen_degree = 2;

    int k = 2;          // inversion richness threshold
    int s = 2, t = 2;   // kst parameters
    long long cap = 100'000'000;

    std::string r_mode = "auto";  // partition: "auto" or an integer
    long long m_rich = 1;         // M used by select_r in auto mode

    std::string formula;  // bounds: main | real | kst | general
    std::map<std::string, long long> params;
    std::optional<long long> observed;

    std::string m_value = "1";   // distance slope, GR grammar
    bool complex_field = false;  // distance: run over Q(i)

    bool emit_timestamp = true;  // tests turn this off for byte comparisons
};

/// Exit-code contract: 0 all invariants pass, 1 input error, 2 invariant
/// violation (K_{s,t} witness, failed richness, degenerate grid line, or a
/// blown complexity cap).
int run_experiment(const ExperimentConfig& config);

}  // namespace cartinc
