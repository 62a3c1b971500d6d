// Experiment commands behind the CLI subcommands. Each returns the process
// exit code: 0 success, 1 bound-check failure, 2 config/argument error,
// 3 numerical failure. All file outputs are deterministic for a fixed config
// and seed.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seqgreedy {

struct CommandOptions {
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> out_override;
    int jobs = 1;
};

int cmd_run(const std::string& config_path, const CommandOptions& opt);
int cmd_widths(const std::string& config_path, const CommandOptions& opt);

// One row of the sqrt(n)-loss experiment table: greedy sigma at N = 2^{n+1}
// against the random-subspace width bound at the same N.
struct LowerboundRow {
    int n = 0;
    int big_n = 0;
    double sigma = 0.0;
    double d_min = 0.0;
    double d_median = 0.0;
};

struct LowerboundTable {
    double alpha = 0.0;
    int levels = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<LowerboundRow> rows;
};

// Library-level driver for the experiment (used by the CLI and the
// acceptance suite): dyadic-blocks set in l_inf, greedy sigmas, and
// random-subspace width bounds for n = 1 .. levels-1.
LowerboundTable run_lowerbound_experiment(double alpha, int levels, int trials,
                                          std::uint64_t seed, int jobs = 1);

int cmd_lowerbound(double alpha, int levels, int trials, std::uint64_t seed,
                   const std::string& out_dir, int jobs);

int cmd_lemma_fuzz(int k_max, int draws, std::uint64_t seed, const std::string& out_dir);

int cmd_report(const std::string& out_dir);

// Default output directory resolution: --out flag, else SEQGREEDY_OUT, else
// the config's [output] dir (or "out" for config-less commands).
std::string resolve_out_dir(const std::optional<std::string>& flag_value,
                            const std::string& fallback);

}  // namespace seqgreedy
