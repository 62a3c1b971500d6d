// Experiment runner CLI. Subcommands:
//   run         realize a set, run weak greedy, assemble widths, run the
//               selected bound checks, write CSV outputs
//   widths      width table only
//   lowerbound  the dyadic-blocks sqrt(n)-loss experiment in l_inf
//   lemma-fuzz  randomized matrix-inequality sweep
//   report      summarize a bounds.csv produced by `run`
// Exit codes: 0 ok, 1 bound-check failure, 2 config/argument error,
// 3 numerical failure.
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqgreedy/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"weak greedy / Kolmogorov width experiment runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;

    auto add_common = [&](CLI::App* sub, bool with_config) {
        if (with_config)
            sub->add_option("--config", config_path, "experiment config file")->required();
        sub->add_option("--out", out_dir, "output directory (default: SEQGREEDY_OUT or config)");
        sub->add_option("--jobs", jobs, "distance-sweep threads")->check(CLI::PositiveNumber);
        sub->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t v) { seed = v; seed_set = true; },
            "master seed override");
    };

    auto* run = app.add_subcommand("run", "full experiment from a config file");
    add_common(run, true);

    auto* widths = app.add_subcommand("widths", "width table for a config's set");
    add_common(widths, true);

    double alpha = 1.0;
    int levels = 5, trials = 16;
    auto* lower = app.add_subcommand("lowerbound", "sqrt(n)-loss experiment (dyadic, l_inf)");
    lower->add_option("--alpha", alpha, "block decay exponent (> 1/2)")->required();
    lower->add_option("--levels", levels, "table rows: n = 1..levels-1")->required();
    lower->add_option("--trials", trials, "random subspace draws per n");
    add_common(lower, false);

    int k_max = 8, draws = 1000;
    auto* fuzz = app.add_subcommand("lemma-fuzz", "randomized matrix-inequality sweep");
    fuzz->add_option("--k-max", k_max, "max matrix size");
    fuzz->add_option("--draws", draws, "instance count");
    add_common(fuzz, false);

    auto* report = app.add_subcommand("report", "summarize bounds.csv in --out");
    report->add_option("--out", out_dir, "output directory to summarize")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    seqgreedy::CommandOptions opt;
    if (seed_set) opt.seed_override = seed;
    if (!out_dir.empty()) opt.out_override = out_dir;
    opt.jobs = jobs;

    if (run->parsed()) return seqgreedy::cmd_run(config_path, opt);
    if (widths->parsed()) return seqgreedy::cmd_widths(config_path, opt);
    if (lower->parsed() || fuzz->parsed()) {
        if (!seed_set) {  // randomized commands need an explicit seed
            std::fprintf(stderr, "%s: --seed is required\n",
                         lower->parsed() ? "lowerbound" : "lemma-fuzz");
            return 2;
        }
        const std::string dir = seqgreedy::resolve_out_dir(
            out_dir.empty() ? std::nullopt : std::make_optional(out_dir), "out");
        if (lower->parsed()) {
            if (!(alpha > 0.5)) {
                std::fprintf(stderr, "lowerbound: alpha must exceed 1/2\n");
                return 2;
            }
            return seqgreedy::cmd_lowerbound(alpha, levels, trials, seed, dir, jobs);
        }
        return seqgreedy::cmd_lemma_fuzz(k_max, draws, seed, dir);
    }
    if (report->parsed()) return seqgreedy::cmd_report(out_dir);
    return 2;
}
