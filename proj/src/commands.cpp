#include "seqgreedy/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "seqgreedy/bounds.hpp"
#include "seqgreedy/config.hpp"
#include "seqgreedy/csv.hpp"
#include "seqgreedy/greedy.hpp"
#include "seqgreedy/rng.hpp"
#include "seqgreedy/sets.hpp"
#include "seqgreedy/widths.hpp"

namespace seqgreedy {

namespace fs = std::filesystem;

std::string resolve_out_dir(const std::optional<std::string>& flag_value,
                            const std::string& fallback) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("SEQGREEDY_OUT")) {
        if (*env) return env;
    }
    return fallback;
}

namespace {

struct RunArtifacts {
    GreedyTrace trace;
    WidthSequence widths;
    std::vector<BoundReport> reports;
    int failures = 0;
    int unmet = 0;
};

void run_bound_checks(const ExperimentConfig& cfg, const GreedyTrace& trace,
                      const WidthSequence& widths, std::vector<BoundReport>& reports) {
    const auto& sig = trace.sigmas;
    const std::size_t first_new = reports.size();
    for (const auto& check : cfg.checks) {
        if (check == "theorem_hilbert" || check == "theorem_banach") {
            const bool hil = check == "theorem_hilbert";
            if (hil && !trace.hilbert_mode)
                throw std::runtime_error("theorem_hilbert check requires a Hilbert-mode trace");
            const int last = int(sig.size()) - 1;
            for (int k = 2; k <= cfg.sweep_k_max; ++k) {
                for (int n = 0; n + k <= last; ++n) {
                    for (int m = 1; m < k; ++m) {
                        if (!widths.upper_at(m)) continue;
                        reports.push_back(hil ? theorem_hilbert_check(sig, widths, n, k, m,
                                                                      trace.gamma)
                                              : theorem_banach_check(sig, widths, n, k, m,
                                                                     trace.gamma));
                    }
                }
            }
        } else {
            const CorollaryCheck which = corollary_from_label(check);
            int n_to = cfg.n_check_max;
            if (!trace.terminated)
                n_to = std::min(n_to, (int(sig.size()) - 1) / 2);
            if (n_to < 1) continue;
            const std::vector<double> padded = trace.sigmas_padded(2 * n_to);
            auto rs = corollary_checks(padded, widths, cfg.rate, which, 1, n_to);
            reports.insert(reports.end(), rs.begin(), rs.end());
        }
    }
    // Slack can only be audited against the accumulated numerical error of
    // the inputs, so each report carries the trace's solver tolerance.
    const std::string tol_note = "input_solver_tol=" + format_double(trace.solver_tol);
    for (std::size_t i = first_new; i < reports.size(); ++i) {
        auto& r = reports[i];
        r.notes = r.notes.empty() ? tol_note : r.notes + "; " + tol_note;
    }
}

RunArtifacts run_experiment(const ExperimentConfig& cfg, int jobs) {
    RunArtifacts art;
    const CompactSet set = realize(cfg.set_spec, cfg.norm_kind);

    WeakGreedyParams gp = cfg.greedy;
    gp.jobs = jobs;
    art.trace = run_weak_greedy(set, gp);

    const GreedyTrace* trace_for_widths =
        cfg.width_methods.count(WidthMethod::SigmaUpper) ? &art.trace : nullptr;
    art.widths =
        assemble_widths(set, cfg.width_n_max, cfg.width_methods, trace_for_widths,
                        cfg.brute_grid);

    run_bound_checks(cfg, art.trace, art.widths, art.reports);
    for (const auto& r : art.reports) {
        if (!r.hypothesis_met)
            ++art.unmet;
        else if (!r.pass)
            ++art.failures;
    }
    return art;
}

void write_run_outputs(const ExperimentConfig& cfg, const std::string& out_dir,
                       const RunArtifacts& art) {
    fs::create_directories(out_dir);
    write_sigmas_csv(art.trace, out_dir + "/sigmas.csv");
    write_a_csv(art.trace, out_dir + "/A.csv");
    write_widths_csv(art.widths, out_dir + "/widths.csv");
    write_bounds_csv(art.reports, out_dir + "/bounds.csv");
    if (cfg.export_elements)
        write_elements_csv(realize(cfg.set_spec, cfg.norm_kind), out_dir + "/elements.csv");
    if (cfg.reference_rates) {
        CsvWriter rates({"n", "name", "value"});
        for (int n = 1; n <= cfg.n_check_max; ++n) {
            for (const auto& pt : reference_rates(cfg.rate, n, art.widths.upper_at(n)))
                rates.row({format_int(n), pt.name, format_double(pt.value)});
        }
        rates.write(out_dir + "/rates.csv");
    }

    std::string s;
    s += "set = " + spec_kind_label(cfg.set_spec) + "\n";
    s += trace_summary(art.trace);
    s += "bound_reports = " + format_int(long(art.reports.size())) + "\n";
    s += "bound_failures = " + format_int(art.failures) + "\n";
    s += "hypothesis_unmet = " + format_int(art.unmet) + "\n";
    s += "status = " + std::string(art.failures ? "FAIL" : "PASS") + "\n";
    write_text_atomic(out_dir + "/summary.txt", s);
}

}  // namespace

int cmd_run(const std::string& config_path, const CommandOptions& opt) {
    ExperimentConfig cfg;
    try {
        cfg = ExperimentConfig::load(config_path, opt.seed_override);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    const std::string out_dir = resolve_out_dir(opt.out_override, cfg.out_dir);
    try {
        const RunArtifacts art = run_experiment(cfg, opt.jobs);
        write_run_outputs(cfg, out_dir, art);
        if (art.failures) {
            std::cerr << "bound-check failures: " << art.failures << "\n";
            return 1;
        }
        if (art.unmet)
            std::cerr << "note: " << art.unmet
                      << " checks reported hypothesis-unmet (not claim failures)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_widths(const std::string& config_path, const CommandOptions& opt) {
    ExperimentConfig cfg;
    try {
        cfg = ExperimentConfig::load(config_path, opt.seed_override);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    const std::string out_dir = resolve_out_dir(opt.out_override, cfg.out_dir);
    try {
        const CompactSet set = realize(cfg.set_spec, cfg.norm_kind);
        GreedyTrace trace;
        const GreedyTrace* tp = nullptr;
        if (cfg.width_methods.count(WidthMethod::SigmaUpper)) {
            WeakGreedyParams gp = cfg.greedy;
            gp.jobs = opt.jobs;
            trace = run_weak_greedy(set, gp);
            tp = &trace;
        }
        const WidthSequence w =
            assemble_widths(set, cfg.width_n_max, cfg.width_methods, tp, cfg.brute_grid);
        fs::create_directories(out_dir);
        write_widths_csv(w, out_dir + "/widths.csv");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

LowerboundTable run_lowerbound_experiment(double alpha, int levels, int trials,
                                          std::uint64_t seed, int jobs) {
    if (!(alpha > 0.5)) throw std::invalid_argument("lowerbound: alpha must exceed 1/2");
    if (levels < 2) throw std::invalid_argument("lowerbound: levels must be >= 2");
    if (trials < 1) throw std::invalid_argument("lowerbound: trials must be >= 1");

    // The width construction for n = levels-1 reaches dyadic block 2n, so the
    // realized truncation must extend at least that far; one spare block keeps
    // a nonzero tail beyond the covered range.
    const int set_levels = std::max(2 * (levels - 1), levels + 1);
    const CompactSet set =
        realize(DyadicBlocksSpec{alpha, set_levels}, NormKind::linf());

    WeakGreedyParams gp;
    gp.gamma = 1.0;
    gp.n_max = std::min<int>((1 << levels) + 1, int(set.size()));
    gp.policy = SelectionPolicy::Argmax;
    gp.jobs = jobs;
    const GreedyTrace trace = run_weak_greedy(set, gp);

    LowerboundTable table;
    table.alpha = alpha;
    table.levels = levels;
    table.trials = trials;
    table.seed = seed;
    for (int n = 1; n <= levels - 1; ++n) {
        const int big_n = 1 << (n + 1);
        const RandomWidthResult w = width_upper_random_subspace(
            set, n, trials, derive_stream(seed, "lowerbound_widths", std::uint64_t(n)));
        LowerboundRow row;
        row.n = n;
        row.big_n = big_n;
        row.sigma = trace.sigma_at(big_n);
        row.d_min = w.min_value;
        row.d_median = w.median_value;
        table.rows.push_back(row);
    }
    return table;
}

int cmd_lowerbound(double alpha, int levels, int trials, std::uint64_t seed,
                   const std::string& out_dir, int jobs) {
    try {
        if (!(alpha > 0.5) || levels < 2 || trials < 1) {
            std::cerr << "lowerbound: need alpha > 1/2, levels >= 2, trials >= 1\n";
            return 2;
        }
        const LowerboundTable t = run_lowerbound_experiment(alpha, levels, trials, seed, jobs);
        fs::create_directories(out_dir);
        CsvWriter out({"n", "N", "sigma_N", "d_min", "d_median", "ratio_min", "ratio_median",
                       "sqrt_N"});
        for (const auto& r : t.rows) {
            out.row({format_int(r.n), format_int(r.big_n), format_double(r.sigma),
                     format_double(r.d_min), format_double(r.d_median),
                     format_double(r.d_min > 0 ? r.sigma / r.d_min : 0.0),
                     format_double(r.d_median > 0 ? r.sigma / r.d_median : 0.0),
                     format_double(std::sqrt(double(r.big_n)))});
        }
        out.write(out_dir + "/lowerbound.csv");
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_lemma_fuzz(int k_max, int draws, std::uint64_t seed, const std::string& out_dir) {
    try {
        if (k_max < 2 || draws < 0) {
            std::cerr << "lemma-fuzz: need k_max >= 2 and draws >= 0\n";
            return 2;
        }
        fs::create_directories(out_dir);
        if (draws == 0) {
            std::cerr << "warning: draws = 0, vacuous pass\n";
            write_text_atomic(out_dir + "/lemma_worst.txt", "draws = 0\n");
            return 0;
        }
        Rng rng(derive_stream(seed, "lemma_fuzz"));
        int failures = 0;
        double worst_slack = std::numeric_limits<double>::infinity();
        BoundReport worst;
        int worst_draw = -1;
        for (int i = 0; i < draws; ++i) {
            const LemmaInstance inst = random_lemma_instance(rng, k_max);
            const BoundReport r = lemma1_check(inst);
            if (!r.pass) ++failures;
            if (std::isfinite(r.slack_log) && r.slack_log < worst_slack) {
                worst_slack = r.slack_log;
                worst = r;
                worst_draw = i;
            }
        }
        std::string s;
        s += "draws = " + format_int(draws) + "\n";
        s += "k_max = " + format_int(k_max) + "\n";
        s += "seed = " + format_int(static_cast<long long>(seed)) + "\n";
        s += "failures = " + format_int(failures) + "\n";
        s += "worst_draw = " + format_int(worst_draw) + "\n";
        s += "worst_K = " + format_int(worst.k) + "\n";
        s += "worst_m = " + format_int(worst.m) + "\n";
        s += "worst_slack_log = " + format_double(worst_slack) + "\n";
        write_text_atomic(out_dir + "/lemma_worst.txt", s);
        if (failures) {
            std::cerr << "lemma fuzz failures: " << failures << "\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_report(const std::string& out_dir) {
    const std::string path = out_dir + "/bounds.csv";
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::exception& e) {
        std::cerr << "report: " << e.what() << "\n";
        return 2;
    }
    std::map<std::string, std::array<int, 3>> tally;  // name -> {pass, fail, unmet}
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 10) continue;
        auto& t = tally[cells[0]];
        if (cells[9].rfind("hypothesis-unmet", 0) == 0)
            ++t[2];
        else if (cells[8] == "true")
            ++t[0];
        else
            ++t[1];
    }
    int failures = 0;
    for (const auto& [name, t] : tally) {
        std::cout << name << ": pass=" << t[0] << " fail=" << t[1] << " unmet=" << t[2] << "\n";
        failures += t[1];
    }
    return failures ? 1 : 0;
}

}  // namespace seqgreedy
