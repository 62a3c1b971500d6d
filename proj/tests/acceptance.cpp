// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Each criterion pins its tolerances and runtime budget in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "seqgreedy/bounds.hpp"
#include "seqgreedy/commands.hpp"
#include "seqgreedy/config.hpp"
#include "seqgreedy/csv.hpp"
#include "seqgreedy/greedy.hpp"
#include "seqgreedy/rng.hpp"
#include "seqgreedy/sets.hpp"
#include "seqgreedy/widths.hpp"
#include "trace_audit.hpp"

using namespace seqgreedy;
using seqgreedy::testing::audit_trace;

namespace {

namespace fs = std::filesystem;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            detail = msg;
        }
    }
    void note(const std::string& msg) {
        if (ok && detail.empty()) detail = msg;
    }
};

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// --- shared batteries ---------------------------------------------------

std::vector<double> harmonic_x(int count, double alpha) {
    std::vector<double> x;
    for (int j = 0; j < count; ++j) x.push_back(std::pow(double(j + 1), -alpha));
    return x;
}

std::vector<double> exp_x(int count, double c0, double alpha) {
    std::vector<double> x;
    for (int j = 0; j < count; ++j) x.push_back(std::exp(-c0 * std::pow(double(j), alpha)));
    return x;
}

struct BatteryEntry {
    CompactSetSpec spec;
    double gamma = 1.0;
    std::string label;
};

std::vector<BatteryEntry> battery() {
    std::vector<BatteryEntry> out;
    out.push_back({DiagonalSpec{harmonic_x(64, 1.0)}, 1.0, "diagonal64"});
    out.push_back({make_p1p2_matrix(14, 1.0, 201), 1.0, "frommatrix_g1"});
    out.push_back({make_p1p2_matrix(14, 0.7, 202), 0.7, "frommatrix_g0.7"});
    out.push_back({make_p1p2_matrix(14, 0.5, 203), 0.5, "frommatrix_g0.5"});
    out.push_back({RandomBallSpec{4, 12, 101}, 1.0, "randomball_1"});
    out.push_back({RandomBallSpec{6, 16, 102}, 1.0, "randomball_2"});
    out.push_back({RandomBallSpec{8, 20, 103}, 1.0, "randomball_3"});
    out.push_back({RandomBallSpec{10, 20, 104}, 1.0, "randomball_4"});
    out.push_back({RandomBallSpec{10, 18, 105}, 1.0, "randomball_5"});
    return out;
}

GreedyTrace run_on(const CompactSet& set, double gamma,
                   SelectionPolicy pol = SelectionPolicy::Argmax) {
    WeakGreedyParams p;
    p.gamma = gamma;
    p.policy = pol;
    return run_weak_greedy(set, p);
}

WidthSequence widths_for(const CompactSet& set, const GreedyTrace& trace, int n_max) {
    std::set<WidthMethod> methods{WidthMethod::Known, WidthMethod::SigmaUpper};
    if (set.norm_kind.is_hilbert()) methods.insert(WidthMethod::Svd);
    return assemble_widths(set, n_max, methods, &trace);
}

void sweep_theorems(const GreedyTrace& trace, const WidthSequence& w, bool hilbert,
                    const std::string& label, Check& c, long& count) {
    const int last = int(trace.sigmas.size()) - 1;
    for (int k = 2; k <= 6; ++k) {
        for (int n = 0; n + k <= last; ++n) {
            for (int m = 1; m < k; ++m) {
                if (!w.upper_at(m)) continue;
                const BoundReport r =
                    hilbert ? theorem_hilbert_check(trace.sigmas, w, n, k, m, trace.gamma)
                            : theorem_banach_check(trace.sigmas, w, n, k, m, trace.gamma);
                ++count;
                if (!r.pass)
                    c.fail(label + ": (N=" + std::to_string(n) + ",K=" + std::to_string(k) +
                           ",m=" + std::to_string(m) + ") slack_log=" +
                           std::to_string(r.slack_log));
            }
        }
    }
}

// --- criteria -------------------------------------------------------------

Check criterion1() {
    Check c;
    const std::vector<double> x = harmonic_x(64, 1.0);
    for (const auto& k : {NormKind::hilbert(), NormKind::linf()}) {
        const CompactSet set = realize(DiagonalSpec{x}, k);
        const GreedyTrace t = run_on(set, 1.0);
        if (t.selected.size() != 64) {
            c.fail(k.label() + ": selected " + std::to_string(t.selected.size()) + " of 64");
            continue;
        }
        for (int j = 0; j < 64; ++j) {
            if (t.selected[std::size_t(j)] != j) c.fail(k.label() + ": out-of-order selection");
            const double err = std::abs(t.sigmas[std::size_t(j)] - x[std::size_t(j)]);
            if (err > 1e-12)
                c.fail(k.label() + ": |sigma_" + std::to_string(j) + " - x| = " +
                       std::to_string(err));
        }
    }
    c.note("both norms exact in order");
    return c;
}

Check criterion2() {
    Check c;
    Rng rng(derive_stream(2024, "acceptance_lemma"));
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        const BoundReport r = lemma1_check(random_lemma_instance(rng, 8));
        if (!r.pass) c.fail("draw " + std::to_string(i) + " failed");
        if (std::isfinite(r.slack_log)) {
            if (r.slack_log < -1e-10) c.fail("slack below -1e-10 at draw " + std::to_string(i));
            worst = std::min(worst, r.slack_log);
        }
    }
    LemmaInstance ident;
    ident.g.assign(5, std::vector<double>(5, 0.0));
    for (int i = 0; i < 5; ++i) ident.g[std::size_t(i)][std::size_t(i)] = 1.0;
    ident.w_basis = {unit_vector(5, 0), unit_vector(5, 1)};
    const BoundReport r = lemma1_check(ident);
    if (!r.pass || std::abs(r.slack_log) > 1e-10) c.fail("identity instance not an equality");
    c.note("1000 draws, worst slack_log = " + format_double(worst));
    return c;
}

Check criterion3(std::vector<GreedyTrace>& hilbert_traces) {
    Check c;
    long count = 0;
    for (const auto& e : battery()) {
        const CompactSet set = realize(e.spec, NormKind::hilbert());
        const GreedyTrace t = run_on(set, e.gamma,
                                     std::holds_alternative<FromMatrixSpec>(e.spec)
                                         ? SelectionPolicy::FirstAboveThreshold
                                         : SelectionPolicy::Argmax);
        const WidthSequence w = widths_for(set, t, int(t.sigmas.size()) - 1);
        sweep_theorems(t, w, /*hilbert=*/true, e.label, c, count);
        hilbert_traces.push_back(t);
    }
    c.note(std::to_string(count) + " (N,K,m) instances");
    return c;
}

Check criterion4(std::vector<GreedyTrace>& banach_traces) {
    Check c;
    long count = 0;
    for (const auto& k : {NormKind::linf(), NormKind::l1(), NormKind::lp(3.0)}) {
        for (const auto& e : battery()) {
            const CompactSet set = realize(e.spec, k);
            const GreedyTrace t = run_on(set, e.gamma);
            const WidthSequence w = widths_for(set, t, int(t.sigmas.size()) - 1);
            sweep_theorems(t, w, /*hilbert=*/false, e.label + "/" + k.label(), c, count);
            banach_traces.push_back(t);
        }
    }
    c.note(std::to_string(count) + " (N,K,m) instances over 3 norms");
    return c;
}

Check criterion5() {
    Check c;
    // (i): sigma_{2n} <= sqrt(2) gamma^{-1} sqrt(d_n) for n <= 32 on the
    // Hilbert battery at gamma in {1, 0.5}.
    for (const double gamma : {1.0, 0.5}) {
        for (const auto& e : battery()) {
            const CompactSet set = realize(e.spec, NormKind::hilbert());
            const GreedyTrace t = run_on(set, gamma);
            const WidthSequence w = widths_for(set, t, 32);
            RateParams rate;
            rate.gamma = gamma;
            const auto rs =
                corollary_checks(t.sigmas_padded(64), w, rate, CorollaryCheck::C1_i, 1, 32);
            for (const auto& r : rs)
                if (r.name == "c1_i_even" && !r.pass)
                    c.fail(e.label + " gamma=" + format_double(gamma) + " n=" +
                           std::to_string(r.n));
        }
    }

    // Rate-transfer forms with the stated exact constants on certified sets.
    struct RateCase {
        std::vector<double> x;
        double alpha;
        double c0;
        bool exponential;
        std::string label;
    };
    std::vector<RateCase> cases;
    cases.push_back({harmonic_x(64, 1.0), 1.0, 1.0, false, "poly_a1"});
    cases.push_back({harmonic_x(64, 2.0), 2.0, 1.0, false, "poly_a2"});
    cases.push_back({exp_x(64, 0.5, 0.5), 0.5, 0.5, true, "exp_a0.5"});
    cases.push_back({exp_x(64, 0.5, 1.0), 1.0, 0.5, true, "exp_a1"});
    for (const auto& rc : cases) {
        RateParams rate;
        rate.alpha = rc.alpha;
        rate.c_big0 = 1.0;
        rate.c_small0 = rc.c0;
        rate.gamma = 1.0;
        rate.beta = 0.25;

        const CompactSet hs = realize(DiagonalSpec{rc.x}, NormKind::hilbert());
        const GreedyTrace ht = run_on(hs, 1.0);
        const WidthSequence hw = widths_for(hs, ht, 32);
        const CompactSet bs = realize(DiagonalSpec{rc.x}, NormKind::linf());
        const GreedyTrace bt = run_on(bs, 1.0);
        const WidthSequence bw = widths_for(bs, bt, 32);

        const auto run_checks = [&](CorollaryCheck which, const GreedyTrace& t,
                                    const WidthSequence& w, const char* tag) {
            const auto rs = corollary_checks(t.sigmas_padded(64), w, rate, which, 1, 32);
            for (const auto& r : rs) {
                if (!r.hypothesis_met) c.fail(rc.label + "/" + tag + ": hypothesis not certified");
                if (r.name == "c2_iii_user") continue;
                if (!r.pass) c.fail(rc.label + "/" + tag + " fails at n=" + std::to_string(r.n));
            }
        };
        if (!rc.exponential) {
            run_checks(CorollaryCheck::C1_ii, ht, hw, "c1_ii");
            run_checks(CorollaryCheck::C2_ii, bt, bw, "c2_ii");
        } else {
            run_checks(CorollaryCheck::C1_iii, ht, hw, "c1_iii");
            run_checks(CorollaryCheck::C2_iii, bt, bw, "c2_iii");
        }
    }
    c.note("pair form on 9 sets x 2 gammas; rate forms on 4 certified families");
    return c;
}

Check criterion6(const std::vector<GreedyTrace>& hilbert_traces,
                 const std::vector<GreedyTrace>& banach_traces) {
    Check c;
    for (const auto& t : hilbert_traces) {
        const auto a = audit_trace(t);
        if (!a.ok) c.fail("hilbert trace: " + a.why);
    }
    for (const auto& t : banach_traces) {
        const auto a = audit_trace(t);
        if (!a.ok) c.fail(t.norm_kind.label() + " trace: " + a.why);
    }

    // Matrix round-trip on the three battery matrices.
    for (const auto& e : battery()) {
        const auto* fm = std::get_if<FromMatrixSpec>(&e.spec);
        if (!fm) continue;
        const CompactSet set = realize(e.spec, NormKind::hilbert());
        const GreedyTrace t = run_on(set, e.gamma, SelectionPolicy::FirstAboveThreshold);
        const std::size_t k = fm->a.size();
        if (t.selected.size() != k) {
            c.fail(e.label + ": round-trip selected " + std::to_string(t.selected.size()));
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (t.selected[i] != int(i)) c.fail(e.label + ": round-trip order broken");
            if (std::abs(t.sigmas[i] - fm->sigmas[i]) > 1e-10)
                c.fail(e.label + ": round-trip sigma mismatch at n=" + std::to_string(i));
            for (std::size_t j = 0; j <= i; ++j)
                if (std::abs(t.a[i][j] - fm->a[i][j]) > 1e-10)
                    c.fail(e.label + ": round-trip A mismatch at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
        }
    }
    c.note(std::to_string(hilbert_traces.size() + banach_traces.size()) +
           " traces audited; 3 round-trips");
    return c;
}

Check criterion7() {
    Check c;
    int increasing = 0;
    const int seeds = 16;
    for (int s = 1; s <= seeds; ++s) {
        const LowerboundTable t = run_lowerbound_experiment(1.0, 5, 16, std::uint64_t(s));
        bool inc = t.rows.size() == 4;
        for (std::size_t r = 1; r < t.rows.size(); ++r) {
            const double prev = t.rows[r - 1].sigma / t.rows[r - 1].d_median;
            const double cur = t.rows[r].sigma / t.rows[r].d_median;
            if (!(cur > prev)) inc = false;
        }
        if (inc) ++increasing;
    }
    if (increasing < 14)
        c.fail("ratio increasing in only " + std::to_string(increasing) + "/16 seed tables");
    c.note(std::to_string(increasing) + "/16 trial-median tables increasing");
    return c;
}

Check criterion8() {
    Check c;
    for (const auto& e : battery()) {
        if (!std::holds_alternative<RandomBallSpec>(e.spec)) continue;
        const CompactSet set = realize(e.spec, NormKind::hilbert());
        WeakGreedyParams ph;
        WeakGreedyParams pb;
        pb.mode = GreedyMode::Banach;
        const GreedyTrace th = run_weak_greedy(set, ph);
        const GreedyTrace tb = run_weak_greedy(set, pb);
        if (th.sigmas.size() != tb.sigmas.size()) {
            c.fail(e.label + ": trace length mismatch");
            continue;
        }
        for (std::size_t n = 0; n < th.sigmas.size(); ++n)
            if (std::abs(th.sigmas[n] - tb.sigmas[n]) > 1e-8)
                c.fail(e.label + ": sigma mismatch " +
                       format_double(std::abs(th.sigmas[n] - tb.sigmas[n])) + " at n=" +
                       std::to_string(n));
    }
    c.note("5 random-ball sets, both paths within 1e-8");
    return c;
}

Check criterion9() {
    Check c;
    const std::vector<std::string> configs{"diagonal_hilbert.ini",  "diagonal_linf.ini",
                                           "frommatrix_hilbert.ini", "randomball_l3.ini",
                                           "dyadic_linf.ini",        "parametric_hilbert.ini"};
    const fs::path base = fs::temp_directory_path() / "seqgreedy_acceptance_det";
    fs::remove_all(base);
    for (const auto& cfg : configs) {
        const std::string path = std::string(SEQGREEDY_CONFIG_DIR) + "/" + cfg;
        const fs::path d1 = base / (cfg + ".1"), d2 = base / (cfg + ".2");
        CommandOptions o1, o2;
        o1.out_override = d1.string();
        o2.out_override = d2.string();
        const int r1 = cmd_run(path, o1);
        const int r2 = cmd_run(path, o2);
        if (r1 != 0 || r2 != 0) {
            c.fail(cfg + ": exit codes " + std::to_string(r1) + "/" + std::to_string(r2));
            continue;
        }
        for (const char* f : {"sigmas.csv", "A.csv", "widths.csv", "bounds.csv", "summary.txt"}) {
            if (read_text_file((d1 / f).string()) != read_text_file((d2 / f).string()))
                c.fail(cfg + ": " + f + " differs between runs");
        }
    }
    c.note(std::to_string(configs.size()) + " bundled configs byte-identical");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double budget_s;
        std::function<Check()> fn;
    };

    std::vector<GreedyTrace> hilbert_traces, banach_traces;
    const std::vector<Entry> entries{
        {1, "diagonal exactness (l2, linf)", 1.0, criterion1},
        {2, "matrix-inequality fuzz (1000 draws, K <= 8)", 5.0, criterion2},
        {3, "Hilbert product-bound sweep (battery)", 30.0,
         [&] { return criterion3(hilbert_traces); }},
        {4, "Banach product-bound sweep (linf/l1/l3 battery)", 300.0,
         [&] { return criterion4(banach_traces); }},
        {5, "direct-comparison and rate-transfer checks (exact constants)", 120.0, criterion5},
        {6, "P1/P2/entry audits and matrix round-trip", 60.0,
         [&] { return criterion6(hilbert_traces, banach_traces); }},
        {7, "sqrt(n)-loss trend over 16 master seeds", 600.0, criterion7},
        {8, "cross-mode oracle (Banach path, Hilbert norm)", 60.0, criterion8},
        {9, "byte-identical outputs for bundled configs", 120.0, criterion9},
    };

    int failures = 0;
    for (const auto& e : entries) {
        const double t0 = now_seconds();
        Check c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.fail(std::string("exception: ") + ex.what());
        }
        const double dt = now_seconds() - t0;
        if (dt > e.budget_s) c.fail("runtime " + std::to_string(dt) + "s exceeds budget");
        std::printf("[%s] criterion %d (%.2fs): %s%s%s\n", c.ok ? "PASS" : "FAIL", e.id, dt,
                    e.name, c.detail.empty() ? "" : " -- ", c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
