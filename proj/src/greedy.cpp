#include "seqgreedy/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "seqgreedy/csv.hpp"

namespace seqgreedy {

SelectionPolicy policy_from_label(const std::string& s) {
    if (s == "argmax") return SelectionPolicy::Argmax;
    if (s == "first_above") return SelectionPolicy::FirstAboveThreshold;
    if (s == "minimal_above") return SelectionPolicy::MinimalAboveThreshold;
    throw std::invalid_argument("unknown selection policy: " + s);
}

std::string policy_label(SelectionPolicy p) {
    switch (p) {
        case SelectionPolicy::Argmax: return "argmax";
        case SelectionPolicy::FirstAboveThreshold: return "first_above";
        case SelectionPolicy::MinimalAboveThreshold: return "minimal_above";
    }
    return "?";
}

double GreedyTrace::sigma_at(int n) const {
    if (n < 0) throw std::out_of_range("sigma_at: negative index");
    if (std::size_t(n) < sigmas.size()) return sigmas[std::size_t(n)];
    if (terminated) return 0.0;
    throw std::out_of_range("sigma_at: index beyond an n_max-capped run");
}

std::vector<double> GreedyTrace::sigmas_padded(int n_to) const {
    std::vector<double> out;
    for (int n = 0; n <= n_to; ++n) out.push_back(sigma_at(n));
    return out;
}

namespace {

// Distance of every element to the current span; already-selected elements
// are exactly zero and are skipped. Thread partition does not affect results
// (each slot is written independently, reduction is index-ordered).
void sweep_distances(const CompactSet& f, const Subspace& v, const NormKind& k,
                     const std::vector<char>& is_selected, double tol, int jobs,
                     std::vector<double>& out) {
    const std::size_t m = f.size();
    out.assign(m, 0.0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (is_selected[i]) continue;
            out[i] = v.empty() ? norm(f.elements[i], k)
                               : dist(f.elements[i], v, k, tol).distance;
        }
    };
    if (jobs <= 1 || m < 2) {
        work(0, m);
        return;
    }
    const int t = std::min<int>(jobs, int(m));
    std::vector<std::thread> threads;
    const std::size_t chunk = (m + t - 1) / t;
    for (int j = 0; j < t; ++j) {
        const std::size_t lo = j * chunk, hi = std::min(m, lo + chunk);
        if (lo < hi) threads.emplace_back(work, lo, hi);
    }
    for (auto& th : threads) th.join();
}

int select_index(const std::vector<double>& dists, const std::vector<char>& is_selected,
                 double threshold, SelectionPolicy policy) {
    int pick = -1;
    for (std::size_t i = 0; i < dists.size(); ++i) {
        if (is_selected[i] || dists[i] < threshold) continue;
        switch (policy) {
            case SelectionPolicy::Argmax:
                if (pick < 0 || dists[i] > dists[std::size_t(pick)]) pick = int(i);
                break;
            case SelectionPolicy::FirstAboveThreshold:
                return int(i);
            case SelectionPolicy::MinimalAboveThreshold:
                if (pick < 0 || dists[i] < dists[std::size_t(pick)]) pick = int(i);
                break;
        }
    }
    return pick;
}

// Norming functional of the residual; for non-smooth norms, if it fails to
// annihilate the span, fall back to the LP dual certificate of the distance
// program (a norm-one annihilating functional attaining the distance).
Functional banach_functional(const DenseVector& f, const Subspace& v, const NormKind& k,
                             const ApproxResult& best, double tol, bool& approximate,
                             bool& recovered) {
    if (norm(best.residual, k) == 0.0) {
        // Beyond-termination selection (exact zero distance): the zero
        // functional matches the f_m := 0 continuation convention.
        return Functional{DenseVector(f.dim()), k.dual()};
    }
    Functional lam = norming_functional(best.residual, k);

    auto annihilation_gap = [&](const Functional& l) {
        double worst = 0.0;
        for (const auto& b : v.basis()) {
            const double scale = std::max(1.0, norm(b, k));
            worst = std::max(worst, std::abs(l(b)) / scale);
        }
        return worst;
    };

    if (v.empty() || annihilation_gap(lam) <= kAnnihilationTol) return lam;

    if (k.tag() == NormKind::Tag::L1 || k.tag() == NormKind::Tag::LInf) {
        const ApproxResult with_dual = dist(f, v, k, tol, /*want_dual=*/true);
        if (with_dual.dual_certificate.has_value()) {
            Functional rec{*with_dual.dual_certificate, k.dual()};
            // Orient so the functional attains +distance on f.
            if (rec(f) < 0.0)
                for (double& x : rec.coeffs.coords) x = -x;
            if (annihilation_gap(rec) <= kAnnihilationTol) {
                recovered = true;
                return rec;
            }
        }
    }
    approximate = true;
    return lam;
}

}  // namespace

GreedyTrace run_weak_greedy(const CompactSet& f, const WeakGreedyParams& params) {
    if (f.size() == 0) throw std::invalid_argument("run_weak_greedy: empty set");
    if (!(params.gamma > 0.0 && params.gamma <= 1.0))
        throw std::invalid_argument("run_weak_greedy: gamma outside (0, 1]");
    const int n_max = params.n_max > 0 ? params.n_max : int(f.size());
    if (n_max > int(f.size()))
        throw std::invalid_argument("run_weak_greedy: n_max exceeds |F|");

    const bool hilbert_mode =
        params.mode == GreedyMode::Hilbert ||
        (params.mode == GreedyMode::Auto && f.norm_kind.is_hilbert());
    if (hilbert_mode && !f.norm_kind.is_hilbert())
        throw std::invalid_argument("run_weak_greedy: Hilbert mode requires the Hilbert norm");

    GreedyTrace t;
    t.hilbert_mode = hilbert_mode;
    t.solver_tol = params.solver_tol;
    t.termination_eps = params.termination_eps;
    t.gamma = params.gamma;
    t.policy = params.policy;
    t.norm_kind = f.norm_kind;

    Subspace v(f.ambient_dim(), /*build_ortho=*/f.norm_kind.is_hilbert());
    std::vector<char> is_selected(f.size(), 0);
    std::vector<double> dists;
    // step -> ortho index produced at that step, or -1 (dependent selection)
    std::vector<int> step_pivot;

    while (true) {
        try {
            sweep_distances(f, v, f.norm_kind, is_selected, params.solver_tol, params.jobs,
                            dists);
        } catch (const std::exception& e) {
            throw std::runtime_error("run_weak_greedy: step " +
                                     std::to_string(t.selected.size()) + ": " + e.what());
        }
        double sigma = 0.0;
        for (double d : dists) sigma = std::max(sigma, d);
        t.sigmas.push_back(sigma);
        t.per_step_distances.push_back(dists);

        // termination_eps = 0 disables distance termination: the run continues
        // through zero-distance steps (dependent selections, zero diagonal in
        // A) with re-selection prevented by index exclusion.
        if (params.termination_eps > 0.0 && sigma <= params.termination_eps) {
            t.terminated = true;
            break;
        }
        const int pick = select_index(dists, is_selected, params.gamma * sigma, params.policy);
        if (pick < 0) {  // nothing selectable: every element is already in
            t.terminated = true;
            break;
        }

        const DenseVector& fe = f.elements[std::size_t(pick)];
        if (hilbert_mode) {
            GramSchmidtResult gs = v.append(fe);
            // Row of A: coefficients over the ortho vectors mapped to their
            // originating step columns; diagonal = residual norm.
            std::vector<double> row(t.selected.size() + 1, 0.0);
            for (std::size_t k = 0; k < gs.coeffs.size(); ++k) {
                for (std::size_t s = 0; s < step_pivot.size(); ++s)
                    if (step_pivot[s] == int(k)) row[s] = gs.coeffs[k];
            }
            row.back() = gs.vec.has_value() ? gs.residual_norm : 0.0;
            step_pivot.push_back(gs.vec.has_value() ? int(v.ortho().size()) - 1 : -1);
            t.a.push_back(std::move(row));
        } else {
            ApproxResult best;
            try {
                best = v.empty() ? ApproxResult{norm(fe, f.norm_kind), {}, fe, std::nullopt}
                                 : dist(fe, v, f.norm_kind, params.solver_tol);
                bool approx = false, recovered = false;
                Functional lam = banach_functional(fe, v, f.norm_kind, best,
                                                   params.solver_tol, approx, recovered);
                if (approx) t.functional_approximate = true;
                if (recovered) ++t.functional_recovered;
                t.functionals.push_back(std::move(lam));
            } catch (const std::exception& e) {
                throw std::runtime_error("run_weak_greedy: step " +
                                         std::to_string(t.selected.size()) + ": " + e.what());
            }
            v.append(fe);
        }

        t.selected.push_back(pick);
        is_selected[std::size_t(pick)] = 1;
        if (int(t.selected.size()) >= n_max) {
            t.terminated = int(t.selected.size()) == int(f.size());
            break;
        }
    }

    if (!hilbert_mode) {
        // A from the recorded functionals: a_ij = lambda_j(f_i) for j <= i;
        // entries above the diagonal audit the annihilation quality.
        for (std::size_t i = 0; i < t.selected.size(); ++i) {
            std::vector<double> row(i + 1, 0.0);
            const DenseVector& fi = f.elements[std::size_t(t.selected[i])];
            for (std::size_t j = 0; j <= i; ++j) row[j] = t.functionals[j](fi);
            t.a.push_back(std::move(row));
            for (std::size_t j = i + 1; j < t.selected.size(); ++j)
                t.max_upper_entry =
                    std::max(t.max_upper_entry, std::abs(t.functionals[j](fi)));
        }
        t.ortho.clear();
    } else {
        t.ortho = v.ortho();
    }
    return t;
}

const std::vector<std::vector<double>>& extract_a_hilbert(const GreedyTrace& t) {
    if (!t.hilbert_mode)
        throw std::invalid_argument("extract_a_hilbert: trace is not in Hilbert mode");
    return t.a;
}

const std::vector<std::vector<double>>& extract_a_banach(const GreedyTrace& t) {
    if (t.hilbert_mode)
        throw std::invalid_argument("extract_a_banach: trace is not in Banach mode");
    return t.a;
}

void write_sigmas_csv(const GreedyTrace& t, const std::string& path) {
    CsvWriter out({"n", "sigma_n"});
    for (std::size_t n = 0; n < t.sigmas.size(); ++n)
        out.row({format_int(long(n)), format_double(t.sigmas[n])});
    out.write(path);
}

void write_a_csv(const GreedyTrace& t, const std::string& path) {
    CsvWriter out({"i", "j", "a_ij"});
    for (std::size_t i = 0; i < t.a.size(); ++i)
        for (std::size_t j = 0; j < t.a[i].size(); ++j)
            out.row({format_int(long(i)), format_int(long(j)), format_double(t.a[i][j])});
    out.write(path);
}

std::string trace_summary(const GreedyTrace& t) {
    std::string s;
    s += "mode = " + std::string(t.hilbert_mode ? "hilbert" : "banach") + "\n";
    s += "norm = " + t.norm_kind.label() + "\n";
    s += "gamma = " + format_double(t.gamma) + "\n";
    s += "policy = " + policy_label(t.policy) + "\n";
    s += "solver_tol = " + format_double(t.solver_tol) + "\n";
    s += "termination_eps = " + format_double(t.termination_eps) + "\n";
    s += "steps = " + format_int(long(t.selected.size())) + "\n";
    s += "terminated = " + std::string(t.terminated ? "true" : "false") + "\n";
    s += "functional_approximate = " + std::string(t.functional_approximate ? "true" : "false") +
         "\n";
    s += "functional_recovered = " + format_int(t.functional_recovered) + "\n";
    s += "max_upper_entry = " + format_double(t.max_upper_entry) + "\n";
    s += "selected =";
    for (int i : t.selected) s += " " + format_int(i);
    s += "\n";
    return s;
}

}  // namespace seqgreedy
