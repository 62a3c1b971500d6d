#include "seqgreedy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqgreedy/csv.hpp"
#include "seqgreedy/rng.hpp"

namespace seqgreedy {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_or_neginf(double x) { return x > 0.0 ? std::log(x) : -kInf; }

void require_sigma_range(const std::vector<double>& sigmas, int hi, const char* what) {
    if (hi < 0 || std::size_t(hi) >= sigmas.size())
        throw std::invalid_argument(std::string(what) + ": sigma index " + std::to_string(hi) +
                                    " out of range");
}

double upper_or_throw(const WidthSequence& w, int m, const char* what) {
    auto u = w.upper_at(m);
    if (!u)
        throw std::invalid_argument(std::string(what) + ": no width upper bound at m=" +
                                    std::to_string(m));
    return *u;
}
}  // namespace

BoundReport make_report(std::string name, double lhs_log, double rhs_log, double tol_rel,
                        std::string notes) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs_log = lhs_log;
    r.rhs_log = rhs_log;
    if (lhs_log == -kInf) {
        r.slack_log = kInf;
        r.pass = true;
    } else if (rhs_log == -kInf) {
        r.slack_log = -kInf;
        r.pass = false;
    } else {
        r.slack_log = rhs_log - lhs_log;
        r.pass = lhs_log <= rhs_log + std::log1p(tol_rel);
    }
    r.notes = std::move(notes);
    return r;
}

BoundReport lemma1_check(const LemmaInstance& inst, double tol_rel) {
    const std::size_t k = inst.g.size();
    const std::size_t m = inst.w_basis.size();
    if (k < 2) throw std::invalid_argument("lemma1_check: K must be >= 2");
    if (m < 1 || m >= k) throw std::invalid_argument("lemma1_check: need 1 <= m < K");
    for (std::size_t i = 0; i < k; ++i) {
        if (inst.g[i].size() != k) throw std::invalid_argument("lemma1_check: G not K x K");
        for (std::size_t j = i + 1; j < k; ++j)
            if (inst.g[i][j] != 0.0)
                throw std::invalid_argument("lemma1_check: G not lower triangular");
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (inst.w_basis[a].dim() != k)
            throw std::invalid_argument("lemma1_check: W basis dimension mismatch");
        for (std::size_t b = 0; b <= a; ++b) {
            const double ip = inner(inst.w_basis[a], inst.w_basis[b]);
            const double want = a == b ? 1.0 : 0.0;
            if (std::abs(ip - want) > 1e-12)
                throw std::invalid_argument("lemma1_check: W basis not orthonormal");
        }
    }

    double lhs_log = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double d = std::abs(inst.g[i][i]);
        lhs_log += 2.0 * log_or_neginf(d);
    }

    double sp = 0.0, sr = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        DenseVector row{std::vector<double>(inst.g[i])};
        double proj2 = 0.0;
        DenseVector res = row;
        for (std::size_t a = 0; a < m; ++a) {
            const double c = inner(row, inst.w_basis[a]);
            proj2 += c * c;
            for (std::size_t j = 0; j < k; ++j) res[j] -= c * inst.w_basis[a][j];
        }
        sp += proj2;
        double r2 = 0.0;
        for (double x : res.coords) r2 += x * x;
        sr += r2;
    }
    const double rhs_log = double(m) * log_or_neginf(sp / double(m)) +
                           double(k - m) * log_or_neginf(sr / double(k - m));

    BoundReport r = make_report("matrix_inequality", lhs_log, rhs_log, tol_rel);
    r.k = int(k);
    r.m = int(m);
    return r;
}

LemmaInstance random_lemma_instance(Rng& rng, int k_max) {
    if (k_max < 2) throw std::invalid_argument("random_lemma_instance: k_max < 2");
    const int k = 2 + int(rng.next_u64() % std::uint64_t(k_max - 1));
    const int m = 1 + int(rng.next_u64() % std::uint64_t(k - 1));

    LemmaInstance inst;
    inst.g.assign(std::size_t(k), std::vector<double>(std::size_t(k), 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) inst.g[std::size_t(i)][std::size_t(j)] = rng.next_gaussian();

    while (int(inst.w_basis.size()) < m) {
        DenseVector v((std::size_t(k)));
        for (int i = 0; i < k; ++i) v[std::size_t(i)] = rng.next_gaussian();
        for (const auto& w : inst.w_basis) {
            const double c = inner(v, w);
            for (int i = 0; i < k; ++i) v[std::size_t(i)] -= c * w[std::size_t(i)];
        }
        for (const auto& w : inst.w_basis) {  // second pass
            const double c = inner(v, w);
            for (int i = 0; i < k; ++i) v[std::size_t(i)] -= c * w[std::size_t(i)];
        }
        const double n = norm(v, NormKind::hilbert());
        if (n < 1e-8) continue;
        for (int i = 0; i < k; ++i) v[std::size_t(i)] /= n;
        inst.w_basis.push_back(std::move(v));
    }
    return inst;
}

BoundReport theorem_hilbert_check(const std::vector<double>& sigmas,
                                  const WidthSequence& d_upper, int n, int k, int m,
                                  double gamma, double tol_rel) {
    if (n < 0 || k < 1 || m < 1 || m >= k)
        throw std::invalid_argument("theorem_hilbert_check: need N >= 0, 1 <= m < K");
    require_sigma_range(sigmas, n + k, "theorem_hilbert_check");
    const double dm = upper_or_throw(d_upper, m, "theorem_hilbert_check");

    double lhs_log = 0.0;
    for (int i = 1; i <= k; ++i) lhs_log += 2.0 * log_or_neginf(sigmas[std::size_t(n + i)]);
    const double rhs_log = -2.0 * k * std::log(gamma) +
                           m * std::log(double(k) / m) +
                           (k - m) * std::log(double(k) / (k - m)) +
                           2.0 * m * log_or_neginf(sigmas[std::size_t(n + 1)]) +
                           2.0 * (k - m) * log_or_neginf(dm);

    BoundReport r = make_report("product_bound_hilbert", lhs_log, rhs_log, tol_rel,
                                "d_m is an upper bound; RHS increasing in d_m");
    r.n = n;
    r.k = k;
    r.m = m;
    r.gamma = gamma;
    return r;
}

BoundReport theorem_banach_check(const std::vector<double>& sigmas, const WidthSequence& d_upper,
                                 int n, int k, int m, double gamma, double tol_rel) {
    if (n < 0 || k < 1 || m < 1 || m >= k)
        throw std::invalid_argument("theorem_banach_check: need N >= 0, 1 <= m < K");
    require_sigma_range(sigmas, n + k, "theorem_banach_check");
    const double dm = upper_or_throw(d_upper, m, "theorem_banach_check");

    double lhs_log = 0.0;
    double sum_sq = 0.0;
    for (int i = 1; i <= k; ++i) {
        const double s = sigmas[std::size_t(n + i)];
        lhs_log += 2.0 * log_or_neginf(s);
        sum_sq += s * s;
    }
    const double rhs_log = k * std::log(2.0) + (k - m) * std::log(double(k)) -
                           2.0 * k * std::log(gamma) + m * log_or_neginf(sum_sq) +
                           2.0 * (k - m) * log_or_neginf(dm);

    BoundReport r = make_report("product_bound_banach", lhs_log, rhs_log, tol_rel,
                                "d_m is an upper bound; RHS increasing in d_m");
    r.n = n;
    r.k = k;
    r.m = m;
    r.gamma = gamma;
    return r;
}

CorollaryCheck corollary_from_label(const std::string& s) {
    if (s == "c1_i") return CorollaryCheck::C1_i;
    if (s == "c1_ii") return CorollaryCheck::C1_ii;
    if (s == "c1_iii") return CorollaryCheck::C1_iii;
    if (s == "c2_i") return CorollaryCheck::C2_i;
    if (s == "c2_ii") return CorollaryCheck::C2_ii;
    if (s == "c2_iii") return CorollaryCheck::C2_iii;
    throw std::invalid_argument("unknown corollary check: " + s);
}

std::string corollary_label(CorollaryCheck c) {
    switch (c) {
        case CorollaryCheck::C1_i: return "c1_i";
        case CorollaryCheck::C1_ii: return "c1_ii";
        case CorollaryCheck::C1_iii: return "c1_iii";
        case CorollaryCheck::C2_i: return "c2_i";
        case CorollaryCheck::C2_ii: return "c2_ii";
        case CorollaryCheck::C2_iii: return "c2_iii";
    }
    return "?";
}

double RateParams::c_small1() const { return std::pow(2.0, -1.0 - 2.0 * alpha) * c_small0; }

double RateParams::c_big1_hilbert() const {
    return std::pow(2.0, 5.0 * alpha + 1.0) * std::pow(gamma, -2.0) * c_big0;
}

double RateParams::c_big1_banach() const {
    if (!beta) throw std::invalid_argument("RateParams: beta required for the Banach rate");
    const double b = *beta;
    const double first = c_big0 * std::pow(4.0, 4.0 * alpha + 1.0) * std::pow(gamma, -4.0) *
                         std::pow((2.0 * b + 1.0) / (2.0 * b), alpha);
    double second = 0.0;
    for (int n = 1; n <= 7; ++n)
        second = std::max(second, std::pow(double(n), alpha - b - 0.5));
    return std::max(first, second);
}

namespace {

// Pointwise certification of the width hypothesis on [1, n_to].
bool certify_envelope(const WidthSequence& d_upper, int n_to, bool exponential,
                      const RateParams& rate, std::string& why) {
    for (int n = 1; n <= n_to; ++n) {
        auto u = d_upper.upper_at(n);
        if (!u) {
            why = "no width bound at n=" + std::to_string(n);
            return false;
        }
        const double envelope =
            exponential ? rate.c_big0 * std::exp(-rate.c_small0 * std::pow(double(n), rate.alpha))
                        : rate.c_big0 * std::pow(double(n), -rate.alpha);
        if (*u > envelope * (1.0 + 1e-12)) {
            why = "d_" + std::to_string(n) + " exceeds the assumed envelope";
            return false;
        }
    }
    return true;
}

void mark_unmet(std::vector<BoundReport>& reports, const std::string& why) {
    for (auto& r : reports) {
        r.hypothesis_met = false;
        r.notes = "hypothesis-unmet: " + why;
    }
}

}  // namespace

std::vector<BoundReport> corollary_checks(const std::vector<double>& sigmas,
                                          const WidthSequence& d_upper, const RateParams& rate,
                                          CorollaryCheck which, int n_from, int n_to,
                                          double tol_rel) {
    if (n_from < 1 || n_to < n_from)
        throw std::invalid_argument("corollary_checks: need 1 <= n_from <= n_to");
    const double lg = std::log(rate.gamma);
    std::vector<BoundReport> out;

    auto sigma_log = [&](int n) {
        require_sigma_range(sigmas, n, "corollary_checks");
        return log_or_neginf(sigmas[std::size_t(n)]);
    };

    switch (which) {
        case CorollaryCheck::C1_i: {
            for (int n = n_from; n <= n_to; ++n) {
                // sigma_{2n} <= sqrt(2) gamma^{-1} sqrt(d_n)
                const double dn = upper_or_throw(d_upper, n, "corollary_checks[c1_i]");
                BoundReport even = make_report(
                    "c1_i_even", sigma_log(2 * n),
                    0.5 * std::log(2.0) - lg + 0.5 * log_or_neginf(dn), tol_rel);
                even.n = n;
                even.gamma = rate.gamma;
                out.push_back(std::move(even));
                if (n < 2) continue;
                // general min-form over 1 <= m < n
                double best = kInf;
                for (int m = 1; m < n; ++m) {
                    const double dm = upper_or_throw(d_upper, m, "corollary_checks[c1_i]");
                    best = std::min(best,
                                    (double(n - m) / n) * log_or_neginf(dm));
                }
                BoundReport gen = make_report("c1_i_min", sigma_log(n),
                                              0.5 * std::log(2.0) - lg + best, tol_rel);
                gen.n = n;
                gen.gamma = rate.gamma;
                out.push_back(std::move(gen));
            }
            break;
        }
        case CorollaryCheck::C2_i: {
            double sum_sq = 0.0;
            for (int i = 1; i < n_from; ++i) {
                require_sigma_range(sigmas, i, "corollary_checks");
                sum_sq += sigmas[std::size_t(i)] * sigmas[std::size_t(i)];
            }
            for (int n = n_from; n <= n_to; ++n) {
                require_sigma_range(sigmas, n, "corollary_checks");
                sum_sq += sigmas[std::size_t(n)] * sigmas[std::size_t(n)];
                const double dn = upper_or_throw(d_upper, n, "corollary_checks[c2_i]");
                BoundReport pair = make_report(
                    "c2_i_pair", sigma_log(2 * n),
                    std::log(2.0) - lg + 0.5 * (std::log(double(n)) + log_or_neginf(dn)),
                    tol_rel);
                pair.n = n;
                pair.gamma = rate.gamma;
                out.push_back(std::move(pair));
                if (n < 2) continue;
                double best = kInf;
                for (int m = 1; m < n; ++m) {
                    const double dm = upper_or_throw(d_upper, m, "corollary_checks[c2_i]");
                    const double term = (double(n - m) / (2.0 * n)) * std::log(double(n)) +
                                        (double(m) / (2.0 * n)) * log_or_neginf(sum_sq) +
                                        (double(n - m) / n) * log_or_neginf(dm);
                    best = std::min(best, term);
                }
                BoundReport gen = make_report("c2_i_min", sigma_log(n),
                                              0.5 * std::log(2.0) - lg + best, tol_rel);
                gen.n = n;
                gen.gamma = rate.gamma;
                out.push_back(std::move(gen));
            }
            break;
        }
        case CorollaryCheck::C1_ii:
        case CorollaryCheck::C2_ii: {
            const bool banach = which == CorollaryCheck::C2_ii;
            if (banach) {
                if (!rate.beta || !(*rate.beta > 0.0) ||
                    !(*rate.beta < std::min(rate.alpha, 0.5)))
                    throw std::invalid_argument(
                        "corollary_checks[c2_ii]: need 0 < beta < min(alpha, 1/2)");
            }
            const double c1 =
                (banach ? rate.c_big1_banach() : rate.c_big1_hilbert()) * rate.c1_scale;
            const double expo = banach ? -rate.alpha + 0.5 + *rate.beta : -rate.alpha;
            for (int n = n_from; n <= n_to; ++n) {
                BoundReport r = make_report(banach ? "c2_ii" : "c1_ii", sigma_log(n),
                                            std::log(c1) + expo * std::log(double(n)), tol_rel);
                r.n = n;
                r.gamma = rate.gamma;
                out.push_back(std::move(r));
            }
            std::string why;
            if (!certify_envelope(d_upper, n_to, /*exponential=*/false, rate, why))
                mark_unmet(out, why);
            break;
        }
        case CorollaryCheck::C1_iii:
        case CorollaryCheck::C2_iii: {
            const bool banach = which == CorollaryCheck::C2_iii;
            const double c1 = rate.c_small1();
            const double lead = 0.5 * std::log(2.0 * rate.c_big0) - lg;
            for (int n = n_from; n <= n_to; ++n) {
                double rhs = lead - c1 * std::pow(double(n), rate.alpha);
                if (banach) rhs += 0.5 * std::log(double(n));
                BoundReport r =
                    make_report(banach ? "c2_iii" : "c1_iii", sigma_log(n), rhs, tol_rel);
                r.n = n;
                r.gamma = rate.gamma;
                out.push_back(std::move(r));
                if (banach && rate.c_small1_override) {
                    double rhs2 = lead + 0.5 * std::log(double(n)) -
                                  *rate.c_small1_override * std::pow(double(n), rate.alpha);
                    BoundReport u = make_report("c2_iii_user", sigma_log(n), rhs2, tol_rel,
                                                "exploratory c1 override");
                    u.n = n;
                    u.gamma = rate.gamma;
                    out.push_back(std::move(u));
                }
                if (!banach && n >= 2 && 2 * n <= n_to) {
                    // Evaluating the min in the general form tightens the
                    // exponent constant to c0 max_{1<=m<n} (m/n)^alpha (1 - m/n).
                    double mn = 0.0;
                    for (int m = 1; m < n; ++m)
                        mn = std::max(mn, std::pow(double(m) / n, rate.alpha) *
                                              (1.0 - double(m) / n));
                    const double rhs3 = 0.5 * std::log(2.0) - lg + std::log(rate.c_big0) -
                                        rate.c_small0 * std::pow(double(n), rate.alpha) * mn;
                    BoundReport t = make_report("c1_iii_remark", sigma_log(2 * n), rhs3,
                                                tol_rel, "tightened-c1 remark evaluation");
                    t.n = n;
                    t.gamma = rate.gamma;
                    out.push_back(std::move(t));
                }
            }
            std::string why;
            if (!certify_envelope(d_upper, n_to, /*exponential=*/true, rate, why))
                mark_unmet(out, why);
            break;
        }
    }
    return out;
}

std::vector<ReferenceRatePoint> reference_rates(const RateParams& rate, int n,
                                                std::optional<double> d_n) {
    if (n < 1) throw std::invalid_argument("reference_rates: n must be >= 1");
    std::vector<ReferenceRatePoint> out;
    if (d_n)
        out.push_back({"bmppt", rate.c_big0 * double(n) * std::pow(2.0, double(n)) * *d_n});
    out.push_back({"poly1", rate.c_big0 * std::pow(double(n), -rate.alpha)});
    const double beta = rate.alpha / (rate.alpha + 1.0);
    out.push_back({"poly2", rate.c_big0 * std::exp(-rate.c_small0 * std::pow(double(n), beta))});
    return out;
}

void write_bounds_csv(const std::vector<BoundReport>& reports, const std::string& path) {
    CsvWriter out({"name", "N", "K", "m", "gamma", "lhs_log", "rhs_log", "slack_log", "pass",
                   "notes"});
    for (const auto& r : reports) {
        out.row({r.name, r.n >= 0 ? format_int(r.n) : "", r.k >= 0 ? format_int(r.k) : "",
                 r.m >= 0 ? format_int(r.m) : "", format_double(r.gamma),
                 format_double(r.lhs_log), format_double(r.rhs_log),
                 format_double(r.slack_log), r.pass ? "true" : "false", r.notes});
    }
    out.write(path);
}

}  // namespace seqgreedy
