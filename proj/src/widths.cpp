#include "seqgreedy/widths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqgreedy/csv.hpp"
#include "seqgreedy/rng.hpp"

namespace seqgreedy {

const char* width_tag_label(WidthTag t) {
    switch (t) {
        case WidthTag::Exact: return "exact";
        case WidthTag::Upper: return "upper";
        case WidthTag::Lower: return "lower";
    }
    return "?";
}

SvdResult jacobi_svd(const std::vector<DenseVector>& columns) {
    if (columns.empty()) return {};
    const std::size_t d = columns[0].dim();
    const std::size_t m = columns.size();
    std::vector<std::vector<double>> a(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (columns[j].dim() != d) throw std::invalid_argument("jacobi_svd: ragged columns");
        a[j] = columns[j].coords;
    }

    double fro2 = 0.0;
    for (const auto& col : a)
        for (double x : col) fro2 += x * x;
    const double off_tol = 1e-28 * std::max(fro2, 1e-300);

    // Rotate column pairs until all cross inner products are negligible.
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool converged = true;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    app += a[p][i] * a[p][i];
                    aqq += a[q][i] * a[q][i];
                    apq += a[p][i] * a[q][i];
                }
                if (apq * apq <= off_tol * 1e-4 || apq == 0.0) continue;
                if (apq * apq > 1e-30 * app * aqq) converged = false;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < d; ++i) {
                    const double xp = a[p][i], xq = a[q][i];
                    a[p][i] = c * xp - s * xq;
                    a[q][i] = s * xp + c * xq;
                }
            }
        }
        if (converged) break;
    }

    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t j = 0; j < m; ++j) {
        double n2 = 0.0;
        for (double x : a[j]) n2 += x * x;
        order.emplace_back(std::sqrt(n2), j);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });

    SvdResult out;
    const double rank_tol = (order.empty() ? 0.0 : order[0].first) * 1e-13;
    for (const auto& [sv, j] : order) {
        out.singular.push_back(sv);
        if (sv > rank_tol) {
            DenseVector u(d);
            for (std::size_t i = 0; i < d; ++i) u[i] = a[j][i] / sv;
            out.left.push_back(std::move(u));
        }
    }
    return out;
}

double width_upper_svd(const CompactSet& f, int n) {
    if (!f.norm_kind.is_hilbert())
        throw std::invalid_argument("width_upper_svd: Hilbert norm required");
    if (n < 0) throw std::invalid_argument("width_upper_svd: negative n");

    const SvdResult svd = jacobi_svd(f.elements);
    const std::size_t use = std::min<std::size_t>(std::size_t(n), svd.left.size());
    double worst = 0.0;
    for (const auto& el : f.elements) {
        DenseVector r = el;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < use; ++k) {
                const double c = inner(r, svd.left[k]);
                for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= c * svd.left[k][i];
            }
        }
        worst = std::max(worst, norm(r, NormKind::hilbert()));
    }
    return worst;
}

RandomWidthResult width_upper_random_subspace(const CompactSet& f, int n_level, int trials,
                                              std::uint64_t seed) {
    const auto* spec = std::get_if<DyadicBlocksSpec>(&f.spec);
    if (!spec)
        throw std::invalid_argument("width_upper_random_subspace: DyadicBlocks set required");
    if (f.norm_kind.tag() != NormKind::Tag::LInf)
        throw std::invalid_argument("width_upper_random_subspace: l_inf norm required");
    if (trials < 1) throw std::invalid_argument("width_upper_random_subspace: trials < 1");
    if (n_level < 1) throw std::invalid_argument("width_upper_random_subspace: n_level < 1");

    const std::size_t dim = f.ambient_dim();
    const std::size_t n_coord = std::size_t(1) << n_level;  // e_0 .. e_{2^n - 1}
    if (n_coord > dim)
        throw std::invalid_argument(
            "width_upper_random_subspace: truncation level too small for n_level");

    RandomWidthResult out;
    out.subspace_dim = int(std::size_t(2) << n_level);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_stream(seed, "width_random_trial", std::uint64_t(trial)));
        Subspace e(dim, /*build_ortho=*/false);
        for (std::size_t j = 0; j < n_coord && j < dim; ++j)
            e.append(unit_vector(dim, j));
        for (int k = 1; k <= n_level; ++k) {
            // Dyadic block n+k: coordinates [2^{n+k-1}, 2^{n+k} - 1].
            const std::size_t lo = std::size_t(1) << (n_level + k - 1);
            const std::size_t hi = std::min(dim, std::size_t(1) << (n_level + k));
            if (lo >= dim) break;
            const int sub_dim = 1 << (n_level - k);
            for (int s = 0; s < sub_dim; ++s) {
                DenseVector g(dim);
                double n2 = 0.0;
                for (std::size_t i = lo; i < hi; ++i) {
                    g[i] = rng.next_gaussian();
                    n2 += g[i] * g[i];
                }
                if (n2 == 0.0) { --s; continue; }
                const double inv = 1.0 / std::sqrt(n2);
                for (std::size_t i = lo; i < hi; ++i) g[i] *= inv;
                e.append(std::move(g));
            }
        }
        double worst = 0.0;
        for (const auto& el : f.elements)
            worst = std::max(worst, dist_linf(el, e).distance);
        out.per_trial.push_back(worst);
    }
    std::vector<double> sorted = out.per_trial;
    std::sort(sorted.begin(), sorted.end());
    out.min_value = sorted.front();
    const std::size_t h = sorted.size() / 2;
    out.median_value = sorted.size() % 2 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
    return out;
}

namespace {

// min_c ||f - c u||_k by golden-section search on the convex 1-d profile.
double line_distance(const DenseVector& f, const DenseVector& u, const NormKind& k) {
    const double fu = norm(f, k);
    const double un = norm(u, k);
    if (un == 0.0) return fu;
    const double r = 2.0 * fu / un;
    double lo = -r, hi = r;
    auto eval = [&](double c) {
        DenseVector t = f;
        for (std::size_t i = 0; i < t.dim(); ++i) t[i] -= c * u[i];
        return norm(t, k);
    };
    const double gr = 0.6180339887498948482;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int it = 0; it < 160; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval(x2);
        }
    }
    return std::min(eval(0.5 * (lo + hi)), std::min(f1, f2));
}

// Largest ratio ||v||_k / ||v||_2 over nonzero v in R^d.
double ratio_k_over_l2(const NormKind& k, std::size_t d) {
    switch (k.tag()) {
        case NormKind::Tag::Hilbert: return 1.0;
        case NormKind::Tag::L1: return std::sqrt(double(d));
        case NormKind::Tag::LInf: return 1.0;
        case NormKind::Tag::Lp: {
            const double p = k.p();
            return p >= 2.0 ? 1.0 : std::pow(double(d), 1.0 / p - 0.5);
        }
    }
    return 1.0;
}

// Smallest ||u||_k over the unit l_2 sphere in R^d.
double min_k_on_sphere(const NormKind& k, std::size_t d) {
    switch (k.tag()) {
        case NormKind::Tag::Hilbert: return 1.0;
        case NormKind::Tag::L1: return 1.0;
        case NormKind::Tag::LInf: return 1.0 / std::sqrt(double(d));
        case NormKind::Tag::Lp: {
            const double p = k.p();
            return p <= 2.0 ? 1.0 : std::pow(double(d), 1.0 / p - 0.5);
        }
    }
    return 1.0;
}

}  // namespace

BruteForceWidth width_brute_force(const CompactSet& f, int n, int grid) {
    if (n != 1) throw std::invalid_argument("width_brute_force: only n = 1 is supported");
    const std::size_t d = f.ambient_dim();
    if (d > 4) throw std::invalid_argument("width_brute_force: ambient dim must be <= 4");
    if (grid < 2) throw std::invalid_argument("width_brute_force: grid must be >= 2");
    if (d == 0 || f.size() == 0) throw std::invalid_argument("width_brute_force: empty set");

    const std::size_t angles = d - 1;
    const double pi = 3.14159265358979323846;
    double best = std::numeric_limits<double>::infinity();

    if (angles == 0) {
        // 1-dimensional ambient space: the only line is the whole space.
        best = 0.0;
    } else {
        std::vector<int> idx(angles, 0);
        std::vector<double> theta(angles, 0.0);
        while (true) {
            for (std::size_t a = 0; a < angles; ++a) {
                const double span = (a + 1 == angles) ? 2.0 * pi : pi;
                theta[a] = span * idx[a] / grid;
            }
            DenseVector u(d);
            double sines = 1.0;
            for (std::size_t a = 0; a < angles; ++a) {
                u[a] = sines * std::cos(theta[a]);
                sines *= std::sin(theta[a]);
            }
            u[angles] = sines;
            double worst = 0.0;
            for (const auto& el : f.elements)
                worst = std::max(worst, line_distance(el, u, f.norm_kind));
            best = std::min(best, worst);

            std::size_t a = 0;
            for (; a < angles; ++a) {
                if (++idx[a] < grid) break;
                idx[a] = 0;
            }
            if (a == angles) break;
        }
    }

    double max_norm = 0.0;
    for (const auto& el : f.elements) max_norm = std::max(max_norm, norm(el, f.norm_kind));

    // Lipschitz slack: |val(u) - val(u')| <= 2 max||f|| ||u - u'||_k / min||u||_k
    // with ||u - u'||_2 bounded by the angular grid spacing times the number of
    // angles (each angle moves the direction by at most its increment).
    BruteForceWidth out;
    const double dtheta = (2.0 * pi / grid) * 0.5;  // half-spacing of the widest angle
    const double l2_gap = double(angles) * dtheta;
    const double slack = angles == 0
                             ? 0.0
                             : 2.0 * max_norm * ratio_k_over_l2(f.norm_kind, d) * l2_gap /
                                   min_k_on_sphere(f.norm_kind, d);
    out.upper = best;
    out.slack = slack;
    out.lower = std::max(0.0, best - slack);
    return out;
}

WidthSequence assemble_widths(const CompactSet& f, int n_max,
                              const std::set<WidthMethod>& methods, const GreedyTrace* trace,
                              int brute_grid) {
    WidthSequence w;
    double max_norm = 0.0;
    for (const auto& el : f.elements) max_norm = std::max(max_norm, norm(el, f.norm_kind));
    w.add(0, max_norm, WidthTag::Exact, "definition");

    if (methods.count(WidthMethod::Known)) {
        if (auto known = known_widths(f.spec, n_max)) {
            for (const auto& e : known->entries)
                if (e.n <= n_max) w.entries.push_back(e);
        }
    }
    if (methods.count(WidthMethod::Svd) && f.norm_kind.is_hilbert()) {
        for (int n = 0; n <= n_max; ++n)
            w.add(n, width_upper_svd(f, n), WidthTag::Upper, "svd");
    }
    if (methods.count(WidthMethod::SigmaUpper) && trace) {
        for (int n = 0; n <= n_max; ++n) {
            if (std::size_t(n) < trace->sigmas.size() || trace->terminated)
                w.add(n, trace->sigma_at(n), WidthTag::Upper, "greedy-sigma");
        }
    }
    if (methods.count(WidthMethod::BruteForce) && f.ambient_dim() <= 4 && n_max >= 1) {
        const BruteForceWidth bf = width_brute_force(f, 1, brute_grid);
        w.add(1, bf.upper, WidthTag::Upper, "brute-force");
        w.add(1, bf.lower, WidthTag::Lower, "brute-force");
    }

    // Monotone repair: d_n is non-increasing, so the tightest upper bound at
    // any k <= n also bounds d_n; likewise lower bounds propagate leftward.
    WidthSequence merged;
    double running_upper = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= n_max; ++n) {
        auto up = w.upper_at(n);
        if (up) running_upper = std::min(running_upper, *up);
        if (std::isfinite(running_upper)) {
            const bool exact = n == 0;
            merged.add(n, running_upper, exact ? WidthTag::Exact : WidthTag::Upper, "merged");
        }
    }
    double running_lower = 0.0;
    for (int n = n_max; n >= 1; --n) {
        auto lo = w.lower_at(n);
        if (lo) running_lower = std::max(running_lower, *lo);
        if (running_lower > 0.0) merged.add(n, running_lower, WidthTag::Lower, "merged");
    }
    for (const auto& e : w.entries) merged.entries.push_back(e);
    return merged;
}

void write_widths_csv(const WidthSequence& w, const std::string& path) {
    CsvWriter out({"n", "value", "tag", "method"});
    for (const auto& e : w.entries)
        out.row({format_int(e.n), format_double(e.value), width_tag_label(e.tag), e.method});
    out.write(path);
}

}  // namespace seqgreedy
