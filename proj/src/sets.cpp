#include "seqgreedy/sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seqgreedy/csv.hpp"
#include "seqgreedy/rng.hpp"

namespace seqgreedy {

namespace {

constexpr double kNormBudget = 1.0 + 1e-12;
// Floating-point cushion for the "exactly as stated" P1/P2 comparisons; the
// quantities compared are sums/roots of the same entries and can differ by a
// few ulps depending on evaluation order.
constexpr double kFpSlack = 1e-12;

void require_unit_ball(const std::vector<DenseVector>& elems, const NormKind& k,
                       const char* what) {
    for (const auto& f : elems) {
        require_finite(f, what);
        if (norm(f, k) > kNormBudget)
            throw std::invalid_argument(std::string(what) +
                                        ": element norm exceeds 1 (set must lie in the unit ball)");
    }
}

std::vector<DenseVector> diagonal_elements(const std::vector<double>& x) {
    std::vector<DenseVector> elems;
    const std::size_t n = x.size();
    for (std::size_t j = 0; j < n; ++j) {
        DenseVector f(n);
        f[j] = x[j];
        elems.push_back(std::move(f));
    }
    return elems;
}

void validate_decreasing_positive(const std::vector<double>& x, const char* what) {
    if (x.empty()) throw std::invalid_argument(std::string(what) + ": empty value list");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] > 0.0) || !std::isfinite(x[j]))
            throw std::invalid_argument(std::string(what) + ": values must be positive finite");
        if (j && x[j] > x[j - 1])
            throw std::invalid_argument(std::string(what) + ": values must be non-increasing");
    }
}

std::vector<std::vector<double>> ragged_lower(const std::vector<std::vector<double>>& a) {
    std::vector<std::vector<double>> rows;
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].size() != i + 1 && a[i].size() != k)
            throw std::invalid_argument("FromMatrix: row " + std::to_string(i) +
                                        " has neither i+1 nor K entries");
        if (a[i].size() == k) {
            for (std::size_t j = i + 1; j < k; ++j)
                if (a[i][j] != 0.0)
                    throw std::invalid_argument("FromMatrix: nonzero above the diagonal");
        }
        rows.emplace_back(a[i].begin(), a[i].begin() + long(i + 1));
    }
    return rows;
}

}  // namespace

std::string spec_kind_label(const CompactSetSpec& spec) {
    struct V {
        std::string operator()(const DiagonalSpec&) const { return "diagonal"; }
        std::string operator()(const FromMatrixSpec&) const { return "from_matrix"; }
        std::string operator()(const DyadicBlocksSpec&) const { return "dyadic_blocks"; }
        std::string operator()(const RandomBallSpec&) const { return "random_ball"; }
        std::string operator()(const ParametricSurrogateSpec&) const {
            return "parametric_surrogate";
        }
    };
    return std::visit(V{}, spec);
}

std::vector<double> dyadic_block_values(double alpha, int levels) {
    if (!(alpha > 0.5)) throw std::invalid_argument("dyadic_blocks: alpha must exceed 1/2");
    if (levels < 0) throw std::invalid_argument("dyadic_blocks: negative levels");
    const std::size_t count = std::size_t(1) << levels;
    std::vector<double> x(count);
    x[0] = 1.0;  // block k = 0 is {0}
    for (int k = 1; k <= levels; ++k) {
        const double v = std::pow(2.0, -double(k) * alpha);
        for (std::size_t j = std::size_t(1) << (k - 1); j < (std::size_t(1) << k); ++j)
            x[j] = v;
    }
    return x;
}

std::string check_p1_p2(const std::vector<std::vector<double>>& a,
                        const std::vector<double>& sigmas, double gamma) {
    const std::size_t k = a.size();
    if (sigmas.size() != k) return "sigma count differs from matrix size";
    if (!(gamma > 0.0 && gamma <= 1.0)) return "gamma outside (0, 1]";
    for (std::size_t n = 0; n < k; ++n) {
        const double diag = std::abs(a[n][n]);
        if (gamma * sigmas[n] > diag * (1.0 + kFpSlack) + 1e-300)
            return "P1 lower bound fails at n=" + std::to_string(n);
        if (diag > sigmas[n] * (1.0 + kFpSlack))
            return "P1 upper bound fails at n=" + std::to_string(n);
    }
    for (std::size_t m = 0; m < k; ++m) {
        double tail = 0.0;
        for (std::size_t n = m + 1; n-- > 0;) {
            tail += a[m][n] * a[m][n];
            if (tail > sigmas[n] * sigmas[n] * (1.0 + kFpSlack))
                return "P2 fails at (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
        }
    }
    return "";
}

std::vector<double> tight_sigmas(const std::vector<std::vector<double>>& a) {
    const std::size_t k = a.size();
    std::vector<double> s2(k, 0.0);
    for (std::size_t m = 0; m < k; ++m) {
        double tail = 0.0;
        for (std::size_t n = m + 1; n-- > 0;) {
            tail += a[m][n] * a[m][n];
            s2[n] = std::max(s2[n], tail);
        }
    }
    std::vector<double> s(k);
    for (std::size_t n = 0; n < k; ++n) s[n] = std::sqrt(s2[n]);
    for (std::size_t n = k - 1; n-- > 0;) s[n] = std::max(s[n], s[n + 1]);
    return s;
}

FromMatrixSpec make_p1p2_matrix(int size, double gamma, std::uint64_t seed) {
    if (size < 2) throw std::invalid_argument("make_p1p2_matrix: size must be >= 2");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("make_p1p2_matrix: gamma outside (0, 1]");
    Rng rng(seed);
    const double q = rng.next_range(0.6, 0.8);
    const double rho = 0.5;
    // Off-diagonal budget keeping every tail sum below (a_nn / gamma)^2; see
    // P1 with the tight sigmas computed below.
    const double b_cap = 1.0 / (q * q * gamma * gamma) - 1.0;
    const double beta = std::min(3.0, std::sqrt(0.9 * b_cap * (1.0 - rho * rho)) / rho);

    FromMatrixSpec spec;
    spec.gamma = gamma;
    spec.a.resize(size);
    for (int m = 0; m < size; ++m) {
        spec.a[m].resize(m + 1, 0.0);
        const double dm = std::pow(q, m);
        spec.a[m][m] = dm;
        for (int j = m - 1; j >= 0; --j) {
            const double mag = rng.next_range(0.5, 1.0);
            const double sign = rng.next_unit() < 0.5 ? -1.0 : 1.0;
            spec.a[m][j] = sign * beta * dm * std::pow(rho, m - j) * mag;
        }
    }
    // Normalize so every row has l1 norm <= 1; the rows then lie in the unit
    // ball of every l_p space. Scaling preserves P1/P2.
    double max_l1 = 0.0;
    for (const auto& row : spec.a) {
        double s = 0.0;
        for (double v : row) s += std::abs(v);
        max_l1 = std::max(max_l1, s);
    }
    for (auto& row : spec.a)
        for (double& v : row) v /= max_l1;

    spec.sigmas = tight_sigmas(spec.a);
    const std::string err = check_p1_p2(spec.a, spec.sigmas, gamma);
    if (!err.empty())
        throw std::logic_error("make_p1p2_matrix: generated instance invalid: " + err);
    return spec;
}

CompactSet realize(const CompactSetSpec& spec, const NormKind& norm_kind) {
    CompactSet set;
    set.norm_kind = norm_kind;
    set.spec = spec;

    if (const auto* d = std::get_if<DiagonalSpec>(&spec)) {
        validate_decreasing_positive(d->x, "diagonal");
        set.elements = diagonal_elements(d->x);
    } else if (const auto* dy = std::get_if<DyadicBlocksSpec>(&spec)) {
        set.elements = diagonal_elements(dyadic_block_values(dy->alpha, dy->levels));
    } else if (const auto* fm = std::get_if<FromMatrixSpec>(&spec)) {
        const auto rows = ragged_lower(fm->a);
        const std::size_t k = rows.size();
        if (fm->sigmas.size() != k)
            throw std::invalid_argument("FromMatrix: sigma count differs from matrix size");
        for (std::size_t n = 0; n < k; ++n) {
            if (!(fm->sigmas[n] >= 0.0) || !std::isfinite(fm->sigmas[n]))
                throw std::invalid_argument("FromMatrix: sigmas must be finite and nonnegative");
            if (n && fm->sigmas[n] > fm->sigmas[n - 1])
                throw std::invalid_argument("FromMatrix: sigmas must be non-increasing");
        }
        // Finite stand-in for "decreasing to zero": the sequence must actually
        // decay across the realized range.
        if (k >= 2 && !(fm->sigmas.back() < fm->sigmas.front()))
            throw std::invalid_argument("FromMatrix: sigmas must decrease toward zero");
        const std::string err = check_p1_p2(rows, fm->sigmas, fm->gamma);
        if (!err.empty()) throw std::invalid_argument("FromMatrix: " + err);
        for (std::size_t i = 0; i < k; ++i) {
            DenseVector f(k);
            for (std::size_t j = 0; j <= i; ++j) f[j] = rows[i][j];
            set.elements.push_back(std::move(f));
        }
    } else if (const auto* rb = std::get_if<RandomBallSpec>(&spec)) {
        if (rb->dim < 1 || rb->count < 1)
            throw std::invalid_argument("random_ball: dim and count must be positive");
        Rng rng(derive_stream(rb->seed, "random_ball"));
        for (int i = 0; i < rb->count; ++i) {
            DenseVector g(std::size_t(rb->dim));
            double n = 0.0;
            do {
                for (int j = 0; j < rb->dim; ++j) g[j] = rng.next_gaussian();
                n = norm(g, norm_kind);
            } while (n == 0.0);
            const double radius = std::pow(rng.next_unit(), 1.0 / rb->dim);
            for (int j = 0; j < rb->dim; ++j) g[j] *= radius / n;
            set.elements.push_back(std::move(g));
        }
    } else if (const auto* ps = std::get_if<ParametricSurrogateSpec>(&spec)) {
        if (ps->dim < 1 || ps->count < 1)
            throw std::invalid_argument("parametric_surrogate: dim and count must be positive");
        if (!(ps->mu_max >= ps->mu_min))
            throw std::invalid_argument("parametric_surrogate: empty mu range");
        for (int i = 0; i < ps->count; ++i) {
            const double mu = ps->count == 1
                                  ? ps->mu_min
                                  : ps->mu_min + (ps->mu_max - ps->mu_min) * i / (ps->count - 1);
            DenseVector v(std::size_t(ps->dim));
            double t = 1.0;
            for (int j = 0; j < ps->dim; ++j) {
                v[j] = t;
                t *= mu;
            }
            const double n = norm(v, norm_kind);
            for (int j = 0; j < ps->dim; ++j) v[j] /= n;
            set.elements.push_back(std::move(v));
        }
    }

    require_unit_ball(set.elements, norm_kind, "realize");
    return set;
}

std::optional<WidthSequence> known_widths(const CompactSetSpec& spec, int n_max) {
    std::vector<double> x;
    if (const auto* d = std::get_if<DiagonalSpec>(&spec)) {
        x = d->x;
    } else if (const auto* dy = std::get_if<DyadicBlocksSpec>(&spec)) {
        x = dyadic_block_values(dy->alpha, dy->levels);
    } else {
        return std::nullopt;
    }
    WidthSequence w;
    for (int n = 0; n <= n_max; ++n) {
        if (n == 0) {
            w.add(0, x[0], WidthTag::Exact, "analytic-diagonal");
        } else if (std::size_t(n) < x.size()) {
            w.add(n, x[std::size_t(n)], WidthTag::Upper, "analytic-diagonal");
        } else {
            // Coordinate span of all elements: the whole family is captured.
            w.add(n, 0.0, WidthTag::Exact, "analytic-diagonal");
        }
    }
    return w;
}

void write_elements_csv(const CompactSet& set, const std::string& path) {
    std::vector<std::string> header{"element"};
    for (std::size_t j = 0; j < set.ambient_dim(); ++j)
        header.push_back("c" + std::to_string(j));
    CsvWriter out(header);
    for (std::size_t i = 0; i < set.size(); ++i) {
        std::vector<std::string> cells{format_int(long(i))};
        for (std::size_t j = 0; j < set.ambient_dim(); ++j)
            cells.push_back(format_double(set.elements[i][j]));
        out.row(cells);
    }
    out.write(path);
}

}  // namespace seqgreedy
