#include "seqgreedy/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "seqgreedy/simplex.hpp"

namespace seqgreedy {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double norm_vec(const std::vector<double>& v, const NormKind& k) {
    DenseVector t{v};
    return norm(t, k);
}

}  // namespace

GramSchmidtResult gram_schmidt_extend(const std::vector<DenseVector>& ortho,
                                      const DenseVector& f) {
    GramSchmidtResult out;
    out.coeffs.assign(ortho.size(), 0.0);
    DenseVector r = f;
    // Two projection passes: the second cleans up cancellation in the first.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < ortho.size(); ++k) {
            const double c = inner(r, ortho[k]);
            out.coeffs[k] += c;
            for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= c * ortho[k][i];
        }
    }
    const double rn = norm(r, NormKind::hilbert());
    out.residual_norm = rn;
    const double fn = norm(f, NormKind::hilbert());
    if (rn <= kRankTol * std::max(fn, 1e-300)) {
        out.vec = std::nullopt;
        out.residual_norm = 0.0;
        return out;
    }
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] /= rn;
    out.vec = std::move(r);
    return out;
}

Subspace Subspace::from_vectors(const std::vector<DenseVector>& vs, bool build_ortho) {
    if (vs.empty()) throw std::invalid_argument("Subspace::from_vectors: empty list");
    Subspace s(vs[0].dim(), build_ortho);
    for (const auto& v : vs) s.append(v);
    return s;
}

GramSchmidtResult Subspace::append(const DenseVector& f) {
    if (f.dim() != dim_) throw std::invalid_argument("Subspace::append: dimension mismatch");
    require_finite(f, "Subspace::append");
    basis_.push_back(f);
    if (!build_ortho_) {
        ++rank_estimate_;  // nominal; exact rank is tracked only in Hilbert mode
        return GramSchmidtResult{};
    }
    GramSchmidtResult gs = gram_schmidt_extend(ortho_, f);
    std::vector<double> expansion = gs.coeffs;
    if (gs.vec.has_value()) {
        pivot_.push_back(int(ortho_.size()));
        ortho_.push_back(*gs.vec);
        expansion.push_back(gs.residual_norm);
    } else {
        pivot_.push_back(-1);
    }
    rcoef_.push_back(std::move(expansion));
    return gs;
}

ApproxResult dist_hilbert(const DenseVector& f, const Subspace& v) {
    if (!v.has_ortho())
        throw std::invalid_argument("dist_hilbert: subspace has no orthonormal basis");
    if (f.dim() != v.ambient_dim())
        throw std::invalid_argument("dist_hilbert: dimension mismatch");

    const auto& q = v.ortho();
    DenseVector r = f;
    std::vector<double> d(q.size(), 0.0);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < q.size(); ++k) {
            const double c = inner(r, q[k]);
            d[k] += c;
            for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= c * q[k][i];
        }
    }

    ApproxResult out;
    out.distance = norm(r, NormKind::hilbert());
    out.residual = std::move(r);

    // Back-substitute the ortho coefficients into basis coefficients over the
    // independent columns (dependent columns get coefficient zero).
    out.best_coeffs.assign(v.size(), 0.0);
    const auto& piv = v.pivot();
    const auto& rc = v.rcoef();
    std::vector<int> indep;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (piv[j] >= 0) indep.push_back(int(j));
    for (int t = int(indep.size()) - 1; t >= 0; --t) {
        const int j = indep[t];
        const int k = piv[j];
        double acc = d[k];
        for (int s = t + 1; s < int(indep.size()); ++s) {
            const int js = indep[s];
            if (std::size_t(k) < rc[js].size()) acc -= rc[js][k] * out.best_coeffs[js];
        }
        out.best_coeffs[j] = acc / rc[j].back();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Support decomposition: when basis vectors live on disjoint coordinate
// blocks, min_c ||f - Bc|| splits into independent subproblems per block (the
// l_p norms are coordinate-separable, l_inf by max). Coordinates touched by
// no basis vector contribute |f_i| directly.
// ---------------------------------------------------------------------------

namespace {

struct SupportComponent {
    std::vector<int> coords;
    std::vector<int> basis_ids;
};

struct SupportSplit {
    std::vector<SupportComponent> comps;
    std::vector<int> loose_coords;
    std::vector<int> zero_basis;
    bool single = false;
};

SupportSplit split_supports(const std::vector<DenseVector>& basis, std::size_t dim) {
    SupportSplit out;
    std::vector<int> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> touched(dim, 0);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::vector<int> first_nz(basis.size(), -1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        int first = -1;
        for (std::size_t i = 0; i < dim; ++i) {
            if (basis[j][i] != 0.0) {
                touched[i] = 1;
                if (first < 0)
                    first = int(i);
                else
                    unite(int(i), first);
            }
        }
        first_nz[j] = first;
        if (first < 0) out.zero_basis.push_back(int(j));
    }

    std::vector<int> root_to_comp(dim, -1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!touched[i]) {
            out.loose_coords.push_back(int(i));
            continue;
        }
        const int r = find(int(i));
        if (root_to_comp[r] < 0) {
            root_to_comp[r] = int(out.comps.size());
            out.comps.emplace_back();
        }
        out.comps[root_to_comp[r]].coords.push_back(int(i));
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (first_nz[j] >= 0)
            out.comps[root_to_comp[find(first_nz[j])]].basis_ids.push_back(int(j));

    out.single = out.comps.size() == 1 && out.loose_coords.empty();
    return out;
}

// Subproblem data in a component's local coordinates, scaled for conditioning:
// f is divided by its max modulus, each basis column by its own.
struct CoreProblem {
    std::vector<double> f;                    // scaled
    std::vector<std::vector<double>> cols;    // scaled columns
    std::vector<double> col_scale;            // original column max-modulus
    double f_scale = 1.0;
};

struct CoreResult {
    double distance = 0.0;
    std::vector<double> coeffs;    // unscaled, per column
    std::vector<double> residual;  // unscaled, local coords
    std::vector<double> dual;      // annihilating functional, local coords
    bool has_dual = false;
};

CoreProblem make_core_problem(const DenseVector& f, const std::vector<DenseVector>& basis,
                              const std::vector<int>& coords, const std::vector<int>& ids) {
    CoreProblem cp;
    cp.f.resize(coords.size());
    double fm = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        cp.f[i] = f[coords[i]];
        fm = std::max(fm, std::abs(cp.f[i]));
    }
    cp.f_scale = fm > 0.0 ? fm : 1.0;
    for (double& x : cp.f) x /= cp.f_scale;
    for (int j : ids) {
        std::vector<double> col(coords.size());
        double cm = 0.0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            col[i] = basis[std::size_t(j)][coords[i]];
            cm = std::max(cm, std::abs(col[i]));
        }
        if (cm == 0.0) cm = 1.0;
        for (double& x : col) x /= cm;
        cp.col_scale.push_back(cm);
        cp.cols.push_back(std::move(col));
    }
    return cp;
}

// min_c ||f - Bc||_inf as: min t, with each residual coordinate sandwiched in
// [-t, t]. Rows are written with +1 slack coefficients; the start basis is the
// slacks plus t in the row of the signed max of f.
CoreResult chebyshev_core(const CoreProblem& cp, bool want_dual) {
    const int d = int(cp.f.size());
    const int n = int(cp.cols.size());
    const int iu = 0, iw = n, it = 2 * n, isp = 2 * n + 1, ism = 2 * n + 1 + d;

    lp::Problem p;
    p.rows = 2 * d;
    p.cols = 2 * n + 1 + 2 * d;
    p.a.assign(std::size_t(p.rows) * p.cols, 0.0);
    p.b.assign(p.rows, 0.0);
    p.cost.assign(p.cols, 0.0);
    p.cost[it] = 1.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) {
            p.at(i, iu + j) = -cp.cols[j][i];
            p.at(i, iw + j) = cp.cols[j][i];
            p.at(d + i, iu + j) = cp.cols[j][i];
            p.at(d + i, iw + j) = -cp.cols[j][i];
        }
        p.at(i, it) = -1.0;
        p.at(d + i, it) = -1.0;
        p.at(i, isp + i) = 1.0;
        p.at(d + i, ism + i) = 1.0;
        p.b[i] = -cp.f[i];
        p.b[d + i] = cp.f[i];
    }
    int rstar = 0;
    for (int i = 1; i < d; ++i)
        if (std::abs(cp.f[i]) > std::abs(cp.f[rstar])) rstar = i;
    p.basis.resize(p.rows);
    for (int i = 0; i < d; ++i) {
        p.basis[i] = isp + i;
        p.basis[d + i] = ism + i;
    }
    p.basis[cp.f[rstar] >= 0.0 ? rstar : d + rstar] = it;

    lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal)
        throw std::runtime_error("dist_linf: LP did not converge within the iteration cap");

    CoreResult out;
    out.coeffs.resize(n);
    for (int j = 0; j < n; ++j)
        out.coeffs[j] = (s.x[iu + j] - s.x[iw + j]) * cp.f_scale / cp.col_scale[j];
    out.residual.resize(d);
    double dist = 0.0;
    for (int i = 0; i < d; ++i) {
        double r = cp.f[i] * cp.f_scale;
        for (int j = 0; j < n; ++j) r -= out.coeffs[j] * cp.cols[j][i] * cp.col_scale[j];
        out.residual[i] = r;
        dist = std::max(dist, std::abs(r));
    }
    out.distance = dist;  // certified primal value
    if (want_dual) {
        out.dual.resize(d);
        double l1 = 0.0;
        for (int i = 0; i < d; ++i) {
            const double yi = -s.reduced_cost[isp + i];
            const double ydi = -s.reduced_cost[ism + i];
            out.dual[i] = ydi - yi;
            l1 += std::abs(out.dual[i]);
        }
        // A genuine certificate has unit dual norm (attained whenever the
        // distance is positive); anything far below that is zero-distance
        // noise that normalization would inflate.
        out.has_dual = l1 > 0.5;
        if (out.has_dual)
            for (double& x : out.dual) x /= l1;
    }
    return out;
}

// min_c ||f - Bc||_1 with residual split into positive and negative parts.
CoreResult l1_core(const CoreProblem& cp, bool want_dual) {
    const int d = int(cp.f.size());
    const int n = int(cp.cols.size());
    const int iu = 0, iw = n, isp = 2 * n, ism = 2 * n + d;

    lp::Problem p;
    p.rows = d;
    p.cols = 2 * n + 2 * d;
    p.a.assign(std::size_t(p.rows) * p.cols, 0.0);
    p.b.assign(p.rows, 0.0);
    p.cost.assign(p.cols, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) {
            p.at(i, iu + j) = cp.cols[j][i];
            p.at(i, iw + j) = -cp.cols[j][i];
        }
        p.at(i, isp + i) = 1.0;
        p.at(i, ism + i) = -1.0;
        p.cost[isp + i] = 1.0;
        p.cost[ism + i] = 1.0;
        p.b[i] = cp.f[i];
    }
    p.basis.resize(d);
    for (int i = 0; i < d; ++i) p.basis[i] = cp.f[i] >= 0.0 ? isp + i : ism + i;

    lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal)
        throw std::runtime_error("dist_l1: LP did not converge within the iteration cap");

    CoreResult out;
    out.coeffs.resize(n);
    for (int j = 0; j < n; ++j)
        out.coeffs[j] = (s.x[iu + j] - s.x[iw + j]) * cp.f_scale / cp.col_scale[j];
    out.residual.resize(d);
    double dist = 0.0;
    for (int i = 0; i < d; ++i) {
        double r = cp.f[i] * cp.f_scale;
        for (int j = 0; j < n; ++j) r -= out.coeffs[j] * cp.cols[j][i] * cp.col_scale[j];
        out.residual[i] = r;
        dist += std::abs(r);
    }
    out.distance = dist;
    if (want_dual) {
        out.dual.resize(d);
        for (int i = 0; i < d; ++i) out.dual[i] = 1.0 - s.reduced_cost[isp + i];
        double linf = 0.0;
        for (double x : out.dual) linf = std::max(linf, std::abs(x));
        out.has_dual = linf > 0.5;  // see chebyshev_core
        if (out.has_dual)
            for (double& x : out.dual) x /= linf;
    }
    return out;
}

// Small SPD solve; returns false if the factorization breaks down.
bool cholesky_solve(std::vector<double> a, std::vector<double>& b, int n) {
    for (int k = 0; k < n; ++k) {
        double diag = a[std::size_t(k) * n + k];
        for (int j = 0; j < k; ++j) diag -= a[std::size_t(k) * n + j] * a[std::size_t(k) * n + j];
        if (!(diag > 0.0)) return false;
        const double l = std::sqrt(diag);
        a[std::size_t(k) * n + k] = l;
        for (int i = k + 1; i < n; ++i) {
            double v = a[std::size_t(i) * n + k];
            for (int j = 0; j < k; ++j)
                v -= a[std::size_t(i) * n + j] * a[std::size_t(k) * n + j];
            a[std::size_t(i) * n + k] = v / l;
        }
    }
    for (int i = 0; i < n; ++i) {
        double v = b[i];
        for (int j = 0; j < i; ++j) v -= a[std::size_t(i) * n + j] * b[j];
        b[i] = v / a[std::size_t(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        for (int j = i + 1; j < n; ++j) v -= a[std::size_t(j) * n + i] * b[j];
        b[i] = v / a[std::size_t(i) * n + i];
    }
    return true;
}

// Damped Newton on (1/p)||f - Bc||_p^p from the l_2 minimizer. Stops when the
// gradient of c -> ||f - Bc||_p falls below tol.
CoreResult lp_core(const CoreProblem& cp, double p, double tol) {
    const int d = int(cp.f.size());
    const int n = int(cp.cols.size());
    const auto& B = cp.cols;

    auto residual_of = [&](const std::vector<double>& c, std::vector<double>& r) {
        for (int i = 0; i < d; ++i) {
            double v = cp.f[i];
            for (int j = 0; j < n; ++j) v -= c[j] * B[j][i];
            r[i] = v;
        }
    };
    auto phi = [&](const std::vector<double>& r) {
        double s = 0.0;
        for (double x : r) s += std::pow(std::abs(x), p);
        return s / p;
    };

    // l_2 start: solve the normal equations, with a ridge retry on breakdown.
    std::vector<double> c(n, 0.0);
    {
        std::vector<double> g(std::size_t(n) * n, 0.0), rhs(n, 0.0);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                double s = 0.0;
                for (int i = 0; i < d; ++i) s += B[a][i] * B[b][i];
                g[std::size_t(a) * n + b] = g[std::size_t(b) * n + a] = s;
            }
            double s = 0.0;
            for (int i = 0; i < d; ++i) s += B[a][i] * cp.f[i];
            rhs[a] = s;
        }
        std::vector<double> sol = rhs;
        std::vector<double> gr = g;
        if (!cholesky_solve(gr, sol, n)) {
            for (int a = 0; a < n; ++a) g[std::size_t(a) * n + a] += 1e-10;
            sol = rhs;
            if (!cholesky_solve(g, sol, n)) sol.assign(n, 0.0);
        }
        c = sol;
    }

    std::vector<double> r(d), grad(n);
    residual_of(c, r);
    double fval = phi(r);
    const int max_newton = 300;
    bool converged = false;
    for (int iter = 0; iter < max_newton; ++iter) {
        const double rn = norm_vec(r, NormKind::lp(p));
        if (rn <= 1e-15) {
            converged = true;
            break;
        }
        // Gradient of the norm itself (for the stopping test) is -B^T nu with
        // nu the norming-functional coordinates of r.
        double gnorm = 0.0;
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < d; ++i)
                s -= B[j][i] * sgn(r[i]) * std::pow(std::abs(r[i]) / rn, p - 1.0);
            grad[j] = s;
            gnorm += s * s;
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm <= tol) {
            converged = true;
            break;
        }

        // Newton system for the p-th power objective.
        std::vector<double> h(std::size_t(n) * n, 0.0), g_pow(n, 0.0);
        const double wfloor = p < 2.0 ? 1e-10 : 0.0;
        for (int i = 0; i < d; ++i) {
            const double w = (p - 1.0) * std::pow(std::max(std::abs(r[i]), wfloor), p - 2.0);
            const double psi = sgn(r[i]) * std::pow(std::abs(r[i]), p - 1.0);
            for (int a = 0; a < n; ++a) {
                g_pow[a] -= B[a][i] * psi;
                for (int b = a; b < n; ++b) h[std::size_t(a) * n + b] += w * B[a][i] * B[b][i];
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < a; ++b) h[std::size_t(a) * n + b] = h[std::size_t(b) * n + a];
        double ridge = 0.0;
        for (int a = 0; a < n; ++a) ridge = std::max(ridge, h[std::size_t(a) * n + a]);
        ridge = std::max(ridge * 1e-13, 1e-300);
        std::vector<double> dir(n);
        for (int tries = 0; tries < 8; ++tries) {
            std::vector<double> hs = h;
            for (int a = 0; a < n; ++a) hs[std::size_t(a) * n + a] += ridge * tries;
            dir = g_pow;
            for (double& x : dir) x = -x;
            if (cholesky_solve(hs, dir, n)) break;
            if (tries == 7) dir = g_pow;  // steepest descent fallback
        }
        // dir solves H dir = -g_pow, so it descends; Armijo backtracking.
        double slope = 0.0;
        for (int j = 0; j < n; ++j) slope += g_pow[j] * dir[j];
        if (slope >= 0.0) {
            for (int j = 0; j < n; ++j) dir[j] = -g_pow[j];
            slope = 0.0;
            for (int j = 0; j < n; ++j) slope += g_pow[j] * dir[j];
        }
        double alpha = 1.0;
        bool moved = false;
        std::vector<double> cnew(n), rnew(d);
        for (int ls = 0; ls < 60; ++ls) {
            for (int j = 0; j < n; ++j) cnew[j] = c[j] + alpha * dir[j];
            residual_of(cnew, rnew);
            const double fnew = phi(rnew);
            // strict decrease required: at the double-precision floor the
            // Armijo bound rounds to fval and would accept zero progress
            if (fnew < fval && fnew <= fval + 1e-4 * alpha * slope) {
                c = cnew;
                r = rnew;
                fval = fnew;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {  // line search at the numerical floor
            converged = true;
            break;
        }
    }
    if (!converged) throw std::runtime_error("dist_lp: iteration cap exceeded");

    CoreResult out;
    out.coeffs.resize(n);
    for (int j = 0; j < n; ++j) out.coeffs[j] = c[j] * cp.f_scale / cp.col_scale[j];
    out.residual.resize(d);
    for (int i = 0; i < d; ++i) out.residual[i] = r[i] * cp.f_scale;
    out.distance = norm_vec(out.residual, NormKind::lp(p));
    return out;
}

CoreResult run_core(const CoreProblem& cp, const NormKind& k, double tol, bool want_dual) {
    switch (k.tag()) {
        case NormKind::Tag::LInf: return chebyshev_core(cp, want_dual);
        case NormKind::Tag::L1: return l1_core(cp, want_dual);
        case NormKind::Tag::Lp: return lp_core(cp, k.p(), tol);
        default: throw std::logic_error("run_core: unsupported norm kind");
    }
}

ApproxResult solve_banach(const DenseVector& f, const Subspace& v, const NormKind& k,
                          double tol, bool want_dual) {
    if (f.dim() != v.ambient_dim())
        throw std::invalid_argument("dist: dimension mismatch");
    require_finite(f, "dist");

    ApproxResult out;
    out.residual = f;
    out.best_coeffs.assign(v.size(), 0.0);
    if (v.empty()) {
        out.distance = norm(f, k);
        if (want_dual && out.distance > 0.0)
            out.dual_certificate = norming_functional(f, k).coeffs;
        return out;
    }

    const SupportSplit split = split_supports(v.basis(), v.ambient_dim());
    const std::size_t dim = v.ambient_dim();

    if (split.single) {
        std::vector<int> coords(dim);
        std::iota(coords.begin(), coords.end(), 0);
        CoreProblem cp = make_core_problem(f, v.basis(), coords, split.comps[0].basis_ids);
        CoreResult cr = run_core(cp, k, tol, want_dual);
        out.distance = cr.distance;
        for (std::size_t t = 0; t < split.comps[0].basis_ids.size(); ++t)
            out.best_coeffs[split.comps[0].basis_ids[t]] = cr.coeffs[t];
        out.residual = DenseVector{cr.residual};
        if (want_dual && cr.has_dual) out.dual_certificate = DenseVector{cr.dual};
        return out;
    }

    // Solve each support component independently and combine.
    std::vector<CoreResult> results;
    results.reserve(split.comps.size());
    for (const auto& comp : split.comps) {
        CoreProblem cp = make_core_problem(f, v.basis(), comp.coords, comp.basis_ids);
        results.push_back(run_core(cp, k, tol, want_dual));
    }

    DenseVector residual(dim);
    for (std::size_t ci = 0; ci < split.comps.size(); ++ci) {
        const auto& comp = split.comps[ci];
        for (std::size_t t = 0; t < comp.coords.size(); ++t)
            residual[comp.coords[t]] = results[ci].residual[t];
        for (std::size_t t = 0; t < comp.basis_ids.size(); ++t)
            out.best_coeffs[comp.basis_ids[t]] = results[ci].coeffs[t];
    }
    for (int i : split.loose_coords) residual[i] = f[i];

    double dist = 0.0;
    int arg_comp = -1;  // l_inf: which component / loose coord achieves the max
    int arg_loose = -1;
    switch (k.tag()) {
        case NormKind::Tag::LInf: {
            for (std::size_t ci = 0; ci < results.size(); ++ci) {
                if (results[ci].distance > dist) {
                    dist = results[ci].distance;
                    arg_comp = int(ci);
                }
            }
            for (int i : split.loose_coords) {
                if (std::abs(f[i]) > dist) {
                    dist = std::abs(f[i]);
                    arg_comp = -1;
                    arg_loose = i;
                }
            }
            break;
        }
        case NormKind::Tag::L1: {
            for (const auto& cr : results) dist += cr.distance;
            for (int i : split.loose_coords) dist += std::abs(f[i]);
            break;
        }
        case NormKind::Tag::Lp: {
            const double p = k.p();
            double s = 0.0;
            for (const auto& cr : results) s += std::pow(cr.distance, p);
            for (int i : split.loose_coords) s += std::pow(std::abs(f[i]), p);
            dist = std::pow(s, 1.0 / p);
            break;
        }
        default: throw std::logic_error("solve_banach: unsupported norm kind");
    }

    out.distance = dist;
    out.residual = std::move(residual);

    if (want_dual && dist > 0.0) {
        DenseVector lam(dim);
        if (k.tag() == NormKind::Tag::LInf) {
            // The achieving component's functional, embedded; zero elsewhere.
            if (arg_loose >= 0) {
                lam[arg_loose] = sgn(f[arg_loose]);
            } else if (arg_comp >= 0 && results[arg_comp].has_dual) {
                const auto& comp = split.comps[arg_comp];
                for (std::size_t t = 0; t < comp.coords.size(); ++t)
                    lam[comp.coords[t]] = results[arg_comp].dual[t];
            }
        } else if (k.tag() == NormKind::Tag::L1) {
            for (std::size_t ci = 0; ci < results.size(); ++ci) {
                if (!results[ci].has_dual) continue;
                const auto& comp = split.comps[ci];
                for (std::size_t t = 0; t < comp.coords.size(); ++t)
                    lam[comp.coords[t]] = results[ci].dual[t];
            }
            for (int i : split.loose_coords) lam[i] = sgn(f[i]);
        }
        if (norm(lam, k.dual()) > 0.0) out.dual_certificate = std::move(lam);
    }
    return out;
}

}  // namespace

ApproxResult dist_linf(const DenseVector& f, const Subspace& v, double tol, bool want_dual) {
    return solve_banach(f, v, NormKind::linf(), tol, want_dual);
}

ApproxResult dist_l1(const DenseVector& f, const Subspace& v, double tol, bool want_dual) {
    return solve_banach(f, v, NormKind::l1(), tol, want_dual);
}

ApproxResult dist_lp(const DenseVector& f, const Subspace& v, double p, double tol) {
    return solve_banach(f, v, NormKind::lp(p), tol, false);
}

ApproxResult dist(const DenseVector& f, const Subspace& v, const NormKind& k, double tol,
                  bool want_dual) {
    if (k.is_hilbert()) return dist_hilbert(f, v);
    return solve_banach(f, v, k, tol, want_dual);
}

}  // namespace seqgreedy
