#include "seqgreedy/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace seqgreedy::lp {

namespace {
constexpr double kPivotTol = 1e-11;   // entering / pivot element threshold
constexpr double kRatioTol = 1e-12;   // degenerate-step threshold
constexpr int kStallLimit = 60;       // degenerate pivots before Bland's rule
}  // namespace

Solution solve(const Problem& p, int max_iters) {
    const int m = p.rows, n = p.cols;
    if (int(p.basis.size()) != m || int(p.b.size()) != m || int(p.cost.size()) != n)
        throw std::invalid_argument("lp::solve: inconsistent problem sizes");

    // Working tableau: m constraint rows plus the reduced-cost row; column n
    // holds the rhs.
    const int w = n + 1;
    std::vector<double> t(std::size_t(m + 1) * w, 0.0);
    auto at = [&](int i, int j) -> double& { return t[std::size_t(i) * w + j]; };

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = p.at(i, j);
        at(i, n) = p.b[i];
    }
    for (int j = 0; j < n; ++j) at(m, j) = p.cost[j];
    at(m, n) = 0.0;

    auto pivot = [&](int r, int c) {
        const double inv = 1.0 / at(r, c);
        for (int j = 0; j <= n; ++j) at(r, j) *= inv;
        at(r, c) = 1.0;
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            const double f = at(i, c);
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) at(i, j) -= f * at(r, j);
            at(i, c) = 0.0;
        }
    };

    // Bring the supplied basis into canonical form (identity columns, priced
    // cost row); the basic solution it encodes must be feasible.
    std::vector<int> basis = p.basis;
    std::vector<char> in_basis(n, 0);
    for (int i = 0; i < m; ++i) {
        if (in_basis[basis[i]])
            throw std::invalid_argument("lp::solve: repeated basis variable");
        in_basis[basis[i]] = 1;
        if (std::abs(at(i, basis[i])) < 1e-12)
            throw std::invalid_argument("lp::solve: singular start basis");
        pivot(i, basis[i]);
    }
    for (int i = 0; i < m; ++i)
        if (at(i, n) < -1e-9)
            throw std::invalid_argument("lp::solve: start basis is infeasible");

    bool bland = false;
    int stalled = 0;
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        // Entering column.
        int enter = -1;
        if (!bland) {
            double best = -kPivotTol;
            for (int j = 0; j < n; ++j) {
                if (!in_basis[j] && at(m, j) < best) {
                    best = at(m, j);
                    enter = j;
                }
            }
        } else {
            for (int j = 0; j < n; ++j) {
                if (!in_basis[j] && at(m, j) < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter < 0) break;  // optimal

        // Ratio test; ties go to the smallest basis index (anti-cycling).
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            const double aij = at(i, enter);
            if (aij > kPivotTol) {
                const double ratio = std::max(0.0, at(i, n)) / aij;
                if (ratio < best_ratio - kRatioTol ||
                    (ratio < best_ratio + kRatioTol && (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = std::min(best_ratio, ratio);
                    leave = i;
                }
            }
        }
        if (leave < 0) {
            Solution s;
            s.status = Status::Unbounded;
            s.iterations = iter;
            return s;
        }
        if (best_ratio <= kRatioTol) {
            if (++stalled >= kStallLimit) bland = true;
        } else {
            stalled = 0;
            bland = false;
        }

        pivot(leave, enter);
        in_basis[basis[leave]] = 0;
        in_basis[enter] = 1;
        basis[leave] = enter;
    }

    Solution s;
    s.status = (iter >= max_iters) ? Status::IterationLimit : Status::Optimal;
    s.iterations = iter;
    s.objective = -at(m, n);
    s.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) s.x[basis[i]] = std::max(0.0, at(i, n));
    s.reduced_cost.assign(n, 0.0);
    for (int j = 0; j < n; ++j) s.reduced_cost[j] = at(m, j);
    s.basis = std::move(basis);
    return s;
}

}  // namespace seqgreedy::lp
