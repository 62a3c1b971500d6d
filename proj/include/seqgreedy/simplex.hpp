// Small dense tableau simplex for the best-approximation LPs.
// Problem form: min c^T x  s.t.  A x = b, x >= 0, starting from a supplied
// feasible basis. Dantzig pricing with a Bland's-rule fallback once pivots
// stall, which rules out cycling. Sized for a few hundred rows at most.
#pragma once

#include <cstddef>
#include <vector>

namespace seqgreedy::lp {

enum class Status { Optimal, Unbounded, IterationLimit };

struct Problem {
    int rows = 0;                 // m
    int cols = 0;                 // n (structural + slack variables)
    std::vector<double> a;        // row-major m x n
    std::vector<double> b;        // length m, must be >= 0 for the start basis
    std::vector<double> cost;     // length n
    std::vector<int> basis;       // length m; basis[i] = variable basic in row i
                                  // basis columns must form a +identity in a

    double& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    double at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

struct Solution {
    Status status = Status::Optimal;
    double objective = 0.0;
    std::vector<double> x;             // length cols
    std::vector<double> reduced_cost;  // final cost row; duals recoverable from
                                       // columns that were +-e_i in the input
    std::vector<int> basis;
    int iterations = 0;
};

// max_iters caps pivots (default per the solver contract).
Solution solve(const Problem& p, int max_iters = 100000);

}  // namespace seqgreedy::lp
