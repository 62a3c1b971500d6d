// Kolmogorov width estimators. Everything here produces certified one-sided
// bounds: the width definition is an infimum over subspaces, so any concrete
// subspace gives an upper bound, and the brute-force direction sweep gives a
// lower bound for n = 1 from its grid resolution.
#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "seqgreedy/greedy.hpp"
#include "seqgreedy/sets.hpp"
#include "seqgreedy/width_types.hpp"

namespace seqgreedy {

// One-sided Jacobi SVD on the columns of a dense matrix.
struct SvdResult {
    std::vector<DenseVector> left;   // orthonormal, by descending singular value
    std::vector<double> singular;    // descending
};
SvdResult jacobi_svd(const std::vector<DenseVector>& columns);

// Snapshot upper bound: distance of F to its own top-n left singular
// subspace (Hilbert norm only). n = 0 gives the max element norm.
double width_upper_svd(const CompactSet& f, int n);

// The dyadic-blocks upper-bound device: E holds the coordinate vectors
// e_0..e_{2^n - 1} together with, for k = 1..n, a random Gaussian subspace of
// dimension 2^{n-k} supported on dyadic block n+k (coordinates
// [2^{n+k-1}, 2^{n+k}-1]), so dim span E <= 2^{n+1} =: N. Each trial draws
// fresh subspaces; the minimum over trials is the certified bound, the median
// is reported for trend tables.
struct RandomWidthResult {
    double min_value = 0.0;
    double median_value = 0.0;
    std::vector<double> per_trial;
    int subspace_dim = 0;  // N
};
RandomWidthResult width_upper_random_subspace(const CompactSet& f, int n_level, int trials,
                                              std::uint64_t seed);

// Angular grid sweep over unit directions for d_1 (ambient dim <= 4 only).
// upper = best grid value; lower = upper minus a Lipschitz slack derived from
// the grid spacing and the element norms.
struct BruteForceWidth {
    double lower = 0.0;
    double upper = 0.0;
    double slack = 0.0;
};
BruteForceWidth width_brute_force(const CompactSet& f, int n, int grid);

enum class WidthMethod { Known, Svd, BruteForce, SigmaUpper };

// Merges the selected width routes into one sequence: d_0 is always emitted
// exactly (max element norm), uppers are made non-increasing by a running
// minimum, and the greedy sigmas serve as upper bounds (d_n <= sigma_n, valid
// in any norm) when a trace is supplied.
WidthSequence assemble_widths(const CompactSet& f, int n_max,
                              const std::set<WidthMethod>& methods,
                              const GreedyTrace* trace = nullptr, int brute_grid = 64);

void write_widths_csv(const WidthSequence& w, const std::string& path);

}  // namespace seqgreedy
