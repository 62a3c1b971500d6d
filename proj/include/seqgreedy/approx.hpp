// Best-approximation solvers: exact orthogonal projection for the Hilbert
// norm, LP-based solvers for l_1 / l_inf, and damped Newton for smooth l_p.
// A Subspace is immutable once built except through append(); distance
// evaluations against it are pure and safe to run concurrently.
#pragma once

#include <optional>
#include <vector>

#include "seqgreedy/seqspace.hpp"

namespace seqgreedy {

// Rank tolerance for declaring a vector linearly dependent in Gram-Schmidt
// (relative to the input norm).
inline constexpr double kRankTol = 1e-10;

// Default gradient / objective tolerance and iteration cap for iterative
// distance solvers.
inline constexpr double kSolverTol = 1e-9;
inline constexpr int kSolverIterCap = 100000;

struct GramSchmidtResult {
    std::optional<DenseVector> vec;  // nullopt: input is dependent on ortho
    std::vector<double> coeffs;      // projections onto the existing ortho set
    double residual_norm = 0.0;      // l2 norm of the orthogonal remainder
};

// Classical Gram-Schmidt with one re-orthogonalization pass before deciding
// dependence / normalizing ("twice is enough").
GramSchmidtResult gram_schmidt_extend(const std::vector<DenseVector>& ortho,
                                      const DenseVector& f);

// Span of a list of vectors. When built with an orthonormal companion basis
// (Hilbert mode) it also records the expansion of each basis vector over the
// orthonormal vectors so projections can be mapped back to basis coefficients.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim, bool build_ortho = false)
        : dim_(ambient_dim), build_ortho_(build_ortho) {}

    static Subspace from_vectors(const std::vector<DenseVector>& vs, bool build_ortho);

    // Appends a spanning vector; extends the orthonormal basis when enabled.
    // Returns the Gram-Schmidt data for the appended vector (Hilbert mode) or
    // an empty result otherwise.
    GramSchmidtResult append(const DenseVector& f);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return basis_.size(); }
    bool empty() const { return basis_.empty(); }
    std::size_t dim_span() const { return build_ortho_ ? ortho_.size() : rank_estimate_; }
    bool has_ortho() const { return build_ortho_; }

    const std::vector<DenseVector>& basis() const { return basis_; }
    const std::vector<DenseVector>& ortho() const { return ortho_; }
    // rcoef()[j] = coefficients of basis()[j] over ortho() (Hilbert mode).
    const std::vector<std::vector<double>>& rcoef() const { return rcoef_; }
    // pivot()[j] = index of the ortho vector created by basis j, or -1.
    const std::vector<int>& pivot() const { return pivot_; }

private:
    std::size_t dim_;
    bool build_ortho_;
    std::vector<DenseVector> basis_;
    std::vector<DenseVector> ortho_;
    std::vector<std::vector<double>> rcoef_;
    std::vector<int> pivot_;
    std::size_t rank_estimate_ = 0;
};

struct ApproxResult {
    double distance = 0.0;
    std::vector<double> best_coeffs;  // over Subspace::basis()
    DenseVector residual;
    // Norm-one annihilating functional attaining the distance, recovered from
    // the LP dual when requested (l_1 / l_inf solvers only).
    std::optional<DenseVector> dual_certificate;
};

// ||f - P_V f||_2 via the orthonormal basis; requires has_ortho().
ApproxResult dist_hilbert(const DenseVector& f, const Subspace& v);

// min_c ||f - B c||_inf as an LP, solved to additive accuracy tol; the
// returned distance is the primal feasible value at the recovered c.
ApproxResult dist_linf(const DenseVector& f, const Subspace& v, double tol = kSolverTol,
                       bool want_dual = false);

// min_c ||f - B c||_1 via the split positive/negative-part LP.
ApproxResult dist_l1(const DenseVector& f, const Subspace& v, double tol = kSolverTol,
                     bool want_dual = false);

// min_c ||f - B c||_p (1 < p < inf) by damped Newton started at the l_2
// minimizer, run until the norm-gradient drops below tol.
ApproxResult dist_lp(const DenseVector& f, const Subspace& v, double p,
                     double tol = kSolverTol);

// Dispatch on the norm kind.
ApproxResult dist(const DenseVector& f, const Subspace& v, const NormKind& k,
                  double tol = kSolverTol, bool want_dual = false);

}  // namespace seqgreedy
