// Executable inequality checks. Every check reports LHS/RHS in natural-log
// space (products of squared sigmas underflow linearly for K in the tens),
// the slack, and pass/fail against a recorded relative tolerance. Width
// inputs are upper bounds; each right-hand side here is increasing in d, so
// the checks stay valid under that substitution.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqgreedy/greedy.hpp"
#include "seqgreedy/seqspace.hpp"
#include "seqgreedy/width_types.hpp"

namespace seqgreedy {

inline constexpr double kReportTol = 1e-10;  // relative pass tolerance

struct BoundReport {
    std::string name;
    double lhs_log = 0.0;  // -inf encodes a zero side
    double rhs_log = 0.0;
    double slack_log = 0.0;  // rhs_log - lhs_log (+inf when lhs is zero)
    bool pass = false;
    bool hypothesis_met = true;  // false: inputs fail the corollary hypothesis
    // Context for the CSV schema; -1 marks fields that do not apply.
    int n = -1, k = -1, m = -1;
    double gamma = 1.0;
    std::string notes;
};

BoundReport make_report(std::string name, double lhs_log, double rhs_log, double tol_rel,
                        std::string notes = "");

// Lemma instance: K x K lower-triangular G and an orthonormal basis of an
// m-dimensional subspace W of R^K, 1 <= m < K.
struct LemmaInstance {
    std::vector<std::vector<double>> g;  // row-major K x K
    std::vector<DenseVector> w_basis;
};

// prod g_ii^2 <= {sum ||P g_i||^2 / m}^m {sum ||g_i - P g_i||^2 / (K-m)}^{K-m}
BoundReport lemma1_check(const LemmaInstance& inst, double tol_rel = kReportTol);

// Random instance for fuzzing: Gaussian lower-triangular G, Gaussian W basis
// orthonormalized, K in [2, k_max], m in [1, K-1].
LemmaInstance random_lemma_instance(class Rng& rng, int k_max);

// prod_{i=1..K} sigma_{N+i}^2 <= gamma^{-2K} (K/m)^m (K/(K-m))^{K-m}
//                                sigma_{N+1}^{2m} d_m^{2K-2m}
BoundReport theorem_hilbert_check(const std::vector<double>& sigmas, const WidthSequence& d_upper,
                                  int n, int k, int m, double gamma,
                                  double tol_rel = kReportTol);

// prod sigma_{N+i}^2 <= 2^K K^{K-m} gamma^{-2K} (sum sigma_{N+i}^2)^m d_m^{2K-2m}
BoundReport theorem_banach_check(const std::vector<double>& sigmas, const WidthSequence& d_upper,
                                 int n, int k, int m, double gamma,
                                 double tol_rel = kReportTol);

enum class CorollaryCheck { C1_i, C1_ii, C1_iii, C2_i, C2_ii, C2_iii };
CorollaryCheck corollary_from_label(const std::string& s);
std::string corollary_label(CorollaryCheck c);

// Rate hypothesis parameters. The derived constants are fixed by the
// statements being checked and are never free:
//   c1       = 2^{-1-2 alpha} c0                       (both exponential cases)
//   C1 (Hilbert polynomial)  = 2^{5 alpha + 1} gamma^{-2} C0
//   C1 (Banach polynomial)   = max{ C0 4^{4 alpha+1} gamma^{-4}
//                                   ((2 beta+1)/(2 beta))^alpha,
//                                   max_{n=1..7} n^{alpha-beta-1/2} }
struct RateParams {
    double alpha = 1.0;
    std::optional<double> beta;  // required for C2_ii: 0 < beta < min(alpha, 1/2)
    double c_big0 = 1.0;         // C0
    double c_small0 = 1.0;       // c0
    double gamma = 1.0;
    double c1_scale = 1.0;       // testing override on the derived C1
    std::optional<double> c_small1_override;  // exploratory c1' for C2_iii

    double c_small1() const;
    double c_big1_hilbert() const;
    double c_big1_banach() const;
};

// Per-n corollary reports over n in [n_from, n_to]. sigma(n) must be
// available on the range (use GreedyTrace::sigmas_padded). Rate-hypothesis
// checks certify d_n <= C0 n^{-alpha} (or the exponential envelope) pointwise
// on the supplied range first; when certification fails the reports carry
// hypothesis_met = false (an unmet hypothesis, not a failed comparison).
std::vector<BoundReport> corollary_checks(const std::vector<double>& sigmas,
                                          const WidthSequence& d_upper, const RateParams& rate,
                                          CorollaryCheck which, int n_from, int n_to,
                                          double tol_rel = kReportTol);

// Prior-work comparison curves (no pass/fail semantics):
// "bmppt": C n 2^n d_n (needs a width value), "poly1": C0 n^{-alpha},
// "poly2": C0 exp(-c0 n^{alpha/(alpha+1)}).
struct ReferenceRatePoint {
    std::string name;
    double value;
};
std::vector<ReferenceRatePoint> reference_rates(const RateParams& rate, int n,
                                                std::optional<double> d_n = std::nullopt);

void write_bounds_csv(const std::vector<BoundReport>& reports, const std::string& path);

}  // namespace seqgreedy
