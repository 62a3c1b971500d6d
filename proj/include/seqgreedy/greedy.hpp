// Weak greedy driver: starting from the element of (near-)maximal norm,
// repeatedly selects an element whose distance to the current span is within
// a factor gamma of the worst case, recording the sigma_n sequence and the
// lower-triangular matrix A that encodes the run (Gram-Schmidt coefficients
// in Hilbert mode, norming-functional evaluations in Banach mode).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqgreedy/approx.hpp"
#include "seqgreedy/seqspace.hpp"
#include "seqgreedy/sets.hpp"

namespace seqgreedy {

enum class SelectionPolicy { Argmax, FirstAboveThreshold, MinimalAboveThreshold };
enum class GreedyMode { Auto, Hilbert, Banach };

SelectionPolicy policy_from_label(const std::string& s);
std::string policy_label(SelectionPolicy p);

struct WeakGreedyParams {
    double gamma = 1.0;
    int n_max = 0;  // 0: run to |F|
    SelectionPolicy policy = SelectionPolicy::Argmax;
    double termination_eps = 1e-13;
    GreedyMode mode = GreedyMode::Auto;  // Auto: Hilbert path iff the norm is Hilbert
    double solver_tol = kSolverTol;
    int jobs = 1;  // distance-sweep threads; results are independent of this
};

// Annihilation tolerance: if the norming functional of the residual fails to
// annihilate the current span by more than this (relative), the functional is
// re-solved from the LP dual (l_1 / l_inf), and the trace is flagged
// approximate if that also fails.
inline constexpr double kAnnihilationTol = 1e-8;

struct GreedyTrace {
    std::vector<int> selected;
    std::vector<double> sigmas;  // sigmas[n] = sigma_n(F), one per sweep
    // Lower-triangular A; row i has i+1 entries. Hilbert: a_ij = <f_i, f*_j>.
    // Banach: a_ij = lambda_j(f_i).
    std::vector<std::vector<double>> a;
    bool hilbert_mode = true;
    std::vector<DenseVector> ortho;        // Hilbert mode
    std::vector<Functional> functionals;   // Banach mode
    std::vector<std::vector<double>> per_step_distances;  // [n][element]
    bool terminated = false;               // sigma <= eps seen, or set exhausted
    bool functional_approximate = false;   // LP-dual recovery also failed somewhere
    int functional_recovered = 0;          // steps that needed the LP dual
    double max_upper_entry = 0.0;          // max |lambda_j(f_i)| over j > i (Banach)
    double solver_tol = kSolverTol;
    double termination_eps = 1e-13;
    double gamma = 1.0;
    SelectionPolicy policy = SelectionPolicy::Argmax;
    NormKind norm_kind = NormKind::hilbert();

    // sigma_n with zero continuation after termination; throws for indices
    // beyond an n_max-capped (non-terminated) run where the value is unknown.
    double sigma_at(int n) const;
    // sigma_at for every n in [0, n_to].
    std::vector<double> sigmas_padded(int n_to) const;
};

// Runs the weak greedy algorithm on F. Fails on an empty set; solver errors
// propagate annotated with the step index.
GreedyTrace run_weak_greedy(const CompactSet& f, const WeakGreedyParams& params);

// Mode-checked access to the recorded matrix A.
const std::vector<std::vector<double>>& extract_a_hilbert(const GreedyTrace& t);
const std::vector<std::vector<double>>& extract_a_banach(const GreedyTrace& t);

// Trace export: sigmas.csv (n, sigma_n), A.csv (i, j, a_ij), summary text.
void write_sigmas_csv(const GreedyTrace& t, const std::string& path);
void write_a_csv(const GreedyTrace& t, const std::string& path);
std::string trace_summary(const GreedyTrace& t);

}  // namespace seqgreedy
