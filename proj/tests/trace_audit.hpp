// Shared trace audits: the structural properties every weak greedy trace must
// satisfy (sigma monotonicity, P1, P2 in Hilbert mode, the |a_ij| <= sigma_j
// entry bounds in Banach mode). Used by both the unit and acceptance suites.
#pragma once

#include <cmath>
#include <string>

#include "seqgreedy/greedy.hpp"

namespace seqgreedy::testing {

struct AuditResult {
    bool ok = true;
    std::string why;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            why = msg;
        }
    }
};

inline AuditResult audit_trace(const GreedyTrace& t, double tol) {
    AuditResult r;
    for (std::size_t n = 1; n < t.sigmas.size(); ++n)
        if (t.sigmas[n] > t.sigmas[n - 1] + tol)
            r.fail("sigmas increase at n=" + std::to_string(n));

    const std::size_t steps = t.selected.size();
    for (std::size_t n = 0; n < steps && n < t.a.size(); ++n) {
        const double diag = std::abs(t.a[n][n]);
        const double sigma = t.sigmas[n];
        if (t.gamma * sigma > diag + tol)
            r.fail("P1 lower fails at n=" + std::to_string(n));
        if (diag > sigma + tol) r.fail("P1 upper fails at n=" + std::to_string(n));
    }

    if (t.hilbert_mode) {
        for (std::size_t m = 0; m < t.a.size(); ++m) {
            double tail = 0.0;
            for (std::size_t n = m + 1; n-- > 0;) {
                tail += t.a[m][n] * t.a[m][n];
                if (tail > t.sigmas[n] * t.sigmas[n] + tol)
                    r.fail("P2 fails at (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                           ")");
            }
        }
    } else {
        for (std::size_t i = 0; i < t.a.size(); ++i)
            for (std::size_t j = 0; j + 1 <= i; ++j)
                if (std::abs(t.a[i][j]) > t.sigmas[j] + tol)
                    r.fail("entry bound fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
        if (t.max_upper_entry > tol)
            r.fail("upper-triangle annihilation residue " + std::to_string(t.max_upper_entry));
    }
    return r;
}

// Default tolerance scales with the trace's recorded solver tolerance.
inline AuditResult audit_trace(const GreedyTrace& t) {
    return audit_trace(t, 100.0 * t.solver_tol);
}

}  // namespace seqgreedy::testing
