// Kolmogorov width bookkeeping shared by the set generators and the width
// estimators: per-n values tagged exact / upper / lower with provenance.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace seqgreedy {

enum class WidthTag { Exact, Upper, Lower };

struct WidthEntry {
    int n = 0;
    double value = 0.0;
    WidthTag tag = WidthTag::Upper;
    std::string method;
};

struct WidthSequence {
    std::vector<WidthEntry> entries;

    void add(int n, double value, WidthTag tag, std::string method) {
        entries.push_back({n, value, tag, std::move(method)});
    }

    // Tightest upper bound (exact values count) at n, if any.
    std::optional<double> upper_at(int n) const {
        std::optional<double> best;
        for (const auto& e : entries) {
            if (e.n != n || e.tag == WidthTag::Lower) continue;
            if (!best || e.value < *best) best = e.value;
        }
        return best;
    }

    // Largest lower bound (exact values count) at n, if any.
    std::optional<double> lower_at(int n) const {
        std::optional<double> best;
        for (const auto& e : entries) {
            if (e.n != n || e.tag == WidthTag::Upper) continue;
            if (!best || e.value > *best) best = e.value;
        }
        return best;
    }
};

const char* width_tag_label(WidthTag t);

}  // namespace seqgreedy
