// Flat INI-style experiment configuration: [section] headers, key = value
// lines, '#' or ';' comments. Sections and keys are validated strictly so
// typos surface as config errors (exit code 2) rather than silent defaults.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqgreedy/bounds.hpp"
#include "seqgreedy/greedy.hpp"
#include "seqgreedy/sets.hpp"
#include "seqgreedy/widths.hpp"

namespace seqgreedy {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IniFile {
public:
    static IniFile parse_file(const std::string& path);
    static IniFile parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has_section(const std::string& s) const { return sections_.count(s) != 0; }
    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

struct ExperimentConfig {
    std::optional<std::uint64_t> master_seed;
    CompactSetSpec set_spec;
    NormKind norm_kind = NormKind::hilbert();
    WeakGreedyParams greedy;
    std::set<WidthMethod> width_methods;
    int width_n_max = 32;
    int brute_grid = 64;
    std::vector<std::string> checks;  // theorem_hilbert, theorem_banach, c1_i, ...
    int sweep_k_max = 6;
    RateParams rate;
    int n_check_max = 32;
    bool reference_rates = false;  // emit the prior-work comparison curves
    std::string out_dir = "out";
    bool export_elements = false;

    // Parses and validates; seed_override replaces [experiment] seed.
    static ExperimentConfig load(const std::string& path,
                                 std::optional<std::uint64_t> seed_override = std::nullopt);
    static ExperimentConfig from_ini(const IniFile& ini,
                                     std::optional<std::uint64_t> seed_override = std::nullopt);
};

std::vector<double> parse_double_list(const std::string& s, const std::string& what);

}  // namespace seqgreedy
