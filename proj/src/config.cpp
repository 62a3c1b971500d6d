#include "seqgreedy/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "seqgreedy/csv.hpp"
#include "seqgreedy/rng.hpp"

namespace seqgreedy {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + what + ": '" + s + "'");
    }
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for " + what + ": '" + s + "'");
    }
}

bool to_bool(const std::string& s, const std::string& what) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("bad boolean value for " + what + ": '" + s + "'");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Strict key-set validation per section.
void check_keys(const IniFile& ini, const std::string& section,
                const std::set<std::string>& allowed) {
    auto it = ini.sections().find(section);
    if (it == ini.sections().end()) return;
    for (const auto& [k, v] : it->second) {
        if (allowed.count(k)) continue;
        if (section == "set" && k.rfind("row", 0) == 0) continue;  // from_matrix rows
        throw ConfigError("unknown key '" + k + "' in section [" + section + "]");
    }
}

}  // namespace

std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const auto& tok : split_list(s)) out.push_back(to_double(tok, what));
    if (out.empty()) throw ConfigError("empty list for " + what);
    return out;
}

IniFile IniFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

IniFile IniFile::parse_string(const std::string& text, const std::string& origin) {
    IniFile f;
    std::string section;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            f.sections_[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside a section");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (!f.sections_[section].emplace(key, val).second)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                              "'");
    }
    return f;
}

std::optional<std::string> IniFile::get(const std::string& section,
                                        const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

ExperimentConfig ExperimentConfig::load(const std::string& path,
                                        std::optional<std::uint64_t> seed_override) {
    return from_ini(IniFile::parse_file(path), seed_override);
}

ExperimentConfig ExperimentConfig::from_ini(const IniFile& ini,
                                            std::optional<std::uint64_t> seed_override) {
    for (const auto& [name, _] : ini.sections()) {
        static const std::set<std::string> known{"experiment", "set",    "norm",
                                                 "greedy",     "widths", "bounds",
                                                 "output"};
        if (!known.count(name)) throw ConfigError("unknown section [" + name + "]");
    }
    check_keys(ini, "experiment", {"seed"});
    check_keys(ini, "set",
               {"kind", "x", "rule", "count", "alpha", "c_big0", "c_small0", "levels", "gamma",
                "sigmas", "preset", "size", "seed", "dim", "mu_min", "mu_max"});
    check_keys(ini, "norm", {"kind", "p"});
    check_keys(ini, "greedy",
               {"gamma", "n_max", "policy", "termination_eps", "mode", "solver_tol"});
    check_keys(ini, "widths", {"methods", "n_max", "brute_grid"});
    check_keys(ini, "bounds",
               {"checks", "k_max", "alpha", "beta", "c_big0", "c_small0", "c1_scale",
                "c1_override", "n_check_max", "reference_rates"});
    check_keys(ini, "output", {"dir", "export_elements"});

    ExperimentConfig cfg;
    if (auto s = ini.get("experiment", "seed"))
        cfg.master_seed = std::uint64_t(to_int(*s, "experiment.seed"));
    if (seed_override) cfg.master_seed = seed_override;

    // [norm]
    if (!ini.has_section("norm")) throw ConfigError("missing [norm] section");
    const std::string nk = ini.get("norm", "kind").value_or("hilbert");
    if (nk == "hilbert") {
        cfg.norm_kind = NormKind::hilbert();
    } else if (nk == "l1") {
        cfg.norm_kind = NormKind::l1();
    } else if (nk == "linf") {
        cfg.norm_kind = NormKind::linf();
    } else if (nk == "lp") {
        auto p = ini.get("norm", "p");
        if (!p) throw ConfigError("norm.kind = lp requires norm.p");
        cfg.norm_kind = NormKind::lp(to_double(*p, "norm.p"));
    } else {
        throw ConfigError("unknown norm kind: " + nk);
    }

    // [set]
    if (!ini.has_section("set")) throw ConfigError("missing [set] section");
    const auto kind = ini.get("set", "kind");
    if (!kind) throw ConfigError("missing set.kind");
    if (*kind == "diagonal") {
        DiagonalSpec d;
        if (auto x = ini.get("set", "x")) {
            d.x = parse_double_list(*x, "set.x");
        } else if (auto rule = ini.get("set", "rule")) {
            const int count = int(to_int(ini.get("set", "count").value_or("64"), "set.count"));
            const double alpha = to_double(ini.get("set", "alpha").value_or("1"), "set.alpha");
            const double c0 =
                to_double(ini.get("set", "c_big0").value_or("1"), "set.c_big0");
            const double cs =
                to_double(ini.get("set", "c_small0").value_or("1"), "set.c_small0");
            for (int j = 0; j < count; ++j) {
                if (*rule == "poly")
                    d.x.push_back(c0 * std::pow(double(j + 1), -alpha));
                else if (*rule == "exp")
                    d.x.push_back(c0 * std::exp(-cs * std::pow(double(j), alpha)));
                else
                    throw ConfigError("unknown diagonal rule: " + *rule);
            }
        } else {
            throw ConfigError("diagonal set needs set.x or set.rule");
        }
        cfg.set_spec = std::move(d);
    } else if (*kind == "dyadic_blocks") {
        DyadicBlocksSpec d;
        d.alpha = to_double(ini.get("set", "alpha").value_or("1"), "set.alpha");
        d.levels = int(to_int(ini.get("set", "levels").value_or("5"), "set.levels"));
        cfg.set_spec = d;
    } else if (*kind == "from_matrix") {
        const double gamma = to_double(ini.get("set", "gamma").value_or("1"), "set.gamma");
        if (ini.get("set", "preset").value_or("") == "random") {
            const int size = int(to_int(ini.get("set", "size").value_or("12"), "set.size"));
            std::uint64_t seed;
            if (auto s = ini.get("set", "seed")) {
                seed = std::uint64_t(to_int(*s, "set.seed"));
            } else if (cfg.master_seed) {
                seed = derive_stream(*cfg.master_seed, "set");
            } else {
                throw ConfigError("from_matrix preset=random needs set.seed or experiment.seed");
            }
            cfg.set_spec = make_p1p2_matrix(size, gamma, seed);
        } else {
            FromMatrixSpec fm;
            fm.gamma = gamma;
            for (int i = 0;; ++i) {
                auto row = ini.get("set", "row" + std::to_string(i));
                if (!row) break;
                fm.a.push_back(parse_double_list(*row, "set.row" + std::to_string(i)));
            }
            if (fm.a.empty()) throw ConfigError("from_matrix needs row0..rowN or preset=random");
            const auto sig = ini.get("set", "sigmas");
            if (!sig) throw ConfigError("from_matrix needs set.sigmas (list or 'tight')");
            if (*sig == "tight") {
                std::vector<std::vector<double>> ragged;
                for (std::size_t i = 0; i < fm.a.size(); ++i)
                    ragged.emplace_back(fm.a[i].begin(),
                                        fm.a[i].begin() + long(std::min(fm.a[i].size(), i + 1)));
                fm.sigmas = tight_sigmas(ragged);
            } else {
                fm.sigmas = parse_double_list(*sig, "set.sigmas");
            }
            cfg.set_spec = std::move(fm);
        }
    } else if (*kind == "random_ball") {
        RandomBallSpec rb;
        rb.dim = int(to_int(ini.get("set", "dim").value_or("8"), "set.dim"));
        rb.count = int(to_int(ini.get("set", "count").value_or("16"), "set.count"));
        if (auto s = ini.get("set", "seed")) {
            rb.seed = std::uint64_t(to_int(*s, "set.seed"));
        } else if (cfg.master_seed) {
            rb.seed = derive_stream(*cfg.master_seed, "set");
        } else {
            throw ConfigError("random_ball needs set.seed or experiment.seed");
        }
        cfg.set_spec = rb;
    } else if (*kind == "parametric_surrogate") {
        ParametricSurrogateSpec ps;
        ps.dim = int(to_int(ini.get("set", "dim").value_or("8"), "set.dim"));
        ps.count = int(to_int(ini.get("set", "count").value_or("32"), "set.count"));
        ps.mu_min = to_double(ini.get("set", "mu_min").value_or("0"), "set.mu_min");
        ps.mu_max = to_double(ini.get("set", "mu_max").value_or("1"), "set.mu_max");
        cfg.set_spec = ps;
    } else {
        throw ConfigError("unknown set kind: " + *kind);
    }

    // [greedy]
    cfg.greedy.gamma = to_double(ini.get("greedy", "gamma").value_or("1"), "greedy.gamma");
    cfg.greedy.n_max = int(to_int(ini.get("greedy", "n_max").value_or("0"), "greedy.n_max"));
    cfg.greedy.policy = policy_from_label(ini.get("greedy", "policy").value_or("argmax"));
    cfg.greedy.termination_eps =
        to_double(ini.get("greedy", "termination_eps").value_or("1e-13"),
                  "greedy.termination_eps");
    const std::string mode = ini.get("greedy", "mode").value_or("auto");
    if (mode == "auto")
        cfg.greedy.mode = GreedyMode::Auto;
    else if (mode == "hilbert")
        cfg.greedy.mode = GreedyMode::Hilbert;
    else if (mode == "banach")
        cfg.greedy.mode = GreedyMode::Banach;
    else
        throw ConfigError("unknown greedy mode: " + mode);
    cfg.greedy.solver_tol =
        to_double(ini.get("greedy", "solver_tol").value_or("1e-9"), "greedy.solver_tol");

    // [widths]
    for (const auto& ms : split_list(ini.get("widths", "methods").value_or("known,sigma"))) {
        if (ms == "known")
            cfg.width_methods.insert(WidthMethod::Known);
        else if (ms == "svd")
            cfg.width_methods.insert(WidthMethod::Svd);
        else if (ms == "sigma")
            cfg.width_methods.insert(WidthMethod::SigmaUpper);
        else if (ms == "brute")
            cfg.width_methods.insert(WidthMethod::BruteForce);
        else
            throw ConfigError("unknown width method: " + ms);
    }
    cfg.width_n_max = int(to_int(ini.get("widths", "n_max").value_or("32"), "widths.n_max"));
    cfg.brute_grid =
        int(to_int(ini.get("widths", "brute_grid").value_or("64"), "widths.brute_grid"));

    // [bounds]
    cfg.checks = split_list(ini.get("bounds", "checks").value_or(""));
    cfg.sweep_k_max = int(to_int(ini.get("bounds", "k_max").value_or("6"), "bounds.k_max"));
    cfg.rate.alpha = to_double(ini.get("bounds", "alpha").value_or("1"), "bounds.alpha");
    if (auto b = ini.get("bounds", "beta")) cfg.rate.beta = to_double(*b, "bounds.beta");
    cfg.rate.c_big0 = to_double(ini.get("bounds", "c_big0").value_or("1"), "bounds.c_big0");
    cfg.rate.c_small0 =
        to_double(ini.get("bounds", "c_small0").value_or("1"), "bounds.c_small0");
    cfg.rate.gamma = cfg.greedy.gamma;
    cfg.rate.c1_scale =
        to_double(ini.get("bounds", "c1_scale").value_or("1"), "bounds.c1_scale");
    if (auto o = ini.get("bounds", "c1_override"))
        cfg.rate.c_small1_override = to_double(*o, "bounds.c1_override");
    cfg.n_check_max =
        int(to_int(ini.get("bounds", "n_check_max").value_or("32"), "bounds.n_check_max"));
    cfg.reference_rates = to_bool(ini.get("bounds", "reference_rates").value_or("false"),
                                  "bounds.reference_rates");

    // [output]
    cfg.out_dir = ini.get("output", "dir").value_or("out");
    cfg.export_elements =
        to_bool(ini.get("output", "export_elements").value_or("false"), "export_elements");

    return cfg;
}

}  // namespace seqgreedy
