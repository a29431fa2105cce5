#include "itw/harness.hpp"

#include <fstream>
#include <sstream>

#include "itw/errors.hpp"

namespace itw {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + key + ": '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + v + "'");
    }
}

std::vector<double> parse_double_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(v, ','))
        if (!item.empty()) out.push_back(parse_double(item, key));
    if (out.empty()) throw ConfigError("empty list for " + key);
    return out;
}

std::vector<int> parse_int_list(const std::string& v, const std::string& key) {
    std::vector<int> out;
    for (const auto& item : split(v, ','))
        if (!item.empty()) out.push_back(parse_int(item, key));
    if (out.empty()) throw ConfigError("empty list for " + key);
    return out;
}

std::vector<std::pair<double, double>> parse_pair_list(const std::string& v,
                                                       const std::string& key) {
    std::vector<std::pair<double, double>> out;
    for (const auto& item : split(v, ',')) {
        if (item.empty()) continue;
        auto parts = split(item, ':');
        if (parts.size() != 2) throw ConfigError("expected p:q pairs for " + key);
        out.emplace_back(parse_double(parts[0], key), parse_double(parts[1], key));
    }
    if (out.empty()) throw ConfigError("empty list for " + key);
    return out;
}

void apply_key(RunConfig& config, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string where = section + "." + key;
    if (section == "run") {
        if (key == "suite") config.suite = suite_from_string(value);
        else if (key == "seed") config.seed = static_cast<uint64_t>(std::stoull(value));
        else if (key == "out") config.out_path = value;
        else if (key == "control") config.control = value == "true" || value == "1";
        else if (key == "workers") config.workers = parse_int(value, where);
        else throw ConfigError("unknown key: " + where);
    } else if (section == "generator") {
        auto& g = config.generator;
        if (key == "weight_cap") g.weight_cap = parse_int(value, where);
        else if (key == "n_values") g.n_values = parse_int_list(value, where);
        else if (key == "theta_values") g.theta_values = parse_double_list(value, where);
        else if (key == "laguerre_d") g.laguerre_d = parse_double_list(value, where);
        else if (key == "jacobi_ab") g.jacobi_ab = parse_pair_list(value, where);
        else if (key == "ratio_weight_cap") g.ratio_weight_cap = parse_int(value, where);
        else if (key == "ratio_n_values") g.ratio_n_values = parse_int_list(value, where);
        else if (key == "ratio_theta_values")
            g.ratio_theta_values = parse_double_list(value, where);
        else if (key == "action_weight_cap") g.action_weight_cap = parse_int(value, where);
        else if (key == "action_max_n") g.action_max_n = parse_int(value, where);
        else throw ConfigError("unknown key: " + where);
    } else if (section == "semigroup") {
        auto& s = config.semigroup;
        if (key == "t_values") s.t_values = parse_double_list(value, where);
        else throw ConfigError("unknown key: " + where);
    } else if (section == "kernel") {
        auto& k = config.kernel;
        if (key == "weight_cap") k.weight_cap = parse_int(value, where);
        else if (key == "n_values") k.n_values = parse_int_list(value, where);
        else if (key == "theta_values") k.theta_values = parse_double_list(value, where);
        else if (key == "mc_samples") k.mc_samples = parse_int(value, where);
        else if (key == "mc_theta") k.mc_theta = parse_double(value, where);
        else if (key == "mc_n") k.mc_n = parse_int(value, where);
        else throw ConfigError("unknown key: " + where);
    } else if (section == "sde") {
        auto& s = config.sde;
        if (key == "paths") s.paths = parse_int(value, where);
        else if (key == "norm_dt") s.norm_dt = parse_double(value, where);
        else if (key == "norm_t_values") s.norm_t_values = parse_double_list(value, where);
        else if (key == "norm_beta_d") s.norm_beta_d = parse_pair_list(value, where);
        else if (key == "norm_n_values") s.norm_n_values = parse_int_list(value, where);
        else if (key == "oracle_dt") s.oracle_dt = parse_double(value, where);
        else if (key == "oracle_t") s.oracle_t = parse_double(value, where);
        else throw ConfigError("unknown key: " + where);
    } else if (section == "ensemble") {
        auto& e = config.ensemble;
        if (key == "mc_samples") e.mc_samples = parse_int(value, where);
        else if (key == "stationarity_paths") e.stationarity_paths = parse_int(value, where);
        else if (key == "stationarity_dt") e.stationarity_dt = parse_double(value, where);
        else if (key == "stationarity_t_values")
            e.stationarity_t_values = parse_double_list(value, where);
        else throw ConfigError("unknown key: " + where);
    } else {
        throw ConfigError("unknown section: [" + section + "]");
    }
}

} // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    RunConfig config;
    std::string line, section = "run";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("malformed section header at line " + std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("empty key or value at line " + std::to_string(lineno));
        apply_key(config, section, key, value);
    }
    return config;
}

void apply_override(RunConfig& config, const std::string& assignment) {
    size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must look like section.key=value: " + assignment);
    std::string path = trim(assignment.substr(0, eq));
    std::string value = trim(assignment.substr(eq + 1));
    size_t dot = path.find('.');
    if (dot == std::string::npos)
        throw ConfigError("override must look like section.key=value: " + assignment);
    apply_key(config, path.substr(0, dot), path.substr(dot + 1), value);
}

} // namespace itw
