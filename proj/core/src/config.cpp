#include "specladder/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace specladder {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Kept in sync with the checked-in specladder.cfg; the interface tests
// compare the two key for key.
const char* kDefaults = R"(
consistency.tol_abs = 1e-10
consistency.tol_rel = 1e-10

ho1d.q_min = -12.0
ho1d.q_max = 12.0
ho1d.points = 3000
ho1d.levels = 3
ho1d.tol_abs = 1e-3
ho1d.tol_rel = 0.0

iso-ho.q_max = 12.0
iso-ho.points = 3000
iso-ho.levels = 3
iso-ho.tol_abs = 1e-3
iso-ho.tol_rel = 0.0

hydrogen3d.r_max = 200.0
hydrogen3d.points = 4000
hydrogen3d.levels = 3
hydrogen3d.tol_abs = 0.0
hydrogen3d.tol_rel = 1e-3

hydrogen2d.r_max = 20.0
hydrogen2d.points = 4000
hydrogen2d.levels = 1
hydrogen2d.tol_abs = 0.0
hydrogen2d.tol_rel = 1e-2

hydrogen1d.r_max = 200.0
hydrogen1d.points = 4000
hydrogen1d.levels = 3
hydrogen1d.tol_abs = 0.0
hydrogen1d.tol_rel = 1e-3

dirac.points = 1500
dirac.box_factor = 3.0
dirac.bisect_tol = 1e-10
dirac.levels = 2
dirac.tol_abs = 0.0
dirac.tol_rel = 1e-6

square-well.points = 1000
square-well.levels = 3
square-well.tol_abs = 1e-3
square-well.tol_rel = 0.0

perturbed-ho.basis_dim = 60
perturbed-ho.epsilon = 1e-4
perturbed-ho.levels = 4
perturbed-ho.tol_abs = 0.0
perturbed-ho.tol_rel = 5e-3
perturbed-ho.sensitivity = 1e-8
)";

}  // namespace

Config Config::defaults() {
    Config cfg;
    std::istringstream in(kDefaults);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        cfg.values_[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
    }
    return cfg;
}

Config Config::parse(const std::string& text) {
    Config cfg = defaults();
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("config line " + std::to_string(lineno) +
                                   ": expected 'section.key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || key.find('.') == std::string::npos)
            throw InvalidParameter("config line " + std::to_string(lineno) +
                                   ": key must have the form section.key");
        if (value.empty())
            throw InvalidParameter("config line " + std::to_string(lineno) + ": empty value");
        cfg.values_[key] = value;
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

Config Config::resolve(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load(explicit_path);
    if (const char* env = std::getenv("SPECLADDER_CONFIG"); env != nullptr && *env != '\0')
        return load(env);
    return defaults();
}

double Config::get_double(const std::string& key) const {
    const std::string raw = get_string(key);
    char* end = nullptr;
    const double value = std::strtod(raw.c_str(), &end);
    if (end == raw.c_str() || *end != '\0')
        throw InvalidParameter("config value for '" + key + "' is not a number: " + raw);
    return value;
}

std::size_t Config::get_count(const std::string& key) const {
    const double value = get_double(key);
    if (value < 0 || value != static_cast<double>(static_cast<std::size_t>(value)))
        throw InvalidParameter("config value for '" + key + "' is not a nonnegative integer");
    return static_cast<std::size_t>(value);
}

std::string Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw InvalidParameter("missing config key '" + key + "'");
    return it->second;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

}  // namespace specladder
