#include "ringtime/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ringtime/table.hpp"

namespace ringtime {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(x)) throw ConfigError("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        long long x = std::stoll(v, &used);
        if (used != v.size()) throw ConfigError("");
        return static_cast<int>(x);
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + v);
    }
}

unsigned long long parse_ull(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        unsigned long long x = std::stoull(v, &used);
        if (used != v.size()) throw ConfigError("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad seed for '" + key + "': " + v);
    }
}

void assign(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "basis.L") c.L = parse_int(key, value);
    else if (key == "basis.R") c.R = parse_number(key, value);
    else if (key == "basis.mass") c.mass = parse_number(key, value);
    else if (key == "basis.hbar") c.hbar = parse_number(key, value);
    else if (key == "basis.grid") c.grid = parse_int(key, value);
    else if (key == "run.seed") c.seed = parse_ull(key, value);
    else if (key == "run.tol") c.tol = parse_number(key, value);
    else if (key == "run.format") c.format = value;
    else if (key == "run.out") c.out = value;
    else if (key == "spectral.nu_max") c.nu_max = parse_int(key, value);
    else if (key == "uncertainty.states") c.states = parse_int(key, value);
    else if (key == "evolve.samples") c.samples = parse_int(key, value);
    else if (key == "limit.radii") c.radii = value;
    else if (key == "limit.x0") c.x0 = parse_number(key, value);
    else if (key == "limit.p") c.p = parse_int(key, value);
    else if (key == "limit.sigma0") c.sigma0 = parse_number(key, value);
    else if (key == "limit.width_rule") c.width_rule = value;
    else if (key == "floquet.pulse_area") c.pulse_area = parse_number(key, value);
    else if (key == "floquet.period") c.period = parse_number(key, value);
    else if (key == "floquet.periods") c.periods = parse_int(key, value);
    else if (key == "floquet.steps") c.steps = parse_int(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
    RunConfig c = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " has no '='");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: line " + std::to_string(lineno) + " has empty key");
        assign(c, key, value);
    }
    return c;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), base);
}

std::string canonical_config(const RunConfig& c) {
    std::ostringstream out;
    out << "basis.L = " << c.L << "\n";
    out << "basis.R = " << fmt_double(c.R) << "\n";
    out << "basis.mass = " << fmt_double(c.mass) << "\n";
    out << "basis.hbar = " << fmt_double(c.hbar) << "\n";
    out << "basis.grid = " << c.grid << "\n";
    out << "run.seed = " << c.seed << "\n";
    out << "run.tol = " << fmt_double(c.tol) << "\n";
    out << "run.format = " << c.format << "\n";
    out << "run.out = " << c.out << "\n";
    out << "spectral.nu_max = " << c.nu_max << "\n";
    out << "uncertainty.states = " << c.states << "\n";
    out << "evolve.samples = " << c.samples << "\n";
    out << "limit.radii = " << c.radii << "\n";
    out << "limit.x0 = " << fmt_double(c.x0) << "\n";
    out << "limit.p = " << c.p << "\n";
    out << "limit.sigma0 = " << fmt_double(c.sigma0) << "\n";
    out << "limit.width_rule = " << c.width_rule << "\n";
    out << "floquet.pulse_area = " << fmt_double(c.pulse_area) << "\n";
    out << "floquet.period = " << fmt_double(c.period) << "\n";
    out << "floquet.periods = " << c.periods << "\n";
    out << "floquet.steps = " << c.steps << "\n";
    return out.str();
}

std::vector<double> parse_radii(const std::string& spec) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) {
        std::string t = trim(item);
        if (t.empty()) throw ConfigError("config: empty entry in radii list");
        out.push_back(parse_number("limit.radii", t));
    }
    if (out.empty()) throw ConfigError("config: radii list is empty");
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i] <= 0.0) throw ConfigError("config: radii must be positive");
        if (i && out[i] <= out[i - 1])
            throw ConfigError("config: radii must be strictly increasing");
    }
    return out;
}

void validate_config(const RunConfig& c) {
    if (c.L < 1 || c.L > 4096) throw ConfigError("config: basis.L out of range [1,4096]");
    if (!(c.R > 0.0)) throw ConfigError("config: basis.R must be positive");
    if (!(c.mass > 0.0)) throw ConfigError("config: basis.mass must be positive");
    if (!(c.hbar > 0.0)) throw ConfigError("config: basis.hbar must be positive");
    if (c.grid != 0) {
        if (c.grid < 2 * (2 * c.L + 1) || (c.grid & (c.grid - 1)) != 0)
            throw ConfigError("config: basis.grid must be 0 or a power of two >= 2*(2L+1)");
    }
    if (!(c.tol > 0.0)) throw ConfigError("config: run.tol must be positive");
    if (c.format != "csv" && c.format != "json")
        throw ConfigError("config: run.format must be csv or json");
    if (c.nu_max < 0 || c.nu_max > 10)
        throw ConfigError("config: spectral.nu_max out of range [0,10]");
    if (c.states < 1) throw ConfigError("config: uncertainty.states must be >= 1");
    if (c.samples < 1) throw ConfigError("config: evolve.samples must be >= 1");
    parse_radii(c.radii);
    if (!(c.sigma0 > 0.0)) throw ConfigError("config: limit.sigma0 must be positive");
    if (c.p < 1) throw ConfigError("config: limit.p must be >= 1");
    if (c.width_rule != "sqrt_radius" && c.width_rule != "fixed_line_width")
        throw ConfigError("config: limit.width_rule must be sqrt_radius or fixed_line_width");
    if (!(c.pulse_area > 0.0)) throw ConfigError("config: floquet.pulse_area must be positive");
    if (!(c.period >= 3.141592653589793)) throw ConfigError("config: floquet.period must be >= pi");
    if (c.periods < 2) throw ConfigError("config: floquet.periods must be >= 2");
    if (c.steps < 2) throw ConfigError("config: floquet.steps must be >= 2");
    return;
}

}  // namespace ringtime
