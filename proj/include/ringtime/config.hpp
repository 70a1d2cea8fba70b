// Flat key=value run configuration with canonical round-trip serialization.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ringtime {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    // basis.*
    int L = 64;
    double R = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
    int grid = 0;  // 0 -> automatic power of two

    // run.*
    unsigned long long seed = 42;
    double tol = 1e-12;
    std::string format = "csv";  // csv | json
    std::string out;             // empty -> stdout

    // spectral.*
    int nu_max = 10;

    // uncertainty.*
    int states = 200;

    // evolve.*
    int samples = 64;

    // limit.*
    std::string radii = "1,2,4,8";
    double x0 = -0.25;
    int p = 9;
    double sigma0 = 0.578;
    std::string width_rule = "sqrt_radius";  // sqrt_radius | fixed_line_width

    // floquet.*
    double pulse_area = 1.5707963267948966;  // pi/2
    double period = 6.283185307179586;       // 2 pi
    int periods = 4;
    int steps = 32;

    bool operator==(const RunConfig&) const = default;
};

// '#' comments and blank lines allowed; lines are "section.key = value";
// unknown keys and malformed values raise ConfigError; later keys win.
// The base carries the values for keys the text does not mention.
RunConfig parse_config_text(const std::string& text, const RunConfig& base = RunConfig{});
RunConfig load_config_file(const std::string& path, const RunConfig& base = RunConfig{});

// Fixed key order, %.17g numbers: parse(canonical(c)) reproduces c exactly.
std::string canonical_config(const RunConfig& c);

void validate_config(const RunConfig& c);  // throws ConfigError

// "1,2,4,8" -> {1,2,4,8}; must be strictly increasing positive numbers.
std::vector<double> parse_radii(const std::string& spec);

}  // namespace ringtime
