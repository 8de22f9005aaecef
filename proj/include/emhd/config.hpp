#pragma once

#include "emhd/dynamics.hpp"
#include "emhd/grid.hpp"
#include "emhd/model.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace emhd {

/// Bad configuration text or value; maps to the usage exit code.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

/// Flat `key = value` run description. Unknown keys are errors; every key has
/// an explicit default that is echoed into the manifest.
struct RunConfig {
    std::size_t n = 256;
    double L = 3.141592653589793;
    std::string model = "custom";  ///< e1d2 | e1d3 | e1d4 | custom
    double a = 0.0;
    double b = 1.0;
    double alpha = 1.5;
    double mu = 1.0;
    /// cosine | sine | rough:<decay>,<kmax> | blowup_profile | coeff_list:<file>
    std::string init = "cosine";
    double amplitude = 1.0;
    std::uint64_t seed = 1;
    std::string dt_policy = "fixed";  ///< fixed | cfl
    double dt = 1e-3;
    double cfl = 0.4;
    std::string dealias = "dealias";  ///< dealias | none | galerkin
    std::size_t galerkin_modes = 0;
    double t_end = 1.0;
    int stride = 10;
    std::vector<double> sobolev{1.0};
    std::vector<double> checkpoint_times;
    double lip_threshold = 1e4;
    double radius_floor_cells = 2.0;
    double tail_threshold = 1e-6;
    bool stop_when_unresolved = false;

    ModelParams params() const;
    GridSpec grid() const;
    SolverConfig solver() const;
    /// Initial field with its mean removed. Relative coeff_list paths resolve against `base`.
    Spectrum initial_state(const std::filesystem::path& base = {}) const;

    void validate() const;
    /// Ordered key/value pairs with every field spelled out.
    std::vector<std::pair<std::string, std::string>> entries() const;
    std::string to_text() const;
};

/// Parses `key = value` lines; '#' starts a comment. Requires schema_version.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
/// Applies one assignment; throws ConfigError on unknown keys or bad values.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Raw key/value lines (no schema handling), used by sweep specs.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

std::vector<double> parse_double_list(const std::string& s);
std::string join_doubles(const std::vector<double>& v);

}  // namespace emhd
