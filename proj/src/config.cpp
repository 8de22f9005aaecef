#include "emhd/config.hpp"

#include "emhd/field_io.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/singularity.hpp"
#include "emhd/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace emhd {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double to_double(const std::string& key, const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw ConfigError(key + ": expected a number, got '" + s + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& s) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError(key + ": expected a nonnegative integer, got '" + s + "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError(key + ": expected true/false, got '" + s + "'");
}

bool is_preset(const std::string& m) { return m == "e1d2" || m == "e1d3" || m == "e1d4"; }

}  // namespace

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    if (trim(s).empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double("list", trim(item)));
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += shortest(v[i]);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        for (const auto& [k, v] : kv)
            if (k == key) throw ConfigError("duplicate key '" + key + "'");
        kv.emplace_back(std::move(key), std::move(value));
    }
    return kv;
}

void set_config_value(RunConfig& c, const std::string& key, const std::string& v) {
    if (key == "n") c.n = to_unsigned(key, v);
    else if (key == "L") c.L = to_double(key, v);
    else if (key == "model") {
        if (!is_preset(v) && v != "custom") throw ConfigError("model: expected e1d2|e1d3|e1d4|custom");
        c.model = v;
    }
    else if (key == "a") c.a = to_double(key, v);
    else if (key == "b") c.b = to_double(key, v);
    else if (key == "alpha") c.alpha = to_double(key, v);
    else if (key == "mu") c.mu = to_double(key, v);
    else if (key == "init") c.init = v;
    else if (key == "amplitude") c.amplitude = to_double(key, v);
    else if (key == "seed") c.seed = to_unsigned(key, v);
    else if (key == "dt_policy") c.dt_policy = v;
    else if (key == "dt") c.dt = to_double(key, v);
    else if (key == "cfl") c.cfl = to_double(key, v);
    else if (key == "dealias") c.dealias = v;
    else if (key == "galerkin_modes") c.galerkin_modes = to_unsigned(key, v);
    else if (key == "t_end") c.t_end = to_double(key, v);
    else if (key == "stride") c.stride = static_cast<int>(to_unsigned(key, v));
    else if (key == "sobolev") c.sobolev = parse_double_list(v);
    else if (key == "checkpoint_times") c.checkpoint_times = parse_double_list(v);
    else if (key == "lip_threshold") c.lip_threshold = to_double(key, v);
    else if (key == "radius_floor_cells") c.radius_floor_cells = to_double(key, v);
    else if (key == "tail_threshold") c.tail_threshold = to_double(key, v);
    else if (key == "stop_when_unresolved") c.stop_when_unresolved = to_bool(key, v);
    else throw ConfigError("unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text) {
    auto kv = parse_key_values(text);
    const auto sv = std::find_if(kv.begin(), kv.end(), [](const auto& p) { return p.first == "schema_version"; });
    if (sv == kv.end()) throw ConfigError("missing schema_version");
    if (to_unsigned("schema_version", sv->second) != static_cast<std::uint64_t>(kSchemaVersion))
        throw ConfigError("unsupported schema_version " + sv->second);
    kv.erase(sv);

    RunConfig c;
    // The preset decides (a, b); naming both is contradictory.
    bool explicit_ab = false;
    for (const auto& [k, v] : kv) {
        set_config_value(c, k, v);
        explicit_ab = explicit_ab || k == "a" || k == "b";
    }
    if (is_preset(c.model)) {
        const ModelParams p = ModelParams::preset(c.model, c.alpha, c.mu);
        if (explicit_ab && (p.a != c.a || p.b != c.b))
            throw ConfigError("a/b conflict with model preset '" + c.model + "'");
        c.a = p.a;
        c.b = p.b;
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ModelParams RunConfig::params() const {
    if (is_preset(model)) return ModelParams::preset(model, alpha, mu);
    return ModelParams::full(a, b, alpha, mu);
}

GridSpec RunConfig::grid() const {
    try {
        return GridSpec::make(n, L);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

SolverConfig RunConfig::solver() const {
    SolverConfig s;
    if (dt_policy == "fixed") s.dt_policy = DtPolicy::fixed;
    else if (dt_policy == "cfl") s.dt_policy = DtPolicy::cfl;
    else throw ConfigError("dt_policy: expected fixed|cfl");
    s.dt = dt;
    s.cfl = cfl;
    try {
        s.truncation = truncation_from_string(dealias);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    s.galerkin_modes = galerkin_modes;
    s.t_end = t_end;
    s.stride = stride;
    s.sobolev = sobolev;
    s.checkpoint_times = checkpoint_times;
    s.lip_threshold = lip_threshold;
    s.stop_when_unresolved = stop_when_unresolved;
    s.resolution.radius_floor_cells = radius_floor_cells;
    s.resolution.tail_threshold = tail_threshold;
    return s;
}

Spectrum RunConfig::initial_state(const std::filesystem::path& base) const {
    const GridSpec g = grid();
    const double w = std::numbers::pi / L;
    Spectrum B(g);
    try {
        if (init == "cosine") {
            B = to_spectral(sample(g, [&](double x) { return amplitude * std::cos(w * x); }));
        } else if (init == "sine") {
            B = to_spectral(sample(g, [&](double x) { return amplitude * std::sin(w * x); }));
        } else if (init == "blowup_profile") {
            B = amplitude * to_spectral(make_blowup_profile(g));
        } else if (init.rfind("rough:", 0) == 0) {
            const auto args = parse_double_list(init.substr(6));
            if (args.size() != 2 || args[1] < 1.0)
                throw ConfigError("init rough:<decay>,<kmax> needs two values, kmax >= 1");
            B = random_power_law(g, args[0], static_cast<std::size_t>(args[1]), seed, 0, amplitude);
        } else if (init.rfind("coeff_list:", 0) == 0) {
            std::filesystem::path p = init.substr(11);
            if (p.is_relative() && !base.empty()) p = base / p;
            B = io::read_coeff_list(p, g);
            B *= amplitude;
        } else {
            throw ConfigError("init: expected cosine|sine|rough:<decay>,<kmax>|blowup_profile|coeff_list:<file>");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("init: ") + e.what());
    }
    B[0] = 0.0;
    return B;
}

void RunConfig::validate() const {
    const GridSpec g = grid();
    try {
        params().validate();
        solver().validate();
        if (dealias == "galerkin") effective_cutoff(g, Truncation::galerkin, galerkin_modes);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!std::isfinite(amplitude)) throw ConfigError("amplitude must be finite");
    if (!(lip_threshold > 0.0)) throw ConfigError("lip_threshold must be positive");
    if (!(radius_floor_cells >= 0.0) || !(tail_threshold > 0.0)) throw ConfigError("resolution thresholds invalid");
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
    return {
        {"schema_version", std::to_string(kSchemaVersion)},
        {"n", std::to_string(n)},
        {"L", shortest(L)},
        {"model", model},
        {"a", shortest(a)},
        {"b", shortest(b)},
        {"alpha", shortest(alpha)},
        {"mu", shortest(mu)},
        {"init", init},
        {"amplitude", shortest(amplitude)},
        {"seed", std::to_string(seed)},
        {"dt_policy", dt_policy},
        {"dt", shortest(dt)},
        {"cfl", shortest(cfl)},
        {"dealias", dealias},
        {"galerkin_modes", std::to_string(galerkin_modes)},
        {"t_end", shortest(t_end)},
        {"stride", std::to_string(stride)},
        {"sobolev", join_doubles(sobolev)},
        {"checkpoint_times", join_doubles(checkpoint_times)},
        {"lip_threshold", shortest(lip_threshold)},
        {"radius_floor_cells", shortest(radius_floor_cells)},
        {"tail_threshold", shortest(tail_threshold)},
        {"stop_when_unresolved", stop_when_unresolved ? "true" : "false"},
    };
}

std::string RunConfig::to_text() const {
    std::string out;
    for (const auto& [k, v] : entries()) out += k + " = " + v + "\n";
    return out;
}

}  // namespace emhd
