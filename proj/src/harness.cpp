#include "emhd/harness.hpp"

#include "emhd/field_io.hpp"
#include "emhd/spectral.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace emhd {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// JSON has no infinities; they are written as null.
ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string hs_label(double s) {
    std::string v = join_doubles({s});
    return "hs_" + v;
}

ojson report_json(const BlowupReport& r) {
    ojson j;
    j["lip0"] = num(r.lip0);
    j["lip_max_resolved"] = num(r.lip_max_resolved);
    j["growth_factor"] = num(r.growth_factor);
    j["resolved_until"] = num(r.resolved_until);
    j["resolved_samples"] = r.resolved_samples;
    j["x_nonincreasing"] = r.x_nonincreasing;
    j["x_worst_rise"] = num(r.x_worst_rise);
    j["max_value_drift"] = num(r.max_drift);
    j["radius_decreasing"] = r.radius_decreasing;
    j["riccati"] = {{"conclusive", r.riccati.conclusive},
                    {"c_fit", num(r.riccati.c_fit)},
                    {"t_star", num(r.riccati.t_star)},
                    {"samples", r.riccati.samples},
                    {"message", r.riccati.message}};
    j["t_star_lip"] = num(r.t_star_lip);
    j["indicators"] = r.indicators;
    j["verdict"] = r.verdict;
    return j;
}

}  // namespace

int exit_code_for(Termination t) {
    switch (t) {
        case Termination::completed: return kExitOk;
        case Termination::blowup:
        case Termination::unresolved: return kExitBlowup;
        case Termination::numeric_failure: return kExitNumeric;
    }
    return kExitNumeric;
}

void write_series_csv(const Trajectory& traj, const fs::path& path) {
    std::string out = "t,mean,l1,l2,linf,lip";
    for (double s : traj.sobolev) out += "," + hs_label(s);
    out += ",xmax,bmax,radius,resolved\n";
    for (const auto& r : traj.series) {
        out += io::format_double(r.t) + ',' + io::format_double(r.mean) + ',' + io::format_double(r.l1) + ',' +
               io::format_double(r.l2) + ',' + io::format_double(r.linf) + ',' + io::format_double(r.lip);
        for (double h : r.hs) out += ',' + io::format_double(h);
        out += ',' + io::format_double(r.xmax) + ',' + io::format_double(r.bmax) + ',' + io::format_double(r.radius) +
               ',' + (r.resolved ? "1" : "0") + '\n';
    }
    write_text(path, out);
}

RunOutcome run_experiment(const RunConfig& cfg, const fs::path& out_dir, const fs::path& base) {
    cfg.validate();
    const std::string started = utc_now();
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum B0 = cfg.initial_state(base);

    RunOutcome outcome;
    outcome.traj = evolve(B0, cfg.params(), cfg.solver());
    outcome.exit_code = exit_code_for(outcome.traj.reason);
    outcome.report = blowup_report(outcome.traj, track_max(outcome.traj));

    fs::create_directories(out_dir / "checkpoints");
    write_series_csv(outcome.traj, out_dir / "series.csv");
    outcome.outputs.push_back("series.csv");
    for (std::size_t i = 0; i < outcome.traj.checkpoints.size(); ++i) {
        std::ostringstream name;
        name << "checkpoints/cp_" << std::setw(3) << std::setfill('0') << i << ".bin";
        io::write_checkpoint(outcome.traj.checkpoints[i].B, out_dir / name.str());
        outcome.outputs.push_back(name.str());
    }
    io::write_checkpoint(outcome.traj.final_state, out_dir / "checkpoints/final.bin");
    outcome.outputs.push_back("checkpoints/final.bin");

    ojson verdict;
    verdict["termination"] = to_string(outcome.traj.reason);
    verdict["message"] = outcome.traj.message;
    verdict["exit_code"] = outcome.exit_code;
    verdict["t_final"] = num(outcome.traj.t_final);
    verdict["steps"] = outcome.traj.steps;
    verdict["resolved_until"] = num(outcome.traj.resolved_until);
    ojson cps = ojson::array();
    for (const auto& c : outcome.traj.checkpoints) cps.push_back(num(c.t));
    verdict["checkpoint_times"] = cps;
    verdict["blowup"] = report_json(outcome.report);
    write_text(out_dir / "verdict.json", verdict.dump(2) + "\n");
    outcome.outputs.push_back("verdict.json");

    ojson manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["code_version"] = kCodeVersion;
    manifest["seed"] = cfg.seed;
    ojson config;
    for (const auto& [k, v] : cfg.entries()) config[k] = v;
    manifest["config"] = config;
    manifest["config_base"] = base.empty() ? std::string() : fs::absolute(base).string();
    manifest["started_at"] = started;
    manifest["finished_at"] = utc_now();
    manifest["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    manifest["termination"] = to_string(outcome.traj.reason);
    manifest["exit_code"] = outcome.exit_code;
    ojson files = ojson::array();
    for (const auto& o : outcome.outputs) files.push_back(o);
    files.push_back("manifest.json");
    manifest["outputs"] = files;
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
    outcome.outputs.push_back("manifest.json");
    return outcome;
}

RunConfig config_from_manifest(const fs::path& manifest, fs::path* base) {
    std::ifstream in(manifest);
    if (!in) throw ConfigError("cannot open manifest " + manifest.string());
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError("manifest: " + std::string(e.what()));
    }
    if (!j.contains("config") || !j["config"].is_object()) throw ConfigError("manifest has no config object");
    std::string text;
    for (const auto& [k, v] : j["config"].items()) text += k + " = " + v.get<std::string>() + "\n";
    if (base && j.contains("config_base")) *base = j["config_base"].get<std::string>();
    return parse_config(text);
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t SweepSpec::cell_count() const {
    std::size_t c = 1;
    for (const auto& [k, vals] : axes) c *= vals.size();
    return c;
}

std::vector<std::pair<std::string, std::string>> SweepSpec::cell_assignment(std::size_t i) const {
    std::vector<std::pair<std::string, std::string>> out(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
        const auto& vals = axes[a].second;
        out[a] = {axes[a].first, vals[i % vals.size()]};
        i /= vals.size();
    }
    return out;
}

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    std::string base_text;
    for (const auto& [k, v] : parse_key_values(text)) {
        if (k.rfind("sweep.", 0) == 0) {
            std::vector<std::string> vals;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ';')) {
                const auto b = item.find_first_not_of(" \t");
                const auto e = item.find_last_not_of(" \t");
                if (b != std::string::npos) vals.push_back(item.substr(b, e - b + 1));
            }
            if (vals.empty()) throw ConfigError(k + ": no values");
            spec.axes.emplace_back(k.substr(6), std::move(vals));
        } else {
            base_text += k + " = " + v + "\n";
        }
    }
    spec.base = parse_config(base_text);
    // Reject unknown swept keys before any cell runs.
    for (const auto& [k, vals] : spec.axes) {
        if (k == "ab") continue;
        RunConfig probe;
        set_config_value(probe, k, vals.front());
    }
    return spec;
}

SweepSpec load_sweep_spec(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep spec " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_spec(ss.str());
}

namespace {

RunConfig cell_config(const SweepSpec& spec, const std::vector<std::pair<std::string, std::string>>& assignment) {
    RunConfig c = spec.base;
    for (const auto& [k, v] : assignment) {
        if (k == "ab") {
            const auto colon = v.find(':');
            if (colon == std::string::npos) throw ConfigError("sweep.ab values are written a:b");
            c.model = "custom";
            set_config_value(c, "a", v.substr(0, colon));
            set_config_value(c, "b", v.substr(colon + 1));
        } else {
            set_config_value(c, k, v);
        }
    }
    if (c.model != "custom") {
        const ModelParams p = ModelParams::preset(c.model, c.alpha, c.mu);
        c.a = p.a;
        c.b = p.b;
    }
    c.validate();
    return c;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const fs::path& root, int workers, const fs::path& base) {
    const std::size_t cells = spec.cell_count();
    std::vector<SweepRow> rows(cells);
    fs::create_directories(root);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (std::size_t i = next++; i < cells; i = next++) {
            SweepRow& row = rows[i];
            row.cell = i;
            row.assignment = spec.cell_assignment(i);
            row.config = spec.base;
            std::ostringstream dir;
            dir << "cell_" << std::setw(3) << std::setfill('0') << i;
            try {
                const RunConfig c = cell_config(spec, row.assignment);
                row.config = c;
                const RunOutcome out = run_experiment(c, root / dir.str(), base);
                row.termination = to_string(out.traj.reason);
                row.exit_code = out.exit_code;
                row.lip_growth = out.report.growth_factor;
                row.resolved_until = out.traj.resolved_until;
                row.verdict = out.report.verdict;
            } catch (const ConfigError& e) {
                row.termination = "config_error";
                row.exit_code = kExitUsage;
                row.error = e.what();
            } catch (const std::exception& e) {
                row.termination = "error";
                row.exit_code = kExitNumeric;
                row.error = e.what();
            }
        }
    };
    const int w = std::max(1, std::min<int>(workers, static_cast<int>(cells)));
    std::vector<std::thread> pool;
    for (int t = 1; t < w; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::string csv = "cell";
    for (const auto& [k, vals] : spec.axes) csv += ",sweep." + k;
    csv += ",a,b,alpha,mu,n,init,termination,exit_code,lip_growth,resolved_until,verdict,error\n";
    for (const auto& r : rows) {
        csv += std::to_string(r.cell);
        for (const auto& [k, v] : r.assignment) csv += "," + csv_escape(v);
        csv += "," + join_doubles({r.config.a, r.config.b, r.config.alpha, r.config.mu}) + "," +
               std::to_string(r.config.n) + "," + csv_escape(r.config.init);
        csv += "," + r.termination + "," + std::to_string(r.exit_code) + "," + io::format_double(r.lip_growth) + "," +
               io::format_double(r.resolved_until) + "," + csv_escape(r.verdict) + "," + csv_escape(r.error) + "\n";
    }
    write_text(root / "summary.csv", csv);
    return rows;
}

}  // namespace emhd
