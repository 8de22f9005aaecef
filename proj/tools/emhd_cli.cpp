// emhd: command-line front end for runs, sweeps, verification and the lab probes.

#include "emhd/config.hpp"
#include "emhd/field_io.hpp"
#include "emhd/galerkin.hpp"
#include "emhd/harness.hpp"
#include "emhd/picard.hpp"
#include "emhd/singularity.hpp"
#include "emhd/spectral.hpp"
#include "emhd/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace emhd;
using ojson = nlohmann::ordered_json;

namespace {

ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson array_of(const std::vector<double>& v) {
    ojson a = ojson::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

// Shared physical options of the lab subcommands.
struct LabOptions {
    std::size_t n = 64;
    double a = 1.0, b = 1.0, alpha = 2.2, mu = 1.0;
    std::string model = "custom";
    std::string init = "cosine";
    double amplitude = 1.0;
    std::uint64_t seed = 1;

    RunConfig config() const {
        RunConfig c;
        c.n = n;
        c.model = model;
        c.a = a;
        c.b = b;
        c.alpha = alpha;
        c.mu = mu;
        c.init = init;
        c.amplitude = amplitude;
        c.seed = seed;
        if (model != "custom") {
            const ModelParams p = ModelParams::preset(model, alpha, mu);
            c.a = p.a;
            c.b = p.b;
        }
        c.validate();
        return c;
    }
};

void add_lab_options(CLI::App* cmd, LabOptions& o) {
    cmd->add_option("--n", o.n, "grid points (power of two)")->capture_default_str();
    cmd->add_option("--model", o.model, "e1d2|e1d3|e1d4|custom")->capture_default_str();
    cmd->add_option("--a", o.a, "coefficient of B J_x")->capture_default_str();
    cmd->add_option("--b", o.b, "coefficient of J B_x")->capture_default_str();
    cmd->add_option("--alpha", o.alpha)->capture_default_str();
    cmd->add_option("--mu", o.mu)->capture_default_str();
    cmd->add_option("--init", o.init, "cosine|sine|rough:<decay>,<kmax>|blowup_profile|coeff_list:<file>")
        ->capture_default_str();
    cmd->add_option("--amplitude", o.amplitude)->capture_default_str();
    cmd->add_option("--seed", o.seed)->capture_default_str();
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral laboratory for 1D reduced electron-MHD models"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one configuration");
    std::string config_path, manifest_path, out_dir = "run_out";
    auto* cfg_opt = run->add_option("--config", config_path, "key = value config file");
    auto* man_opt = run->add_option("--manifest", manifest_path, "replay the config stored in a manifest.json");
    cfg_opt->excludes(man_opt);
    run->add_option("--out", out_dir, "output directory")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    bool no_dealias = false;
    std::string report_path;
    verify->add_option("--suite", suites, "operators|conservation|scaling|integrator|picard|galerkin|blowup|mirror|"
                                          "lemmas|determinism|all (repeatable)");
    verify->add_flag("--no-dealias", no_dealias, "fault injection: aliased products in the oracle check");
    verify->add_option("--report", report_path, "also write the JSON report here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep");
    std::string spec_path, sweep_out = "sweep_out";
    int workers = 1;
    sweep->add_option("--spec", spec_path, "sweep spec file")->required();
    sweep->add_option("--workers", workers, "concurrent cells")->capture_default_str();
    sweep->add_option("--out", sweep_out, "output root")->capture_default_str();

    // picard
    auto* picard = app.add_subcommand("picard", "approximating-system iteration");
    LabOptions pic;
    double pic_T = 0.05, pic_dt = 1e-3;
    int pic_K = 8;
    add_lab_options(picard, pic);
    picard->add_option("--T", pic_T)->capture_default_str();
    picard->add_option("--K", pic_K)->capture_default_str();
    picard->add_option("--dt", pic_dt)->capture_default_str();

    // galerkin
    auto* galerkin = app.add_subcommand("galerkin", "truncated Fourier system and Riccati probe");
    LabOptions gal;
    gal.n = 512;
    gal.model = "e1d3";
    gal.alpha = 1.0;
    gal.mu = 0.1;
    std::size_t gal_N = 32;
    double gal_T = 0.1, gal_dt = 1e-3, gal_weight = 8.0;
    std::string gal_csv;
    add_lab_options(galerkin, gal);
    galerkin->add_option("--N", gal_N, "truncation")->capture_default_str();
    galerkin->add_option("--T", gal_T)->capture_default_str();
    galerkin->add_option("--dt", gal_dt)->capture_default_str();
    galerkin->add_option("--weight", gal_weight, "exponent in Y = sum |k|^w |xi|^2")->capture_default_str();
    galerkin->add_option("--csv", gal_csv, "write t,Y,dYdt,growth,damping here");

    // blowup
    auto* blowup = app.add_subcommand("blowup", "singularity experiment on the odd compact profile");
    std::size_t bu_n = 4096;
    double bu_alpha = 1.5, bu_mu = 0.0, bu_T = 1.0, bu_growth = 100.0, bu_cfl = 0.4;
    int bu_stride = 1;
    std::string bu_out = "blowup_out";
    blowup->add_option("--n", bu_n)->capture_default_str();
    blowup->add_option("--alpha", bu_alpha)->capture_default_str();
    blowup->add_option("--mu", bu_mu)->capture_default_str();
    blowup->add_option("--T", bu_T, "horizon")->capture_default_str();
    blowup->add_option("--stop-growth", bu_growth, "stop once ||B_x||_inf exceeds this multiple of its start")
        ->capture_default_str();
    blowup->add_option("--cfl", bu_cfl)->capture_default_str();
    blowup->add_option("--stride", bu_stride)->capture_default_str();
    blowup->add_option("--out", bu_out)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            RunConfig cfg;
            fs::path base;
            if (!config_path.empty()) {
                cfg = load_config(config_path);
                base = fs::path(config_path).parent_path();
            } else if (!manifest_path.empty()) {
                cfg = config_from_manifest(manifest_path, &base);
            } else {
                std::cerr << "run: --config or --manifest is required\n";
                return kExitUsage;
            }
            const RunOutcome out = run_experiment(cfg, out_dir, base);
            std::cout << "termination: " << to_string(out.traj.reason) << " at t=" << out.traj.t_final << " after "
                      << out.traj.steps << " steps\n"
                      << "verdict: " << out.report.verdict << "\n"
                      << "output: " << out_dir << "\n";
            return out.exit_code;
        }

        if (*verify) {
            std::vector<std::string> names;
            try {
                names = expand_suites(suites);
            } catch (const std::invalid_argument& e) {
                std::cerr << "verify: " << e.what() << "\n";
                return kExitUsage;
            }
            VerifyOptions opts;
            opts.disable_dealias = no_dealias;
            std::vector<std::vector<Assertion>> results;
            std::vector<double> secs;
            for (const auto& s : names) {
                const auto t0 = std::chrono::steady_clock::now();
                results.push_back(run_suite(s, opts));
                secs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            }
            const std::string report = verify_report_json(names, results, secs);
            std::cout << report << "\n";
            if (!report_path.empty()) write_file(report_path, report + "\n");
            for (const auto& r : results)
                if (!all_passed(r)) return kExitVerifyFailed;
            return kExitOk;
        }

        if (*sweep) {
            const SweepSpec spec = load_sweep_spec(spec_path);
            const auto rows = run_sweep(spec, sweep_out, workers, fs::path(spec_path).parent_path());
            int failed = 0;
            for (const auto& r : rows) failed += r.termination == "error" || r.termination == "config_error";
            std::cout << rows.size() << " cells, " << failed << " failed; summary: " << (fs::path(sweep_out) / "summary.csv")
                      << "\n";
            return kExitOk;
        }

        if (*picard) {
            const RunConfig c = pic.config();
            const Spectrum B0 = c.initial_state();
            const PicardComparison cmp = picard_vs_direct(B0, c.params(), pic_T, pic_K, pic_dt);
            const PicardResult res = picard_iterate(B0, c.params(), pic_T, pic_K, pic_dt);
            ojson j;
            j["T"] = pic_T;
            j["K"] = pic_K;
            j["dt"] = pic_dt;
            j["d"] = array_of(res.d);
            j["r"] = array_of(res.r);
            j["discrepancy"] = num(cmp.discrepancy.back());
            j["discrepancy_by_k"] = array_of(cmp.discrepancy);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*galerkin) {
            const RunConfig c = gal.config();
            const Spectrum B0 = c.initial_state();
            const RiccatiProbe pr = riccati_probe(B0, gal_N, c.params(), gal_T, gal_dt, gal_weight);
            if (!gal_csv.empty()) {
                std::string csv = "t,Y,dYdt,growth,damping\n";
                for (const auto& s : pr.samples)
                    csv += io::format_double(s.t) + ',' + io::format_double(s.Y) + ',' + io::format_double(s.dYdt) +
                           ',' + io::format_double(s.growth) + ',' + io::format_double(s.damping) + '\n';
                write_file(gal_csv, csv);
            }
            ojson j;
            j["N"] = gal_N;
            j["weight"] = gal_weight;
            j["C1"] = num(pr.C1);
            j["C2"] = num(pr.C2);
            j["min_margin"] = num(pr.min_margin);
            j["in_analytic_range"] = pr.in_analytic_range;
            j["resolved"] = pr.resolved;
            j["y_doubling_time"] = num(y_doubling_time(pr));
            if (c.n >= 3 * gal_N)
                j["galerkin_vs_pseudospectral"] = num(galerkin_vs_pseudospectral(B0, gal_N, c.params(), gal_T, gal_dt));
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*blowup) {
            const GridSpec g = GridSpec::make(bu_n);
            const Spectrum B0 = to_spectral(make_blowup_profile(g));
            SolverConfig cfg;
            cfg.dt_policy = DtPolicy::cfl;
            cfg.cfl = bu_cfl;
            cfg.dt = 1e-2;
            cfg.t_end = bu_T;
            cfg.stride = bu_stride;
            cfg.lip_threshold = bu_growth * linf_norm(to_physical(derivative(B0)));
            const Trajectory tr = evolve(B0, ModelParams::preset("e1d3", bu_alpha, bu_mu), cfg);
            const MaxTrack track = track_max(tr);
            const BlowupReport rep = blowup_report(tr, track);
            fs::create_directories(bu_out);
            std::string csv = "t,X,inv_X,bmax,lip,radius,resolved\n";
            for (std::size_t i = 0; i < track.size(); ++i)
                csv += io::format_double(track.times[i]) + ',' + io::format_double(track.X[i]) + ',' +
                       io::format_double(track.inv_x[i]) + ',' + io::format_double(track.bmax[i]) + ',' +
                       io::format_double(track.lip[i]) + ',' + io::format_double(track.radius[i]) + ',' +
                       (track.resolved[i] ? "1" : "0") + '\n';
            write_file(fs::path(bu_out) / "track.csv", csv);
            ojson j;
            j["n"] = bu_n;
            j["mu"] = bu_mu;
            j["alpha"] = bu_alpha;
            j["termination"] = rep.termination;
            j["t_final"] = num(tr.t_final);
            j["resolved_until"] = num(rep.resolved_until);
            j["growth_factor"] = num(rep.growth_factor);
            j["x_nonincreasing"] = rep.x_nonincreasing;
            j["max_value_drift"] = num(rep.max_drift);
            j["radius_decreasing"] = rep.radius_decreasing;
            j["c_fit"] = num(rep.riccati.c_fit);
            j["t_star_riccati"] = num(rep.riccati.t_star);
            j["t_star_lip"] = num(rep.t_star_lip);
            j["riccati_message"] = rep.riccati.message;
            j["verdict"] = rep.verdict;
            write_file(fs::path(bu_out) / "verdict.json", j.dump(2) + "\n");
            std::cout << j.dump(2) << "\n";
            return exit_code_for(tr.reason);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
