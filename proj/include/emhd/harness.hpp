#pragma once

#include "emhd/config.hpp"
#include "emhd/dynamics.hpp"
#include "emhd/singularity.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace emhd {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitBlowup = 3,  ///< stopped on a blow-up threshold or resolution loss: a finding, not a crash
    kExitNumeric = 4,
};

inline constexpr const char* kCodeVersion = "emhd 1.0.0";

int exit_code_for(Termination t);

struct RunOutcome {
    int exit_code = kExitOk;
    Trajectory traj;
    BlowupReport report;
    std::vector<std::string> outputs;  ///< paths relative to the run directory
};

/// series.csv: t,mean,l1,l2,linf,lip,hs_<s>...,xmax,bmax,radius,resolved
void write_series_csv(const Trajectory& traj, const std::filesystem::path& path);

/// Runs the config and writes manifest.json, series.csv, verdict.json and
/// checkpoints/ into out_dir. `base` resolves relative coeff_list paths.
RunOutcome run_experiment(const RunConfig& cfg, const std::filesystem::path& out_dir,
                          const std::filesystem::path& base = {});

/// Re-reads the config stored in a manifest.
RunConfig config_from_manifest(const std::filesystem::path& manifest, std::filesystem::path* base = nullptr);

struct SweepSpec {
    RunConfig base;
    /// Swept keys in declaration order; "ab" expands to (a, b) pairs written a:b.
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;

    std::size_t cell_count() const;
    /// Cell i in row-major order over the axes (last axis fastest).
    std::vector<std::pair<std::string, std::string>> cell_assignment(std::size_t i) const;
};

/// Sweep spec text: run keys as in a config, plus `sweep.<key> = v1; v2; ...`.
SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

struct SweepRow {
    std::size_t cell = 0;
    std::vector<std::pair<std::string, std::string>> assignment;
    RunConfig config;  ///< resolved cell config (the base if the cell failed to parse)
    std::string termination;
    int exit_code = 0;
    double lip_growth = 0.0;
    double resolved_until = 0.0;
    std::string verdict;
    std::string error;
};

/// Runs every cell (cells share nothing) with up to `workers` threads and
/// writes <root>/cell_XXX/ plus <root>/summary.csv. Failed cells are recorded.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::filesystem::path& root, int workers,
                                const std::filesystem::path& base = {});

}  // namespace emhd
