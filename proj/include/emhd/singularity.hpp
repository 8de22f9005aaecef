#pragma once

#include "emhd/dynamics.hpp"
#include "emhd/grid.hpp"

#include <string>
#include <vector>

namespace emhd {

/// B0(x) = s(x) / M with s(x) = x (1 - x^2)^4 on |x| <= 1 and 0 outside,
/// M = (1/3)(8/9)^4 = s(1/3).
double blowup_profile_value(double x);
inline constexpr double blowup_profile_peak_location = 1.0 / 3.0;

/// Sampled profile. Throws if L < pi or if the grid leaves more than 1e-8 of
/// the energy in the upper half of the dealiased band.
Field make_blowup_profile(const GridSpec& g);

struct MaxTrack {
    std::vector<double> times;
    std::vector<double> X;      ///< sub-grid argmax
    std::vector<double> bmax;
    std::vector<double> inv_x;
    std::vector<double> lip;
    std::vector<double> radius;
    std::vector<bool> resolved;
    bool plateau_seen = false;
    double dx = 0.0;

    std::size_t size() const { return times.size(); }
    /// Number of leading samples flagged resolved.
    std::size_t resolved_count() const;
};

MaxTrack track_max(const Trajectory& traj);

struct RiccatiFit {
    bool conclusive = false;
    double c_fit = 0.0;   ///< least-squares slope of 1/X(t) over the resolved window
    double t_star = 0.0;  ///< root of the least-squares line through X(t)^2; +inf if not decreasing
    std::size_t samples = 0;
    std::string message;
};

/// Uses the resolved prefix of the track; needs >= 10 samples with X decreasing overall.
RiccatiFit riccati_fit(const MaxTrack& track);

struct BlowupReport {
    double lip0 = 0.0;
    double lip_max_resolved = 0.0;
    double growth_factor = 0.0;  ///< lip_max_resolved / lip0
    double resolved_until = 0.0;
    std::size_t resolved_samples = 0;

    bool x_nonincreasing = false;  ///< X(t2) <= X(t1) + dx over the resolved window
    double x_worst_rise = 0.0;
    double max_drift = 0.0;        ///< max |bmax(t) - bmax(0)| while resolved
    bool radius_decreasing = false;
    std::size_t radius_samples = 0;

    RiccatiFit riccati;
    double t_star_lip = 0.0;  ///< root of a line through 1/lip over the later resolved half; +inf if none

    std::string termination;
    bool indicators = false;
    std::string verdict;
};

BlowupReport blowup_report(const Trajectory& traj, const MaxTrack& track);

struct MirrorReport {
    double discrepancy = 0.0;  ///< max over checkpoints and grid of |B3 + B4|
    double reference = 0.0;    ///< max |B3|
};

/// Evolves B0 under the transport model and -B0 under its mirror (b = -1).
MirrorReport mirror_check(const Spectrum& B0, double alpha, double mu, double T, double dt, int checkpoints = 4);

}  // namespace emhd
