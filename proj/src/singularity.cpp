#include "emhd/singularity.hpp"

#include "emhd/diagnostics.hpp"
#include "emhd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace emhd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    Line l;
    if (denom == 0.0) return l;
    l.slope = (n * sxy - sx * sy) / denom;
    l.intercept = (sy - l.slope * sx) / n;
    return l;
}

}  // namespace

double blowup_profile_value(double x) {
    if (std::abs(x) > 1.0) return 0.0;
    static const double M = (1.0 / 3.0) * std::pow(8.0 / 9.0, 4);
    const double w = 1.0 - x * x;
    return x * (w * w) * (w * w) / M;
}

Field make_blowup_profile(const GridSpec& g) {
    if (g.half_length < std::numbers::pi) throw std::invalid_argument("blow-up profile needs L >= pi");
    Field f = sample(g, blowup_profile_value);
    const double tail = tail_energy_fraction(to_spectral(f), g.dealias_cutoff());
    if (tail > 1e-8)
        throw std::invalid_argument("blow-up profile: grid too coarse (tail energy fraction " + std::to_string(tail) +
                                    ")");
    return f;
}

std::size_t MaxTrack::resolved_count() const {
    std::size_t c = 0;
    while (c < resolved.size() && resolved[c]) ++c;
    return c;
}

MaxTrack track_max(const Trajectory& traj) {
    MaxTrack tr;
    tr.dx = traj.final_state.grid.dx();
    for (const auto& row : traj.series) {
        tr.times.push_back(row.t);
        tr.X.push_back(row.xmax);
        tr.bmax.push_back(row.bmax);
        tr.inv_x.push_back(row.xmax != 0.0 ? 1.0 / row.xmax : kInf);
        tr.lip.push_back(row.lip);
        tr.radius.push_back(row.radius);
        tr.resolved.push_back(row.resolved);
        tr.plateau_seen = tr.plateau_seen || row.plateau;
    }
    return tr;
}

RiccatiFit riccati_fit(const MaxTrack& track) {
    RiccatiFit fit;
    fit.t_star = kInf;
    std::vector<double> t, inv, x2;
    const std::size_t m = track.resolved_count();
    for (std::size_t i = 0; i < m; ++i) {
        if (!(track.X[i] > 0.0)) continue;
        t.push_back(track.times[i]);
        inv.push_back(1.0 / track.X[i]);
        x2.push_back(track.X[i] * track.X[i]);
    }
    fit.samples = t.size();
    if (t.size() < 10) {
        fit.message = "fewer than 10 resolved samples with X > 0";
        return fit;
    }
    const double drop = 1.0 / inv.front() - 1.0 / inv.back();
    if (!(drop > track.dx)) {
        fit.message = "X does not decrease by more than dx over the resolved window";
        return fit;
    }
    fit.c_fit = least_squares(t, inv).slope;
    const Line sq = least_squares(t, x2);
    if (sq.slope < 0.0) fit.t_star = -sq.intercept / sq.slope;
    if (!(fit.c_fit > 0.0)) {
        fit.message = "nonpositive slope of 1/X";
        return fit;
    }
    fit.conclusive = true;
    fit.message = "ok";
    return fit;
}

BlowupReport blowup_report(const Trajectory& traj, const MaxTrack& track) {
    BlowupReport rep;
    rep.termination = to_string(traj.reason);
    rep.resolved_until = traj.resolved_until;
    const std::size_t m = track.resolved_count();
    rep.resolved_samples = m;
    rep.t_star_lip = kInf;
    if (track.size() == 0) {
        rep.verdict = "no samples";
        return rep;
    }
    rep.lip0 = track.lip.front();
    double running_min = kInf;
    std::vector<double> radii;
    for (std::size_t i = 0; i < m; ++i) {
        rep.lip_max_resolved = std::max(rep.lip_max_resolved, track.lip[i]);
        if (i > 0) rep.x_worst_rise = std::max(rep.x_worst_rise, track.X[i] - running_min);
        running_min = std::min(running_min, track.X[i]);
        rep.max_drift = std::max(rep.max_drift, std::abs(track.bmax[i] - track.bmax.front()));
        if (std::isfinite(track.radius[i])) radii.push_back(track.radius[i]);
    }
    rep.growth_factor = rep.lip0 > 0.0 ? rep.lip_max_resolved / rep.lip0 : 0.0;
    rep.x_nonincreasing = m > 0 && rep.x_worst_rise <= track.dx;
    rep.radius_samples = radii.size();
    rep.radius_decreasing = radii.size() >= 2;
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] < radii[i - 1])) rep.radius_decreasing = false;

    rep.riccati = riccati_fit(track);

    if (m >= 4) {
        std::vector<double> t, inv;
        for (std::size_t i = m / 2; i < m; ++i) {
            t.push_back(track.times[i]);
            inv.push_back(1.0 / track.lip[i]);
        }
        const Line l = least_squares(t, inv);
        if (l.slope < 0.0) rep.t_star_lip = -l.intercept / l.slope;
    }

    const bool strong = rep.growth_factor >= 50.0 && rep.riccati.conclusive;
    // An argmax drifting toward the origin alone is not an indicator: decaying
    // solutions do that too, so the gradient must also have grown.
    const bool partial = rep.growth_factor >= 10.0 ||
                         (rep.riccati.conclusive && rep.x_nonincreasing && rep.growth_factor > 1.0);
    rep.indicators = strong || partial;
    if (strong)
        rep.verdict = "blow-up indicators: gradient growth and Riccati collapse";
    else if (partial)
        rep.verdict = "partial blow-up indicators";
    else
        rep.verdict = "no blow-up indicators";
    return rep;
}

MirrorReport mirror_check(const Spectrum& B0, double alpha, double mu, double T, double dt, int checkpoints) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = T;
    cfg.stride = std::numeric_limits<int>::max();
    for (int i = 1; i <= checkpoints; ++i) cfg.checkpoint_times.push_back(T * i / checkpoints);
    const Trajectory plus = evolve(B0, ModelParams::preset("e1d3", alpha, mu), cfg);
    const Trajectory minus = evolve(-1.0 * B0, ModelParams::preset("e1d4", alpha, mu), cfg);
    if (plus.checkpoints.size() != minus.checkpoints.size())
        throw std::runtime_error("mirror check: runs stopped at different times");
    MirrorReport rep;
    for (std::size_t c = 0; c < plus.checkpoints.size(); ++c) {
        const Field u = to_physical(plus.checkpoints[c].B);
        const Field v = to_physical(minus.checkpoints[c].B);
        for (std::size_t j = 0; j < u.size(); ++j) {
            rep.discrepancy = std::max(rep.discrepancy, std::abs(u[j] + v[j]));
            rep.reference = std::max(rep.reference, std::abs(u[j]));
        }
    }
    return rep;
}

}  // namespace emhd
