#include "emhd/dynamics.hpp"

#include "emhd/littlewood_paley.hpp"
#include "emhd/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace emhd {

std::string to_string(Truncation t) {
    switch (t) {
        case Truncation::dealias: return "dealias";
        case Truncation::none: return "none";
        case Truncation::galerkin: return "galerkin";
    }
    return "?";
}

Truncation truncation_from_string(const std::string& s) {
    if (s == "dealias" || s == "on") return Truncation::dealias;
    if (s == "none" || s == "off") return Truncation::none;
    if (s == "galerkin") return Truncation::galerkin;
    throw std::invalid_argument("unknown truncation '" + s + "' (dealias|none|galerkin)");
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::blowup: return "blowup";
        case Termination::unresolved: return "unresolved";
        case Termination::numeric_failure: return "numeric_failure";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("solver: dt must be positive");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("solver: CFL constant must lie in (0, 1]");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("solver: t_end must be positive");
    if (stride < 1) throw std::invalid_argument("solver: diagnostics stride must be >= 1");
    if (truncation == Truncation::galerkin && galerkin_modes == 0)
        throw std::invalid_argument("solver: galerkin truncation needs galerkin_modes > 0");
    for (double t : checkpoint_times)
        if (t < 0.0 || t > t_end) throw std::invalid_argument("solver: checkpoint time outside [0, t_end]");
}

// ---------------------------------------------------------------------------
// Right-hand side

std::size_t effective_cutoff(const GridSpec& g, Truncation mode, std::size_t galerkin_modes) {
    switch (mode) {
        case Truncation::dealias: return g.dealias_cutoff();
        case Truncation::none: return g.nyquist();
        case Truncation::galerkin:
            if (galerkin_modes > g.dealias_cutoff())
                throw std::invalid_argument("galerkin truncation N=" + std::to_string(galerkin_modes) +
                                            " needs n >= 3N; grid has n=" + std::to_string(g.n_modes));
            return galerkin_modes;
    }
    return g.nyquist();
}

NonlinearTerm::NonlinearTerm(const GridSpec& g, double a, double b, Truncation mode, std::size_t galerkin_modes)
    : grid_(g), a_(a), b_(b), cutoff_(effective_cutoff(g, mode, galerkin_modes)), xi_(g.spectrum_size()) {
    for (std::size_t k = 0; k < xi_.size(); ++k) xi_[k] = g.wavenumber(static_cast<long>(k));
}

Spectrum NonlinearTerm::bilinear(const Spectrum& coeff, const Spectrum& B) const {
    require_same_grid(grid_, coeff.grid, "nonlinear term");
    require_same_grid(grid_, B.grid, "nonlinear term");
    Spectrum out(grid_);
    if (a_ == 0.0 && b_ == 0.0) return out;
    const std::size_t top = std::min(cutoff_, grid_.nyquist() - 1);
    const std::size_t n = grid_.n_modes;
    std::vector<double> product(n, 0.0);

    if (a_ != 0.0) {
        Spectrum c(grid_), jx(grid_);
        for (std::size_t k = 1; k <= top; ++k) {
            c[k] = coeff[k];
            jx[k] = cplx{0.0, xi_[k]} * (-std::abs(xi_[k]) * B[k]);
        }
        c[0] = coeff[0];
        const Field cp = to_physical(c);
        const Field jxp = to_physical(jx);
        for (std::size_t j = 0; j < n; ++j) product[j] -= a_ * cp[j] * jxp[j];
    }
    if (b_ != 0.0) {
        Spectrum jc(grid_), bx(grid_);
        for (std::size_t k = 1; k <= top; ++k) {
            jc[k] = -std::abs(xi_[k]) * coeff[k];
            bx[k] = cplx{0.0, xi_[k]} * B[k];
        }
        const Field jcp = to_physical(jc);
        const Field bxp = to_physical(bx);
        for (std::size_t j = 0; j < n; ++j) product[j] -= b_ * jcp[j] * bxp[j];
    }
    out = to_spectral(Field(grid_, std::move(product)));
    return truncate(std::move(out), cutoff_);
}

std::vector<double> damping_rates(const GridSpec& g, const ModelParams& p) {
    std::vector<double> d(g.spectrum_size());
    for (std::size_t k = 0; k < d.size(); ++k)
        d[k] = p.mu * fractional_symbol(g.wavenumber(static_cast<long>(k)), p.alpha);
    return d;
}

Spectrum rhs(const Spectrum& B, const ModelParams& p, Truncation mode, std::size_t galerkin_modes) {
    p.validate();
    if (!is_zero_mean(B)) throw std::invalid_argument("rhs: B must have zero mean");
    const NonlinearTerm nl(B.grid, p.a, p.b, mode, galerkin_modes);
    Spectrum out = nl(B);
    const auto d = damping_rates(B.grid, p);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= d[k] * B[k];
    return out;
}

Field rhs(const Field& B, const ModelParams& p, Truncation mode) {
    return to_physical(rhs(to_spectral(B), p, mode));
}

// ---------------------------------------------------------------------------
// Time stepping

namespace {

void require_finite(const Spectrum& s) {
    for (const auto& c : s.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NumericFailure("non-finite spectral coefficient after step");
}

}  // namespace

Spectrum if_rk4_step(const Spectrum& u, double t, double dt, const std::vector<double>& damping,
                     const StageFunction& nonlinear) {
    const std::size_t m = u.size();
    std::vector<double> half(m), full(m);
    for (std::size_t k = 0; k < m; ++k) {
        half[k] = std::exp(-0.5 * dt * damping[k]);
        full[k] = half[k] * half[k];
    }
    const double h2 = 0.5 * dt;

    const Spectrum k1 = nonlinear(t, u);
    Spectrum stage(u.grid);
    for (std::size_t k = 0; k < m; ++k) stage[k] = half[k] * (u[k] + h2 * k1[k]);
    const Spectrum k2 = nonlinear(t + h2, stage);
    for (std::size_t k = 0; k < m; ++k) stage[k] = half[k] * u[k] + h2 * k2[k];
    const Spectrum k3 = nonlinear(t + h2, stage);
    for (std::size_t k = 0; k < m; ++k) stage[k] = full[k] * u[k] + dt * half[k] * k3[k];
    const Spectrum k4 = nonlinear(t + dt, stage);

    Spectrum out(u.grid);
    for (std::size_t k = 0; k < m; ++k)
        out[k] = full[k] * u[k] + (dt / 6.0) * (full[k] * k1[k] + 2.0 * half[k] * (k2[k] + k3[k]) + k4[k]);
    require_finite(out);
    return out;
}

Spectrum step(const Spectrum& B, const ModelParams& p, double dt, Truncation mode, std::size_t galerkin_modes) {
    p.validate();
    const NonlinearTerm nl(B.grid, p.a, p.b, mode, galerkin_modes);
    const auto damping = damping_rates(B.grid, p);
    return if_rk4_step(B, 0.0, dt, damping, [&nl](double, const Spectrum& u) { return nl(u); });
}

Trajectory evolve(const Spectrum& B0, const ModelParams& p, const SolverConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!is_zero_mean(B0)) throw std::invalid_argument("evolve: initial field must have zero mean");
    const GridSpec& g = B0.grid;
    const NonlinearTerm nl(g, p.a, p.b, cfg.truncation, cfg.galerkin_modes);
    const auto damping = damping_rates(g, p);
    const StageFunction stage = [&nl](double, const Spectrum& u) { return nl(u); };
    const std::size_t kmax = nl.cutoff();

    std::vector<double> targets = cfg.checkpoint_times;
    targets.push_back(cfg.t_end);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    Trajectory traj;
    traj.sobolev = cfg.sobolev;
    Spectrum B = cfg.truncation == Truncation::galerkin ? truncate(B0, kmax) : B0;
    double t = 0.0;
    bool resolved = true;
    std::size_t next_target = 0;

    auto record = [&](double time, const Spectrum& state) {
        DiagRow row = diagnose(time, state, cfg.sobolev, kmax, cfg.resolution);
        resolved = resolved && row.resolved;
        row.resolved = resolved;
        if (resolved) traj.resolved_until = time;
        traj.series.push_back(std::move(row));
    };
    auto store_checkpoints = [&](double time, const Spectrum& state) {
        for (double tc : cfg.checkpoint_times)
            if (tc == time) traj.checkpoints.push_back({time, state});
    };

    record(0.0, B);
    store_checkpoints(0.0, B);
    while (next_target < targets.size() && targets[next_target] <= 0.0) ++next_target;

    std::size_t steps = 0;
    // Fixed steps are counted from the last target so that t does not drift.
    double segment_start = 0.0;
    std::size_t segment_steps = 0;
    try {
        while (next_target < targets.size()) {
            double dt = cfg.dt;
            double t_next = 0.0;
            if (cfg.dt_policy == DtPolicy::cfl) {
                const double jmax = linf_norm(to_physical(current_from_field(B)));
                dt = std::min(cfg.dt, cfg.cfl * g.dx() / std::max(jmax, 1e-12));
                t_next = t + dt;
            } else {
                t_next = segment_start + static_cast<double>(segment_steps + 1) * dt;
            }
            const double target = targets[next_target];
            bool hit = false;
            if (t_next >= target - 1e-6 * dt) {
                t_next = target;
                hit = true;
            }
            B = if_rk4_step(B, t, t_next - t, damping, stage);
            t = t_next;
            ++steps;
            ++segment_steps;

            const bool last = hit && next_target + 1 == targets.size();
            if (hit) {
                store_checkpoints(t, B);
                ++next_target;
                segment_start = t;
                segment_steps = 0;
            }
            if (steps % static_cast<std::size_t>(cfg.stride) == 0 || last) {
                record(t, B);
                const DiagRow& row = traj.series.back();
                if (row.lip > cfg.lip_threshold) {
                    traj.reason = Termination::blowup;
                    traj.message = "||B_x||_inf exceeded threshold";
                    break;
                }
                if (!row.resolved && cfg.stop_when_unresolved) {
                    traj.reason = Termination::unresolved;
                    traj.message = "resolution lost";
                    break;
                }
            }
        }
    } catch (const NumericFailure& e) {
        traj.reason = Termination::numeric_failure;
        traj.message = e.what();
    }
    traj.steps = steps;
    traj.t_final = t;
    traj.final_state = std::move(B);
    return traj;
}

// ---------------------------------------------------------------------------
// Scaling covariance and smoothing probe

ScalingReport scaling_covariance_check(const Spectrum& B0, const ModelParams& p, int lambda, double T, double dt) {
    if (lambda < 1) throw std::invalid_argument("scaling: lambda must be a positive integer");
    const GridSpec& g = B0.grid;
    const auto lam = static_cast<std::size_t>(lambda);
    double peak = 0.0;
    for (const auto& c : B0.coeffs) peak = std::max(peak, std::abs(c));
    std::size_t bandwidth = 0;
    for (std::size_t k = 0; k < B0.size(); ++k)
        if (std::abs(B0[k]) > 1e-15 * peak) bandwidth = k;
    if (lam * bandwidth > g.dealias_cutoff())
        throw std::invalid_argument("scaling: rescaled data exceed the dealiasing band; refine the grid");

    const double amp = std::pow(static_cast<double>(lambda), p.alpha - 2.0);
    const double time_factor = std::pow(static_cast<double>(lambda), p.alpha);

    Spectrum scaled(g);
    for (std::size_t k = 0; lam * k < scaled.size(); ++k) scaled[lam * k] = amp * B0[k];

    SolverConfig ref;
    ref.dt = time_factor * dt;
    ref.t_end = time_factor * T;
    ref.stride = 1 << 30;
    SolverConfig fast;
    fast.dt = dt;
    fast.t_end = T;
    fast.stride = 1 << 30;

    const Trajectory big = evolve(B0, p, ref);
    const Trajectory small = evolve(scaled, p, fast);
    if (big.reason != Termination::completed || small.reason != Termination::completed)
        throw NumericFailure("scaling: a run did not complete");

    const Field u = to_physical(big.final_state);
    const Field v = to_physical(small.final_state);
    const std::size_t n = g.n_modes;
    ScalingReport rep;
    rep.lambda = lambda;
    for (std::size_t j = 0; j < n; ++j) {
        // lambda * x_j coincides with grid point (lambda j + (lambda - 1) n / 2) mod n.
        const std::size_t idx = (lam * j + (lam - 1) * (n / 2)) % n;
        rep.discrepancy = std::max(rep.discrepancy, std::abs(v[j] - amp * u[idx]));
        rep.reference_linf = std::max(rep.reference_linf, std::abs(v[j]));
    }
    return rep;
}

std::vector<double> log_times(double t0, double t1, int count) {
    if (!(t0 > 0.0 && t1 > t0) || count < 2) throw std::invalid_argument("log_times: need 0 < t0 < t1, count >= 2");
    std::vector<double> ts(static_cast<std::size_t>(count));
    const double r = std::log(t1 / t0) / (count - 1);
    for (int i = 0; i < count; ++i) ts[static_cast<std::size_t>(i)] = t0 * std::exp(r * i);
    ts.back() = t1;
    return ts;
}

SmoothingTable smoothing_rate_probe(const Spectrum& B0, const ModelParams& p, const std::vector<double>& betas,
                                    const std::vector<double>& times, double dt) {
    if (times.empty() || !std::is_sorted(times.begin(), times.end()) || times.front() <= 0.0)
        throw std::invalid_argument("smoothing probe: times must be positive and ascending");
    if (!(p.alpha > 0.0)) throw std::invalid_argument("smoothing probe: alpha must be positive");
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = times.back();
    cfg.checkpoint_times = times;
    cfg.stride = 1 << 30;
    const Trajectory traj = evolve(B0, p, cfg);
    if (traj.reason != Termination::completed) throw NumericFailure("smoothing probe: run did not complete");

    SmoothingTable table;
    table.betas = betas;
    for (const auto& cp : traj.checkpoints) table.times.push_back(cp.t);
    for (double beta : betas) {
        const double s = 2.5 - p.alpha + beta;
        std::vector<double> row;
        double sup = 0.0;
        for (const auto& cp : traj.checkpoints) {
            const double v = std::pow(cp.t, beta / p.alpha) * lp::sobolev_norm(cp.B, s, lp::NormMode::direct);
            row.push_back(v);
            sup = std::max(sup, v);
        }
        table.weighted.push_back(std::move(row));
        table.supremum.push_back(sup);
    }
    return table;
}

}  // namespace emhd
