#include "emhd/galerkin.hpp"

#include "emhd/dynamics.hpp"
#include "emhd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace emhd {

cplx GalerkinState::mode(long k) const {
    const auto ak = static_cast<std::size_t>(k < 0 ? -k : k);
    if (ak > N) return {};
    return k < 0 ? std::conj(coeffs[ak]) : coeffs[ak];
}

double GalerkinState::wavenumber(long k) const {
    return std::numbers::pi * static_cast<double>(k) / half_length;
}

GalerkinState galerkin_state(const Spectrum& B, std::size_t N, double t) {
    if (N + 1 > B.size()) throw std::invalid_argument("galerkin_state: N exceeds the stored spectrum");
    GalerkinState s;
    s.N = N;
    s.t = t;
    s.half_length = B.grid.half_length;
    s.coeffs.assign(B.coeffs.begin(), B.coeffs.begin() + static_cast<long>(N + 1));
    s.coeffs[0] = {s.coeffs[0].real(), 0.0};
    return s;
}

Spectrum to_spectrum(const GalerkinState& s, const GridSpec& g) {
    if (s.N >= g.nyquist()) throw std::invalid_argument("to_spectrum: grid too small for N");
    Spectrum out(g);
    for (std::size_t k = 0; k <= s.N; ++k) out[k] = s.coeffs[k];
    return out;
}

std::vector<cplx> galerkin_bilinear(const GalerkinState& s) {
    const long N = static_cast<long>(s.N);
    std::vector<double> xi(s.N + 1);
    for (std::size_t k = 0; k <= s.N; ++k) xi[k] = s.wavenumber(static_cast<long>(k));
    auto wave = [&](long k) { return k < 0 ? -xi[static_cast<std::size_t>(-k)] : xi[static_cast<std::size_t>(k)]; };

    std::vector<cplx> out(s.N + 1);
    for (long k = 0; k <= N; ++k) {
        cplx acc{};
        for (long m = k - N; m <= N; ++m) {
            const long n = k - m;
            acc += wave(m) * std::abs(wave(n)) * s.mode(m) * s.mode(n);
        }
        out[static_cast<std::size_t>(k)] = cplx{0.0, 1.0} * acc;
    }
    out[0] = {out[0].real(), 0.0};
    return out;
}

std::vector<cplx> galerkin_rhs(const GalerkinState& s, const ModelParams& p) {
    auto out = galerkin_bilinear(s);
    for (std::size_t k = 0; k <= s.N; ++k)
        out[k] -= p.mu * fractional_symbol(s.wavenumber(static_cast<long>(k)), p.alpha) * s.coeffs[k];
    return out;
}

std::vector<cplx> weighted_coefficients(const GalerkinState& s, const ModelParams& p) {
    std::vector<cplx> xi(s.N + 1);
    for (std::size_t k = 0; k <= s.N; ++k) {
        const double rate = p.mu * fractional_symbol(s.wavenumber(static_cast<long>(k)), p.alpha);
        xi[k] = s.coeffs[k] * std::exp(0.5 * rate * s.t);
    }
    return xi;
}

namespace {

double weighted_sum(const GalerkinState& s, const std::vector<cplx>& xi, double exponent) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= s.N; ++k)
        acc += 2.0 * std::pow(std::abs(s.wavenumber(static_cast<long>(k))), exponent) * std::norm(xi[k]);
    if (exponent == 0.0) acc += std::norm(xi[0]);
    return acc;
}

GridSpec carrier_grid(const GalerkinState& s) {
    std::size_t n = 4;
    while (n / 2 <= s.N) n *= 2;
    return GridSpec::make(n, s.half_length);
}

}  // namespace

double y_functional(const GalerkinState& s, const ModelParams& p, double weight) {
    return weighted_sum(s, weighted_coefficients(s, p), weight);
}

std::vector<GalerkinState> galerkin_evolve(const GalerkinState& s0, const ModelParams& p, double T, double dt,
                                           int sample_every) {
    p.validate();
    if (!(dt > 0.0) || !(T >= 0.0)) throw std::invalid_argument("galerkin_evolve: need dt > 0, T >= 0");
    if (sample_every < 1) throw std::invalid_argument("galerkin_evolve: sample_every must be >= 1");
    // The stepper only needs a container of N+1 coefficients; a small grid serves.
    const GridSpec g = carrier_grid(s0);
    std::vector<double> damping(g.spectrum_size(), 0.0);
    for (std::size_t k = 0; k <= s0.N; ++k)
        damping[k] = p.mu * fractional_symbol(s0.wavenumber(static_cast<long>(k)), p.alpha);

    GalerkinState work = s0;
    const StageFunction nonlinear = [&work](double, const Spectrum& u) {
        std::copy(u.coeffs.begin(), u.coeffs.begin() + static_cast<long>(work.N + 1), work.coeffs.begin());
        const auto d = galerkin_bilinear(work);
        Spectrum out(u.grid);
        std::copy(d.begin(), d.end(), out.coeffs.begin());
        return out;
    };

    const auto steps = static_cast<long>(std::llround(T / dt));
    std::vector<GalerkinState> out{s0};
    Spectrum u = to_spectrum(s0, g);
    for (long i = 1; i <= steps; ++i) {
        u = if_rk4_step(u, s0.t + static_cast<double>(i - 1) * dt, dt, damping, nonlinear);
        if (i % sample_every == 0 || i == steps) {
            GalerkinState s = galerkin_state(u, s0.N, s0.t + static_cast<double>(i) * dt);
            s.half_length = s0.half_length;
            out.push_back(std::move(s));
        }
    }
    return out;
}

RiccatiProbe riccati_probe(const Spectrum& B0, std::size_t N, const ModelParams& p, double T, double dt,
                           double weight) {
    if (p.a != 0.0 || p.b != 1.0) throw std::invalid_argument("riccati_probe: transport model only (a=0, b=1)");
    RiccatiProbe probe;
    probe.N = N;
    probe.weight = weight;
    probe.in_analytic_range = p.alpha >= 0.0 && p.alpha <= 1.0;

    const auto states = galerkin_evolve(galerkin_state(B0, N), p, T, dt);
    std::vector<double> Y(states.size()), D(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto xi = weighted_coefficients(states[i], p);
        Y[i] = weighted_sum(states[i], xi, weight);
        D[i] = weighted_sum(states[i], xi, weight + p.alpha);
        const double top = 2.0 * std::pow(std::abs(states[i].wavenumber(static_cast<long>(N))), weight) *
                           std::norm(xi[N]);
        if (Y[i] > 0.0 && top > 1e-6 * Y[i]) probe.resolved = false;
    }
    for (std::size_t i = 1; i + 1 < states.size(); ++i) {
        RiccatiSample r;
        r.t = states[i].t;
        r.Y = Y[i];
        r.dYdt = (Y[i + 1] - Y[i - 1]) / (states[i + 1].t - states[i - 1].t);
        r.growth = std::pow(Y[i], 1.5);
        r.damping = p.mu * (std::sqrt(Y[i]) * r.t - 1.0) * D[i];
        probe.samples.push_back(r);
    }

    for (const auto& r : probe.samples)
        if (r.growth > 0.0) probe.C1 = std::max(probe.C1, r.dYdt / r.growth);
    double c2 = std::numeric_limits<double>::infinity();
    for (const auto& r : probe.samples)
        if (r.damping < 0.0) c2 = std::min(c2, (2.0 * probe.C1 * r.growth - r.dYdt) / -r.damping);
    probe.C2 = std::isfinite(c2) ? std::max(0.0, c2) : 0.0;
    probe.min_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : probe.samples)
        probe.min_margin = std::min(probe.min_margin, 2.0 * probe.C1 * r.growth + probe.C2 * r.damping - r.dYdt);
    if (probe.samples.empty()) probe.min_margin = 0.0;
    return probe;
}

double y_doubling_time(const RiccatiProbe& probe) {
    if (probe.samples.empty()) return std::numeric_limits<double>::infinity();
    const double y0 = probe.samples.front().Y;
    for (const auto& r : probe.samples)
        if (r.Y >= 2.0 * y0 && y0 > 0.0) return r.t;
    return std::numeric_limits<double>::infinity();
}

double galerkin_vs_pseudospectral(const Spectrum& B0, std::size_t N, const ModelParams& p, double T, double dt) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = T;
    cfg.truncation = Truncation::galerkin;
    cfg.galerkin_modes = N;
    cfg.stride = std::numeric_limits<int>::max();
    const Trajectory traj = evolve(B0, p, cfg);
    if (traj.reason != Termination::completed) throw NumericFailure("galerkin cross-check: direct run failed");

    const auto states = galerkin_evolve(galerkin_state(B0, N), p, T, dt, std::numeric_limits<int>::max());
    const GalerkinState& last = states.back();
    double diff = 0.0;
    for (std::size_t k = 0; k <= N; ++k) diff = std::max(diff, std::abs(last.coeffs[k] - traj.final_state[k]));
    return diff;
}

}  // namespace emhd
