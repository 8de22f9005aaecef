#pragma once

#include "emhd/grid.hpp"
#include "emhd/model.hpp"

#include <vector>

namespace emhd {

/// Truncated Fourier system for the transport model (a=0, b=1), |k| <= N.
/// Coefficients are stored for k = 0..N; negative modes by conjugation.
struct GalerkinState {
    std::size_t N = 0;
    double t = 0.0;
    double half_length = 3.141592653589793;
    std::vector<cplx> coeffs;

    cplx mode(long k) const;
    double wavenumber(long k) const;
};

/// Restriction of B to |k| <= N.
GalerkinState galerkin_state(const Spectrum& B, std::size_t N, double t = 0.0);
/// Embeds the state in a spectrum on g (requires N <= n/2 - 1).
Spectrum to_spectrum(const GalerkinState& s, const GridSpec& g);

/// dB(k)/dt = i sum_{m+n=k} m|n| B(m) B(n) - mu |k|^alpha B(k), all |m|,|n|,|k| <= N,
/// with physical wavenumbers pi k / L in place of the integers.
std::vector<cplx> galerkin_rhs(const GalerkinState& s, const ModelParams& p);
/// Quadratic part only.
std::vector<cplx> galerkin_bilinear(const GalerkinState& s);

/// xi(k, t) = B(k, t) exp(mu |k|^alpha t / 2).
std::vector<cplx> weighted_coefficients(const GalerkinState& s, const ModelParams& p);

/// Y = sum_{|k| <= N} |k|^w |xi(k)|^2 over signed k.
double y_functional(const GalerkinState& s, const ModelParams& p, double weight = 8.0);

/// Integrating-factor RK4 for the truncated system; states every `sample_every`
/// steps plus the final one. T/dt is rounded to the nearest whole step count.
std::vector<GalerkinState> galerkin_evolve(const GalerkinState& s0, const ModelParams& p, double T, double dt,
                                           int sample_every = 1);

struct RiccatiSample {
    double t = 0.0;
    double Y = 0.0;
    double dYdt = 0.0;     ///< centered difference
    double growth = 0.0;   ///< Y^{3/2}
    double damping = 0.0;  ///< mu (Y^{1/2} t - 1) sum |k|^{w+alpha} |xi|^2
};

struct RiccatiProbe {
    std::size_t N = 0;
    double weight = 8.0;
    bool in_analytic_range = true;   ///< alpha in [0, 1]
    bool resolved = true;     ///< top-mode share of Y below 1e-6 throughout
    std::vector<RiccatiSample> samples;
    double C1 = 0.0;          ///< smallest C1 with C2 = 0
    double C2 = 0.0;          ///< largest C2 for which the bound holds with 2 C1
    double min_margin = 0.0;  ///< min of 2 C1 Y^{3/2} + C2 damping - dY/dt (>= 0)
};

/// Requires a=0, b=1. dY/dt from centered differences of Y on the step mesh.
RiccatiProbe riccati_probe(const Spectrum& B0, std::size_t N, const ModelParams& p, double T, double dt,
                           double weight = 8.0);

/// First time Y reaches twice Y(0); +inf if never within the probe.
double y_doubling_time(const RiccatiProbe& probe);

/// Max coefficient difference at T between galerkin_evolve and evolve() in
/// galerkin truncation on B0's grid (n >= 3N), same dt.
double galerkin_vs_pseudospectral(const Spectrum& B0, std::size_t N, const ModelParams& p, double T, double dt);

}  // namespace emhd
