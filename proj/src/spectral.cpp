#include "emhd/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>

namespace emhd {
namespace {

struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

// Planning is not thread-safe in FFTW; execution through the new-array
// interface is. Plans are created once per size and never destroyed.
Plans plans_for(std::size_t n) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, Plans> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> real(n);
    std::vector<cplx> spec(n / 2 + 1);
    auto* c = reinterpret_cast<fftw_complex*>(spec.data());
    const int ni = static_cast<int>(n);
    Plans p;
    p.r2c = fftw_plan_dft_r2c_1d(ni, real.data(), c, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_1d(ni, c, real.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(n, p);
    return p;
}

double sign_of_mode(std::size_t k) { return (k & 1U) ? -1.0 : 1.0; }

}  // namespace

Spectrum to_spectral(const Field& f) {
    const auto& g = f.grid;
    if (f.samples.size() != g.n_modes)
        throw std::invalid_argument("to_spectral: sample count does not match grid");
    const auto plans = plans_for(g.n_modes);
    std::vector<double> in = f.samples;
    Spectrum out(g);
    fftw_execute_dft_r2c(plans.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.coeffs.data()));
    const double inv_n = 1.0 / static_cast<double>(g.n_modes);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= sign_of_mode(k) * inv_n;
    out[0] = {out[0].real(), 0.0};
    out[g.nyquist()] = {out[g.nyquist()].real(), 0.0};
    return out;
}

Field to_physical(const Spectrum& s) {
    const auto& g = s.grid;
    if (s.coeffs.size() != g.spectrum_size())
        throw std::invalid_argument("to_physical: coefficient count does not match grid");
    const auto plans = plans_for(g.n_modes);
    std::vector<cplx> in(s.coeffs);
    for (std::size_t k = 0; k < in.size(); ++k) in[k] *= sign_of_mode(k);
    Field out(g);
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(in.data()), out.samples.data());
    return out;
}

double fractional_symbol(double xi, double alpha) {
    if (alpha < 0.0 || !std::isfinite(alpha))
        throw std::invalid_argument("fractional order alpha must be finite and >= 0");
    if (alpha == 0.0) return 1.0;
    return std::pow(std::abs(xi), alpha);
}

MultiplierTable MultiplierTable::make(const GridSpec& g, double alpha) {
    MultiplierTable t;
    t.grid = g;
    t.alpha = alpha;
    const std::size_t m = g.spectrum_size();
    t.hilbert.assign(m, cplx{0.0, -1.0});
    t.derivative.resize(m);
    t.lambda.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double xi = g.wavenumber(static_cast<long>(k));
        t.derivative[k] = {0.0, xi};
        t.lambda[k] = fractional_symbol(xi, alpha);
    }
    t.hilbert[0] = 0.0;
    t.hilbert[g.nyquist()] = 0.0;
    t.derivative[g.nyquist()] = 0.0;
    return t;
}

std::vector<double> MultiplierTable::semigroup(double mu, double t) const {
    std::vector<double> e(lambda.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::exp(-mu * lambda[k] * t);
    return e;
}

Spectrum hilbert(const Spectrum& f) {
    Spectrum out(f.grid);
    for (std::size_t k = 1; k < f.grid.nyquist(); ++k) out[k] = cplx{0.0, -1.0} * f[k];
    return out;
}

Field hilbert(const Field& f) { return to_physical(hilbert(to_spectral(f))); }

Spectrum lambda_alpha(const Spectrum& f, double alpha) {
    Spectrum out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = fractional_symbol(f.grid.wavenumber(static_cast<long>(k)), alpha) * f[k];
    return out;
}

Field lambda_alpha(const Field& f, double alpha) { return to_physical(lambda_alpha(to_spectral(f), alpha)); }

Spectrum derivative(const Spectrum& f) {
    Spectrum out(f.grid);
    for (std::size_t k = 1; k < f.grid.nyquist(); ++k)
        out[k] = cplx{0.0, f.grid.wavenumber(static_cast<long>(k))} * f[k];
    return out;
}

Field derivative(const Field& f) { return to_physical(derivative(to_spectral(f))); }

bool is_zero_mean(const Spectrum& f) {
    double scale = 1.0;
    for (const auto& c : f.coeffs) scale = std::max(scale, std::abs(c));
    return std::abs(f[0]) <= 1e-10 * scale;
}

Spectrum current_from_field(const Spectrum& B) {
    if (!is_zero_mean(B))
        throw std::invalid_argument("current_from_field: B must have zero mean, got mean " +
                                    std::to_string(B.mean()));
    Spectrum J(B.grid);
    for (std::size_t k = 1; k < B.size(); ++k)
        J[k] = -std::abs(B.grid.wavenumber(static_cast<long>(k))) * B[k];
    return J;
}

Field current_from_field(const Field& B) { return to_physical(current_from_field(to_spectral(B))); }

Spectrum apply_semigroup(const Spectrum& f, double mu, double alpha, double t) {
    Spectrum out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = std::exp(-mu * fractional_symbol(f.grid.wavenumber(static_cast<long>(k)), alpha) * t) * f[k];
    return out;
}

Spectrum truncate(Spectrum f, std::size_t kmax) {
    for (std::size_t k = kmax + 1; k < f.size(); ++k) f[k] = 0.0;
    return f;
}

Spectrum dealiased_product(const Spectrum& f, const Spectrum& g) {
    require_same_grid(f.grid, g.grid, "dealiased_product");
    const std::size_t kc = f.grid.dealias_cutoff();
    Field pf = to_physical(truncate(f, kc));
    const Field pg = to_physical(truncate(g, kc));
    for (std::size_t j = 0; j < pf.size(); ++j) pf[j] *= pg[j];
    return truncate(to_spectral(pf), kc);
}

Field dealiased_product(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid, "dealiased_product");
    return to_physical(dealiased_product(to_spectral(f), to_spectral(g)));
}

Spectrum padded_product(const Spectrum& f, const Spectrum& g) {
    require_same_grid(f.grid, g.grid, "padded_product");
    const GridSpec big{2 * f.grid.n_modes, f.grid.half_length};
    Spectrum fb(big), gb(big);
    for (std::size_t k = 0; k < f.grid.nyquist(); ++k) {
        fb[k] = f[k];
        gb[k] = g[k];
    }
    Field pf = to_physical(fb);
    const Field pg = to_physical(gb);
    for (std::size_t j = 0; j < pf.size(); ++j) pf[j] *= pg[j];
    const Spectrum pb = to_spectral(pf);
    Spectrum out(f.grid);
    for (std::size_t k = 0; k < f.grid.nyquist(); ++k) out[k] = pb[k];
    return out;
}

double l1_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.samples) s += std::abs(v);
    return s * f.grid.dx();
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.samples) s += v * v;
    return std::sqrt(s * f.grid.dx());
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

double l2_norm(const Spectrum& s) {
    double sum = std::norm(s[0]);
    for (std::size_t k = 1; k < s.grid.nyquist(); ++k) sum += 2.0 * std::norm(s[k]);
    sum += std::norm(s[s.grid.nyquist()]);
    return std::sqrt(2.0 * s.grid.half_length * sum);
}

}  // namespace emhd
