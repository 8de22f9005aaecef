#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace emhd {

using cplx = std::complex<double>;

/// Uniform periodic grid on [-L, L) with n collocation points x_j = -L + 2Lj/n.
struct GridSpec {
    std::size_t n_modes = 64;
    double half_length = std::numbers::pi;

    /// Validates n (power of two, >= 4) and L > 0; throws std::invalid_argument.
    static GridSpec make(std::size_t n, double L = std::numbers::pi);

    double dx() const { return 2.0 * half_length / static_cast<double>(n_modes); }
    double x(std::size_t j) const { return -half_length + dx() * static_cast<double>(j); }
    std::vector<double> points() const;

    /// Physical wavenumber of integer mode k: pi k / L.
    double wavenumber(long k) const { return std::numbers::pi * static_cast<double>(k) / half_length; }

    /// Number of stored half-spectrum coefficients, k = 0..n/2.
    std::size_t spectrum_size() const { return n_modes / 2 + 1; }
    std::size_t nyquist() const { return n_modes / 2; }
    /// 2/3-rule cutoff: modes with k > n/3 are discarded before products.
    std::size_t dealias_cutoff() const { return n_modes / 3; }

    bool operator==(const GridSpec&) const = default;
};

/// Point values of a real periodic function.
struct Field {
    GridSpec grid;
    std::vector<double> samples;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), samples(g.n_modes, 0.0) {}
    Field(const GridSpec& g, std::vector<double> s);

    std::size_t size() const { return samples.size(); }
    double operator[](std::size_t j) const { return samples[j]; }
    double& operator[](std::size_t j) { return samples[j]; }
};

/// Fourier coefficients for k = 0..n/2, normalized so that
/// u_hat(k) = (1/2L) \int u exp(-i pi k x / L) dx. Negative modes are implied
/// by conjugate symmetry u_hat(-k) = conj(u_hat(k)).
struct Spectrum {
    GridSpec grid;
    std::vector<cplx> coeffs;

    Spectrum() = default;
    explicit Spectrum(const GridSpec& g) : grid(g), coeffs(g.spectrum_size(), cplx{}) {}
    Spectrum(const GridSpec& g, std::vector<cplx> c);

    std::size_t size() const { return coeffs.size(); }
    const cplx& operator[](std::size_t k) const { return coeffs[k]; }
    cplx& operator[](std::size_t k) { return coeffs[k]; }

    /// Coefficient of signed mode k, |k| <= n/2.
    cplx mode(long k) const;
    double mean() const { return coeffs[0].real(); }

    Spectrum& operator+=(const Spectrum& o);
    Spectrum& operator-=(const Spectrum& o);
    Spectrum& operator*=(double s);
};

Spectrum operator+(Spectrum a, const Spectrum& b);
Spectrum operator-(Spectrum a, const Spectrum& b);
Spectrum operator*(double s, Spectrum a);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

/// Samples of fn on the grid.
template <class Fn>
Field sample(const GridSpec& g, Fn&& fn) {
    Field f(g);
    for (std::size_t j = 0; j < g.n_modes; ++j) f[j] = fn(g.x(j));
    return f;
}

}  // namespace emhd
