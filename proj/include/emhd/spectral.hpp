#pragma once

#include "emhd/grid.hpp"

#include <vector>

namespace emhd {

// Transforms. to_spectral applies the 1/n normalization and the (-1)^k phase
// that comes from sampling on [-L, L) instead of [0, 2L).
Spectrum to_spectral(const Field& f);
Field to_physical(const Spectrum& s);

/// Per-wavenumber factors for the operators acting on a half spectrum.
struct MultiplierTable {
    GridSpec grid;
    double alpha = 0.0;
    std::vector<cplx> hilbert;     // -i sgn(k), zero at k = 0 and at Nyquist
    std::vector<cplx> derivative;  // i pi k / L, zero at Nyquist
    std::vector<double> lambda;    // |pi k / L|^alpha, Lambda^0 = identity

    static MultiplierTable make(const GridSpec& g, double alpha);

    /// exp(-mu |k|^alpha t) per mode.
    std::vector<double> semigroup(double mu, double t) const;
};

/// |xi|^alpha with the convention 0^0 = 1; rejects alpha < 0.
double fractional_symbol(double xi, double alpha);

Spectrum hilbert(const Spectrum& f);
Field hilbert(const Field& f);

/// Lambda^alpha = (-Delta)^{alpha/2}; alpha = 0 is the identity.
Spectrum lambda_alpha(const Spectrum& f, double alpha);
Field lambda_alpha(const Field& f, double alpha);

Spectrum derivative(const Spectrum& f);
Field derivative(const Field& f);

/// J with B_x = H J and zero mean, i.e. J_hat(k) = -|k| B_hat(k).
/// Throws std::invalid_argument if B has a nonzero mean.
Spectrum current_from_field(const Spectrum& B);
Field current_from_field(const Field& B);

/// True when |mean| is below rounding relative to the largest coefficient.
bool is_zero_mean(const Spectrum& f);

/// Exact multiplication by the dissipation semigroup exp(-t mu Lambda^alpha).
Spectrum apply_semigroup(const Spectrum& f, double mu, double alpha, double t);

/// Zeroes every mode with k > kmax.
Spectrum truncate(Spectrum f, std::size_t kmax);

/// Product with the 2/3 rule: inputs and output restricted to k <= n/3.
Spectrum dealiased_product(const Spectrum& f, const Spectrum& g);
Field dealiased_product(const Field& f, const Field& g);

/// Alias-free product on a doubled grid, returned for k < n/2 (Nyquist zeroed).
/// Exact whenever both inputs vanish at Nyquist.
Spectrum padded_product(const Spectrum& f, const Spectrum& g);

// Norms and simple reductions on samples.
double l1_norm(const Field& f);
double l2_norm(const Field& f);
double linf_norm(const Field& f);
/// sqrt(2L sum_k |u_hat(k)|^2) over all signed k.
double l2_norm(const Spectrum& s);

}  // namespace emhd
