#pragma once

// Reference computations that never touch the FFT path. They exist to check
// the spectral operators, the dealiased nonlinearity and the Galerkin system
// by an independent route, and are deliberately slow.

#include "emhd/grid.hpp"

#include <map>
#include <vector>

namespace emhd::oracle {

/// Principal-value Hilbert transform with the cot kernel on [-L, L].
/// Trapezoidal sum with symmetric exclusion of the singular node; the node's
/// limit value -(2L/pi) f'(x) is restored with a five-point difference.
std::vector<double> pv_hilbert_quadrature(const GridSpec& g, const std::vector<double>& samples);

/// Lambda^alpha f(x) = c_alpha PV \int_R (f(x) - f(y)) / |x - y|^{1+alpha} dy for a
/// 2L-periodic f, 0 < alpha < 2. The kernel is periodized over the nearest
/// images plus an integral tail, and the excluded node is corrected with the
/// generalized Euler-Maclaurin term 2 zeta(alpha - 1) h^{2-alpha} f''(x) / 2.
std::vector<double> pv_fractional_quadrature(const GridSpec& g, const std::vector<double>& samples, double alpha);

/// Normalizing constant of the singular-integral form of (-Delta)^{alpha/2} in 1D.
double fractional_constant(double alpha);

/// Centered second-order difference of periodic samples.
std::vector<double> centered_difference(const GridSpec& g, const std::vector<double>& samples);

/// Sparse signed-mode representation used by the convolution oracles.
using ModeMap = std::map<long, cplx>;

ModeMap to_modes(const Spectrum& s, std::size_t kmax);
/// c(k) = sum_{m+n=k} f(m) g(n), computed by a double loop.
ModeMap convolve(const ModeMap& f, const ModeMap& g);

/// -a B J_x - b J B_x - mu Lambda^alpha B assembled mode by mode. The quadratic
/// terms use inputs with |k| <= kmax and are kept only for |k| <= kmax.
Spectrum rhs_by_convolution(const Spectrum& B, double a, double b, double mu, double alpha, std::size_t kmax);

}  // namespace emhd::oracle
