#include "emhd/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emhd::oracle {
namespace {

constexpr double pi = std::numbers::pi;

std::size_t wrap(long j, std::size_t n) {
    const long m = static_cast<long>(n);
    return static_cast<std::size_t>(((j % m) + m) % m);
}

double five_point_derivative(const std::vector<double>& f, std::size_t i, double h) {
    const std::size_t n = f.size();
    const long li = static_cast<long>(i);
    return (f[wrap(li - 2, n)] - 8.0 * f[wrap(li - 1, n)] + 8.0 * f[wrap(li + 1, n)] - f[wrap(li + 2, n)]) /
           (12.0 * h);
}

double five_point_second_derivative(const std::vector<double>& f, std::size_t i, double h) {
    const std::size_t n = f.size();
    const long li = static_cast<long>(i);
    return (-f[wrap(li - 2, n)] + 16.0 * f[wrap(li - 1, n)] - 30.0 * f[i] + 16.0 * f[wrap(li + 1, n)] -
            f[wrap(li + 2, n)]) /
           (12.0 * h * h);
}

// sum_m |z + 2Lm|^{-1-alpha} over m != 0: explicit images for |m| <= M and a
// midpoint-rule integral for the remainder.
double image_kernel(double z, double L, double alpha) {
    constexpr int images = 256;
    double s = 0.0;
    for (int m = 1; m <= images; ++m) {
        s += std::pow(std::abs(z + 2.0 * L * m), -1.0 - alpha);
        s += std::pow(std::abs(z - 2.0 * L * m), -1.0 - alpha);
    }
    const double edge = 2.0 * L * (images + 0.5);
    s += std::pow(edge + z, -alpha) / (2.0 * L * alpha);
    s += std::pow(edge - z, -alpha) / (2.0 * L * alpha);
    return s;
}

}  // namespace

std::vector<double> pv_hilbert_quadrature(const GridSpec& g, const std::vector<double>& f) {
    const std::size_t n = g.n_modes;
    if (f.size() != n) throw std::invalid_argument("pv_hilbert_quadrature: sample count mismatch");
    const double h = g.dx();
    const double L = g.half_length;
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = static_cast<double>(static_cast<long>(i) - static_cast<long>(j)) * h;
            s += f[j] / std::tan(pi * d / (2.0 * L));
        }
        s -= (2.0 * L / pi) * five_point_derivative(f, i, h);
        out[i] = s * h / (2.0 * L);
    }
    return out;
}

double fractional_constant(double alpha) {
    return alpha * std::pow(2.0, alpha - 1.0) * std::tgamma((1.0 + alpha) / 2.0) /
           (std::sqrt(pi) * std::tgamma(1.0 - alpha / 2.0));
}

std::vector<double> pv_fractional_quadrature(const GridSpec& g, const std::vector<double>& f, double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("pv_fractional_quadrature: alpha must lie in (0, 2)");
    const std::size_t n = g.n_modes;
    if (f.size() != n) throw std::invalid_argument("pv_fractional_quadrature: sample count mismatch");
    const double h = g.dx();
    const double L = g.half_length;
    const double c = fractional_constant(alpha);

    // Kernel values depend only on the index offset.
    std::vector<double> kernel(n, 0.0);
    for (std::size_t d = 1; d < n; ++d) {
        double z = static_cast<double>(d) * h;
        if (z > L) z -= 2.0 * L;
        kernel[d] = std::pow(std::abs(z), -1.0 - alpha) + image_kernel(z, L, alpha);
    }
    // Trapezoidal sum omitting the node misses 2 zeta(-beta) h^{1+beta} g(0)
    // for an integrand |s|^beta g(s), beta = 1 - alpha, g(0) = -f''(x)/2.
    const double beta = 1.0 - alpha;
    const double node_weight = 2.0 * std::riemann_zeta(-beta) * std::pow(h, 1.0 + beta);

    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const std::size_t d = wrap(static_cast<long>(i) - static_cast<long>(j), n);
            s += (f[i] - f[j]) * kernel[d];
        }
        s *= h;
        const double g0 = -0.5 * five_point_second_derivative(f, i, h);
        s -= node_weight * g0;
        out[i] = c * s;
    }
    return out;
}

std::vector<double> centered_difference(const GridSpec& g, const std::vector<double>& f) {
    const std::size_t n = g.n_modes;
    std::vector<double> out(n);
    const double h = g.dx();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (f[wrap(static_cast<long>(i) + 1, n)] - f[wrap(static_cast<long>(i) - 1, n)]) / (2.0 * h);
    return out;
}

ModeMap to_modes(const Spectrum& s, std::size_t kmax) {
    ModeMap m;
    const long K = static_cast<long>(std::min(kmax, s.size() - 1));
    for (long k = -K; k <= K; ++k) m[k] = s.mode(k);
    return m;
}

ModeMap convolve(const ModeMap& f, const ModeMap& g) {
    ModeMap out;
    for (const auto& [m, fm] : f)
        for (const auto& [n, gn] : g) out[m + n] += fm * gn;
    return out;
}

Spectrum rhs_by_convolution(const Spectrum& B, double a, double b, double mu, double alpha, std::size_t kmax) {
    const GridSpec& g = B.grid;
    const ModeMap Bm = to_modes(B, kmax);
    ModeMap J, Jx, Bx;
    for (const auto& [k, c] : Bm) {
        const double xi = g.wavenumber(k);
        J[k] = -std::abs(xi) * c;
        Jx[k] = cplx{0.0, xi} * J[k];
        Bx[k] = cplx{0.0, xi} * c;
    }
    const ModeMap BJx = convolve(Bm, Jx);
    const ModeMap JBx = convolve(J, Bx);
    Spectrum out(g);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const long lk = static_cast<long>(k);
        const auto at = [lk](const ModeMap& m) {
            auto it = m.find(lk);
            return it == m.end() ? cplx{} : it->second;
        };
        const double xi = g.wavenumber(lk);
        const double damp = (alpha == 0.0) ? 1.0 : std::pow(std::abs(xi), alpha);
        out[k] = -mu * damp * B[k];
        if (k <= kmax) out[k] += -a * at(BJx) - b * at(JBx);
    }
    return out;
}

}  // namespace emhd::oracle
