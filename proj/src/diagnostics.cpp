#include "emhd/diagnostics.hpp"

#include "emhd/littlewood_paley.hpp"
#include "emhd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace emhd {

AnalyticityFit analyticity_radius(const Spectrum& B, std::size_t kmax) {
    const GridSpec& g = B.grid;
    std::size_t kc = kmax == 0 ? g.dealias_cutoff() : kmax;
    kc = std::min(kc, g.nyquist() - 1);
    AnalyticityFit fit;
    double peak = 0.0;
    for (std::size_t k = 1; k <= kc; ++k) peak = std::max(peak, std::abs(B[k]));
    if (peak == 0.0) return fit;
    const double floor = 1e-13 * peak;
    std::size_t k_hi = 0;
    for (std::size_t k = kc; k >= 1; --k) {
        if (std::abs(B[k]) > floor) {
            k_hi = k;
            break;
        }
    }
    if (k_hi < 16) return fit;
    const std::size_t k_lo = std::max<std::size_t>(1, k_hi / 4);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        const double mag = std::abs(B[k]);
        if (!(mag > floor)) continue;
        const double x = g.wavenumber(static_cast<long>(k));
        const double y = std::log(mag);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 8) return fit;
    const double denom = count * sxx - sx * sx;
    const double slope = (count * sxy - sx * sy) / denom;
    fit.fitted = true;
    fit.delta = std::max(0.0, -slope);
    fit.k_lo = k_lo;
    fit.k_hi = k_hi;
    return fit;
}

double tail_energy_fraction(const Spectrum& B, std::size_t kmax) {
    kmax = std::min(kmax, B.size() - 1);
    double total = 0.0, tail = 0.0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const double e = std::norm(B[k]);
        total += e;
        if (2 * k > kmax) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

MaxLocation locate_max(const Field& f) {
    const std::size_t n = f.size();
    const auto it = std::max_element(f.samples.begin(), f.samples.end());
    const auto i = static_cast<std::size_t>(it - f.samples.begin());
    const double fm = f[(i + n - 1) % n];
    const double f0 = f[i];
    const double fp = f[(i + 1) % n];
    MaxLocation loc;
    loc.index = i;
    const double curvature = fm - 2.0 * f0 + fp;
    const double scale = std::max(1.0, std::abs(f0));
    if (std::abs(curvature) <= 1e-14 * scale) {
        loc.plateau = true;
        loc.x = f.grid.x(i);
        loc.value = f0;
        return loc;
    }
    const double offset = 0.5 * (fm - fp) / curvature;
    loc.x = f.grid.x(i) + offset * f.grid.dx();
    loc.value = f0 - 0.25 * (fm - fp) * offset;
    return loc;
}

DiagRow diagnose(double t, const Spectrum& B, const std::vector<double>& sobolev, std::size_t kmax,
                 const ResolutionPolicy& policy) {
    DiagRow row;
    row.t = t;
    const Field phys = to_physical(B);
    const Field grad = to_physical(derivative(B));
    row.mean = B.mean();
    row.l1 = l1_norm(phys);
    row.l2 = l2_norm(phys);
    row.linf = linf_norm(phys);
    row.lip = linf_norm(grad);
    for (double s : sobolev) row.hs.push_back(lp::sobolev_norm(B, s, lp::NormMode::direct));
    const MaxLocation m = locate_max(phys);
    row.xmax = m.x;
    row.bmax = m.value;
    row.plateau = m.plateau;
    const AnalyticityFit fit = analyticity_radius(B, kmax);
    row.radius = fit.fitted ? fit.delta : std::numeric_limits<double>::infinity();
    const bool thin_strip = fit.fitted && fit.delta < policy.radius_floor_cells * B.grid.dx();
    row.resolved = !thin_strip && tail_energy_fraction(B, kmax) <= policy.tail_threshold;
    return row;
}

}  // namespace emhd
