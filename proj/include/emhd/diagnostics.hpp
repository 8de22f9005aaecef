#pragma once

#include "emhd/grid.hpp"

#include <optional>
#include <vector>

namespace emhd {

/// Width of the strip of analyticity estimated from |B_hat(k)| ~ exp(-delta k).
struct AnalyticityFit {
    bool fitted = false;   ///< false when the spectrum lacks two octaves above the noise floor
    double delta = 0.0;    ///< decay rate in physical wavenumber units (a length)
    std::size_t k_lo = 0;  ///< fitting band in integer mode index
    std::size_t k_hi = 0;
};

/// Least-squares slope of log|B_hat(k)| over k in [k_hi/4, k_hi], where k_hi is
/// the last mode at or below kmax that sits above 1e-13 of the spectral peak.
/// kmax = 0 means the dealiasing cutoff.
AnalyticityFit analyticity_radius(const Spectrum& B, std::size_t kmax = 0);

/// Energy fraction in kmax/2 < k <= kmax relative to all k >= 1.
double tail_energy_fraction(const Spectrum& B, std::size_t kmax);

/// Location and value of the sample maximum refined by a three-point parabola.
struct MaxLocation {
    double x = 0.0;
    double value = 0.0;
    std::size_t index = 0;
    bool plateau = false;  ///< neighbours equal to the maximum within rounding
};
MaxLocation locate_max(const Field& f);

/// One row of series.csv.
struct DiagRow {
    double t = 0.0;
    double mean = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double lip = 0.0;  ///< ||B_x||_inf
    std::vector<double> hs;
    double xmax = 0.0;
    double bmax = 0.0;
    bool plateau = false;  ///< argmax ambiguous at grid level
    double radius = 0.0;  ///< +inf when no exponential range is present
    bool resolved = true;
};

struct ResolutionPolicy {
    double radius_floor_cells = 2.0;  ///< unresolved when delta < this many dx
    double tail_threshold = 1e-6;
};

/// Diagnostics of one state. `kmax` is the effective spectral cutoff of the run.
DiagRow diagnose(double t, const Spectrum& B, const std::vector<double>& sobolev, std::size_t kmax,
                 const ResolutionPolicy& policy);

}  // namespace emhd
