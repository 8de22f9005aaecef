#pragma once

#include "emhd/diagnostics.hpp"
#include "emhd/grid.hpp"
#include "emhd/model.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace emhd {

/// Raised when a step produces NaN or Inf.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Truncation {
    dealias,   ///< 2/3 rule
    none,      ///< plain pseudo-spectral products (aliased)
    galerkin,  ///< keep only |k| <= galerkin_modes, exact products
};

std::string to_string(Truncation t);
Truncation truncation_from_string(const std::string& s);

enum class DtPolicy { fixed, cfl };

struct SolverConfig {
    DtPolicy dt_policy = DtPolicy::fixed;
    double dt = 1e-3;   ///< fixed step, or the cap under the CFL policy
    double cfl = 0.4;   ///< dt = cfl * dx / max(||J||_inf, 1e-12)
    Truncation truncation = Truncation::dealias;
    std::size_t galerkin_modes = 0;

    double t_end = 1.0;
    int stride = 1;                       ///< diagnostics every `stride` steps
    std::vector<double> sobolev;          ///< exponents for hs_<s> columns
    std::vector<double> checkpoint_times; ///< states stored exactly at these times

    double lip_threshold = std::numeric_limits<double>::infinity();
    bool stop_when_unresolved = false;
    ResolutionPolicy resolution;

    void validate() const;
};

/// Quadratic part -a C J(B)_x - b J(C) B_x for a coefficient field C and the
/// unknown B, evaluated pseudo-spectrally under the chosen truncation. With
/// C = B this is the nonlinearity of the model.
class NonlinearTerm {
public:
    NonlinearTerm(const GridSpec& g, double a, double b, Truncation mode, std::size_t galerkin_modes = 0);

    Spectrum operator()(const Spectrum& B) const { return bilinear(B, B); }
    Spectrum bilinear(const Spectrum& coeff, const Spectrum& B) const;

    /// Largest retained mode.
    std::size_t cutoff() const { return cutoff_; }
    const GridSpec& grid() const { return grid_; }

private:
    GridSpec grid_;
    double a_;
    double b_;
    std::size_t cutoff_;
    std::vector<double> xi_;
};

/// Effective cutoff for a truncation mode on a grid.
std::size_t effective_cutoff(const GridSpec& g, Truncation mode, std::size_t galerkin_modes);

/// -a B J_x - b J B_x - mu Lambda^alpha B.
Spectrum rhs(const Spectrum& B, const ModelParams& p, Truncation mode = Truncation::dealias,
             std::size_t galerkin_modes = 0);
Field rhs(const Field& B, const ModelParams& p, Truncation mode = Truncation::dealias);

using StageFunction = std::function<Spectrum(double t, const Spectrum& u)>;

/// One integrating-factor RK4 step of u_t = -D u + N(t, u), D = diag(damping),
/// with the linear part propagated exactly by exp(-D tau).
Spectrum if_rk4_step(const Spectrum& u, double t, double dt, const std::vector<double>& damping,
                     const StageFunction& nonlinear);

/// mu |xi_k|^alpha per stored mode.
std::vector<double> damping_rates(const GridSpec& g, const ModelParams& p);

/// Single step of the model. Throws NumericFailure on non-finite output.
Spectrum step(const Spectrum& B, const ModelParams& p, double dt, Truncation mode = Truncation::dealias,
              std::size_t galerkin_modes = 0);

struct Checkpoint {
    double t = 0.0;
    Spectrum B;
};

enum class Termination { completed, blowup, unresolved, numeric_failure };
std::string to_string(Termination t);

struct Trajectory {
    std::vector<DiagRow> series;
    std::vector<Checkpoint> checkpoints;
    std::vector<double> sobolev;
    Termination reason = Termination::completed;
    std::string message;
    double t_final = 0.0;
    double resolved_until = 0.0;
    std::size_t steps = 0;
    Spectrum final_state;
};

/// Integrates from t = 0 to cfg.t_end or a stop condition. B0 must have zero mean.
Trajectory evolve(const Spectrum& B0, const ModelParams& p, const SolverConfig& cfg);

struct ScalingReport {
    int lambda = 1;
    double discrepancy = 0.0;  ///< sup-norm over grid points at matched times
    double reference_linf = 0.0;
};

/// Compares evolve(lambda^{alpha-2} B0(lambda x)) at time T with
/// lambda^{alpha-2} B(lambda x, lambda^alpha T). The unscaled run uses the
/// step lambda^alpha * dt so both runs visit matched times. Throws if the
/// rescaled data exceed the dealiasing band.
ScalingReport scaling_covariance_check(const Spectrum& B0, const ModelParams& p, int lambda, double T, double dt);

struct SmoothingTable {
    std::vector<double> betas;
    std::vector<double> times;
    /// weighted[i][j] = t_j^{beta_i/alpha} ||B(t_j)||_{H^{5/2-alpha+beta_i}}
    std::vector<std::vector<double>> weighted;
    std::vector<double> supremum;
};

/// Samples t^{beta/alpha} ||B(t)||_{H^{5/2-alpha+beta}} at the given times (ascending, > 0).
SmoothingTable smoothing_rate_probe(const Spectrum& B0, const ModelParams& p, const std::vector<double>& betas,
                                    const std::vector<double>& times, double dt);

/// Logarithmically spaced times in [t0, t1].
std::vector<double> log_times(double t0, double t1, int count);

}  // namespace emhd
