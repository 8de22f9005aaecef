#pragma once

#include "emhd/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace emhd::lp {

/// Smooth plateau: 1 for |xi| <= 3/4, 0 for |xi| >= 1, C^infinity in between
/// (built from exp(-1/t)).
double cutoff(double xi);
/// phi(xi) = chi(xi/2) - chi(xi), supported in 3/4 <= |xi| <= 2.
double ring(double xi);
/// lambda_q = 2^q / L.
double lambda(int q, double L);
/// phi_q(xi) = phi(xi / lambda_q) for q >= 0. The low block is chi(xi / lambda_0)
/// so that the family sums to one.
double shell_weight(int q, double xi, double L);
/// Largest q whose shell meets a resolved wavenumber of the grid.
int max_shell(const GridSpec& g);

/// Delta_q f.
Spectrum project(const Spectrum& f, int q);
Field project(const Field& f, int q);
/// Delta_{q-1} + Delta_q + Delta_{q+1}.
Spectrum project_band(const Spectrum& f, int q);

enum class NormMode { dyadic, direct };

/// dyadic: (sum_{q >= -1} lambda_q^{2s} ||Delta_q f||^2)^{1/2};
/// direct: (2L sum_k (1 + xi_k^2)^s |f_hat(k)|^2)^{1/2}.
double sobolev_norm(const Spectrum& f, double s, NormMode mode);
double sobolev_norm(const Field& f, double s, NormMode mode);

/// ||Delta~_q [f, Delta_q] g||_{L2} with [f, Delta_q] g = f g_q - Delta_q(f g).
/// Products are alias-free, so inputs should be limited to k < n/4.
double commutator_block(const Spectrum& f, const Spectrum& g, int q);

enum class Lemma { commutator, paraproduct, product };

std::string to_string(Lemma l);
Lemma lemma_from_string(const std::string& name);

struct LemmaFit {
    Lemma lemma = Lemma::product;
    double m = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    int trials = 0;
    std::size_t n_modes = 0;
    std::uint64_t seed = 0;
    /// Largest left/right ratio seen. For the block lemmas this is the l2 norm
    /// over q of the per-shell ratios, a lower bound for C since ||c_q||_{l2} <= 1.
    double constant = 0.0;
};

/// Throws std::invalid_argument if (m, s1, s2) violates the lemma's hypotheses (n = 1).
void check_hypotheses(Lemma lemma, double m, double s1, double s2);

/// Left side over right side (without constant) for a single pair (f, g).
double lemma_ratio(Lemma lemma, double m, double s1, double s2, const Spectrum& f, const Spectrum& g);

/// Maximum of lemma_ratio over `trials` seeded pairs from the power-law family
/// with decay alternating between 1 and 2, band-limited to k < n/4.
LemmaFit fit_lemma_constant(Lemma lemma, double m, double s1, double s2, int trials, const GridSpec& g,
                            std::uint64_t seed);

}  // namespace emhd::lp
