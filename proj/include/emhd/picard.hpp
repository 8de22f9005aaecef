#pragma once

#include "emhd/dynamics.hpp"
#include "emhd/grid.hpp"
#include "emhd/model.hpp"

#include <vector>

namespace emhd {

/// Approximating system: B^k solves the linear equation
///   B^k_t + a B^{k-1} J^k_x + b J^{k-1} B^k_x + mu Lambda^alpha B^k = 0,  B^k(0) = B0,
/// starting from B^{-1} = 0. Iterates live on the mesh t_i = i dt, i = 0..M.
struct PicardResult {
    std::vector<double> mesh;
    /// iterates[k][i] = B^k(t_i); only kept when requested.
    std::vector<std::vector<Spectrum>> iterates;
    std::vector<Spectrum> last;  ///< B^K on the mesh
    std::vector<double> d;       ///< d_k = sup_i ||B^{k+1}(t_i) - B^k(t_i)||_{L2}, k = 0..K-1
    std::vector<double> r;       ///< r_k = d_{k+1} / d_k
};

/// K >= 1 iterations on a mesh of round(T/dt) steps. Throws NumericFailure if a
/// linear solve produces non-finite values.
PicardResult picard_iterate(const Spectrum& B0, const ModelParams& p, double T, int K, double dt,
                            bool keep_iterates = false, Truncation mode = Truncation::dealias);

/// One linear solve with the coefficient trajectory `coeff` given on the mesh.
/// Stage values are cubic Lagrange interpolants of the mesh samples.
std::vector<Spectrum> picard_linear_solve(const Spectrum& B0, const std::vector<Spectrum>& coeff,
                                          const std::vector<double>& mesh, const ModelParams& p,
                                          Truncation mode = Truncation::dealias);

struct PicardComparison {
    /// sup_i ||B^k(t_i) - B(t_i)||_{L2} for k = 0..K, B from the direct solver.
    std::vector<double> discrepancy;
};

PicardComparison picard_vs_direct(const Spectrum& B0, const ModelParams& p, double T, int K, double dt);

}  // namespace emhd
