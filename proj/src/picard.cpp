#include "emhd/picard.hpp"

#include "emhd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emhd {

namespace {

// Lagrange interpolation through up to four mesh samples around t.
Spectrum interpolate(const std::vector<Spectrum>& samples, const std::vector<double>& mesh, double t) {
    const std::size_t M = mesh.size() - 1;
    const double dt = M > 0 ? mesh[1] - mesh[0] : 1.0;
    const double pos = M > 0 ? (t - mesh[0]) / dt : 0.0;
    const auto i = static_cast<long>(std::clamp(std::floor(pos), 0.0, static_cast<double>(M)));
    if (std::abs(pos - std::round(pos)) < 1e-12) {
        const auto j = static_cast<std::size_t>(std::clamp(std::lround(pos), 0L, static_cast<long>(M)));
        return samples[j];
    }
    const std::size_t width = std::min<std::size_t>(4, M + 1);
    long lo = i - 1;
    lo = std::clamp(lo, 0L, static_cast<long>(M + 1 - width));

    Spectrum out(samples[0].grid);
    for (std::size_t a = 0; a < width; ++a) {
        const std::size_t ja = static_cast<std::size_t>(lo) + a;
        double w = 1.0;
        for (std::size_t b = 0; b < width; ++b) {
            if (a == b) continue;
            const std::size_t jb = static_cast<std::size_t>(lo) + b;
            w *= (t - mesh[jb]) / (mesh[ja] - mesh[jb]);
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * samples[ja][k];
    }
    return out;
}

double l2_distance(const Spectrum& u, const Spectrum& v) { return l2_norm(u - v); }

}  // namespace

std::vector<Spectrum> picard_linear_solve(const Spectrum& B0, const std::vector<Spectrum>& coeff,
                                          const std::vector<double>& mesh, const ModelParams& p,
                                          Truncation mode) {
    if (coeff.size() != mesh.size()) throw std::invalid_argument("picard: coefficient samples do not match mesh");
    const GridSpec& g = B0.grid;
    const NonlinearTerm nl(g, p.a, p.b, mode);
    const auto damping = damping_rates(g, p);
    const StageFunction frozen = [&](double t, const Spectrum& u) {
        return nl.bilinear(interpolate(coeff, mesh, t), u);
    };
    std::vector<Spectrum> out{B0};
    out.reserve(mesh.size());
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i)
        out.push_back(if_rk4_step(out.back(), mesh[i], mesh[i + 1] - mesh[i], damping, frozen));
    return out;
}

PicardResult picard_iterate(const Spectrum& B0, const ModelParams& p, double T, int K, double dt, bool keep_iterates,
                            Truncation mode) {
    p.validate();
    if (K < 1) throw std::invalid_argument("picard: K must be >= 1");
    if (!(T > 0.0) || !(dt > 0.0)) throw std::invalid_argument("picard: need T > 0 and dt > 0");
    if (!is_zero_mean(B0)) throw std::invalid_argument("picard: B0 must have zero mean");
    const auto M = static_cast<std::size_t>(std::max(1LL, std::llround(T / dt)));

    PicardResult res;
    res.mesh.resize(M + 1);
    for (std::size_t i = 0; i <= M; ++i) res.mesh[i] = T * static_cast<double>(i) / static_cast<double>(M);

    // B^{-1} = 0, so the first solve is the dissipation semigroup.
    std::vector<Spectrum> prev(M + 1, Spectrum(B0.grid));
    for (int k = 0; k <= K; ++k) {
        std::vector<Spectrum> cur = picard_linear_solve(B0, prev, res.mesh, p, mode);
        if (k > 0) {
            double d = 0.0;
            for (std::size_t i = 0; i <= M; ++i) d = std::max(d, l2_distance(cur[i], prev[i]));
            res.d.push_back(d);
        }
        if (keep_iterates) res.iterates.push_back(cur);
        prev = std::move(cur);
    }
    res.last = std::move(prev);
    for (std::size_t k = 0; k + 1 < res.d.size(); ++k)
        res.r.push_back(res.d[k] > 0.0 ? res.d[k + 1] / res.d[k] : 0.0);
    return res;
}

PicardComparison picard_vs_direct(const Spectrum& B0, const ModelParams& p, double T, int K, double dt) {
    const PicardResult pic = picard_iterate(B0, p, T, K, dt, true);
    const std::size_t M = pic.mesh.size() - 1;
    const NonlinearTerm nl(B0.grid, p.a, p.b, Truncation::dealias);
    const auto damping = damping_rates(B0.grid, p);
    const StageFunction full = [&nl](double, const Spectrum& u) { return nl(u); };
    std::vector<Spectrum> direct{B0};
    for (std::size_t i = 0; i < M; ++i)
        direct.push_back(if_rk4_step(direct.back(), pic.mesh[i], pic.mesh[i + 1] - pic.mesh[i], damping, full));

    PicardComparison cmp;
    for (const auto& it : pic.iterates) {
        double d = 0.0;
        for (std::size_t i = 0; i <= M; ++i) d = std::max(d, l2_distance(it[i], direct[i]));
        cmp.discrepancy.push_back(d);
    }
    return cmp;
}

}  // namespace emhd
