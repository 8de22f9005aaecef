#include "emhd/littlewood_paley.hpp"

#include "emhd/random_fields.hpp"
#include "emhd/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace emhd::lp {
namespace {

double smooth_step_seed(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

Spectrum weighted(const Spectrum& f, int q) {
    Spectrum out(f.grid);
    const double L = f.grid.half_length;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double w = shell_weight(q, f.grid.wavenumber(static_cast<long>(k)), L);
        if (w != 0.0) out[k] = w * f[k];
    }
    return out;
}

}  // namespace

double cutoff(double xi) {
    const double a = std::abs(xi);
    if (a <= 0.75) return 1.0;
    if (a >= 1.0) return 0.0;
    const double up = smooth_step_seed(1.0 - a);
    const double down = smooth_step_seed(a - 0.75);
    return up / (up + down);
}

double ring(double xi) { return cutoff(xi / 2.0) - cutoff(xi); }

double lambda(int q, double L) { return std::ldexp(1.0, q) / L; }

double shell_weight(int q, double xi, double L) {
    if (q < -1) throw std::invalid_argument("shell index must be >= -1");
    if (q == -1) return cutoff(xi / lambda(0, L));
    return ring(xi / lambda(q, L));
}

int max_shell(const GridSpec& g) {
    const double xi_max = g.wavenumber(static_cast<long>(g.nyquist()));
    int q = 0;
    while (0.75 * lambda(q + 1, g.half_length) <= xi_max) ++q;
    return q;
}

Spectrum project(const Spectrum& f, int q) { return weighted(f, q); }

Field project(const Field& f, int q) { return to_physical(project(to_spectral(f), q)); }

Spectrum project_band(const Spectrum& f, int q) {
    Spectrum out = project(f, q);
    if (q - 1 >= -1) out += project(f, q - 1);
    out += project(f, q + 1);
    return out;
}

double sobolev_norm(const Spectrum& f, double s, NormMode mode) {
    const double L = f.grid.half_length;
    if (mode == NormMode::direct) {
        double sum = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            const double xi = f.grid.wavenumber(static_cast<long>(k));
            const double mult = (k == 0 || k == f.grid.nyquist()) ? 1.0 : 2.0;
            sum += mult * std::pow(1.0 + xi * xi, s) * std::norm(f[k]);
        }
        return std::sqrt(2.0 * L * sum);
    }
    double sum = 0.0;
    for (int q = -1; q <= max_shell(f.grid); ++q) {
        const double block = l2_norm(project(f, q));
        sum += std::pow(lambda(q, L), 2.0 * s) * block * block;
    }
    return std::sqrt(sum);
}

double sobolev_norm(const Field& f, double s, NormMode mode) { return sobolev_norm(to_spectral(f), s, mode); }

double commutator_block(const Spectrum& f, const Spectrum& g, int q) {
    require_same_grid(f.grid, g.grid, "commutator_block");
    const Spectrum f_gq = padded_product(f, project(g, q));
    const Spectrum proj_fg = project(padded_product(f, g), q);
    return l2_norm(project_band(f_gq - proj_fg, q));
}

std::string to_string(Lemma l) {
    switch (l) {
        case Lemma::commutator: return "commutator";
        case Lemma::paraproduct: return "paraproduct";
        case Lemma::product: return "product";
    }
    return "?";
}

Lemma lemma_from_string(const std::string& name) {
    if (name == "commutator" || name == "le-d1") return Lemma::commutator;
    if (name == "paraproduct" || name == "le-d2") return Lemma::paraproduct;
    if (name == "product" || name == "le-d3") return Lemma::product;
    throw std::invalid_argument("unknown lemma '" + name + "' (commutator|paraproduct|product)");
}

void check_hypotheses(Lemma lemma, double m, double s1, double s2) {
    constexpr double half_dim = 0.5;
    const auto fail = [&](const char* why) {
        throw std::invalid_argument(to_string(lemma) + " lemma: " + why);
    };
    switch (lemma) {
        case Lemma::commutator:
            if (m < 0.0) fail("requires m >= 0");
            if (!(s1 < 1.0 + half_dim)) fail("requires s1 < 3/2");
            if (!(s2 < half_dim)) fail("requires s2 < 1/2");
            if (!(m + s1 + s2 > 0.0)) fail("requires m + s1 + s2 > 0");
            break;
        case Lemma::paraproduct:
            if (m < 0.0) fail("requires m >= 0");
            if (!(s1 < half_dim)) fail("requires s1 < 1/2");
            break;
        case Lemma::product:
            if (!(s1 < half_dim && s2 < half_dim)) fail("requires s1, s2 < 1/2");
            if (!(s1 + s2 > 0.0)) fail("requires s1 + s2 > 0");
            break;
    }
}

double lemma_ratio(Lemma lemma, double m, double s1, double s2, const Spectrum& f, const Spectrum& g) {
    constexpr auto D = NormMode::direct;
    if (lemma == Lemma::product) {
        const double denom = sobolev_norm(f, s1, D) * sobolev_norm(g, s2, D);
        if (denom == 0.0) return 0.0;
        return sobolev_norm(padded_product(f, g), s1 + s2 - 0.5, D) / denom;
    }
    const double rhs = sobolev_norm(f, m + s1, D) * sobolev_norm(g, s2, D) +
                       sobolev_norm(f, s1, D) * sobolev_norm(g, m + s2, D);
    if (rhs == 0.0) return 0.0;
    const double L = f.grid.half_length;
    const double decay = m + s1 + s2 - 0.5;
    double sum = 0.0;
    for (int q = 0; q <= max_shell(f.grid); ++q) {
        double lhs = 0.0;
        if (lemma == Lemma::commutator) {
            lhs = commutator_block(f, g, q);
        } else {
            lhs = l2_norm(project_band(padded_product(f, project(g, q)), q));
        }
        const double r = lhs / (std::pow(lambda(q, L), -decay) * rhs);
        sum += r * r;
    }
    return std::sqrt(sum);
}

LemmaFit fit_lemma_constant(Lemma lemma, double m, double s1, double s2, int trials, const GridSpec& g,
                            std::uint64_t seed) {
    check_hypotheses(lemma, m, s1, s2);
    if (trials < 1) throw std::invalid_argument("fit_lemma_constant: trials must be >= 1");
    LemmaFit fit{lemma, m, s1, s2, trials, g.n_modes, seed, 0.0};
    const std::size_t kmax = g.n_modes / 4 - 1;
    for (int t = 0; t < trials; ++t) {
        const double decay = (t % 2 == 0) ? 1.0 : 2.0;
        const auto stream = static_cast<std::uint64_t>(t);
        const Spectrum f = random_power_law(g, decay, kmax, seed, 2 * stream);
        const Spectrum h = random_power_law(g, decay, kmax, seed, 2 * stream + 1);
        fit.constant = std::max(fit.constant, lemma_ratio(lemma, m, s1, s2, f, h));
    }
    return fit;
}

}  // namespace emhd::lp
