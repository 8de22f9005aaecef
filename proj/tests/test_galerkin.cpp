#include <doctest.h>

#include "emhd/galerkin.hpp"
#include "emhd/random_fields.hpp"

#include <cmath>

using namespace emhd;

namespace {
// Naive double loop over signed modes.
std::vector<cplx> reference_bilinear(const GalerkinState& s) {
    const long N = static_cast<long>(s.N);
    std::vector<cplx> out(s.N + 1);
    for (long k = 0; k <= N; ++k)
        for (long m = -N; m <= N; ++m) {
            const long n = k - m;
            if (std::abs(n) > N) continue;
            out[k] += cplx{0.0, 1.0} * s.wavenumber(m) * std::abs(s.wavenumber(n)) * s.mode(m) * s.mode(n);
        }
    return out;
}
}  // namespace

TEST_CASE("single mode: quadratic term vanishes, linear decay is exact") {
    const GridSpec g = GridSpec::make(32);
    Spectrum B(g);
    B[1] = 0.5;
    const ModelParams p = ModelParams::full(0, 1, 1.5, 2.0);
    const GalerkinState s0 = galerkin_state(B, 1);
    const auto q = galerkin_bilinear(s0);
    CHECK(std::abs(q[1]) < 1e-16);
    const auto path = galerkin_evolve(s0, p, 0.3, 0.01);
    CHECK(std::abs(path.back().coeffs[1] - 0.5 * std::exp(-2.0 * 0.3)) < 1e-14);
    // xi(k, t) = B exp(mu |k|^alpha t / 2) and Y = 2 |1|^8 |xi|^2
    CHECK(y_functional(s0, p) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("quadratic term matches a double loop") {
    const GridSpec g = GridSpec::make(64);
    const GalerkinState s = galerkin_state(random_power_law(g, 1.0, 8, 3), 8);
    const auto fast = galerkin_bilinear(s), slow = reference_bilinear(s);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-14);
    CHECK(std::abs(fast[0]) < 1e-14);  // mean is preserved
}

TEST_CASE("physical wavenumbers on a longer period") {
    const GridSpec g = GridSpec::make(64, 2.0 * M_PI);
    const GalerkinState s = galerkin_state(random_power_law(g, 1.0, 6, 8), 6);
    CHECK(s.wavenumber(2) == doctest::Approx(1.0));
    const auto fast = galerkin_bilinear(s), slow = reference_bilinear(s);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-14);
}

TEST_CASE("state embedding and conjugate symmetry") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum B = random_power_law(g, 1.0, 20, 5);
    const GalerkinState s = galerkin_state(B, 10, 0.25);
    CHECK(s.t == 0.25);
    CHECK(s.mode(-3) == std::conj(s.mode(3)));
    const Spectrum back = to_spectrum(s, g);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(back[k] == B[k]);
    for (std::size_t k = 11; k < back.size(); ++k) CHECK(back[k] == cplx{});
}

TEST_CASE("weighted coefficients and Y") {
    const GridSpec g = GridSpec::make(64);
    GalerkinState s = galerkin_state(random_power_law(g, 1.0, 6, 9), 6, 0.4);
    const ModelParams p = ModelParams::full(0, 1, 1.0, 0.5);
    const auto xi = weighted_coefficients(s, p);
    double y = 0.0;
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(std::abs(xi[k] - s.coeffs[k] * std::exp(0.5 * k * 0.4 / 2.0)) < 1e-15);
        y += 2.0 * std::pow(k, 8.0) * std::norm(xi[k]);
    }
    CHECK(y_functional(s, p) == doctest::Approx(y).epsilon(1e-14));
}

TEST_CASE("galerkin integrator agrees with the pseudo-spectral solver in galerkin mode") {
    const GridSpec g = GridSpec::make(64);
    const double d = galerkin_vs_pseudospectral(0.3 * random_power_law(g, 2.0, 8, 2), 8,
                                                ModelParams::full(0, 1, 1.0, 1.0), 0.05, 1e-3);
    CHECK(d < 1e-13);
}

TEST_CASE("riccati probe requires the transport model") {
    const GridSpec g = GridSpec::make(64);
    Spectrum B(g);
    B[1] = 0.5;
    CHECK_THROWS(riccati_probe(B, 8, ModelParams::full(1, 0, 1.0, 1.0), 0.01, 1e-3));
    const RiccatiProbe pr = riccati_probe(B, 8, ModelParams::full(0, 1, 1.0, 1.0), 0.02, 1e-3);
    CHECK(pr.in_analytic_range);
    CHECK(pr.min_margin >= 0.0);
}
