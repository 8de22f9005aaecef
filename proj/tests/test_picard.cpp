#include <doctest.h>

#include "emhd/dynamics.hpp"
#include "emhd/picard.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/spectral.hpp"

#include <cmath>

using namespace emhd;

TEST_CASE("zero data stays zero") {
    const GridSpec g = GridSpec::make(32);
    const PicardResult r = picard_iterate(Spectrum(g), ModelParams{}, 0.05, 3, 0.01);
    for (const auto& s : r.last)
        for (const auto& c : s.coeffs) CHECK(c == cplx{});
}

TEST_CASE("first iterate is the linear semigroup") {
    const GridSpec g = GridSpec::make(64);
    const ModelParams p = ModelParams::full(0, 1, 1.5, 1.0);
    const Spectrum B0 = random_power_law(g, 2.0, 10, 6);
    const PicardResult r = picard_iterate(B0, p, 0.05, 1, 0.005, true);
    REQUIRE(r.iterates.size() == 2);
    for (std::size_t i = 0; i < r.mesh.size(); ++i) {
        const Spectrum exact = apply_semigroup(B0, p.mu, p.alpha, r.mesh[i]);
        for (std::size_t k = 0; k < exact.size(); ++k) CHECK(std::abs(r.iterates[0][i][k] - exact[k]) < 1e-14);
    }
}

TEST_CASE("iterates contract and approach the direct solution") {
    const GridSpec g = GridSpec::make(64);
    const ModelParams p = ModelParams::full(0, 1, 1.5, 1.0);
    const Spectrum B0 = 0.5 * random_power_law(g, 2.0, 8, 7);
    const PicardResult r = picard_iterate(B0, p, 0.05, 6, 0.0025);
    REQUIRE(r.d.size() == 6);
    for (double rk : r.r) CHECK(rk < 0.5);
    const PicardComparison c = picard_vs_direct(B0, p, 0.05, 6, 0.0025);
    CHECK(c.discrepancy.back() < 1e-3 * c.discrepancy.front());
}

TEST_CASE("rejects non-positive iteration counts") {
    const GridSpec g = GridSpec::make(32);
    CHECK_THROWS(picard_iterate(Spectrum(g), ModelParams{}, 0.05, 0, 0.01));
}
