#include <doctest.h>

#include "emhd/field_io.hpp"
#include "emhd/oracles.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/spectral.hpp"

#include <cmath>
#include <sstream>

using namespace emhd;

TEST_CASE("transform round trip and normalization") {
    const GridSpec g = GridSpec::make(64);
    const Field f = sample(g, [](double x) { return 0.3 + std::cos(x) - 2.0 * std::sin(3 * x); });
    const Spectrum s = to_spectral(f);
    CHECK(s.mean() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(std::abs(s[1] - cplx{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(s[3] - cplx{0.0, 1.0}) < 1e-14);
    const Field back = to_physical(s);
    for (std::size_t j = 0; j < g.n_modes; ++j) CHECK(std::abs(back[j] - f[j]) < 1e-14);
}

TEST_CASE("transforms on a longer period") {
    const GridSpec g = GridSpec::make(32, 5.0);
    const double w = g.wavenumber(2);
    const Field f = sample(g, [&](double x) { return std::cos(w * x); });
    const Spectrum s = to_spectral(f);
    CHECK(std::abs(s[2] - cplx{0.5, 0.0}) < 1e-14);
    const Field d = derivative(f);
    for (std::size_t j = 0; j < g.n_modes; ++j) CHECK(std::abs(d[j] + w * std::sin(w * g.x(j))) < 1e-12);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec::make(48), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(2), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(64, -1.0), std::invalid_argument);
}

TEST_CASE("hilbert and lambda on basis functions") {
    const GridSpec g = GridSpec::make(128);
    for (int k : {1, 5, 20}) {
        const Field c = sample(g, [&](double x) { return std::cos(k * x); });
        const Field h = hilbert(c);
        const Field l = lambda_alpha(c, 1.0);
        const Field hd = hilbert(derivative(c));
        for (std::size_t j = 0; j < g.n_modes; ++j) {
            CHECK(std::abs(h[j] - std::sin(k * g.x(j))) < 1e-12);
            CHECK(std::abs(l[j] - k * c[j]) < 1e-11);
            CHECK(std::abs(hd[j] - l[j]) < 1e-11);  // Lambda = H d/dx
        }
    }
    CHECK(fractional_symbol(0.0, 0.0) == 1.0);
    CHECK_THROWS(fractional_symbol(1.0, -0.5));
}

TEST_CASE("current relation B_x = H J") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum B = random_power_law(g, 1.5, 20, 3);
    const Spectrum J = current_from_field(B);
    const Spectrum lhs = derivative(B), rhs = hilbert(J);
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-14);
    Spectrum biased = B;
    biased[0] = 1.0;
    CHECK_THROWS_AS(current_from_field(biased), std::invalid_argument);
}

TEST_CASE("semigroup is multiplicative") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum B = random_power_law(g, 1.0, 30, 5);
    const Spectrum one = apply_semigroup(apply_semigroup(B, 0.7, 1.3, 0.1), 0.7, 1.3, 0.2);
    const Spectrum two = apply_semigroup(B, 0.7, 1.3, 0.3);
    for (std::size_t k = 0; k < B.size(); ++k) CHECK(std::abs(one[k] - two[k]) < 1e-15);
}

TEST_CASE("padded product agrees with the convolution oracle") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum f = random_power_law(g, 1.0, 25, 11), h = random_power_law(g, 1.0, 25, 12);
    const Spectrum p = padded_product(f, h);
    const auto c = oracle::convolve(oracle::to_modes(f, 31), oracle::to_modes(h, 31));
    for (std::size_t k = 0; k < g.nyquist(); ++k) {
        const auto it = c.find(static_cast<long>(k));
        const cplx ref = it == c.end() ? cplx{} : it->second;
        CHECK(std::abs(p[k] - ref) < 1e-14);
    }
}

TEST_CASE("dealiased product drops modes above the cutoff") {
    const GridSpec g = GridSpec::make(128);
    const Spectrum f = random_power_law(g, 0.0, g.nyquist() - 1, 2);
    const Spectrum p = dealiased_product(f, f);
    for (std::size_t k = g.dealias_cutoff() + 1; k < p.size(); ++k) CHECK(std::abs(p[k]) == 0.0);
}

TEST_CASE("random fields are reproducible and seed dependent") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum a = random_power_law(g, 1.0, 20, 9), b = random_power_law(g, 1.0, 20, 9);
    const Spectrum c = random_power_law(g, 1.0, 20, 10);
    CHECK(a.coeffs == b.coeffs);
    CHECK(a.coeffs != c.coeffs);
    CHECK(a.mean() == 0.0);
    CHECK(std::abs(std::abs(a[4]) - 0.25) < 1e-15);
    CHECK(l2_norm(random_with_l2(g, 1.0, 20, 2.5, 1)) == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("checkpoint binary round trip is bit exact") {
    const GridSpec g = GridSpec::make(32, 4.0);
    const Spectrum s = random_power_law(g, 1.0, 15, 4);
    std::stringstream buf;
    io::write_checkpoint(s, buf);
    const Spectrum r = io::read_checkpoint(buf);
    CHECK(r.grid == g);
    CHECK(r.coeffs == s.coeffs);
    std::stringstream bad("NOTASPEC");
    CHECK_THROWS(io::read_checkpoint(bad));
}

TEST_CASE("norms of a sampled cosine") {
    const GridSpec g = GridSpec::make(256);
    const Field c = sample(g, [](double x) { return std::cos(x); });
    CHECK(l2_norm(c) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(l2_norm(to_spectral(c)) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(l1_norm(c) == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(linf_norm(c) == doctest::Approx(1.0));
}
