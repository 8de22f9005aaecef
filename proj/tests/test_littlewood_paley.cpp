#include <doctest.h>

#include "emhd/littlewood_paley.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/spectral.hpp"

#include <cmath>

using namespace emhd;

TEST_CASE("cutoff and ring profile") {
    CHECK(lp::cutoff(0.0) == 1.0);
    CHECK(lp::cutoff(0.75) == 1.0);
    CHECK(lp::cutoff(1.0) == 0.0);
    const double mid = lp::cutoff(0.875);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    CHECK(lp::ring(0.5) == 0.0);
    CHECK(lp::ring(2.5) == 0.0);
    CHECK(lp::ring(1.0) > 0.0);
}

TEST_CASE("shell weights form a partition of unity") {
    for (double L : {M_PI, 5.0}) {
        for (double xi = 0.0; xi < 200.0; xi += 0.37) {
            double sum = 0.0;
            for (int q = -1; q <= 12; ++q) sum += lp::shell_weight(q, xi, L);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("projections reconstruct the field") {
    const GridSpec g = GridSpec::make(128);
    const Spectrum f = random_power_law(g, 1.0, 60, 21);
    Spectrum sum(g);
    for (int q = -1; q <= lp::max_shell(g); ++q) sum += lp::project(f, q);
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(std::abs(sum[k] - f[k]) < 1e-14);
}

TEST_CASE("dyadic and direct Sobolev norms are equivalent") {
    const GridSpec g = GridSpec::make(256);
    for (double s : {0.0, 1.0, 2.5}) {
        const Spectrum f = random_power_law(g, 1.5, 80, 3);
        const double r = lp::sobolev_norm(f, s, lp::NormMode::dyadic) / lp::sobolev_norm(f, s, lp::NormMode::direct);
        CHECK(r > 0.2);
        CHECK(r < 5.0);
    }
    const Spectrum f = random_power_law(g, 1.0, 40, 1);
    CHECK(lp::sobolev_norm(f, 0.0, lp::NormMode::direct) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("lemma hypotheses and names") {
    CHECK_THROWS_AS(lp::check_hypotheses(lp::Lemma::product, 0.0, 0.8, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(lp::check_hypotheses(lp::Lemma::commutator, -1.0, 0.3, 0.3), std::invalid_argument);
    CHECK_NOTHROW(lp::check_hypotheses(lp::Lemma::product, 0.0, 0.3, 0.3));
    for (auto l : {lp::Lemma::commutator, lp::Lemma::paraproduct, lp::Lemma::product})
        CHECK(lp::lemma_from_string(lp::to_string(l)) == l);
    CHECK_THROWS(lp::lemma_from_string("nonsense"));
}

TEST_CASE("lemma constants are stable under refinement") {
    const auto a = lp::fit_lemma_constant(lp::Lemma::product, 0.0, 0.3, 0.3, 6, GridSpec::make(128), 5);
    const auto b = lp::fit_lemma_constant(lp::Lemma::product, 0.0, 0.3, 0.3, 6, GridSpec::make(256), 5);
    CHECK(a.constant > 0.0);
    CHECK(b.constant / a.constant < 2.0);
    CHECK(b.constant / a.constant > 0.5);
}
