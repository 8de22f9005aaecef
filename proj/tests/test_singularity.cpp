#include <doctest.h>

#include "emhd/diagnostics.hpp"
#include "emhd/dynamics.hpp"
#include "emhd/singularity.hpp"
#include "emhd/spectral.hpp"

#include <cmath>
#include <limits>

using namespace emhd;

TEST_CASE("profile shape") {
    CHECK(blowup_profile_value(1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(blowup_profile_value(-0.2) == doctest::Approx(-blowup_profile_value(0.2)));
    CHECK(blowup_profile_value(1.0) == 0.0);
    CHECK(blowup_profile_value(2.5) == 0.0);
    const GridSpec g = GridSpec::make(1024);
    const Field f = make_blowup_profile(g);
    const MaxLocation m = locate_max(f);
    CHECK(std::abs(m.x - blowup_profile_peak_location) < g.dx());
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS(make_blowup_profile(GridSpec::make(1024, 2.0)));
    CHECK_THROWS(make_blowup_profile(GridSpec::make(32)));
}

TEST_CASE("riccati fit recovers the collapse time of a synthetic track") {
    MaxTrack t;
    t.dx = 1e-4;
    const double x0 = 0.3, kappa = 0.5;
    for (int i = 0; i < 40; ++i) {
        const double ti = 0.002 * i;
        t.times.push_back(ti);
        t.X.push_back(std::sqrt(x0 * x0 - 2.0 * kappa * ti));
        t.resolved.push_back(true);
    }
    const RiccatiFit fit = riccati_fit(t);
    CHECK(fit.conclusive);
    CHECK(fit.t_star == doctest::Approx(x0 * x0 / (2.0 * kappa)).epsilon(0.02));
    CHECK(fit.c_fit > 0.0);
}

TEST_CASE("constant argmax is inconclusive") {
    MaxTrack t;
    t.dx = 1e-3;
    for (int i = 0; i < 20; ++i) {
        t.times.push_back(0.01 * i);
        t.X.push_back(0.3);
        t.resolved.push_back(true);
    }
    const RiccatiFit fit = riccati_fit(t);
    CHECK_FALSE(fit.conclusive);
    CHECK(std::isinf(fit.t_star));
}

TEST_CASE("only the resolved prefix counts") {
    MaxTrack t;
    t.dx = 1e-4;
    for (int i = 0; i < 30; ++i) {
        t.times.push_back(0.01 * i);
        t.X.push_back(0.3 - 0.005 * i);
        t.resolved.push_back(i < 5);
    }
    CHECK(t.resolved_count() == 5);
    CHECK_FALSE(riccati_fit(t).conclusive);
}

TEST_CASE("analyticity radius of a manufactured spectrum") {
    const GridSpec g = GridSpec::make(256);
    Spectrum s(g);
    for (std::size_t k = 1; k < s.size(); ++k) s[k] = std::exp(-0.5 * static_cast<double>(k));
    const AnalyticityFit fit = analyticity_radius(s);
    REQUIRE(fit.fitted);
    CHECK(fit.delta == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("linear control shows no blow-up indicators") {
    const GridSpec g = GridSpec::make(128);
    Spectrum B(g);
    B[1] = 0.5;
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.5;
    cfg.stride = 10;
    const Trajectory tr = evolve(B, ModelParams::full(0, 0, 1.5, 1.0), cfg);
    const BlowupReport rep = blowup_report(tr, track_max(tr));
    CHECK_FALSE(rep.indicators);
    CHECK(rep.verdict == "no blow-up indicators");
    CHECK(rep.growth_factor <= 1.0);
}

TEST_CASE("mirror symmetry between the two transport signs") {
    const GridSpec g = GridSpec::make(64);
    Spectrum B(g);
    B[1] = 0.5;
    B[2] = cplx{0.0, -0.2};
    const MirrorReport m = mirror_check(B, 1.5, 1.0, 0.05, 1e-3);
    CHECK(m.discrepancy <= 1e-14 * m.reference);
}
