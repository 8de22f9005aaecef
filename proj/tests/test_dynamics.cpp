#include <doctest.h>

#include "emhd/dynamics.hpp"
#include "emhd/oracles.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/spectral.hpp"

#include <cmath>

using namespace emhd;

namespace {
Spectrum cosine(const GridSpec& g, double amp = 1.0) {
    Spectrum s(g);
    s[1] = 0.5 * amp;
    return s;
}
}  // namespace

TEST_CASE("presets") {
    CHECK(ModelParams::preset("e1d2", 1.0, 1.0) == ModelParams::full(1, 0, 1, 1));
    CHECK(ModelParams::preset("e1d3", 1.0, 1.0) == ModelParams::full(0, 1, 1, 1));
    CHECK(ModelParams::preset("e1d4", 1.0, 1.0) == ModelParams::full(0, -1, 1, 1));
    CHECK_THROWS(ModelParams::preset("e1d9", 1.0, 1.0));
    CHECK_THROWS(ModelParams::full(0, 1, -1.0, 1).validate());
}

TEST_CASE("rhs matches the convolution oracle for several members") {
    const GridSpec g = GridSpec::make(64);
    const Spectrum B = random_power_law(g, 1.0, g.dealias_cutoff(), 13);
    for (auto p : {ModelParams::full(1, 0, 1.0, 0.0), ModelParams::full(0, 1, 0.5, 1.0),
                   ModelParams::full(0.3, -2, 2.2, 0.1)}) {
        const Spectrum fast = rhs(B, p);
        const Spectrum slow = oracle::rhs_by_convolution(B, p.a, p.b, p.mu, p.alpha, g.dealias_cutoff());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-12);
    }
}

TEST_CASE("linear problem is solved exactly by the integrating factor") {
    const GridSpec g = GridSpec::make(32);
    const ModelParams p = ModelParams::full(0, 0, 1.5, 0.8);
    const Spectrum B0 = random_power_law(g, 1.0, 10, 1);
    const Spectrum B = step(step(B0, p, 0.05), p, 0.05);
    const Spectrum exact = apply_semigroup(B0, p.mu, p.alpha, 0.1);
    for (std::size_t k = 0; k < B.size(); ++k) CHECK(std::abs(B[k] - exact[k]) < 1e-15);
}

TEST_CASE("mean is conserved") {
    const GridSpec g = GridSpec::make(64);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.2;
    cfg.stride = 50;
    const Trajectory tr = evolve(0.5 * random_power_law(g, 2.0, 10, 2), ModelParams::full(1, 1, 1.5, 1), cfg);
    CHECK(tr.reason == Termination::completed);
    for (const auto& row : tr.series) CHECK(std::abs(row.mean) < 1e-15);
}

TEST_CASE("evolve rejects nonzero mean") {
    const GridSpec g = GridSpec::make(32);
    Spectrum B = cosine(g);
    B[0] = 0.1;
    SolverConfig cfg;
    cfg.t_end = 0.01;
    CHECK_THROWS(evolve(B, ModelParams{}, cfg));
}

TEST_CASE("checkpoints land on requested times and match restarts") {
    const GridSpec g = GridSpec::make(64);
    const ModelParams p = ModelParams::full(0, 1, 1.5, 1);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1;
    cfg.stride = 1000;
    cfg.checkpoint_times = {0.05};
    const Trajectory full = evolve(cosine(g), p, cfg);
    REQUIRE(full.checkpoints.size() == 1);
    CHECK(full.checkpoints[0].t == doctest::Approx(0.05));
    cfg.checkpoint_times.clear();
    cfg.t_end = 0.05;
    const Trajectory second = evolve(evolve(cosine(g), p, cfg).final_state, p, cfg);
    for (std::size_t k = 0; k < g.spectrum_size(); ++k)
        CHECK(std::abs(second.final_state[k] - full.final_state[k]) < 1e-13);
}

TEST_CASE("lip threshold stops the run with the blow-up reason") {
    const GridSpec g = GridSpec::make(64);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.stride = 1;
    cfg.lip_threshold = 0.5;
    const Trajectory tr = evolve(cosine(g), ModelParams::full(0, 1, 1.5, 1), cfg);
    CHECK(tr.reason == Termination::blowup);
    CHECK(tr.t_final < 1e-2);
}

TEST_CASE("scaling covariance") {
    // A single mode keeps the cascade far below the dealiasing band of both runs.
    const GridSpec g = GridSpec::make(256);
    Spectrum B0(g);
    B0[1] = cplx{0.0, -0.5};
    const ScalingReport r = scaling_covariance_check(B0, ModelParams::full(1, 1, 2.2, 1), 2, 0.05, 1e-3);
    CHECK(r.discrepancy < 1e-10);
}

TEST_CASE("truncation names round trip") {
    for (auto t : {Truncation::dealias, Truncation::none, Truncation::galerkin})
        CHECK(truncation_from_string(to_string(t)) == t);
    CHECK_THROWS(truncation_from_string("spectral"));
}

TEST_CASE("log times") {
    const auto t = log_times(1e-3, 1.0, 4);
    REQUIRE(t.size() == 4);
    CHECK(t.front() == doctest::Approx(1e-3));
    CHECK(t[1] == doctest::Approx(1e-2));
    CHECK(t.back() == doctest::Approx(1.0));
}
