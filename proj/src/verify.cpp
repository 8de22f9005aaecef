#include "emhd/verify.hpp"

#include "emhd/config.hpp"
#include "emhd/dynamics.hpp"
#include "emhd/galerkin.hpp"
#include "emhd/harness.hpp"
#include "emhd/littlewood_paley.hpp"
#include "emhd/oracles.hpp"
#include "emhd/picard.hpp"
#include "emhd/random_fields.hpp"
#include "emhd/singularity.hpp"
#include "emhd/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace emhd {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Collector {
    std::string suite;
    std::vector<Assertion> out;

    void check(const std::string& name, double measured, const std::string& rel, double tol,
               const std::string& detail = {}) {
        bool ok = false;
        if (rel == "<") ok = measured < tol;
        else if (rel == "<=") ok = measured <= tol;
        else if (rel == ">") ok = measured > tol;
        else if (rel == ">=") ok = measured >= tol;
        out.push_back({suite, name, measured, rel, tol, ok, detail});
    }
    void range(const std::string& name, double measured, double lo, double hi, const std::string& detail = {}) {
        const bool ok = measured >= lo && measured <= hi;
        std::ostringstream d;
        d << "range [" << lo << ", " << hi << "]";
        if (!detail.empty()) d << "; " << detail;
        out.push_back({suite, name, measured, "in", hi, ok, d.str()});
    }
    void truth(const std::string& name, bool value, const std::string& detail = {}) {
        out.push_back({suite, name, value ? 1.0 : 0.0, "true", 1.0, value, detail});
    }
};

Spectrum spectrum_of(const GridSpec& g, const std::function<double(double)>& fn) {
    Spectrum s = to_spectral(sample(g, fn));
    s[0] = 0.0;
    return s;
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num / den);
}

// Supremum of |u| for a trigonometric polynomial: dense zero-padded sampling,
// then Newton on u' at the best sample.
double trig_sup(const Spectrum& B) {
    const GridSpec& g = B.grid;
    const GridSpec fine = GridSpec::make(8 * g.n_modes, g.half_length);
    Spectrum pad(fine);
    for (std::size_t k = 0; k < g.nyquist(); ++k) pad[k] = B[k];
    const Field f = to_physical(pad);
    std::size_t best = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (std::abs(f[j]) > std::abs(f[best])) best = j;
    auto eval = [&](double x, int d) {
        double acc = d == 0 ? B[0].real() : 0.0;
        for (std::size_t k = 1; k < g.nyquist(); ++k) {
            const double xi = g.wavenumber(static_cast<long>(k));
            const cplx e = std::polar(1.0, xi * x) * std::pow(cplx{0.0, xi}, d);
            acc += 2.0 * (B[k] * e).real();
        }
        return acc;
    };
    double x = fine.x(best);
    for (int it = 0; it < 20; ++it) {
        const double d1 = eval(x, 1), d2 = eval(x, 2);
        if (d2 == 0.0) break;
        const double step = d1 / d2;
        x -= step;
        if (std::abs(step) < 1e-15) break;
    }
    return std::max(std::abs(eval(x, 0)), std::abs(f[best]));
}

SolverConfig fixed(double dt, double T, int stride = std::numeric_limits<int>::max()) {
    SolverConfig c;
    c.dt = dt;
    c.t_end = T;
    c.stride = stride;
    return c;
}

// ---------------------------------------------------------------------------

std::vector<Assertion> operators_suite(const VerifyOptions& opts) {
    Collector c{"operators", {}};
    const auto t0 = Clock::now();
    {
        const GridSpec g = GridSpec::make(256);
        const double top = static_cast<double>(g.nyquist());
        double herr = 0.0;
        std::map<double, double> spec_err, phys_err;
        const std::vector<double> alphas{0.5, 1.0, 1.5, 2.2, 3.0};
        for (std::size_t k = 1; k <= g.n_modes / 4; ++k) {
            const double kk = static_cast<double>(k);
            const Field cs = sample(g, [&](double x) { return std::cos(kk * x); });
            const Field hc = hilbert(cs);
            for (std::size_t j = 0; j < g.n_modes; ++j) herr = std::max(herr, std::abs(hc[j] - std::sin(kk * g.x(j))));
            Spectrum mode(g);
            mode[k] = 0.5;
            for (double a : alphas) {
                const double ev = std::pow(kk, a);
                const Spectrum lm = lambda_alpha(mode, a);
                for (std::size_t q = 0; q < lm.size(); ++q)
                    spec_err[a] = std::max(spec_err[a], std::abs(lm[q] - (q == k ? ev * 0.5 : 0.0)) / (0.5 * ev));
                const Field la = lambda_alpha(cs, a);
                // Sampling round-off (~1e-16 in every mode) is amplified by the
                // largest symbol, so the physical error is taken relative to the operator norm.
                const double scale = std::pow(top, a);
                for (std::size_t j = 0; j < g.n_modes; ++j)
                    phys_err[a] = std::max(phys_err[a], std::abs(la[j] - ev * cs[j]) / scale);
            }
        }
        c.check("hilbert_cos_to_sin_n256_k<=64", herr, "<", 1e-12, "max abs error over grid and k");
        for (double a : alphas) {
            c.check("lambda_eigen_spectral_alpha=" + join_doubles({a}), spec_err[a], "<", 1e-12,
                    "basis mode k <= n/4, relative to k^alpha");
            c.check("lambda_eigen_physical_alpha=" + join_doubles({a}), phys_err[a], "<", 1e-12,
                    "sampled cos kx, max abs error / (n/2)^alpha");
        }
    }
    {
        const GridSpec g = GridSpec::make(512);
        Field f = sample(g, [](double x) { return std::exp(std::cos(x)); });
        const Spectrum fs = to_spectral(f);
        const double mean = fs.mean();
        for (auto& v : f.samples) v -= mean;
        const Field spec = hilbert(f);
        c.check("hilbert_vs_cot_quadrature_n512", rel_l2(oracle::pv_hilbert_quadrature(g, f.samples), spec.samples),
                "<", 1e-6, "relative L2, exp(cos x) - mean");
    }
    {
        const GridSpec g = GridSpec::make(256);
        const Field f = sample(g, [](double x) { return std::exp(std::cos(x)); });
        for (double a : {0.8, 1.5}) {
            const Field spec = lambda_alpha(f, a);
            c.check("fractional_vs_singular_integral_alpha=" + join_doubles({a}),
                    rel_l2(oracle::pv_fractional_quadrature(g, f.samples, a), spec.samples), "<", 1e-6,
                    "relative L2, n=256");
        }
    }
    {
        const GridSpec g = GridSpec::make(64);
        const Spectrum B = random_power_law(g, 1.0, g.dealias_cutoff(), 7);
        const Truncation mode = opts.disable_dealias ? Truncation::none : Truncation::dealias;
        const ModelParams p = ModelParams::full(1.0, 1.0, 1.5, 0.5);
        const Spectrum fast = rhs(B, p, mode);
        const Spectrum slow = oracle::rhs_by_convolution(B, p.a, p.b, p.mu, p.alpha, g.dealias_cutoff());
        double err = 0.0;
        for (std::size_t k = 0; k < fast.size(); ++k) err = std::max(err, std::abs(fast[k] - slow[k]));
        c.check("nonlinearity_vs_convolution_oracle", err, "<", 1e-12,
                opts.disable_dealias ? "fault injection: aliased products" : "2/3-rule products");
    }
    c.check("runtime_seconds", seconds_since(t0), "<", 5.0);
    return c.out;
}

std::vector<Assertion> conservation_suite() {
    Collector c{"conservation", {}};
    const auto t0 = Clock::now();
    {
        const GridSpec g = GridSpec::make(128);
        const Spectrum B0 = random_power_law(g, 2.0, 8, 11, 0, 0.5);
        const std::vector<std::pair<double, double>> pairs{{1, 0}, {0, 1}, {2, -3}};
        for (const auto& [a, b] : pairs) {
            const Trajectory tr = evolve(B0, ModelParams::full(a, b, 1.5, 0.5), fixed(1e-3, 1.0, 10));
            double worst = 0.0;
            for (const auto& r : tr.series) worst = std::max(worst, std::abs(r.mean));
            c.check("mean_invariant_ab=" + join_doubles({a, b}), worst, "<", 1e-12,
                    "max |mean B| over t in [0,1], termination " + to_string(tr.reason));
        }
    }
    {
        // For alpha < 1 the discrete system amplifies round-off at rate ~ k ||B_x|| - mu k^alpha
        // near the cutoff, so grid and amplitude are kept modest.
        const GridSpec g = GridSpec::make(64);
        const Spectrum B0 = spectrum_of(g, [](double x) { return 0.25 * (std::cos(x) + 0.5 * std::sin(2 * x)); });
        const double sup0 = trig_sup(B0);
        for (double alpha : {0.5, 1.0, 1.5}) {
            SolverConfig cfg = fixed(1e-3, 1.0);
            for (int i = 1; i <= 20; ++i) cfg.checkpoint_times.push_back(0.05 * i);
            const Trajectory tr = evolve(B0, ModelParams::preset("e1d3", alpha, 1.0), cfg);
            double worst = 0.0;
            for (const auto& cp : tr.checkpoints) worst = std::max(worst, trig_sup(cp.B));
            c.check("max_principle_alpha=" + join_doubles({alpha}), worst / sup0, "<=", 1.0 + 1e-10,
                    "max_t ||B||_inf / ||B0||_inf, mu=1");
        }
    }
    {
        // Mean shifts are invisible to J for a = 0, so the positive field c + B~
        // evolves as B~ plus the constant.
        const GridSpec g = GridSpec::make(64);
        const double shift = 1.0;
        const Spectrum B0 = spectrum_of(g, [](double x) { return 0.3 * std::cos(x) + 0.2 * std::sin(2 * x); });
        SolverConfig cfg = fixed(1e-3, 1.0);
        for (int i = 1; i <= 20; ++i) cfg.checkpoint_times.push_back(0.05 * i);
        const Trajectory tr = evolve(B0, ModelParams::preset("e1d3", 1.5, 0.0), cfg);
        auto l1 = [&](const Spectrum& s) {
            Field f = to_physical(s);
            double minimum = std::numeric_limits<double>::infinity();
            for (auto& v : f.samples) {
                v += shift;
                minimum = std::min(minimum, v);
            }
            if (minimum < 0.0) return std::numeric_limits<double>::quiet_NaN();
            return l1_norm(f);
        };
        const double ref = l1(B0);
        double drift = 0.0;
        for (const auto& cp : tr.checkpoints) drift = std::max(drift, std::abs(l1(cp.B) - ref));
        c.check("l1_drift_e1d3_mu0_positive_data", std::isnan(drift) ? 1.0 : drift, "<", 1e-8,
                "data 1 + 0.3 cos x + 0.2 sin 2x, t in [0,1]");
    }
    c.check("runtime_seconds", seconds_since(t0), "<", 60.0);
    return c.out;
}

std::vector<Assertion> scaling_suite() {
    Collector c{"scaling", {}};
    const GridSpec g = GridSpec::make(512);
    const Spectrum B0 = spectrum_of(g, [](double x) { return std::sin(x); });
    const ScalingReport rep = scaling_covariance_check(B0, ModelParams::full(1, 1, 2.2, 1.0), 2, 0.2, 1e-3);
    c.check("scaling_lambda2_alpha2.2", rep.discrepancy, "<", 1e-6, "matched-time sup-norm, (a,b)=(1,1), n=512, T=0.2");
    return c.out;
}

std::vector<Assertion> integrator_suite() {
    Collector c{"integrator", {}};
    const GridSpec g = GridSpec::make(64);
    const Spectrum B0 = spectrum_of(g, [](double x) { return 0.5 * std::cos(x) + 0.3 * std::sin(2 * x); });
    auto run = [&](const ModelParams& p, double dt) { return evolve(B0, p, fixed(dt, 0.5)).final_state; };
    auto ratios = [&](const ModelParams& p, double dt0, const std::string& label) {
        std::vector<Spectrum> u;
        for (int i = 0; i < 4; ++i) u.push_back(run(p, dt0 / std::pow(2.0, i)));
        for (int i = 0; i < 2; ++i) {
            const double e1 = l2_norm(u[i] - u[i + 1]);
            const double e2 = l2_norm(u[i + 1] - u[i + 2]);
            c.range("richardson_" + label + "_dt=" + join_doubles({dt0 / std::pow(2.0, i)}), e1 / e2, 12.0, 20.0,
                    "nominal 16");
        }
    };
    ratios(ModelParams::preset("e1d3", 1.5, 0.0), 0.02, "e1d3_mu0");
    ratios(ModelParams::full(1, 1, 2.2, 1.0), 0.01, "full_alpha2.2");
    return c.out;
}

std::vector<Assertion> picard_suite() {
    Collector c{"picard", {}};
    const ModelParams p = ModelParams::full(1, 1, 2.2, 1.0);
    const GridSpec g = GridSpec::make(64);
    {
        const Spectrum B0 = spectrum_of(g, [](double x) { return std::cos(x); });
        const PicardResult r = picard_iterate(B0, p, 0.05, 1, 1e-3, true);
        double err = 0.0;
        for (std::size_t i = 0; i < r.mesh.size(); ++i) {
            const Spectrum exact = apply_semigroup(B0, p.mu, p.alpha, r.mesh[i]);
            err = std::max(err, l2_norm(r.iterates[0][i] - exact));
        }
        c.check("iterate0_is_semigroup", err, "<", 1e-12, "B0 = cos x, e^{-t} cos x");
    }
    Spectrum B0 = spectrum_of(g, [](double x) { return std::cos(x) + 0.5 * std::sin(2 * x) + 0.25 * std::cos(3 * x); });
    B0 *= 1.0 / lp::sobolev_norm(B0, 2.5 - p.alpha, lp::NormMode::direct);
    const PicardResult full = picard_iterate(B0, p, 0.05, 8, 1e-3);
    const PicardResult half = picard_iterate(B0, p, 0.025, 8, 1e-3);
    for (std::size_t k = 1; k <= 6; ++k) {
        c.check("r_" + std::to_string(k) + "_T=0.05", full.r[k], "<", 1.0);
        c.check("r_" + std::to_string(k) + "_halving_T", half.r[k] - full.r[k], "<=", 0.0,
                "r_k(T/2) - r_k(T)");
    }
    const PicardComparison cmp = picard_vs_direct(B0, p, 0.05, 8, 1e-3);
    bool decreasing = true;
    for (std::size_t k = 1; k <= 6; ++k) decreasing = decreasing && cmp.discrepancy[k] < cmp.discrepancy[k - 1];
    c.truth("picard_vs_direct_decreasing_k<=6", decreasing);
    c.check("picard_vs_direct_K=8", cmp.discrepancy.back(), "<", 1e-9, "sup_t L2 distance to the direct solver");
    return c.out;
}

std::vector<Assertion> galerkin_suite() {
    Collector c{"galerkin", {}};
    {
        const GridSpec g = GridSpec::make(8);
        const Spectrum B = spectrum_of(g, [](double x) { return std::cos(x); });
        const auto d = galerkin_rhs(galerkin_state(B, 1), ModelParams::preset("e1d3", 1.0, 1.0));
        c.check("N1_pure_decay", std::abs(d[1] + B[1]), "<", 1e-15);
    }
    auto smooth = [](double amp) {
        return [amp](double x) { return amp * (0.3 * std::cos(x) + 0.2 * std::sin(2 * x) - 0.1 * std::cos(3 * x)); };
    };
    const ModelParams p = ModelParams::preset("e1d3", 1.0, 0.1);
    {
        const GridSpec g = GridSpec::make(128);
        c.check("galerkin_vs_pseudospectral_N32",
                galerkin_vs_pseudospectral(spectrum_of(g, smooth(1.0)), 32, p, 0.5, 1e-4), "<", 1e-8,
                "mu=0.1, alpha=1, T=0.5, dt=1e-4");
    }
    const GridSpec g = GridSpec::make(512);
    std::vector<double> c1;
    for (std::size_t N : {32, 64, 128}) {
        const RiccatiProbe pr = riccati_probe(spectrum_of(g, smooth(1.0)), N, p, 0.1, 1e-3);
        c1.push_back(pr.C1);
        c.check("riccati_C1_finite_N=" + std::to_string(N), pr.C1, "<", std::numeric_limits<double>::infinity());
        c.check("riccati_margin_N=" + std::to_string(N), pr.min_margin, ">=", 0.0);
    }
    const double spread = *std::max_element(c1.begin(), c1.end()) / *std::min_element(c1.begin(), c1.end());
    c.check("riccati_C1_spread_N32_64_128", spread, "<=", 2.0, "max/min fitted C1");
    const double t1 = y_doubling_time(riccati_probe(spectrum_of(g, smooth(1.0)), 64, p, 0.1, 1e-3));
    const double t2 = y_doubling_time(riccati_probe(spectrum_of(g, smooth(2.0)), 64, p, 0.1, 1e-3));
    c.check("doubling_amplitude_shortens_Y_doubling", t2 / t1, "<", 1.0, "t_double(2 B0) / t_double(B0)");
    return c.out;
}

std::vector<Assertion> blowup_suite() {
    Collector c{"blowup", {}};
    const auto t0 = Clock::now();
    const GridSpec g = GridSpec::make(4096);
    const Spectrum B0 = to_spectral(make_blowup_profile(g));
    SolverConfig cfg;
    cfg.dt_policy = DtPolicy::cfl;
    cfg.dt = 1e-2;
    cfg.t_end = 1.0;
    cfg.stride = 1;
    cfg.lip_threshold = 100.0 * linf_norm(to_physical(derivative(B0)));
    const Trajectory tr = evolve(B0, ModelParams::preset("e1d3", 1.5, 0.0), cfg);
    const MaxTrack track = track_max(tr);
    const BlowupReport rep = blowup_report(tr, track);
    std::ostringstream win;
    win << "resolved until t=" << rep.resolved_until << " (" << rep.resolved_samples << " samples), run stopped at t="
        << tr.t_final << " (" << to_string(tr.reason) << ")";
    c.truth("X_nonincreasing_within_dx", rep.x_nonincreasing, win.str());
    c.check("max_value_drift_resolved", rep.max_drift, "<", 1e-3);
    c.check("riccati_c_fit", rep.riccati.c_fit, ">", 0.0, "fit: " + rep.riccati.message);
    c.check("lip_growth_before_resolution_loss", rep.growth_factor, ">=", 50.0, win.str());
    c.truth("radius_strictly_decreasing", rep.radius_decreasing,
            std::to_string(rep.radius_samples) + " fitted radii in the resolved window");

    // Dissipative control over the same horizon.
    const double horizon = tr.t_final;
    SolverConfig ctl = cfg;
    ctl.t_end = horizon;
    ctl.lip_threshold = std::numeric_limits<double>::infinity();
    ctl.stride = 8;
    const Trajectory control = evolve(B0, ModelParams::preset("e1d3", 1.5, 1.0), ctl);
    double lip_max = 0.0;
    for (const auto& r : control.series) lip_max = std::max(lip_max, r.lip);
    c.check("control_mu1_lip_growth", lip_max / rep.lip0, "<=", 2.0,
            "horizon t=" + std::to_string(horizon) + ", termination " + to_string(control.reason));
    c.check("runtime_seconds", seconds_since(t0), "<", 300.0);
    return c.out;
}

std::vector<Assertion> mirror_suite() {
    Collector c{"mirror", {}};
    {
        const GridSpec g = GridSpec::make(128);
        const Spectrum B0 = random_power_law(g, 2.0, 12, 5, 0, 0.5);
        const MirrorReport r = mirror_check(B0, 1.5, 0.5, 0.5, 1e-3);
        c.check("mirror_smooth_data", r.discrepancy, "<=", 1e-12 * r.reference, "max |B_e1d3 + B_e1d4(-B0)|");
    }
    {
        const GridSpec g = GridSpec::make(1024);
        const Spectrum B0 = to_spectral(make_blowup_profile(g));
        const MirrorReport r = mirror_check(B0, 1.5, 0.0, 0.005, 1e-4);
        c.check("mirror_blowup_profile", r.discrepancy, "<=", 1e-12 * r.reference, "mu=0, t <= 0.005");
    }
    return c.out;
}

std::vector<Assertion> lemmas_suite() {
    Collector c{"lemmas", {}};
    struct Params {
        lp::Lemma lemma;
        double m, s1, s2;
    };
    const std::vector<Params> cases{{lp::Lemma::commutator, 0.0, 1.0, -0.25},
                                    {lp::Lemma::paraproduct, 0.0, 0.25, -1.0},
                                    {lp::Lemma::product, 0.0, 0.25, 0.25}};
    for (const auto& pc : cases) {
        std::vector<double> C;
        for (std::size_t n : {128, 256, 512}) {
            const lp::LemmaFit fit = lp::fit_lemma_constant(pc.lemma, pc.m, pc.s1, pc.s2, 12, GridSpec::make(n), 2024);
            C.push_back(fit.constant);
            c.check(lp::to_string(pc.lemma) + "_finite_n=" + std::to_string(n), fit.constant, "<",
                    std::numeric_limits<double>::infinity());
        }
        for (std::size_t i = 1; i < C.size(); ++i)
            c.check(lp::to_string(pc.lemma) + "_nongrowing_n=" + std::to_string(128u << i), C[i] / C[i - 1], "<=",
                    1.2, "C_n / C_{n/2}");
    }
    return c.out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Assertion> determinism_suite() {
    Collector c{"determinism", {}};
    char tmpl[] = "/tmp/emhd_determinism_XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (!dir) throw std::runtime_error("cannot create temporary directory");
    const fs::path root(dir);
    const RunConfig cfg = parse_config(
        "schema_version = 1\nn = 128\nmodel = custom\na = 1\nb = 1\nalpha = 2.2\nmu = 0.5\n"
        "init = rough:2,16\nseed = 42\namplitude = 0.5\ndt = 1e-3\nt_end = 0.2\nstride = 5\n"
        "checkpoint_times = 0.05,0.1\nsobolev = 0.3,1\n");
    run_experiment(cfg, root / "a");
    run_experiment(cfg, root / "b");
    run_experiment(config_from_manifest(root / "a" / "manifest.json"), root / "replay");
    int differing = 0;
    int compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(root / "a")) {
        if (!entry.is_regular_file() || entry.path().filename() == "manifest.json") continue;
        const fs::path rel = fs::relative(entry.path(), root / "a");
        const std::string ref = slurp(entry.path());
        for (const char* other : {"b", "replay"}) {
            ++compared;
            if (slurp(root / other / rel) != ref) ++differing;
        }
    }
    c.check("differing_output_files", differing, "<=", 0.0,
            std::to_string(compared) + " comparisons (repeat and manifest replay)");
    c.check("files_compared", compared, ">=", 6.0);
    fs::remove_all(root);
    return c.out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"operators", "conservation", "scaling", "integrator", "picard",
                                                "galerkin",  "blowup",       "mirror",  "lemmas",     "determinism"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
    if (requested.empty()) throw std::invalid_argument("no verification suite selected");
    std::vector<std::string> out;
    for (const auto& r : requested) {
        if (r == "all") {
            for (const auto& s : suite_names())
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        } else if (is_suite(r)) {
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        } else {
            throw std::invalid_argument("unknown suite '" + r + "'");
        }
    }
    return out;
}

std::vector<Assertion> run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "operators") return operators_suite(opts);
    if (name == "conservation") return conservation_suite();
    if (name == "scaling") return scaling_suite();
    if (name == "integrator") return integrator_suite();
    if (name == "picard") return picard_suite();
    if (name == "galerkin") return galerkin_suite();
    if (name == "blowup") return blowup_suite();
    if (name == "mirror") return mirror_suite();
    if (name == "lemmas") return lemmas_suite();
    if (name == "determinism") return determinism_suite();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

bool all_passed(const std::vector<Assertion>& a) {
    return std::all_of(a.begin(), a.end(), [](const Assertion& x) { return x.passed; });
}

std::string verify_report_json(const std::vector<std::string>& suites, const std::vector<std::vector<Assertion>>& results,
                               const std::vector<double>& seconds) {
    nlohmann::ordered_json j;
    bool ok = true;
    nlohmann::ordered_json js;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        nlohmann::ordered_json s;
        s["passed"] = all_passed(results[i]);
        s["seconds"] = seconds[i];
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& a : results[i]) {
            nlohmann::ordered_json e;
            e["name"] = a.name;
            e["passed"] = a.passed;
            e["measured"] = std::isfinite(a.measured) ? nlohmann::ordered_json(a.measured) : nlohmann::ordered_json(nullptr);
            e["relation"] = a.relation;
            e["tolerance"] = std::isfinite(a.tolerance) ? nlohmann::ordered_json(a.tolerance) : nlohmann::ordered_json(nullptr);
            if (!a.detail.empty()) e["detail"] = a.detail;
            arr.push_back(e);
        }
        s["assertions"] = arr;
        ok = ok && all_passed(results[i]);
        js[suites[i]] = s;
    }
    j["passed"] = ok;
    j["suites"] = js;
    return j.dump(2);
}

}  // namespace emhd
