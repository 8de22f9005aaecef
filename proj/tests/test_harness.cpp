#include <doctest.h>

#include "emhd/config.hpp"
#include "emhd/harness.hpp"
#include "emhd/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace emhd;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "emhd_test_XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSmall = R"(schema_version = 1
n = 32
model = e1d3
alpha = 1.5
mu = 1
dt = 1e-3
t_end = 0.02
stride = 5
checkpoint_times = 0.01
)";
}  // namespace

TEST_CASE("config parsing") {
    const RunConfig c = parse_config(kSmall);
    CHECK(c.n == 32);
    CHECK(c.a == 0.0);
    CHECK(c.b == 1.0);
    CHECK(c.checkpoint_times == std::vector<double>{0.01});
    CHECK_THROWS_AS(parse_config("n = 32\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nbogus = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nn = 32\nn = 64\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nmodel = e1d4\nb = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nn = 48\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\ninit = triangle\n").initial_state(), ConfigError);
    CHECK(parse_config("schema_version = 1\nmodel = e1d2\n").params() == ModelParams::full(1, 0, 1.5, 1));
}

TEST_CASE("config text round trips") {
    RunConfig c = parse_config(kSmall);
    c.dt = 0.1 + 0.2;
    const RunConfig d = parse_config(c.to_text());
    CHECK(d.entries() == c.entries());
    CHECK(d.dt == c.dt);
}

TEST_CASE("initial states have zero mean") {
    for (const char* init : {"cosine", "sine", "rough:1.5,10"}) {
        RunConfig c = parse_config(kSmall);
        c.init = init;
        CHECK(c.initial_state().mean() == 0.0);
    }
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(Termination::completed) == kExitOk);
    CHECK(exit_code_for(Termination::blowup) == kExitBlowup);
    CHECK(exit_code_for(Termination::unresolved) == kExitBlowup);
    CHECK(exit_code_for(Termination::numeric_failure) == kExitNumeric);
}

TEST_CASE("runs are byte-for-byte reproducible and replayable") {
    TempDir tmp;
    const RunConfig c = parse_config(kSmall);
    const RunOutcome a = run_experiment(c, tmp.path / "a");
    run_experiment(c, tmp.path / "b");
    CHECK(a.exit_code == kExitOk);
    CHECK(fs::exists(tmp.path / "a" / "series.csv"));
    CHECK(fs::exists(tmp.path / "a" / "checkpoints" / "final.bin"));
    for (const auto& f : a.outputs)
        if (f != "manifest.json") CHECK_MESSAGE(slurp(tmp.path / "a" / f) == slurp(tmp.path / "b" / f), f);
    const RunConfig replay = config_from_manifest(tmp.path / "a" / "manifest.json");
    CHECK(replay.entries() == c.entries());
    const auto manifest = nlohmann::json::parse(slurp(tmp.path / "a" / "manifest.json"));
    CHECK(manifest.at("exit_code") == 0);
    CHECK(manifest.at("termination") == "completed");
}

TEST_CASE("one-cell sweep reproduces a plain run") {
    TempDir tmp;
    const SweepSpec spec = parse_sweep_spec(std::string(kSmall) + "sweep.alpha = 1.5\n");
    CHECK(spec.cell_count() == 1);
    const auto rows = run_sweep(spec, tmp.path / "sweep", 1);
    run_experiment(parse_config(kSmall), tmp.path / "run");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].error.empty());
    CHECK(slurp(tmp.path / "sweep" / "cell_000" / "series.csv") == slurp(tmp.path / "run" / "series.csv"));
}

TEST_CASE("three by three sweep") {
    TempDir tmp;
    const SweepSpec spec = parse_sweep_spec(std::string(kSmall) + "sweep.alpha = 0.5; 1; 1.5\nsweep.ab = 1:0; 0:1; 0:-1\n");
    CHECK(spec.cell_count() == 9);
    const auto a = spec.cell_assignment(1);
    CHECK(a[0].second == "0.5");
    CHECK(a[1].second == "0:1");
    const auto rows = run_sweep(spec, tmp.path / "s", 3);
    CHECK(rows.size() == 9);
    std::ifstream in(tmp.path / "s" / "summary.csv");
    int lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    CHECK(lines == 10);
    CHECK_THROWS_AS(parse_sweep_spec(std::string(kSmall) + "sweep.nothing = 1; 2\n"), ConfigError);
}

TEST_CASE("verify suite selection") {
    CHECK_THROWS_AS(expand_suites({}), std::invalid_argument);
    CHECK_THROWS_AS(expand_suites({"nope"}), std::invalid_argument);
    CHECK(expand_suites({"all"}).size() == suite_names().size());
    CHECK(suite_names().size() == 10);
}

TEST_CASE("disabling dealiasing is caught by the operator checks") {
    VerifyOptions opts;
    opts.disable_dealias = true;
    CHECK_FALSE(all_passed(run_suite("operators", opts)));
}
