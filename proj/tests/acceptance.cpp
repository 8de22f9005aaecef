// Acceptance runner: one line per criterion, nonzero exit if any fails.
//   acceptance                 all criteria
//   acceptance --criterion 7   a single one (repeatable)
#include "emhd/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int id;
    const char* suite;
    const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "operators", "operator exactness"},
    {2, "conservation", "conservation laws"},
    {3, "scaling", "scaling covariance"},
    {4, "integrator", "integrator order"},
    {5, "picard", "Picard contraction"},
    {6, "galerkin", "Galerkin cross-check and Riccati constant"},
    {7, "blowup", "blow-up experiment and dissipative control"},
    {8, "mirror", "mirror model"},
    {9, "lemmas", "Littlewood-Paley lemma constants"},
    {10, "determinism", "byte-identical reruns"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    bool verbose = false;
    app.add_option("--criterion", selected, "criterion number 1-10 (repeatable)")->check(CLI::Range(1, 10));
    app.add_flag("-v,--verbose", verbose, "print every assertion");
    CLI11_PARSE(app, argc, argv);
    if (selected.empty())
        for (const auto& c : kCriteria) selected.push_back(c.id);

    int failed = 0;
    for (int id : selected) {
        const Criterion& c = kCriteria[id - 1];
        const auto t0 = std::chrono::steady_clock::now();
        const auto result = emhd::run_suite(c.suite);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = emhd::all_passed(result);
        failed += ok ? 0 : 1;
        std::printf("criterion %2d %-45s %s  (%zu checks, %.1f s)\n", c.id, c.title, ok ? "PASS" : "FAIL",
                    result.size(), secs);
        for (const auto& a : result) {
            if (a.passed && !verbose) continue;
            std::printf("    %s %s: %.6g %s %.6g  %s\n", a.passed ? "ok  " : "FAIL", a.name.c_str(), a.measured,
                        a.relation.c_str(), a.tolerance, a.detail.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
