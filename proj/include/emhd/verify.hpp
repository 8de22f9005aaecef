#pragma once

#include <string>
#include <vector>

namespace emhd {

/// One measured check: passed iff `measured relation tolerance` holds.
struct Assertion {
    std::string suite;
    std::string name;
    double measured = 0.0;
    std::string relation;  ///< "<", "<=", ">", ">=", "in[lo,hi]" (see detail) or "true"
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Fault injection: the convolution-oracle check uses aliased products.
    bool disable_dealias = false;
};

/// operators conservation scaling integrator picard galerkin blowup mirror lemmas determinism
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" is expanded by the caller). Throws std::invalid_argument on unknown names.
std::vector<Assertion> run_suite(const std::string& name, const VerifyOptions& opts = {});

/// Expands "all", rejects an empty selection (std::invalid_argument).
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// {"passed": bool, "suites": {name: {"passed", "seconds", "assertions": [...]}}}
std::string verify_report_json(const std::vector<std::string>& suites, const std::vector<std::vector<Assertion>>& results,
                               const std::vector<double>& seconds);

bool all_passed(const std::vector<Assertion>& a);

}  // namespace emhd
