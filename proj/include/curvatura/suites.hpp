#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvatura/jsonfmt.hpp"

namespace curvatura {

// Configuration of a proposition run.  The same config always produces the
// same report: every (suite, space) pair draws from its own stream derived
// from (seed, suite id, space), so neither ordering nor concurrency could
// change results.
struct CheckConfig {
    std::vector<std::string> suites;  // empty or {"all"} = every suite
    int samples = 200;
    uint64_t seed = 1;
    double tol = 1e-9;                // kernel/postcondition tolerance
    std::string space = "all";        // spherical | euclidean | hyperbolic | all
};

struct SuiteResult {
    std::string id;
    std::string space;
    int samples = 0;
    int failures = 0;
    double worst_residual = 0;
    ojson witness;  // first failing instance, or the extremal passing one
};

// Registered suite ids in their fixed order.
std::vector<std::string> suite_ids();

// One line of documentation per suite (used by the CLI and the README).
std::string suite_description(const std::string& id);

// Throws UnknownSuite for an unrecognized id.
std::vector<SuiteResult> run_suites(const CheckConfig& config);

ojson report_json(const CheckConfig& config, const std::vector<SuiteResult>& results);
std::string report_summary(const std::vector<SuiteResult>& results);
int total_failures(const std::vector<SuiteResult>& results);

}  // namespace curvatura
