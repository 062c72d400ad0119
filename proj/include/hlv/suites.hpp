#pragma once

#include "hlv/json_io.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hlv {

struct SuiteOptions {
    int max_weight = 0;
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct SuiteResult {
    std::string name;
    int max_weight = 0;
    bool passed = true;
    bool integrity_error = false;
    std::size_t checks = 0;
    /// Details of the first failing case in enumeration order.
    std::optional<Json> failure;
    /// Observations that are reported but do not fail the suite.
    std::vector<std::string> warnings;

    Json to_json() const;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    int default_weight;
};

/// Registered suites in a fixed order.
const std::vector<SuiteInfo>& list_suites();
const SuiteInfo* find_suite(const std::string& name);

/// Runs a registered suite; std::out_of_range for an unknown name. The
/// result does not depend on opts.jobs.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

/// One independent check of a suite.
struct CaseResult {
    std::optional<Json> failure;
    std::vector<std::string> warnings;
};
using Case = std::function<CaseResult()>;

/// Runs the cases on up to jobs threads and assembles the outcome in case
/// order, so the report is the same for every jobs value. An IntegrityError
/// thrown by a case is recorded as a failure with integrity_error set.
SuiteResult run_cases(const std::string& name, int max_weight, const std::vector<Case>& cases, int jobs);

} // namespace hlv
