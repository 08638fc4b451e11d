#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heisrep {

/// One acceptance check: a stable id, what it verifies, the outcome, and a
/// short witness (counts, timings, offending values).
struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string witness;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks) if (!c.pass) return false;
        return true;
    }
};

/// Replays every explicit computation as a batch of deterministic checks.
SuiteReport run_paper_suite();

nlohmann::json suite_report_to_json(const SuiteReport& r);

} // namespace heisrep
