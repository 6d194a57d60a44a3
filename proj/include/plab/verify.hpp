#pragma once

// The verify-paper harness: one record per acceptance check.

#include "plab/json_io.hpp"

#include <string>
#include <vector>

namespace plab {

struct VerifyConfig {
    unsigned long height_bound = 1000;
    long dm_bound = 200;
    long grid_p = 40;
    long grid_q = 6;
    int depth = 12;
    /// Run only these ids (all when empty).
    std::vector<std::string> only;
    /// Force these ids to fail after running them.
    std::vector<std::string> inject_failure;
};

struct CheckRecord {
    std::string id;
    /// Short statement of what the check reproduces.
    std::string paper_ref;
    /// "pass", "fail" or "skipped".
    std::string status;
    Json expected;
    Json actual;
    std::string note;
    double elapsed_ms = 0;
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<CheckRecord> checks;

    long count(const std::string& status) const;
    bool all_passed() const { return count("fail") == 0; }
};

/// Ids in report order.
const std::vector<std::string>& check_ids();

/// Throws DomainError for unknown ids in only / inject_failure and for
/// out-of-range bounds.
VerificationReport run_verification(const VerifyConfig& config);

/// Timing fields are omitted when include_timing is false, which makes the
/// output byte-identical across runs with the same config.
Json to_json(const VerificationReport& report, bool include_timing = true);

} // namespace plab
