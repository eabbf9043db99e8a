#pragma once

#include "fforge/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fforge {

struct VerifyConfig {
    int p = 3;
    std::vector<int> M_values{1, 2, 3};
    std::optional<int> level_m, level_n;  // override the model levels
    std::size_t bound = 16;               // torsion enumeration bound
    unsigned jobs = 1;
    std::vector<DecompositionModel> models;  // empty: default_catalog(p)
};

struct CheckRecord {
    std::string claim;    // criterion id, "C1" .. "C10"
    std::string anchor;   // short name of the identity being checked
    std::string inputs;
    std::string status;   // pass | projected-pass | fail | skipped
    std::optional<int> M, level_m, level_n;
    std::string detail;
    double wall_ms = 0;
};

struct VerificationReport {
    std::string suite;
    VerifyConfig config;
    std::vector<CheckRecord> records;
    std::vector<std::string> warnings;

    bool ok() const;
    std::size_t count(const std::string& status) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a suite ("appendix", "transpose", "limits", "stickelberger", "all").
/// Records come back in a fixed order whatever the job count.
VerificationReport run_suite(const std::string& suite, const VerifyConfig& config);

Json report_to_json(const VerificationReport& report, bool with_timing);
std::string report_to_text(const VerificationReport& report);

} // namespace fforge
